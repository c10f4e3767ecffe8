#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "circinterp/experiments.hpp"
#include "circinterp/laurent.hpp"
#include "circinterp/nodal.hpp"
#include "circinterp/opuc.hpp"
#include "circinterp/transforms.hpp"

namespace circinterp {

inline constexpr const char* kLibraryVersion = "0.1.0";

/// Shortest decimal that reads back to the same double; "nan", "inf", "-inf"
/// for the non-finite values.
std::string format_double(double v);

/// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

/// Node file: either a JSON array of [re, im] pairs or plain text with one
/// angle per line (blank lines and lines starting with # are skipped).
/// Throws InvalidArgument for unreadable or malformed files.
std::vector<Complex> load_nodes(const std::string& path);

/// Measure file, JSON:
///   {"kind": "lebesgue"}
///   {"kind": "verblunsky", "alphas": [[re, im], ...]}
///   {"kind": "bernstein-szego", "h_coeffs": [[re, im], ...]}
MeasureSpec load_measure(const std::string& path);
MeasureSpec measure_from_json(const nlohmann::json& j);

/// Plain-number or [re, im] JSON value to a complex number.
Complex complex_from_json(const nlohmann::json& j);

void write_nodes_csv(std::ostream& os, const NodalSystem& sys);
nlohmann::json nodes_json(const NodalSystem& sys);

/// Columns j, x_j, theta_j, endpoint_flag; rows in decreasing x, j one-based.
void write_interval_nodes_csv(std::ostream& os, const IntervalNodalSystem& sys);
nlohmann::json interval_nodes_json(const IntervalNodalSystem& sys);

nlohmann::json condition_report_json(const NodalConditionReport& rep);

/// Header n,p,q,s,sup_error,lebesgue_max,B_hat,L_hat.
void write_sweep_csv(std::ostream& os, const SweepResult& res);
nlohmann::json sweep_json(const SweepResult& res);

/// Numbers inside JSON documents go through format_double so reruns diff cleanly.
nlohmann::json json_number(double v);

}  // namespace circinterp
