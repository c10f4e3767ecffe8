#include "circinterp/io.hpp"

#include <charconv>
#include <cstdio>
#include <cmath>
#include <fstream>
#include <sstream>

#include "circinterp/errors.hpp"

namespace circinterp {

using nlohmann::json;

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json json_number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("io: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json json_complex(Complex z) { return json::array({json_number(z.real()), json_number(z.imag())}); }

}  // namespace

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw InvalidArgument("io: expected a number or [re, im], got " + j.dump());
}

std::vector<Complex> load_nodes(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  std::vector<Complex> nodes;
  if (first != std::string::npos && text[first] == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw InvalidArgument("io: node file '" + path + "' is not valid JSON: " + e.what());
    }
    for (const auto& e : j) nodes.push_back(complex_from_json(e));
  } else {
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
      ++lineno;
      const auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos || line[b] == '#') continue;
      const auto e = line.find_last_not_of(" \t\r");
      const std::string tok = line.substr(b, e - b + 1);
      double t = 0.0;
      const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), t);
      if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
        throw InvalidArgument("io: " + path + ":" + std::to_string(lineno) + ": not an angle: '" + tok + "'");
      }
      nodes.emplace_back(std::cos(t), std::sin(t));
    }
  }
  if (nodes.empty()) throw InvalidArgument("io: node file '" + path + "' holds no nodes");
  return nodes;
}

MeasureSpec measure_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw InvalidArgument("io: measure needs a \"kind\" field");
  const std::string kind = j.at("kind").get<std::string>();
  auto complex_list = [&](const char* key) {
    std::vector<Complex> out;
    if (!j.contains(key)) throw InvalidArgument(std::string("io: measure needs \"") + key + "\"");
    for (const auto& e : j.at(key)) out.push_back(complex_from_json(e));
    return out;
  };
  if (kind == "lebesgue") return MeasureSpec::lebesgue();
  if (kind == "verblunsky") return MeasureSpec::finite_verblunsky(complex_list("alphas"));
  if (kind == "bernstein-szego") return MeasureSpec::bernstein_szego(complex_list("h_coeffs"));
  throw InvalidArgument("io: unknown measure kind '" + kind + "'");
}

MeasureSpec load_measure(const std::string& path) {
  try {
    return measure_from_json(json::parse(read_file(path)));
  } catch (const json::exception& e) {
    throw InvalidArgument("io: measure file '" + path + "': " + e.what());
  }
}

void write_nodes_csv(std::ostream& os, const NodalSystem& sys) {
  os << "j,theta,re,im\n";
  for (std::size_t j = 0; j < sys.size(); ++j) {
    os << j << ',' << format_double(sys.angles()[j]) << ',' << format_double(sys.nodes()[j].real())
       << ',' << format_double(sys.nodes()[j].imag()) << '\n';
  }
}

json nodes_json(const NodalSystem& sys) {
  json j;
  j["n"] = sys.size();
  j["source"] = to_string(sys.source());
  json angles = json::array(), nodes = json::array();
  for (std::size_t k = 0; k < sys.size(); ++k) {
    angles.push_back(json_number(sys.angles()[k]));
    nodes.push_back(json_complex(sys.nodes()[k]));
  }
  j["theta"] = angles;
  j["nodes"] = nodes;
  return j;
}

namespace {

struct IntervalRow {
  double x;
  double theta;
  int flag;
};

std::vector<IntervalRow> interval_rows(const IntervalNodalSystem& sys) {
  std::vector<IntervalRow> rows;
  if (sys.has_plus_one) rows.push_back({1.0, 0.0, 1});
  for (std::size_t k = 0; k < sys.xs.size(); ++k) rows.push_back({sys.xs[k], std::arg(sys.upper[k]), 0});
  if (sys.has_minus_one) rows.push_back({-1.0, kPi, -1});
  return rows;
}

}  // namespace

void write_interval_nodes_csv(std::ostream& os, const IntervalNodalSystem& sys) {
  os << "j,x_j,theta_j,endpoint_flag\n";
  int j = 1;
  for (const auto& r : interval_rows(sys)) {
    os << j++ << ',' << format_double(r.x) << ',' << format_double(r.theta) << ',' << r.flag << '\n';
  }
}

json interval_nodes_json(const IntervalNodalSystem& sys) {
  json j;
  j["variant"] = to_string(sys.variant);
  j["n"] = sys.n;
  j["has_plus_one"] = sys.has_plus_one;
  j["has_minus_one"] = sys.has_minus_one;
  json rows = json::array();
  for (const auto& r : interval_rows(sys)) {
    rows.push_back({{"x", json_number(r.x)}, {"theta", json_number(r.theta)}, {"endpoint_flag", r.flag}});
  }
  j["nodes"] = rows;
  return j;
}

json condition_report_json(const NodalConditionReport& rep) {
  json j;
  j["n"] = rep.n;
  j["B_hat"] = json_number(rep.B_hat);
  j["B_hat_nodes"] = json_number(rep.B_hat_nodes);
  j["L_hat"] = json_number(rep.L_hat);
  j["lebesgue_max"] = json_number(rep.lebesgue_max);
  j["lebesgue_bound"] = json_number(rep.lebesgue_bound());
  j["grid_size"] = rep.grid_size;
  j["points_evaluated"] = rep.points_evaluated;
  j["warning"] = rep.warning ? json(*rep.warning) : json(nullptr);
  return j;
}

void write_sweep_csv(std::ostream& os, const SweepResult& res) {
  os << "n,p,q,s,sup_error,lebesgue_max,B_hat,L_hat\n";
  for (std::size_t i = 0; i < res.ns.size(); ++i) {
    os << res.ns[i] << ',' << res.ps[i] << ',' << res.qs[i] << ',' << res.ss[i] << ','
       << format_double(res.sup_errors[i]) << ',' << format_double(res.lebesgue_maxima[i]) << ','
       << format_double(res.B_hats[i]) << ',' << format_double(res.L_hats[i]) << '\n';
  }
}

json sweep_json(const SweepResult& res) {
  json j;
  j["family"] = res.family;
  j["function"] = res.function;
  j["r"] = json_number(res.r);
  json rows = json::array();
  for (std::size_t i = 0; i < res.ns.size(); ++i) {
    rows.push_back({{"n", res.ns[i]},
                    {"p", res.ps[i]},
                    {"q", res.qs[i]},
                    {"s", res.ss[i]},
                    {"sup_error", json_number(res.sup_errors[i])},
                    {"lebesgue_max", json_number(res.lebesgue_maxima[i])},
                    {"B_hat", json_number(res.B_hats[i])},
                    {"L_hat", json_number(res.L_hats[i])},
                    {"status", res.status[i]}});
  }
  j["rows"] = rows;
  return j;
}

}  // namespace circinterp
