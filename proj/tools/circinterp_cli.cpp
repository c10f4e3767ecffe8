// Command-line front end: node generation, condition diagnostics, interpolation
// runs and convergence sweeps.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "circinterp/circle_interp.hpp"
#include "circinterp/errors.hpp"
#include "circinterp/experiments.hpp"
#include "circinterp/io.hpp"
#include "circinterp/kernels.hpp"
#include "circinterp/nodal.hpp"
#include "circinterp/opuc.hpp"
#include "circinterp/transforms.hpp"

using namespace circinterp;
using nlohmann::json;

namespace {

// Every setting is kept as text until the config file and flags are merged,
// then parsed and range-checked in one place.
using Settings = std::map<std::string, std::string>;

const std::vector<std::pair<std::string, std::string>> kFlags = {
    {"measure", "lebesgue or a measure JSON file"},
    {"tau", "unimodular constant re[,im]"},
    {"n", "number of nodes (interval/trig: interior node count)"},
    {"ns", "sweep sizes: a:b for powers of two from a to b, or a comma list"},
    {"r", "window ratio in (0,1): p = floor(r (n-1))"},
    {"corpus", "test function name[:param]"},
    {"variant", "interval variant mu1..mu4"},
    {"grid", "grid size for error/condition estimates"},
    {"out", "output path (stdout when absent)"},
    {"format", "csv or json"},
    {"nodes", "node file: one angle per line or JSON [[re,im],...]"},
    {"family", "roots-of-unity or para-orthogonal"},
    {"weight", "interval weight: chebyshev1 or chebyshev2"},
    {"kind", "trig construction: symmetric or paraorthogonal"},
    {"dense", "dense evaluation CSV path"},
    {"seed", "seed recorded in metadata"},
};

std::string json_to_setting(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return format_double(v[0].get<double>()) + "," + format_double(v[1].get<double>());
  }
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return format_double(v.get<double>());
  throw InvalidArgument("cli: unsupported config value " + v.dump());
}

Settings load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cli: cannot open config '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("cli: config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidArgument("cli: config must be a JSON object");
  Settings s;
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const auto& f : kFlags) known = known || f.first == key;
    if (!known) throw InvalidArgument("cli: unknown config key '" + key + "'");
    s[key] = json_to_setting(value);
  }
  return s;
}

double parse_real(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  throw InvalidArgument("cli: --" + key + " expects a number, got '" + text + "'");
}

int parse_int(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used == text.size() && v >= -(1L << 30) && v <= (1L << 30)) return static_cast<int>(v);
  } catch (const std::exception&) {
  }
  throw InvalidArgument("cli: --" + key + " expects an integer, got '" + text + "'");
}

class Config {
 public:
  Config(std::string command, Settings s) : command_(std::move(command)), s_(std::move(s)) {}

  const std::string& command() const { return command_; }
  bool has(const std::string& k) const { return s_.count(k) > 0; }
  std::string str(const std::string& k, const std::string& def) const {
    auto it = s_.find(k);
    return it == s_.end() ? def : it->second;
  }
  std::string required(const std::string& k) const {
    auto it = s_.find(k);
    if (it == s_.end()) throw InvalidArgument("cli: " + command_ + " needs --" + k);
    return it->second;
  }

  int n() const {
    const int v = parse_int("n", required("n"));
    if (v < 1) throw InvalidArgument("cli: --n must be positive");
    return v;
  }
  double r() const {
    const double v = parse_real("r", str("r", "0.5"));
    if (!(v > 0.0 && v < 1.0)) throw InvalidArgument("cli: --r must lie in (0, 1)");
    return v;
  }
  std::optional<int> grid() const {
    if (!has("grid")) return std::nullopt;
    const int v = parse_int("grid", str("grid", ""));
    if (v < 1) throw InvalidArgument("cli: --grid must be positive");
    return v;
  }
  Complex tau() const {
    const std::string t = str("tau", "1");
    const auto comma = t.find(',');
    const Complex v = comma == std::string::npos
                          ? Complex(parse_real("tau", t), 0.0)
                          : Complex(parse_real("tau", t.substr(0, comma)), parse_real("tau", t.substr(comma + 1)));
    if (!(std::abs(std::abs(v) - 1.0) <= 1e-12)) throw InvalidArgument("cli: --tau must be unimodular");
    return v;
  }
  std::string format() const {
    const std::string f = str("format", "csv");
    if (f != "csv" && f != "json") throw InvalidArgument("cli: --format must be csv or json");
    return f;
  }
  std::vector<int> ns() const {
    const std::string t = required("ns");
    std::vector<int> out;
    const auto colon = t.find(':');
    if (colon != std::string::npos) {
      const int a = parse_int("ns", t.substr(0, colon)), b = parse_int("ns", t.substr(colon + 1));
      if (a < 2 || b < a) throw InvalidArgument("cli: --ns a:b needs 2 <= a <= b");
      for (long v = a; v <= b; v *= 2) out.push_back(static_cast<int>(v));
    } else {
      std::stringstream ss(t);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(parse_int("ns", item));
    }
    if (out.empty()) throw InvalidArgument("cli: --ns is empty");
    return out;
  }
  MeasureSpec measure() const {
    const std::string m = str("measure", "lebesgue");
    return m == "lebesgue" ? MeasureSpec::lebesgue() : load_measure(m);
  }
  IntervalWeight weight() const {
    const std::string w = str("weight", "chebyshev1");
    if (w == "chebyshev1") return chebyshev1_weight;
    if (w == "chebyshev2") return chebyshev2_weight;
    throw InvalidArgument("cli: unknown --weight '" + w + "'");
  }
  CorpusFunction function() const { return parse_corpus(str("corpus", "holder:0.6")); }

  json to_json() const {
    json j = json::object();
    for (const auto& [k, v] : s_) j[k] = v;
    return j;
  }

 private:
  std::string command_;
  Settings s_;
};

json metadata(const Config& cfg) {
  json cfg_json = cfg.to_json();
  json m;
  m["library_version"] = kLibraryVersion;
  m["command"] = cfg.command();
  m["config"] = cfg_json;
  m["config_hash"] = fnv1a_hex(cfg.command() + "\n" + cfg_json.dump());
  m["seed"] = cfg.str("seed", "0");
  m["simd_backend"] = std::string(kernels::backend_name(kernels::active_backend()));
  return m;
}

void emit(const Config& cfg, const std::string& text) {
  if (!cfg.has("out")) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.str("out", ""), std::ios::binary);
  if (!out) throw InvalidArgument("cli: cannot write '" + cfg.str("out", "") + "'");
  out << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cli: cannot write '" + path + "'");
  out << text;
}

NodalSystem build_circle_nodes(const Config& cfg) {
  if (cfg.has("nodes")) return make_nodal_system(load_nodes(cfg.str("nodes", "")));
  const int n = cfg.n();
  const std::string family = cfg.str("family", "para-orthogonal");
  if (family == "roots-of-unity") return roots_of_unimodular(n, cfg.tau());
  if (family != "para-orthogonal") throw InvalidArgument("cli: unknown --family '" + family + "'");
  return paraorthogonal_nodes(build_opuc_state(cfg.measure(), n), {n, cfg.tau()});
}

int run_nodes(const Config& cfg) {
  std::ostringstream os;
  if (cfg.has("variant")) {
    const auto sys = interval_nodes_from_measure(cfg.weight(), cfg.n(), parse_variant(cfg.str("variant", "")));
    if (cfg.format() == "csv") {
      write_interval_nodes_csv(os, sys);
    } else {
      json j = interval_nodes_json(sys);
      j["metadata"] = metadata(cfg);
      os << j.dump(2) << '\n';
    }
  } else {
    const auto sys = build_circle_nodes(cfg);
    if (cfg.format() == "csv") {
      write_nodes_csv(os, sys);
    } else {
      json j = nodes_json(sys);
      j["metadata"] = metadata(cfg);
      os << j.dump(2) << '\n';
    }
  }
  emit(cfg, os.str());
  return 0;
}

int run_check(const Config& cfg) {
  const auto sys = build_circle_nodes(cfg);
  const auto rep = estimate_conditions(sys, cfg.grid().value_or(default_condition_grid(sys.size())));
  json j = condition_report_json(rep);
  j["metadata"] = metadata(cfg);
  emit(cfg, j.dump(2) + "\n");
  if (rep.warning) std::cerr << "warning: " << *rep.warning << '\n';
  return 0;
}

// Dense table header, rows of (abscissa, f, interpolant, error).
struct DenseTable {
  std::string header;
  std::vector<std::array<double, 4>> rows;

  double max_error() const {
    double e = 0.0;
    for (const auto& r : rows) e = std::max(e, r[3]);
    return e;
  }
  std::string csv() const {
    std::string s = header + "\n";
    for (const auto& r : rows) {
      s += format_double(r[0]) + "," + format_double(r[1]) + "," + format_double(r[2]) + "," +
           format_double(r[3]) + "\n";
    }
    return s;
  }
};

int finish_report(const Config& cfg, json report, const DenseTable& table) {
  if (cfg.has("dense")) write_file(cfg.str("dense", ""), table.csv());
  report["metadata"] = metadata(cfg);
  emit(cfg, report.dump(2) + "\n");
  return 0;
}

DenseTable angle_table(int points, const std::function<double(double)>& f,
                       const std::function<double(double)>& g) {
  DenseTable t{"theta,f,interpolant,error", {}};
  t.rows.reserve(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) {
    const double th = kTwoPi * k / points;
    const double fv = f(th), gv = g(th);
    t.rows.push_back({th, fv, gv, std::abs(fv - gv)});
  }
  return t;
}

int run_interp(const Config& cfg) {
  const auto sys = build_circle_nodes(cfg);
  const auto fn = cfg.function();
  const DegreePlan plan = make_degree_plan(static_cast<int>(sys.size()), cfg.r());
  const auto F = [&fn](Complex z) { return fn.on_circle(z); };
  const auto interp = interpolate(sys, plan, F);
  const int grid = cfg.grid().value_or(8192);
  const double err = interpolation_error(interp, F, grid);

  DenseTable table{"theta,f,interpolant_re,error", {}};
  if (cfg.has("dense")) {
    for (int k = 0; k < grid; ++k) {
      const double th = kTwoPi * k / grid;
      const Complex z(std::cos(th), std::sin(th));
      const Complex f = F(z), l = interp(z);
      table.rows.push_back({th, f.real(), l.real(), std::abs(f - l)});
    }
  }
  json j;
  j["n"] = plan.n;
  j["p"] = plan.p;
  j["q"] = plan.q;
  j["s"] = plan.s;
  j["function"] = fn.label();
  j["sup_error"] = json_number(err);
  j["error_grid"] = grid;
  j["node_source"] = to_string(sys.source());
  return finish_report(cfg, j, table);
}

int run_interval(const Config& cfg) {
  const auto fn = cfg.function();
  const auto variant = parse_variant(cfg.str("variant", "mu1"));
  const auto sys = interval_nodes_from_measure(cfg.weight(), cfg.n(), variant);
  const auto f = [&fn](double x) { return fn.on_interval(x); };
  const auto interp = interval_interpolate(sys, f);
  const int grid = cfg.grid().value_or(2001);
  if (grid < 2) throw InvalidArgument("cli: interval --grid needs at least 2 points");
  DenseTable table{"x,f,interpolant,error", {}};
  for (int k = 0; k < grid; ++k) {
    const double x = std::clamp(-1.0 + 2.0 * k / (grid - 1), -1.0, 1.0);
    const double fv = f(x), pv = interp(x);
    table.rows.push_back({x, fv, pv, std::abs(fv - pv)});
  }
  json j;
  j["n"] = sys.n;
  j["variant"] = to_string(variant);
  j["node_count"] = interp.node_count();
  j["function"] = fn.label();
  j["sup_error"] = json_number(table.max_error());
  j["error_grid"] = grid;
  return finish_report(cfg, j, table);
}

int run_trig(const Config& cfg) {
  const auto fn = cfg.function();
  const std::string kind = cfg.str("kind", "symmetric");
  const int n = cfg.n();
  const std::function<double(double)> f = fn.on_angle;
  TrigPolynomial tp;
  if (kind == "symmetric") {
    tp = trig_interpolate_symmetric(cfg.weight(), n, f);
  } else if (kind == "paraorthogonal") {
    tp = trig_interpolate_paraorthogonal(build_opuc_state(cfg.measure(), n), cfg.tau(), n, f);
  } else {
    throw InvalidArgument("cli: unknown --kind '" + kind + "'");
  }
  const int grid = cfg.grid().value_or(8192);
  const auto table = angle_table(grid, f, [&tp](double t) { return tp(t); });
  json j;
  j["n"] = n;
  j["kind"] = kind;
  j["degree"] = tp.degree;
  j["function"] = fn.label();
  j["sup_error"] = json_number(table.max_error());
  j["imag_residue"] = json_number(tp.imag_residue);
  j["error_grid"] = grid;
  return finish_report(cfg, j, table);
}

int run_sweep(const Config& cfg) {
  const auto fn = cfg.function();
  const std::string family = cfg.str("family", "roots-of-unity");
  NodalFamily fam;
  if (family == "roots-of-unity") {
    fam = NodalFamily::roots_of_unity(cfg.tau());
  } else if (family == "para-orthogonal") {
    fam = NodalFamily::paraorthogonal(cfg.measure(), cfg.tau());
  } else {
    throw InvalidArgument("cli: unknown --family '" + family + "'");
  }
  SweepOptions opts;
  opts.error_grid = cfg.grid().value_or(8192);
  const auto F = [&fn](Complex z) { return fn.on_circle(z); };
  const auto res = convergence_sweep(fam, cfg.r(), cfg.ns(), F, opts, fn.label());

  json j = sweep_json(res);
  json meta = metadata(cfg);
  meta["error_grid"] = opts.error_grid;
  meta["condition_grid"] = "max(4096, 16 n)";
  j["metadata"] = meta;

  std::ostringstream csv;
  write_sweep_csv(csv, res);
  if (cfg.format() == "csv") {
    emit(cfg, csv.str());
    if (cfg.has("out")) write_file(cfg.str("out", "") + ".json", j.dump(2) + "\n");
  } else {
    emit(cfg, j.dump(2) + "\n");
  }
  for (std::size_t i = 0; i < res.status.size(); ++i) {
    if (res.status[i] != "ok") std::cerr << "n = " << res.ns[i] << ": " << res.status[i] << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Interpolation by Laurent polynomials on unit-circle nodal systems.\n"
      "Settings come from --config (a JSON object keyed by flag names) and are\n"
      "overridden by flags given on the command line."};
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"nodes", "print a nodal system (circle nodes, or interval nodes with --variant)"},
      {"check", "condition estimates B_hat, L_hat and the Lebesgue maximum as JSON"},
      {"interp", "interpolate a corpus function on the circle and report the sup error"},
      {"interval", "interpolate on [-1,1] through the circle lift"},
      {"trig", "trigonometric interpolation on [0, 2 pi]"},
      {"sweep", "convergence sweep over n, CSV + JSON"},
  };
  std::map<std::string, Settings> flag_values;
  std::map<std::string, std::string> config_paths;
  std::vector<std::pair<std::string, CLI::App*>> subs;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config_paths[name], "JSON config file; flags take precedence");
    for (const auto& [flag, fhelp] : kFlags) {
      sub->add_option_function<std::string>(
          "--" + flag, [&flag_values, n = name, f = flag](const std::string& v) { flag_values[n][f] = v; },
          fhelp);
    }
    subs.emplace_back(name, sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    for (const auto& [name, sub] : subs) {
      if (!sub->parsed()) continue;
      Settings merged = config_paths[name].empty() ? Settings{} : load_config(config_paths[name]);
      for (const auto& [k, v] : flag_values[name]) merged[k] = v;
      const Config cfg(name, std::move(merged));
      if (name == "nodes") return run_nodes(cfg);
      if (name == "check") return run_check(cfg);
      if (name == "interp") return run_interp(cfg);
      if (name == "interval") return run_interval(cfg);
      if (name == "trig") return run_trig(cfg);
      if (name == "sweep") return run_sweep(cfg);
    }
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "validation failure: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
