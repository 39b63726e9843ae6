#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fcc/fcc.hpp"

namespace fcc::cli {
namespace {

using Json = nlohmann::ordered_json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Tables and formatting

using Cell = std::variant<long long, double, std::string>;

struct Table {
  Json meta = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string format_double(double v) {
  if (v == 0) v = 0;  // drop the sign of negative zero
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_cell(const Cell& c) {
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  return std::get<std::string>(c);
}

std::string to_csv(const Table& t) {
  std::string s;
  for (std::size_t i = 0; i < t.columns.size(); ++i) s += (i ? "," : "") + t.columns[i];
  s += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + csv_cell(row[i]);
    s += '\n';
  }
  return s;
}

std::string to_json(const Table& t) {
  Json doc = t.meta;
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i)
      std::visit([&](const auto& v) { obj[t.columns[i]] = v; }, row[i]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Configuration

struct RunConfig {
  std::string command;
  int n = 2;
  std::vector<int> degrees;  // lebesgue accepts a list
  std::string set = "hstar";
  std::string kind = "instar";
  std::string function;
  std::string k;
  std::string eval = "grid";
  int grid = 0;  // 0: command default
  int quad = 0;
  std::string format = "csv";
  std::string out;
  std::string samples;
};

std::optional<HIndex> parse_index(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::array<int, 4> v{};
  std::size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    const std::size_t end = i < 3 ? s.find(',', pos) : s.size();
    if (end == std::string::npos) throw std::invalid_argument("--k expects four comma-separated integers");
    const char* b = s.data() + pos;
    const char* e = s.data() + end;
    const auto r = std::from_chars(b, e, v[i]);
    if (r.ec != std::errc() || r.ptr != e) throw std::invalid_argument("--k: bad integer in '" + s + "'");
    pos = end + 1;
  }
  return HIndex(v);
}

void emit(const RunConfig& cfg, const Table& t, std::ostream& out) {
  const std::string text = cfg.format == "json" ? to_json(t) : to_csv(t);
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw IoError("cannot open output file '" + cfg.out + "'");
  f << text;
  if (!f) throw IoError("failed writing output file '" + cfg.out + "'");
}

Json base_meta(const RunConfig& cfg) {
  Json m = Json::object();
  m["command"] = cfg.command;
  m["n"] = cfg.n;
  return m;
}

// ---------------------------------------------------------------------------
// Sample files: header j1,j2,j3,j4,re,im

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
  std::size_t b = 0;
  while (b < s.size() && s[b] == ' ') ++b;
  return s.substr(b);
}

template <class T>
T parse_number(const std::string& field, const std::string& where) {
  T v{};
  const auto f = trim(field);
  const auto r = std::from_chars(f.data(), f.data() + f.size(), v);
  if (r.ec != std::errc() || r.ptr != f.data() + f.size())
    throw std::invalid_argument(where + ": cannot parse '" + field + "'");
  return v;
}

std::map<HIndex, complex> read_samples(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open sample file '" + path + "'");
  std::string line;
  if (!std::getline(f, line) || trim(line) != "j1,j2,j3,j4,re,im")
    throw std::invalid_argument("sample file '" + path + "' must start with header j1,j2,j3,j4,re,im");
  std::map<HIndex, complex> values;
  int lineno = 1;
  while (std::getline(f, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    const std::string where = path + ":" + std::to_string(lineno);
    if (fields.size() != 6) throw std::invalid_argument(where + ": expected 6 fields");
    std::array<int, 4> j{};
    for (int i = 0; i < 4; ++i) j[i] = parse_number<int>(fields[i], where);
    const HIndex key(j);
    const complex v(parse_number<double>(fields[4], where), parse_number<double>(fields[5], where));
    if (!values.emplace(key, v).second)
      throw std::invalid_argument(where + ": duplicate node " + to_string(key));
  }
  if (f.bad()) throw IoError("failed reading sample file '" + path + "'");
  return values;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_nodes(const RunConfig& cfg, std::ostream& out) {
  const int n = cfg.n;
  Table t;
  t.meta = base_meta(cfg);
  t.meta["set"] = cfg.set;
  t.columns = {"j1", "j2", "j3", "j4", "t1", "t2", "t3", "t4", "x1", "x2", "x3",
               "stratum", "weight", "weight_value"};

  const auto add_row = [&](const HIndex& k, const std::string& stratum, const Rational& w) {
    const HomoPoint p = node_point(k, n);
    const Point3 x = from_homogeneous(p);
    std::string frac = std::to_string(w.numerator());
    if (w.denominator() != 1) frac += "/" + std::to_string(w.denominator());
    t.rows.push_back({(long long)k[0], (long long)k[1], (long long)k[2], (long long)k[3], p[0], p[1],
                      p[2], p[3], x.x1, x.x2, x.x3, stratum, frac,
                      boost::rational_cast<double>(w)});
  };

  if (cfg.set == "lambda") {
    for (const auto& node : generate_Lambda_n(n))
      add_row(node.k, to_string(node.stratum), Rational(tetra_weight(node.stratum)));
  } else if (cfg.set == "hstar") {
    for (const auto& k : generate_Hn_star(n)) add_row(k, stratum_of_index(k, n).name(), weight_c(k, n));
  } else if (cfg.set == "hn") {
    for (const auto& k : generate_Hn(n)) add_row(k, stratum_of_index(k, n).name(), Rational(1));
  } else if (cfg.set == "hcirc") {
    for (const auto& k : generate_Hn_circ(n)) add_row(k, "interior", Rational(1));
  } else {
    throw std::invalid_argument("unknown node set '" + cfg.set + "' (expected hn|hstar|hcirc|lambda)");
  }
  emit(cfg, t, out);
  return kOk;
}

/// The value the interpolant must take at node j (instar sums over the congruence class).
complex expected_node_value(InterpKind kind, const SampleFunction& f, const HIndex& j, int n) {
  if (kind != InterpKind::InStar) return f(node_point(j, n));
  complex s = 0;
  for (const auto& k : congruent_orbit_index(j, n)) s += f(node_point(k, n));
  return s;
}

int cmd_interpolate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const InterpKind kind = parse_interp_kind(cfg.kind);
  const int n = cfg.n;
  if (cfg.function.empty() == cfg.samples.empty())
    throw std::invalid_argument("interpolate needs exactly one of --f or --samples");

  std::optional<SampleFunction> f;
  std::optional<Interpolant> interp;
  if (!cfg.function.empty()) {
    f = builtin_function(cfg.function, parse_index(cfg.k));
    interp.emplace(interpolate(kind, *f, n));
  } else {
    interp.emplace(Interpolant::from_node_values(kind, n, read_samples(cfg.samples)));
  }

  Table t;
  t.meta = base_meta(cfg);
  t.meta["kind"] = to_string(kind);
  t.meta["eval"] = cfg.eval;
  t.columns = {"t1", "t2", "t3", "t4", "re", "im"};
  if (f) t.columns.insert(t.columns.end(), {"expected_re", "expected_im", "abs_error"});

  std::vector<HomoPoint> points;
  std::vector<HIndex> node_keys;
  if (cfg.eval == "nodes") {
    node_keys = interp->nodes();
    for (const auto& j : node_keys) points.push_back(node_point(j, n));
  } else if (cfg.eval == "grid") {
    const int g = cfg.grid > 0 ? cfg.grid : 9;
    points = kind == InterpKind::In || kind == InterpKind::InStar ? dodeca_grid(g) : tetra_grid(g);
    t.meta["grid"] = g;
  } else {
    throw std::invalid_argument("unknown --eval '" + cfg.eval + "' (expected grid|nodes)");
  }

  const auto values = parallel_map(points.size(), [&](std::size_t i) { return (*interp)(points[i]); });
  double max_err = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const HomoPoint& p = points[i];
    std::vector<Cell> row{p[0], p[1], p[2], p[3], values[i].real(), values[i].imag()};
    if (f) {
      const complex e = node_keys.empty() ? (*f)(p) : expected_node_value(kind, *f, node_keys[i], n);
      const double d = std::abs(values[i] - e);
      max_err = std::max(max_err, d);
      row.insert(row.end(), {e.real(), e.imag(), d});
    }
    t.rows.push_back(std::move(row));
  }
  if (f) {
    t.meta["max_abs_error"] = max_err;
    err << "max_abs_error " << format_double(max_err) << "\n";
  }
  emit(cfg, t, out);
  return kOk;
}

int cmd_cubature(const RunConfig& cfg, std::ostream& out) {
  if (cfg.function.empty()) throw std::invalid_argument("cubature needs --f");
  const SampleFunction f = builtin_function(cfg.function, parse_index(cfg.k));
  complex v;
  std::string rule;
  if (cfg.set == "hstar") {
    v = cubature_dodeca(f, cfg.n);
    rule = "dodecahedron";
  } else if (cfg.set == "lambda") {
    v = cubature_tetra(f, cfg.n);
    rule = "tetrahedron";
  } else {
    throw std::invalid_argument("cubature --set must be hstar or lambda");
  }
  Table t;
  t.meta = base_meta(cfg);
  t.columns = {"n", "rule", "function", "re", "im"};
  t.rows.push_back({(long long)cfg.n, rule, cfg.function, v.real(), v.imag()});
  emit(cfg, t, out);
  return kOk;
}

int cmd_lebesgue(const RunConfig& cfg, std::ostream& out) {
  const bool partial_sums = cfg.kind == "sn";
  const InterpKind kind = partial_sums ? InterpKind::InStar : parse_interp_kind(cfg.kind);
  const std::vector<int> degrees = cfg.degrees.empty() ? std::vector<int>{cfg.n} : cfg.degrees;
  const int grid = cfg.grid > 0 ? cfg.grid : (partial_sums ? 17 : kDefaultLebesgueGrid);
  const int quad = cfg.quad > 0 ? cfg.quad : 64;

  Table t;
  t.meta["command"] = cfg.command;
  t.meta["kind"] = cfg.kind;
  t.meta["grid"] = grid;
  if (partial_sums) t.meta["quad"] = quad;
  t.columns = {"n", "kind", "estimate", "ratio_log3"};
  for (const int n : degrees) {
    const double est = partial_sums ? lebesgue_Sn(n, grid, quad) : lebesgue_interp(n, kind, grid);
    const double l = std::log(double(n));
    t.rows.push_back({(long long)n, cfg.kind, est, est / (l * l * l)});
  }
  emit(cfg, t, out);
  return kOk;
}

int cmd_kernel(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string name = cfg.function.empty() ? "phistar" : cfg.function;
  const auto& pairs = kernel_pairs();
  const auto it = std::find_if(pairs.begin(), pairs.end(), [&](const KernelPair& p) { return p.name == name; });
  if (it == pairs.end()) {
    std::string known;
    for (const auto& p : pairs) known += (known.empty() ? "" : "|") + p.name;
    throw std::invalid_argument("unknown kernel '" + name + "' (expected " + known + ")");
  }
  if (cfg.n < it->min_degree)
    throw std::invalid_argument("kernel " + name + " needs n >= " + std::to_string(it->min_degree));
  const int g = cfg.grid > 0 ? cfg.grid : 5;
  const auto points = dodeca_grid(g);

  Table t;
  t.meta = base_meta(cfg);
  t.meta["kernel"] = name;
  t.meta["grid"] = g;
  t.columns = {"t1", "t2", "t3", "t4", "fast_re", "fast_im", "reference_re", "reference_im", "abs_diff"};
  double max_diff = 0;
  for (const auto& p : points) {
    const complex a = it->fast(cfg.n, p), b = it->reference(cfg.n, p);
    const double d = std::abs(a - b);
    max_diff = std::max(max_diff, d);
    t.rows.push_back({p[0], p[1], p[2], p[3], a.real(), a.imag(), b.real(), b.imag(), d});
  }
  t.meta["max_abs_diff"] = max_diff;
  err << "max_abs_diff " << format_double(max_diff) << "\n";
  emit(cfg, t, out);
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto results = run_verification(cfg.n);
  Table t;
  t.meta = base_meta(cfg);
  t.columns = {"check", "status", "error", "tolerance"};
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    t.rows.push_back({r.name, std::string(r.passed ? "PASS" : "FAIL"), r.error, r.tolerance});
  }
  t.meta["passed"] = all;
  emit(cfg, t, out);
  return all ? kOk : kVerifyFailed;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool list_of_degrees = false) {
  if (list_of_degrees)
    sub->add_option("--n", cfg.degrees, "degree, or a comma-separated list")->delimiter(',');
  else
    sub->add_option("--n", cfg.n, "degree n")->check(CLI::Range(1, 1000));
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", cfg.out, "output file (default: standard output)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trigonometric interpolation and cubature on the fcc lattice", "fcc-trig"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* nodes = app.add_subcommand("nodes", "list a node set with strata and weights");
  add_common(nodes, cfg);
  nodes->add_option("--set", cfg.set, "hn|hstar|hcirc|lambda");

  auto* interp = app.add_subcommand("interpolate", "evaluate an interpolant");
  add_common(interp, cfg);
  interp->add_option("--kind", cfg.kind, "in|instar|ln|lnstar");
  interp->add_option("--f", cfg.function, "builtin function");
  interp->add_option("--k", cfg.k, "index a,b,c,d for phi, tc and ts");
  interp->add_option("--samples", cfg.samples, "CSV of node values (j1,j2,j3,j4,re,im)");
  interp->add_option("--grid", cfg.grid, "evaluation points per axis")->check(CLI::Range(2, 1000));
  interp->add_option("--eval", cfg.eval, "grid|nodes");

  auto* cub = app.add_subcommand("cubature", "apply a cubature rule");
  add_common(cub, cfg);
  cub->add_option("--f", cfg.function, "builtin function");
  cub->add_option("--k", cfg.k, "index a,b,c,d for phi, tc and ts");
  cub->add_option("--set", cfg.set, "hstar (dodecahedron) or lambda (tetrahedron)");

  auto* leb = app.add_subcommand("lebesgue", "estimate Lebesgue constants");
  add_common(leb, cfg, true);
  leb->add_option("--kind", cfg.kind, "in|instar|ln|lnstar|sn");
  leb->add_option("--grid", cfg.grid, "scan points per axis")->check(CLI::Range(2, 1000));
  leb->add_option("--quad", cfg.quad, "quadrature points per axis (sn only)")->check(CLI::Range(2, 1000));

  auto* ker = app.add_subcommand("kernel", "compare a compact kernel with its direct sum");
  add_common(ker, cfg);
  ker->add_option("--f", cfg.function, "dirichlet|dirichlet-product|phistar|phin|edge");
  ker->add_option("--grid", cfg.grid, "points per axis")->check(CLI::Range(2, 1000));

  auto* ver = app.add_subcommand("verify", "check the exact identities at degree n");
  add_common(ver, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "fcc-trig: " << e.what() << "\n";
    return kUsage;
  }

  try {
    for (const auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
    if (cfg.command == "lebesgue")
      for (int d : cfg.degrees)
        if (d < 1) throw std::invalid_argument("--n must be positive");
    if (cfg.command == "nodes") return cmd_nodes(cfg, out);
    if (cfg.command == "interpolate") return cmd_interpolate(cfg, out, err);
    if (cfg.command == "cubature") return cmd_cubature(cfg, out);
    if (cfg.command == "lebesgue") return cmd_lebesgue(cfg, out);
    if (cfg.command == "kernel") return cmd_kernel(cfg, out, err);
    return cmd_verify(cfg, out);
  } catch (const IoError& e) {
    err << "fcc-trig: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    err << "fcc-trig: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace fcc::cli
