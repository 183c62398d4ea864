#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylgrid/algebra.hpp"
#include "weylgrid/grids.hpp"
#include "weylgrid/io.hpp"
#include "weylgrid/orbitfn.hpp"
#include "weylgrid/transform.hpp"
#include "weylgrid/weyl.hpp"

namespace weylgrid::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string series;
  int rank = 0;
  int M = 0;
  bool interior = false;
  std::string kind = "C";
  double tol = 1e-8;
  std::uint64_t cap = kDefaultOrbitCap;
  std::string format = "text";
  std::string input;
  std::string output;
  std::string points_file;
  bool on_grid = false;
  std::vector<int> point;
  std::vector<int> weight;
  std::vector<double> y;
  std::string basis = "weight";
  std::string function = "gauss";
};

std::string join(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

template <class Range>
Json int_array(const Range& r) {
  Json a = Json::array();
  for (auto v : r) a.push_back(v);
  return a;
}

// Exact integers as JSON numbers when they fit, otherwise as decimal strings.
Json big(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

std::string complex_text(const Complex& z) {
  return io::format_double(z.real()) + " " + io::format_double(z.imag());
}

Json complex_json(const Complex& z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

GridKind parse_kind(const std::string& k) {
  if (k == "C" || k == "c") return GridKind::C;
  if (k == "S" || k == "s") return GridKind::S;
  throw Error(ErrorCode::InvalidArgument, "kind must be C or S, got '" + k + "'");
}

void require_format(const Options& o, std::initializer_list<const char*> allowed, const char* command) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw Error(ErrorCode::InvalidArgument, "format '" + o.format + "' is not available for " + command);
}

void require_M(const Options& o) {
  if (o.M < 1) throw Error(ErrorCode::InvalidArgument, "--M must be a positive integer");
}

std::ifstream open_input(const std::string& path, const char* what) {
  if (path.empty()) throw Error(ErrorCode::InvalidArgument, std::string("missing ") + what + " file (-i)");
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + std::string(what) + " file '" + path + "'");
  return in;
}

Complex builtin_function(const std::string& name, const RealPoint& p) {
  double sum = 0.0, sq = 0.0, weighted = 0.0;
  for (std::size_t i = 0; i < p.y.size(); ++i) {
    sum += p.y[i];
    sq += p.y[i] * p.y[i];
    weighted += static_cast<double>(i + 1) * p.y[i];
  }
  if (name == "one") return {1.0, 0.0};
  if (name == "gauss") return {std::exp(-4.0 * sq), sum};
  if (name == "wave") return std::polar(1.0, 2.0 * std::numbers::pi * weighted) + Complex(std::cos(3.0 * sum), 0.0);
  throw Error(ErrorCode::InvalidArgument, "unknown function '" + name + "' (one, gauss, wave)");
}

void cmd_info(const AlgebraData& d, const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"}, "info");
  const double vol = volume_of_F(d);
  if (o.format == "json") {
    out << Json{{"algebra", to_string(d.lie_type)},
                {"rank", d.n},
                {"weyl_order", big(d.weyl_order)},
                {"volume", vol},
                {"center", d.cartan_det},
                {"coxeter", d.coxeter},
                {"L", d.L},
                {"N", d.N},
                {"marks", int_array(d.marks)},
                {"dual_marks", int_array(d.dual_marks)}}
               .dump(2)
        << '\n';
    return;
  }
  out << "algebra: " << to_string(d.lie_type) << '\n'
      << "rank: " << d.n << '\n'
      << "weyl_order: " << d.weyl_order << '\n'
      << "volume: " << io::format_double(vol) << '\n'
      << "center: " << d.cartan_det << '\n'
      << "coxeter: " << d.coxeter << '\n'
      << "L: " << d.L << '\n'
      << "N: " << d.N << '\n'
      << "marks: " << join(d.marks) << '\n'
      << "dual_marks: " << join(d.dual_marks) << '\n';
}

void cmd_grid(const AlgebraData& d, const Options& o, std::ostream& out) {
  require_M(o);
  const auto points = enumerate_F(d, o.M, o.interior);
  if (o.format == "csv") {
    for (int i = 0; i <= d.n; ++i) out << "s_" << i << ',';
    out << "h,epsilon\n";
  }
  Json list = Json::array();
  for (const auto& p : points) {
    const BigInt h = stabilizer_order_x(d, p).order;
    const BigInt eps = d.weyl_order / h;
    if (o.format == "csv") {
      for (int v : p.s) out << v << ',';
      out << h << ',' << eps << '\n';
    } else if (o.format == "json") {
      list.push_back(Json{{"s", int_array(p.s)}, {"h", big(h)}, {"epsilon", big(eps)}});
    } else {
      out << to_string(p) << " h=" << h << " epsilon=" << eps << '\n';
    }
  }
  if (o.format == "json")
    out << Json{{"algebra", to_string(d.lie_type)}, {"M", o.M}, {"interior", o.interior}, {"points", list}}.dump(2)
        << '\n';
}

void cmd_weights(const AlgebraData& d, const Options& o, std::ostream& out) {
  require_M(o);
  const auto weights = enumerate_Lambda(d, o.M, o.interior);
  if (o.format == "csv") {
    for (int i = 0; i <= d.n; ++i) out << "t_" << i << ',';
    out << "h_dual\n";
  }
  Json list = Json::array();
  for (const auto& w : weights) {
    const BigInt h = stabilizer_order_lambda(d, w).order;
    if (o.format == "csv") {
      for (int v : w.t) out << v << ',';
      out << h << '\n';
    } else if (o.format == "json") {
      list.push_back(Json{{"t", int_array(w.t)}, {"h_dual", big(h)}});
    } else {
      out << to_string(w) << " h_dual=" << h << '\n';
    }
  }
  if (o.format == "json")
    out << Json{{"algebra", to_string(d.lie_type)}, {"M", o.M}, {"interior", o.interior}, {"weights", list}}.dump(2)
        << '\n';
}

void cmd_count(const AlgebraData& d, const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"}, "count");
  require_M(o);
  const BigInt f = count_F(d, o.M);
  const BigInt fi = count_F_interior(d, o.M);
  const BigInt l = count_Lambda(d, o.M);
  const BigInt li = count_Lambda_interior(d, o.M);
  const auto strata = stratify_gcd(d, o.M);
  std::optional<BigInt> nu_value;
  try {
    nu_value = nu(d, o.M);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Unsupported) throw;
  }
  if (o.format == "json") {
    Json g = Json::object();
    for (const auto& [k, v] : strata) g[std::to_string(k)] = big(v);
    Json j{{"algebra", to_string(d.lie_type)}, {"M", o.M},        {"F_M", big(f)}, {"F_M_interior", big(fi)},
           {"Lambda_M", big(l)},               {"Lambda_M_interior", big(li)}, {"gcd", g}};
    j["nu"] = nu_value ? big(*nu_value) : Json(nullptr);
    out << j.dump(2) << '\n';
    return;
  }
  out << "F_M: " << f << '\n'
      << "F_M_interior: " << fi << '\n'
      << "Lambda_M: " << l << '\n'
      << "Lambda_M_interior: " << li << '\n';
  for (const auto& [k, v] : strata) out << "gcd " << k << ": " << v << '\n';
  if (nu_value) out << "nu: " << *nu_value << '\n';
}

void print_report(const StabilizerReport& r, const char* label, const BigInt& orbit, const Options& o,
                  std::ostream& out) {
  std::vector<std::string> comps;
  for (const auto& c : r.component_weyl_orders) comps.push_back(c.str());
  if (o.format == "json") {
    Json c = Json::array();
    for (const auto& v : r.component_weyl_orders) c.push_back(big(v));
    out << Json{{label, big(r.order)}, {"orbit", big(orbit)}, {"zero_nodes", int_array(r.zero_nodes)},
                {"components", c}}
               .dump(2)
        << '\n';
    return;
  }
  out << label << ": " << r.order << '\n' << "orbit: " << orbit << '\n' << "zero_nodes: " << join(r.zero_nodes) << '\n';
  out << "components: [";
  for (std::size_t i = 0; i < comps.size(); ++i) out << (i ? "," : "") << comps[i];
  out << "]\n";
}

void cmd_stab(const AlgebraData& d, const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"}, "stab");
  require_M(o);
  if (o.point.empty() == o.weight.empty())
    throw Error(ErrorCode::InvalidArgument, "stab needs exactly one of --point or --weight");
  if (!o.point.empty()) {
    const auto p = make_grid_point(d, o.M, o.point);
    const auto r = stabilizer_order_x(d, p);
    print_report(r, "h", d.weyl_order / r.order, o, out);
  } else {
    const auto w = make_weight_point(d, o.M, o.weight);
    const auto r = stabilizer_order_lambda(d, w);
    print_report(r, "h_dual", d.weyl_order / r.order, o, out);
  }
}

void cmd_orbit(const AlgebraData& d, const Options& o, std::ostream& out) {
  if (o.weight.size() != static_cast<std::size_t>(d.n))
    throw Error(ErrorCode::InvalidArgument, "--weight needs " + std::to_string(d.n) + " coordinates");
  if (o.basis != "weight" && o.basis != "coweight")
    throw Error(ErrorCode::InvalidArgument, "--basis must be weight or coweight");
  const auto orb = orbit(d, o.weight, o.basis == "weight" ? OrbitBasis::Weight : OrbitBasis::Coweight, o.cap);
  if (o.format == "json") {
    Json list = Json::array();
    for (const auto& e : orb.elements) list.push_back(Json{{"coords", int_array(e.coords)}, {"sign", e.sign}});
    out << Json{{"size", orb.size()}, {"signs_consistent", orb.signs_consistent}, {"elements", list}}.dump(2) << '\n';
    return;
  }
  if (o.format == "csv") {
    for (int i = 1; i <= d.n; ++i) out << (o.basis == "weight" ? "t_" : "y_") << i << ',';
    out << "sign\n";
    for (const auto& e : orb.elements) {
      for (int v : e.coords) out << v << ',';
      out << e.sign << '\n';
    }
    return;
  }
  out << "size: " << orb.size() << '\n';
  for (const auto& e : orb.elements) out << join(e.coords) << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
}

void cmd_eval(const AlgebraData& d, const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"}, "eval");
  require_M(o);
  const GridKind kind = parse_kind(o.kind);
  const auto lambda = make_weight_point(d, o.M, o.weight);
  Complex value;
  if (!o.y.empty()) {
    const RealPoint p{o.y};
    value = kind == GridKind::C ? eval_C_real(d, lambda, p, o.cap) : eval_S_real(d, lambda, p, o.cap);
  } else {
    const auto x = make_grid_point(d, o.M, o.point);
    value = kind == GridKind::C ? eval_C_grid(d, lambda, x, o.cap) : eval_S_grid(d, lambda, x, o.cap);
  }
  if (o.format == "json")
    out << complex_json(value).dump(2) << '\n';
  else
    out << complex_text(value) << '\n';
}

void cmd_sample(const AlgebraData& d, const Options& o, std::ostream& out) {
  require_format(o, {"text", "csv"}, "sample");
  require_M(o);
  const auto set = sample(d, o.M, parse_kind(o.kind),
                          [&](const GridPoint& p) { return builtin_function(o.function, to_real_point(p)); });
  io::write_samples(out, d, set);
}

void cmd_transform(const AlgebraData& d, const Options& o, GridKind kind, std::ostream& out, std::ostream& err) {
  require_format(o, {"text", "csv"}, kind == GridKind::C ? "ctransform" : "stransform");
  require_M(o);
  auto in = open_input(o.input, "sample");
  const auto samples = io::read_samples(in, d, o.M, kind);
  const auto coeffs = kind == GridKind::C ? ctransform(d, samples, o.cap) : stransform(d, samples, o.cap);
  if (coeffs.warning == TransformWarning::EmptyGrid)
    err << "warning: W_EMPTY_GRID: M = " << o.M << " is below the Coxeter number " << d.coxeter
        << "; the interior grid is empty\n";
  io::write_coefficients(out, d, coeffs);
}

void cmd_interpolate(const AlgebraData& d, const Options& o, std::ostream& out) {
  require_format(o, {"text", "csv"}, "interpolate");
  require_M(o);
  const GridKind kind = parse_kind(o.kind);
  if (o.on_grid == !o.points_file.empty())
    throw Error(ErrorCode::InvalidArgument, "interpolate needs exactly one of --points or --grid");
  auto in = open_input(o.input, "coefficient");
  const auto coeffs = io::read_coefficients(in, d, o.M, kind);
  const Interpolant f(d, coeffs, o.cap);
  if (o.on_grid) {
    const auto values = sample(d, o.M, kind, [&](const GridPoint& p) { return f(to_real_point(p)); });
    io::write_samples(out, d, values);
    return;
  }
  std::ifstream pin(o.points_file);
  if (!pin) throw Error(ErrorCode::MalformedInput, "cannot open points file '" + o.points_file + "'");
  const auto points = io::read_points(pin, d);
  std::vector<Complex> values;
  for (const auto& p : points) values.push_back(f(p));
  io::write_point_values(out, d, points, values);
}

int cmd_verify(const AlgebraData& d, const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"}, "verify");
  require_M(o);
  const auto r = verify_orthogonality(d, o.M, parse_kind(o.kind), o.tol, o.cap);
  if (o.format == "json") {
    out << Json{{"algebra", to_string(d.lie_type)},
                {"M", r.M},
                {"kind", o.kind},
                {"size", r.size},
                {"max_offdiag", r.max_offdiag},
                {"max_diag_rel_error", r.max_diag_rel_error},
                {"tolerance", r.tolerance},
                {"passed", r.passed}}
               .dump(2)
        << '\n';
  } else {
    out << "algebra: " << to_string(d.lie_type) << '\n'
        << "M: " << r.M << '\n'
        << "kind: " << o.kind << '\n'
        << "size: " << r.size << '\n'
        << "max_offdiag: " << io::format_double(r.max_offdiag) << '\n'
        << "max_diag_rel_error: " << io::format_double(r.max_diag_rel_error) << '\n'
        << "tolerance: " << io::format_double(r.tolerance) << '\n'
        << "result: " << (r.passed ? "PASS" : "FAIL") << '\n';
  }
  return r.passed ? 0 : 1;
}

int cmd_rmatrix(const AlgebraData& d, const Options& o, std::ostream& out) {
  const auto generated = generate_R(d);
  const auto stored = appendix_R(d);
  const auto& g = generated.rows;
  std::vector<std::string> diffs;
  if (g.rows() != stored.rows.rows() || g.cols() != stored.rows.cols()) {
    diffs.push_back("shape " + std::to_string(g.rows()) + "x" + std::to_string(g.cols()) + " vs stored " +
                    std::to_string(stored.rows.rows()) + "x" + std::to_string(stored.rows.cols()));
  } else {
    for (std::size_t l = 0; l < g.rows(); ++l)
      for (std::size_t i = 0; i < g.cols(); ++i)
        if (g(l, i) != stored.rows(l, i))
          diffs.push_back("(" + std::to_string(l) + "," + std::to_string(i) + "): " + g(l, i).str() + " vs stored " +
                          stored.rows(l, i).str());
  }
  if (o.format == "json") {
    Json rows = Json::array();
    for (std::size_t l = 0; l < g.rows(); ++l) {
      Json row = Json::array();
      for (std::size_t i = 0; i < g.cols(); ++i) row.push_back(big(g(l, i)));
      rows.push_back(row);
    }
    out << Json{{"algebra", to_string(d.lie_type)}, {"L", d.L}, {"N", d.N}, {"R", rows}, {"differences", diffs}}.dump(2)
        << '\n';
  } else {
    const char sep = o.format == "csv" ? ',' : ' ';
    if (o.format == "csv") {
      out << "l";
      for (std::size_t i = 0; i < g.cols(); ++i) out << ",d_" << i;
      out << '\n';
    }
    for (std::size_t l = 0; l < g.rows(); ++l) {
      out << l;
      for (std::size_t i = 0; i < g.cols(); ++i) out << sep << g(l, i);
      out << '\n';
    }
    if (o.format == "text") {
      if (diffs.empty()) out << "stored table: identical\n";
      for (const auto& line : diffs) out << "differs at " << line << '\n';
    }
  }
  return diffs.empty() ? 0 : 1;
}

void add_algebra(CLI::App* sub, Options& o) {
  sub->add_option("series", o.series, "Series letter A-G")->required();
  sub->add_option("rank", o.rank, "Rank")->required();
}

CLI::Option* add_M(CLI::App* sub, Options& o) { return sub->add_option("--M,-M", o.M, "Grid refinement M"); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Discrete orbit-function transforms on fundamental domains of compact simple Lie groups", "weylgrid"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cap", o.cap, "Largest |W| allowed for orbit enumeration");
  app.add_option("-o,--output", o.output, "Write results to this file");
  app.fallthrough();

  auto* info = app.add_subcommand("info", "Structural constants");
  add_algebra(info, o);
  auto* grid = app.add_subcommand("grid", "List F_M with h_x and epsilon(x)");
  add_algebra(grid, o);
  add_M(grid, o)->required();
  grid->add_flag("--interior", o.interior, "Interior points only");
  auto* weights = app.add_subcommand("weights", "List Lambda_M with h^v_lambda");
  add_algebra(weights, o);
  add_M(weights, o)->required();
  weights->add_flag("--interior", o.interior, "Interior weights only");
  auto* count = app.add_subcommand("count", "Point counts and gcd stratification");
  add_algebra(count, o);
  add_M(count, o)->required();
  auto* stab = app.add_subcommand("stab", "Stabiliser of a grid point or weight");
  add_algebra(stab, o);
  add_M(stab, o)->required();
  stab->add_option("--point", o.point, "Barycentric s_0,...,s_n")->delimiter(',');
  stab->add_option("--weight", o.weight, "Barycentric t_0,...,t_n")->delimiter(',');
  auto* orb = app.add_subcommand("orbit", "Weyl orbit of an integral vector");
  add_algebra(orb, o);
  orb->add_option("--weight", o.weight, "Coordinates in the chosen basis")->delimiter(',')->required();
  orb->add_option("--basis", o.basis, "weight or coweight");
  auto* eval = app.add_subcommand("eval", "Evaluate Phi_lambda or phi_lambda");
  add_algebra(eval, o);
  add_M(eval, o)->required();
  eval->add_option("--weight", o.weight, "Barycentric t_0,...,t_n")->delimiter(',')->required();
  auto* eval_point = eval->add_option("--point", o.point, "Barycentric s_0,...,s_n")->delimiter(',');
  auto* eval_y = eval->add_option("--y", o.y, "Real omega^v coordinates y_1,...,y_n")->delimiter(',');
  eval_point->excludes(eval_y);
  eval->add_option("--kind", o.kind, "C or S");
  auto* samp = app.add_subcommand("sample", "Sample a built-in function on the grid as CSV");
  add_algebra(samp, o);
  add_M(samp, o)->required();
  samp->add_option("--kind", o.kind, "C (F_M) or S (interior)");
  samp->add_option("--function", o.function, "one, gauss or wave");
  auto* ctr = app.add_subcommand("ctransform", "Discrete C-transform of a sample CSV");
  add_algebra(ctr, o);
  add_M(ctr, o)->required();
  ctr->add_option("-i,--input", o.input, "Sample CSV")->required();
  auto* str = app.add_subcommand("stransform", "Discrete S-transform of a sample CSV");
  add_algebra(str, o);
  add_M(str, o)->required();
  str->add_option("-i,--input", o.input, "Sample CSV")->required();
  auto* interp = app.add_subcommand("interpolate", "Evaluate the interpolating function");
  add_algebra(interp, o);
  add_M(interp, o)->required();
  interp->add_option("--kind", o.kind, "C or S");
  interp->add_option("-i,--input", o.input, "Coefficient CSV")->required();
  interp->add_option("--points", o.points_file, "CSV of real points y_1,...,y_n");
  interp->add_flag("--grid", o.on_grid, "Evaluate on the grid and write a sample CSV");
  auto* verify = app.add_subcommand("verify", "Check discrete orthogonality");
  add_algebra(verify, o);
  add_M(verify, o)->required();
  verify->add_option("--kind", o.kind, "C or S");
  verify->add_option("--tol", o.tol, "Tolerance");
  auto* rmat = app.add_subcommand("rmatrix", "Generate R and compare with the stored table");
  add_algebra(rmat, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << error_token(ErrorCode::InvalidArgument) << ": " << e.what() << '\n';
    return 2;
  }

  try {
    const AlgebraData data = build(parse_series(o.series), o.rank);
    // Buffer so that a failing command writes nothing.
    std::ostringstream buffer;
    int status = 0;
    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "info") cmd_info(data, o, buffer);
    else if (name == "grid") cmd_grid(data, o, buffer);
    else if (name == "weights") cmd_weights(data, o, buffer);
    else if (name == "count") cmd_count(data, o, buffer);
    else if (name == "stab") cmd_stab(data, o, buffer);
    else if (name == "orbit") cmd_orbit(data, o, buffer);
    else if (name == "eval") cmd_eval(data, o, buffer);
    else if (name == "sample") cmd_sample(data, o, buffer);
    else if (name == "ctransform") cmd_transform(data, o, GridKind::C, buffer, err);
    else if (name == "stransform") cmd_transform(data, o, GridKind::S, buffer, err);
    else if (name == "interpolate") cmd_interpolate(data, o, buffer);
    else if (name == "verify") status = cmd_verify(data, o, buffer);
    else if (name == "rmatrix") status = cmd_rmatrix(data, o, buffer);
    if (o.output.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(o.output);
      if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write '" + o.output + "'");
      file << buffer.str();
    }
    return status;
  } catch (const Error& e) {
    err << "error: " << error_token(e.code()) << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << error_token(ErrorCode::Internal) << ": " << e.what() << '\n';
    return 2;
  }
}

}  // namespace weylgrid::cli
