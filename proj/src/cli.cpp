#include "lorentz/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lorentz/chain_io.hpp"
#include "lorentz/generators.hpp"
#include "lorentz/hyperspherical.hpp"
#include "lorentz/radial.hpp"
#include "lorentz/suites.hpp"

namespace lorentz::cli {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const CMatrix& m) {
  json labels = json::array(), data = json::array();
  for (const auto& b : m.row_basis()) labels.push_back(b.str());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    data.push_back(row);
  }
  json cols = json::array();
  for (const auto& b : m.col_basis()) cols.push_back(b.str());
  return {{"rows", labels}, {"cols", cols}, {"data", data}};
}

json envelope(const std::string& command, json inputs, json results, json residuals) {
  return {{"command", command}, {"inputs", std::move(inputs)}, {"results", std::move(results)},
          {"residuals", std::move(residuals)}, {"version", kVersion}};
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "' for writing");
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

HalfInt parse_label(const std::string& text, const std::string& flag) {
  try {
    return HalfInt::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError(what + ": '" + text + "' is not a number");
  return v;
}

// START:STOP:N, N >= 1 points including both ends.
std::vector<double> parse_grid(const std::string& text, const std::string& flag) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 3) throw UsageError(flag + ": expected START:STOP:N, got '" + text + "'");
  const double a = parse_double(parts[0], flag), b = parse_double(parts[1], flag);
  const double nd = parse_double(parts[2], flag);
  if (nd < 1 || nd != static_cast<double>(static_cast<long>(nd)) || nd > 1e7)
    throw UsageError(flag + ": N must be a positive integer");
  const auto n = static_cast<long>(nd);
  std::vector<double> out;
  for (long i = 0; i < n; ++i) out.push_back(n == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  return out;
}

cplx parse_complex(const std::string& text, const std::string& flag) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_double(text, flag), 0.0};
  return {parse_double(text.substr(0, comma), flag), parse_double(text.substr(comma + 1), flag)};
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

ChainConfig load_chain(const std::string& source) {
  try {
    return load_chain_config(source);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--chain: ") + e.what());
  }
}

std::optional<double> tolerance(const std::optional<double>& flag) {
  if (flag) return flag;
  if (const char* env = std::getenv(kTolEnv); env && *env) return parse_double(env, kTolEnv);
  return std::nullopt;
}

// zfun ----------------------------------------------------------------------

struct ZfunArgs {
  std::string l, m, n, grid, tau_grid, format = "json", out;
  double theta = 0, tau = 0, phi = 0, psi = 0, eps = 0, veps = 0;
};

int cmd_zfun(const ZfunArgs& a, std::ostream& out) {
  const HalfInt l = parse_label(a.l, "--l");
  if (l.twice() < 0) throw UsageError("--l must be non-negative");
  auto pick = [&](const std::string& text, const std::string& flag) {
    if (text.empty()) return projections(l);
    const HalfInt v = parse_label(text, flag);
    if (abs(v) > l || (v - l).twice() % 2 != 0) throw UsageError(flag + " must be one of l, l-1, ..., -l");
    return std::vector<HalfInt>{v};
  };
  const auto ms = pick(a.m, "--m"), ns = pick(a.n, "--n");
  const auto thetas = a.grid.empty() ? std::vector<double>{a.theta} : parse_grid(a.grid, "--grid");
  const auto taus = a.tau_grid.empty() ? std::vector<double>{a.tau} : parse_grid(a.tau_grid, "--tau-grid");
  if (a.format != "json" && a.format != "csv") throw UsageError("--format must be json or csv");

  const bool csv = a.format == "csv";
  std::ostringstream text;
  if (csv) text << "l,m,n,theta,tau,re,im,discrepancy,m_re,m_im\n";
  json rows = json::array();
  double worst = 0;
  for (HalfInt m : ms)
    for (HalfInt n : ns)
      for (double th : thetas)
        for (double ta : taus) {
          const HypersphericalKey key{l, m, n};
          const cplx z = z_series(key, th, ta);
          const double d = std::abs(z - z_factorized(key, th, ta));
          const cplx mf = m_function(key, {a.phi, a.eps, th, ta, a.psi, a.veps});
          worst = std::max(worst, d);
          if (csv) {
            text << l.str() << ',' << m.str() << ',' << n.str() << ',' << fmt(th) << ',' << fmt(ta) << ','
                 << fmt(z.real()) << ',' << fmt(z.imag()) << ',' << fmt(d) << ',' << fmt(mf.real()) << ','
                 << fmt(mf.imag()) << '\n';
          } else {
            rows.push_back({{"l", l.str()}, {"m", m.str()}, {"n", n.str()}, {"theta", th}, {"tau", ta},
                            {"z", complex_json(z)}, {"discrepancy", d}, {"M", complex_json(mf)}});
          }
        }
  if (!csv) {
    json inputs = {{"l", l.str()}, {"m", a.m.empty() ? json(nullptr) : json(ms[0].str())},
                   {"n", a.n.empty() ? json(nullptr) : json(ns[0].str())},
                   {"theta", thetas}, {"tau", taus}, {"phi", a.phi}, {"psi", a.psi}, {"eps", a.eps}, {"veps", a.veps}};
    text << dump(envelope("zfun", inputs, rows, {{"max_discrepancy", worst}}));
  }
  write_text(text.str(), a.out, out);
  return ok;
}

// ops -----------------------------------------------------------------------

struct OpsArgs {
  std::string set = "waerden", l = "1/2", ldot = "0", l0 = "0", op, out;
  int p = 1;
};

int cmd_ops(const OpsArgs& a, std::ostream& out) {
  OperatorSet ops;
  json inputs = {{"set", a.set}};
  RelationSet relations = RelationSet::Com1;
  if (a.set == "waerden") {
    const HalfInt l = parse_label(a.l, "--l"), ld = parse_label(a.ldot, "--ldot");
    if (l.twice() < 0 || ld.twice() < 0) throw UsageError("weights must be non-negative");
    ops = waerden_set(l, ld);
    inputs["l"] = l.str();
    inputs["ldot"] = ld.str();
    relations = RelationSet::WaerdenConsistency;
  } else if (a.set == "helicity" || a.set == "helicity-tilde") {
    const HalfInt l = parse_label(a.l, "--l");
    if (l.twice() < 0) throw UsageError("--l must be non-negative");
    const bool tilde = a.set == "helicity-tilde";
    ops = tilde ? helicity_tilde_set(l) : helicity_set(l);
    inputs["l"] = l.str();
    relations = tilde ? RelationSet::Com1Tilde : RelationSet::Com1;
  } else if (a.set == "gn") {
    const HalfInt l0 = parse_label(a.l0, "--l0");
    if (l0.twice() < 0 || a.p < 1) throw UsageError("gn needs l0 >= 0 and p >= 1");
    ops = basis_change(gn_set({l0, a.p}));
    inputs["l0"] = l0.str();
    inputs["p"] = a.p;
  } else {
    throw UsageError("--set must be waerden, helicity, helicity-tilde or gn");
  }
  json matrices = json::object();
  if (!a.op.empty()) {
    OperatorKind k;
    try {
      k = parse_operator_kind(a.op);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--op: ") + e.what());
    }
    if (!ops.has(k)) throw UsageError("--op: operator " + a.op + " is not part of set " + a.set);
    matrices[to_string(k)] = matrix_json(ops.at(k));
    inputs["op"] = to_string(k);
  } else {
    for (const auto& [k, m] : ops.ops) matrices[to_string(k)] = matrix_json(m);
  }
  const CommutatorReport rep = commutator_report(ops, relations);
  json residuals = json::array();
  for (const auto& r : rep.relations) residuals.push_back({{"relation", r.relation}, {"residual", r.residual}});
  write_text(dump(envelope("ops", inputs, matrices, residuals)), a.out, out);
  return ok;
}

// verify --------------------------------------------------------------------

struct VerifyArgs {
  std::string suite, chain = "dirac", kappa, out;
  std::optional<double> tol;
  double r0 = 0.5, r1 = 60;
  int steps = 10000;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), a.suite) == names.end())
    throw UsageError("--suite must be one of commutators, addition, grouplaw, cg, clifford, schur, gy, radial");
  SuiteOptions o;
  o.tol = tolerance(a.tol);
  o.chain = a.chain;
  o.r0 = a.r0;
  o.r1 = a.r1;
  o.steps = a.steps;
  if (!a.kappa.empty()) o.kappa = parse_complex(a.kappa, "--kappa");
  if (a.chain != "dirac") load_chain(a.chain);
  if (!(a.r0 > 0) || !(a.r1 > a.r0) || a.steps < 100) throw UsageError("radial range needs 0 < r0 < r1 and steps >= 100");
  const SuiteReport rep = run_suite(a.suite, o);
  json checks = json::array(), residuals = json::object();
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"value", c.value}, {"tolerance", c.tolerance},
                      {"criterion", c.criterion}, {"informational", c.informational}, {"detail", c.detail}});
    residuals[c.name] = c.value;
  }
  json inputs = {{"suite", a.suite}, {"tol", o.tol ? json(*o.tol) : json(nullptr)}, {"chain", a.chain}};
  if (a.suite == "radial") {
    inputs["r0"] = a.r0;
    inputs["r1"] = a.r1;
    inputs["steps"] = a.steps;
    inputs["kappa"] = o.kappa ? complex_json(*o.kappa) : json(nullptr);
  }
  json results = {{"passed", rep.passed()}, {"checks", checks}};
  for (const auto& [k, v] : rep.extra.items()) results[k] = v;
  write_text(dump(envelope("verify", inputs, results, residuals)), a.out, out);
  return rep.passed() ? ok : verification_failed;
}

// gy-build ------------------------------------------------------------------

struct GyArgs {
  std::string chain = "dirac", out;
};

json invariance_residuals(const InvarianceReport& r) {
  json j = json::object();
  for (const char* t : {"AL", "BL", "DAL", "DBL", "LY", "LX"}) j[t] = r.max_residual(t);
  return j;
}

int cmd_gy_build(const GyArgs& a, std::ostream& out, std::ostream& err) {
  const ChainConfig cfg = load_chain(a.chain);
  if (a.out.empty()) throw UsageError("--out DIR is required");
  std::error_code ec;
  std::filesystem::create_directories(a.out, ec);
  if (ec) throw UsageError("cannot create '" + a.out + "': " + ec.message());
  json inputs = {{"chain", a.chain}, {"dimension", cfg.chain.dimension()}};
  GYSystem sys;
  try {
    sys = build_gy_system(cfg.chain, cfg.coeffs, cfg.coeffs_dot, cfg.kappa, cfg.kappa_dot);
  } catch (const InconsistencyError& e) {
    err << "gy-build: " << e.what() << "\n";
    write_text(dump(envelope("gy-build", inputs, {{"files", json::array()}, {"consistent", false}},
                             invariance_residuals(e.report()))),
               "", out);
    return verification_failed;
  }
  const json residuals = invariance_residuals(verify_invariance(sys, chain_generators(cfg.chain)));
  json files = json::array();
  for (int dotted = 0; dotted < 2; ++dotted)
    for (int i = 0; i < 3; ++i) {
      const std::string name = "lambda" + std::to_string(i + 1) + (dotted ? "_dot" : "");
      const CMatrix& m = dotted ? sys.lambda_dot[static_cast<std::size_t>(i)] : sys.lambda[static_cast<std::size_t>(i)];
      const std::string path = (std::filesystem::path(a.out) / (name + ".json")).string();
      write_text(dump(envelope("gy-build", inputs, {{"name", name}, {"matrix", matrix_json(m)}}, residuals)), path, out);
      files.push_back(name + ".json");
    }
  json summary = {{"files", files},
                  {"consistent", true},
                  {"kappa", complex_json(sys.kappa)},
                  {"kappa_dot", complex_json(sys.kappa_dot)}};
  write_text(dump(envelope("gy-build", inputs, summary, residuals)), "", out);
  return ok;
}

// radial --------------------------------------------------------------------

struct RadialArgs {
  std::string chain = "dirac", l0, l0dot, kappa, init = "1", format = "csv", out;
  double r0 = 0.5, r1 = 60;
  int steps = 10000;
  bool dotted = false, alt_signs = false;
};

std::string unknown_name(const BasisIndex& b) {
  return "l" + b.l.str() + "_m" + b.m.str() + "_k" + std::to_string(b.block + 1);
}

int cmd_radial(const RadialArgs& a, std::ostream& out, std::ostream& err) {
  const ChainConfig cfg = load_chain(a.chain);
  if (!(a.r0 > 0) || !(a.r1 > a.r0)) throw UsageError("need 0 < r0 < r1");
  if (a.steps < 100) throw UsageError("--steps must be at least 100");
  if (a.format != "json" && a.format != "csv") throw UsageError("--format must be json or csv");
  HalfInt top(0);
  for (const auto& r : cfg.chain.reps) top = std::max(top, r.l1 + r.l2);
  const HalfInt l0 = a.l0.empty() ? top : parse_label(a.l0, "--l0");
  const HalfInt l0d = a.l0dot.empty() ? l0 : parse_label(a.l0dot, "--l0dot");
  const cplx kappa = a.kappa.empty() ? cfg.kappa : parse_complex(a.kappa, "--kappa");
  const cplx kappa_dot = a.kappa.empty() ? cfg.kappa_dot : kappa;
  const cplx init_value = parse_complex(a.init, "--init");
  const GYSystem sys = build_gy_system(cfg.chain, cfg.coeffs, cfg.coeffs_dot, kappa, kappa_dot);
  RadialSystem rs;
  try {
    rs = assemble_rfs(sys, l0, l0d, a.alt_signs ? SignReading::alternative : SignReading::printed);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  const RadialBlock& block = a.dotted ? rs.dotted : rs.undotted;
  const VectorXc init = VectorXc::Constant(static_cast<Eigen::Index>(block.unknowns.size()), init_value);
  RadialSolution sol;
  try {
    sol = integrate(block, a.r0, a.r1, init, a.steps);
  } catch (const IntegrationError& e) {
    err << "radial: " << e.what() << " (last radius " << fmt(e.last_radius()) << ")\n";
    return verification_failed;
  }
  const double res = residual(block, sol);
  const BesselProbeReport probe = bessel_probe(sol);
  std::ostringstream text;
  if (a.format == "csv") {
    text << "r";
    for (const auto& u : sol.unknowns) text << ",re_" << unknown_name(u);
    for (const auto& u : sol.unknowns) text << ",im_" << unknown_name(u);
    text << '\n';
    for (std::size_t i = 0; i < sol.grid.size(); ++i) {
      text << fmt(sol.grid[i]);
      for (Eigen::Index j = 0; j < sol.values[i].size(); ++j) text << ',' << fmt(sol.values[i](j).real());
      for (Eigen::Index j = 0; j < sol.values[i].size(); ++j) text << ',' << fmt(sol.values[i](j).imag());
      text << '\n';
    }
  } else {
    json names = json::array(), samples = json::array();
    for (const auto& u : sol.unknowns) names.push_back(unknown_name(u));
    for (std::size_t i = 0; i < sol.grid.size(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < sol.values[i].size(); ++j) row.push_back(complex_json(sol.values[i](j)));
      samples.push_back({{"r", sol.grid[i]}, {"f", row}});
    }
    json inputs = {{"chain", a.chain}, {"l0", l0.str()}, {"l0dot", l0d.str()}, {"r0", a.r0}, {"r1", a.r1},
                   {"steps", a.steps}, {"kappa", complex_json(block.kappa)}, {"init", complex_json(init_value)},
                   {"dotted", a.dotted}, {"signs", a.alt_signs ? "alternative" : "printed"}};
    json results = {{"unknowns", names},
                    {"samples", samples},
                    {"probe",
                     {{"status", to_string(probe.status)}, {"envelope_exponent", probe.envelope_exponent},
                      {"wavelength", probe.wavelength}, {"zero_crossings", probe.zero_crossings}, {"note", probe.note}}}};
    text << dump(envelope("radial", inputs, results, {{"residual", res}}));
  }
  write_text(text.str(), a.out, out);
  if (a.format == "csv")
    err << "radial: residual " << fmt(res) << ", probe " << to_string(probe.status) << " (envelope exponent "
        << fmt(probe.envelope_exponent) << ")\n";
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lorentz group representations, special functions and field equations", "lorentz-cli"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  ZfunArgs z;
  auto* zfun = app.add_subcommand("zfun", "tabulate Z^l_mn(theta, tau) by two routes");
  zfun->add_option("--l", z.l, "weight, e.g. 3/2")->required();
  zfun->add_option("--m", z.m, "row projection (all when omitted)");
  zfun->add_option("--n", z.n, "column projection (all when omitted)");
  zfun->add_option("--theta", z.theta);
  zfun->add_option("--tau", z.tau);
  zfun->add_option("--phi", z.phi);
  zfun->add_option("--psi", z.psi);
  zfun->add_option("--eps", z.eps);
  zfun->add_option("--veps", z.veps);
  zfun->add_option("--grid", z.grid, "theta grid START:STOP:N");
  zfun->add_option("--tau-grid", z.tau_grid, "tau grid START:STOP:N");
  zfun->add_option("--format", z.format, "json or csv");
  zfun->add_option("--out", z.out, "output file");

  OpsArgs o;
  auto* ops = app.add_subcommand("ops", "dump generator matrices");
  ops->add_option("--set", o.set, "waerden, helicity, helicity-tilde or gn");
  ops->add_option("--l", o.l);
  ops->add_option("--ldot", o.ldot);
  ops->add_option("--l0", o.l0);
  ops->add_option("--p", o.p);
  ops->add_option("--op", o.op, "single operator, e.g. A1, At2, X+");
  ops->add_option("--out", o.out);

  VerifyArgs v;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", v.suite)->required();
  verify->add_option("--tol", v.tol, "replace every pinned tolerance");
  verify->add_option("--chain", v.chain, "dirac or a chain config file");
  verify->add_option("--kappa", v.kappa, "re,im");
  verify->add_option("--r0", v.r0);
  verify->add_option("--r1", v.r1);
  verify->add_option("--steps", v.steps);
  verify->add_option("--out", v.out);

  GyArgs g;
  auto* gy = app.add_subcommand("gy-build", "assemble the Lambda matrices of a chain");
  gy->add_option("--chain", g.chain, "dirac or a chain config file");
  gy->add_option("--out", g.out, "output directory")->required();

  RadialArgs r;
  auto* radial = app.add_subcommand("radial", "integrate the separated radial system");
  radial->add_option("--chain", r.chain, "dirac or a chain config file");
  radial->add_option("--l0", r.l0);
  radial->add_option("--l0dot", r.l0dot);
  radial->add_option("--r0", r.r0);
  radial->add_option("--r1", r.r1);
  radial->add_option("--steps", r.steps);
  radial->add_option("--kappa", r.kappa, "re,im (replaces the config value)");
  radial->add_option("--init", r.init, "initial value of every component, re or re,im");
  radial->add_flag("--dotted", r.dotted, "integrate the dotted system");
  radial->add_flag("--alt-signs", r.alt_signs, "flip the two ambiguous 1/r signs");
  radial->add_option("--format", r.format, "csv or json");
  radial->add_option("--out", r.out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (zfun->parsed()) return cmd_zfun(z, out);
    if (ops->parsed()) return cmd_ops(o, out);
    if (verify->parsed()) return cmd_verify(v, out);
    if (gy->parsed()) return cmd_gy_build(g, out, err);
    if (radial->parsed()) return cmd_radial(r, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return verification_failed;
  }
  return usage_error;
}

}  // namespace lorentz::cli
