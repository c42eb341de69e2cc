// fdisp: dispersion relations of coupled systems from quadratic Lagrangians.
//
//   fdisp lagrangian FILE [--emit matrix|dispersion] [--specialize] [--set p=v]...
//   fdisp model NAME [--b B]... [--k-min --k-max --k-steps | --zoom] [--set p=v]... [-o OUT]
//   fdisp crosspoint [--g1 --g2] [--gamma G]... [--ggamma S]... [--kappa-range a:b[:n]] [-o OUT]
//   fdisp mech [--b B]... [--p-min --p-max --p-steps] [--set p=v]... [-o OUT]
//   fdisp expand A_FILE B_FILE [--var b]
//   fdisp verify [all|detexp|mindlin|crosspoint|mech|pipeline] [--data-dir DIR]
//
// Exit codes: 0 success, 1 parse or verification failure, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fdisp/branches.hpp"
#include "fdisp/crosspoint.hpp"
#include "fdisp/lagparse.hpp"
#include "fdisp/mechanalog.hpp"
#include "fdisp/models/kirchhoff.hpp"
#include "fdisp/models/mindlin.hpp"
#include "fdisp/models/twt.hpp"
#include "fdisp/models/wing.hpp"
#include "fdisp/polytext.hpp"
#include "fdisp/verify.hpp"

#ifndef FDISP_DATA_DIR
#define FDISP_DATA_DIR "data"
#endif

using namespace fdisp;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Rational number(const std::string& s, const std::string& what) {
  auto q = parse_number(s);
  if (!q) throw UsageError(what + ": '" + s + "' is not a number");
  return *q;
}

// name=value pairs
std::map<std::string, Rational> overrides(const std::vector<std::string>& sets) {
  std::map<std::string, Rational> out;
  for (const auto& s : sets) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--set expects name=value, got '" + s + "'");
    out[s.substr(0, eq)] = number(s.substr(eq + 1), "--set " + s.substr(0, eq));
  }
  return out;
}

// Writes to the named file, or stdout for "" / "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw UsageError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void apply(const std::map<std::string, Rational>& ov, const std::string& name, Rational& target,
           std::set<std::string>& used) {
  auto it = ov.find(name);
  if (it == ov.end()) return;
  target = it->second;
  used.insert(name);
}

void check_unused(const std::map<std::string, Rational>& ov, const std::set<std::string>& used,
                  const std::string& model) {
  for (const auto& [name, v] : ov)
    if (!used.count(name)) throw UsageError("model " + model + " has no parameter '" + name + "'");
}

// ---- lagrangian ----

int cmd_lagrangian(const std::string& file, const std::string& emit, bool use_values,
                   const std::vector<std::string>& sets) {
  ParseOutcome out = parse_lagrangian(read_text(file));
  for (const auto& d : out.diagnostics) std::cerr << file << ':' << d.str() << '\n';
  if (!out.ok()) return 1;
  const QuadraticLagrangian& lag = *out.lagrangian;
  std::map<std::string, Rational> values;
  if (use_values) values = lag.params;
  for (const auto& [name, v] : overrides(sets)) {
    if (!lag.params.count(name)) throw UsageError("no parameter '" + name + "' in " + file);
    values[name] = v;
  }
  GaussMatrix m = symbol_matrix(lag);
  if (!values.empty()) m = specialize(m, values);
  if (emit == "matrix") {
    std::cout << format_matrix(m) << '\n';
  } else {
    GaussPoly d = det(m);
    if (!d.is_real()) throw std::runtime_error("symbol determinant is not real");
    std::cout << format_poly(d.re) << '\n';
  }
  return 0;
}

// ---- model ----

struct Grid {
  Rational lo, hi;
  std::size_t n;
};

std::vector<BranchTrace> trace_tagged(const MultiPoly& disp, const Grid& g, const std::string& model, double b,
                                      const std::map<std::string, Rational>& params, int& next_id) {
  auto traces = trace_branches(disp, linear_grid(g.lo, g.hi, g.n));
  tag_traces(traces, model, b, params);
  for (auto& t : traces) t.id = next_id++;
  return traces;
}

int cmd_model(const std::string& name, std::vector<std::string> bs, std::optional<Grid> grid, bool zoom,
              const std::vector<std::string>& sets, const std::string& out_path) {
  const auto ov = overrides(sets);
  std::set<std::string> used;
  std::vector<BranchTrace> all;
  int id = 0;

  if (name == "mindlin") {
    if (bs.empty()) bs = {"0", "0.1", "0.2"};
    if (!grid) grid = zoom ? Grid{make_rational(-1, 20), make_rational(1, 20), 501} : Grid{make_rational(-3, 10), make_rational(3, 10), 601};
    MindlinParams p = MindlinParams::reference(Rational(0));
    apply(ov, "rho", p.rho, used);
    apply(ov, "h", p.h, used);
    apply(ov, "D", p.D, used);
    apply(ov, "nu", p.nu, used);
    apply(ov, "kappa", p.kappa, used);
    apply(ov, "G", p.G, used);
    check_unused(ov, used, name);
    MindlinCoeffs c = MindlinCoeffs::from(p);
    for (const auto& bstr : bs) {
      Rational b = number(bstr, "--b");
      p.b = b;
      auto snap = p.values();
      for (const auto& [tag, poly] : {std::pair<std::string, MultiPoly>{"mindlin_f", mindlin_f(c)}, {"mindlin_A", mindlin_A(c)}}) {
        auto t = trace_tagged(poly.partial_eval("b", b), *grid, tag, to_double(b), snap, id);
        all.insert(all.end(), t.begin(), t.end());
      }
    }
  } else if (name == "kirchhoff") {
    if (!grid) grid = Grid{Rational(0), Rational(2), 201};
    Rational rho(1), h(1), D(1);
    apply(ov, "rho", rho, used);
    apply(ov, "h", h, used);
    apply(ov, "D", D, used);
    check_unused(ov, used, name);
    if (bs.empty()) bs = {"0"};
    for (const auto& bstr : bs) {
      auto t = trace_tagged(kirchhoff_radial(rho, h, D), *grid, "kirchhoff", to_double(number(bstr, "--b")),
                            {{"rho", rho}, {"h", h}, {"D", D}}, id);
      all.insert(all.end(), t.begin(), t.end());
    }
  } else if (name == "wing") {
    if (!grid) grid = Grid{Rational(0), Rational(2), 201};
    WingParams p;
    apply(ov, "m", p.m, used);
    apply(ov, "Im", p.Im, used);
    apply(ov, "E", p.E, used);
    apply(ov, "I", p.I, used);
    apply(ov, "G", p.G, used);
    apply(ov, "J", p.J, used);
    apply(ov, "a", p.a, used);
    check_unused(ov, used, name);
    if (bs.empty()) bs = {"1"};
    MultiPoly disp = wing_dispersion(WingCoeffs::from(p));
    for (const auto& bstr : bs) {
      Rational b = number(bstr, "--b");
      auto t = trace_tagged(disp.partial_eval("b", b), *grid, "wing", to_double(b),
                            {{"m", p.m}, {"Im", p.Im}, {"E", p.E}, {"I", p.I}, {"G", p.G}, {"J", p.J}, {"a", p.a}}, id);
      all.insert(all.end(), t.begin(), t.end());
    }
  } else if (name == "twt") {
    if (!grid) grid = Grid{Rational(0), Rational(2), 201};
    TwtParams p;
    apply(ov, "C", p.C, used);
    apply(ov, "L", p.L, used);
    apply(ov, "Cc", p.Cc, used);
    apply(ov, "beta", p.beta, used);
    apply(ov, "wrp2", p.wrp2, used);
    apply(ov, "v", p.v, used);
    check_unused(ov, used, name);
    if (bs.empty()) bs = {"1"};
    MultiPoly disp = det(twt_physical_matrix(p));
    for (const auto& bstr : bs) {
      Rational b = number(bstr, "--b");
      auto t = trace_tagged(disp.partial_eval("b", b), *grid, "twt", to_double(b), twt_lagrangian_values(p), id);
      all.insert(all.end(), t.begin(), t.end());
    }
  } else {
    throw UsageError("unknown model '" + name + "' (expected mindlin, kirchhoff, wing, twt)");
  }
  Output out(out_path);
  write_branch_csv(out.stream(), all);
  return 0;
}

// ---- crosspoint ----

int cmd_crosspoint(double g1, double g2, std::vector<double> gammas, std::vector<double> ggs, const std::string& range,
                   const std::string& out_path) {
  if (gammas.empty()) gammas = {0.4, 2.0, 4.0};
  if (ggs.empty()) ggs = {1.0, -1.0};
  Rational lo(-2), hi(2);
  std::size_t n = 401;
  if (!range.empty()) {
    std::vector<std::string> parts;
    std::stringstream ss(range);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() < 2 || parts.size() > 3) throw UsageError("--kappa-range expects min:max[:n]");
    lo = number(parts[0], "--kappa-range");
    hi = number(parts[1], "--kappa-range");
    if (parts.size() == 3) {
      Rational q = number(parts[2], "--kappa-range");
      if (!is_integer(q) || q < 2) throw UsageError("--kappa-range point count must be an integer >= 2");
      n = q.get_num().get_ui();
    }
    if (!(hi > lo)) throw UsageError("--kappa-range needs min < max");
  }
  if (g1 == g2) throw UsageError("--g1 and --g2 must differ for a transversal crossing");
  Output out(out_path);
  auto& os = out.stream();
  os << "kappa,delta,branch,gamma,g_gamma\n";
  for (double gamma : gammas)
    for (double gg : ggs) {
      CrossPointData cp = CrossPointData::normalized(g1, g2, gamma, gg);
      for (int branch : {0, 1})
        for (const auto& kq : linear_grid(lo, hi, n)) {
          double kappa = to_double(kq);
          auto r = solve_delta(cp, kappa);
          if (!r) continue;  // gap
          os << format_double(kappa) << ',' << format_double(branch == 0 ? r->first : r->second) << ',' << branch
             << ',' << format_double(gamma) << ',' << format_double(gg) << '\n';
        }
    }
  return 0;
}

// ---- mech ----

int cmd_mech(std::vector<std::string> bs, const std::string& pmin, const std::string& pmax, std::size_t steps,
             const std::vector<std::string>& sets, const std::string& out_path) {
  if (bs.empty()) bs = {"0", "0.2", "0.4", "0.6"};
  OscillatorPair o;
  o.p_limit.reset();  // the sweep runs past 1/5
  const auto ov = overrides(sets);
  std::set<std::string> used;
  apply(ov, "m1", o.m1, used);
  apply(ov, "m2", o.m2, used);
  apply(ov, "kappa1", o.kappa1, used);
  apply(ov, "kappa2", o.kappa2, used);
  apply(ov, "kappa", o.kappa, used);
  apply(ov, "alpha1", o.alpha1, used);
  apply(ov, "alpha2", o.alpha2, used);
  check_unused(ov, used, "mech");
  if (steps < 2) throw UsageError("--p-steps must be at least 2");
  std::vector<Rational> bvals;
  for (const auto& s : bs) bvals.push_back(number(s, "--b"));
  auto traces = sweep(o, linear_grid(number(pmin, "--p-min"), number(pmax, "--p-max"), steps), bvals);
  Output out(out_path);
  write_branch_csv(out.stream(), traces, "p", false);
  return 0;
}

// ---- expand ----

int cmd_expand(const std::string& afile, const std::string& bfile, const std::string& var_name) {
  PolyMatrix a, b;
  try {
    a = parse_matrix(read_text(afile));
    b = parse_matrix(read_text(bfile));
  } catch (const TextError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
    throw UsageError("matrices must be square and of equal dimension");
  CoupledExpansion<MultiPoly> ex;
  try {
    ex = coupled_b_expansion(a, b, var_name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << "det A = " << format_poly(ex.det_a) << '\n';
  for (std::size_t r = 0; r < ex.coeffs.size(); ++r)
    std::cout << "c_" << r + 1 << " = " << format_poly(ex.coeffs[r]) << '\n';
  std::cout << "det B = " << format_poly(ex.det_b) << '\n';
  std::cout << "det(A + " << var_name << " B) = " << format_poly(ex.reassembled) << '\n';
  return 0;
}

// ---- verify ----

int cmd_verify(const std::string& suite, const std::string& data_dir) {
  std::vector<Check> checks;
  try {
    checks = verify_suite(suite, data_dir);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::size_t failed = 0;
  for (const auto& c : checks) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  [" << c.suite << "] " << c.name;
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
    std::cout << '\n';
    if (!c.pass) ++failed;
  }
  std::cout << checks.size() - failed << '/' << checks.size() << " checks passed\n";
  for (const auto& c : checks)
    if (!c.pass) std::cerr << "failed: [" << c.suite << "] " << c.name << '\n';
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dispersion relations of coupled systems"};
  app.require_subcommand(1);

  std::string lag_file, emit = "dispersion";
  bool specialize = false;
  std::vector<std::string> lag_sets;
  auto* lag = app.add_subcommand("lagrangian", "Compile a .lag file to its symbol matrix or dispersion polynomial");
  lag->add_option("file", lag_file, ".lag file")->required();
  lag->add_option("--emit", emit, "matrix or dispersion")->check(CLI::IsMember({"matrix", "dispersion"}));
  lag->add_flag("--specialize", specialize, "Substitute the declared parameter values");
  lag->add_option("--set", lag_sets, "Substitute a parameter value (name=value)");

  std::string model_name, out_path;
  std::vector<std::string> model_bs, model_sets;
  std::string kmin, kmax;
  std::size_t ksteps = 0;
  bool zoom = false;
  auto* model = app.add_subcommand("model", "Trace dispersion branches of a built-in model to CSV");
  model->add_option("name", model_name, "mindlin, kirchhoff, wing or twt")->required();
  model->add_option("--b", model_bs, "Coupling amplitude (repeatable)");
  model->add_option("--k-min", kmin, "Grid start");
  model->add_option("--k-max", kmax, "Grid end");
  model->add_option("--k-steps", ksteps, "Grid points");
  model->add_flag("--zoom", zoom, "Zoomed grid [-0.05, 0.05] with 501 points (mindlin)");
  model->add_option("--set", model_sets, "Parameter override (name=value)");
  model->add_option("-o,--out", out_path, "Output CSV (default stdout)");

  double g1 = 1, g2 = 10;
  std::vector<double> gammas, ggs;
  std::string krange, cp_out;
  auto* cp = app.add_subcommand("crosspoint", "Branches of the cross-point model to CSV");
  cp->add_option("--g1", g1, "Slope ratio of the first line");
  cp->add_option("--g2", g2, "Slope ratio of the second line");
  cp->add_option("--gamma", gammas, "Coupling coefficient (repeatable)");
  cp->add_option("--ggamma", ggs, "Normalized coupling value (repeatable)");
  cp->add_option("--kappa-range", krange, "min:max[:n]");
  cp->add_option("-o,--out", cp_out, "Output CSV (default stdout)");

  std::vector<std::string> mech_bs, mech_sets;
  std::string pmin = "-0.05", pmax = "0.23", mech_out;
  std::size_t psteps = 541;
  auto* mech = app.add_subcommand("mech", "Eigenfrequency sweep of the coupled oscillators to CSV");
  mech->add_option("--b", mech_bs, "Coupling amplitude (repeatable)");
  mech->add_option("--p-min", pmin, "Sweep start");
  mech->add_option("--p-max", pmax, "Sweep end");
  mech->add_option("--p-steps", psteps, "Sweep points");
  mech->add_option("--set", mech_sets, "Parameter override (m1, m2, kappa1, kappa2, kappa, alpha1, alpha2)");
  mech->add_option("-o,--out", mech_out, "Output CSV (default stdout)");

  std::string afile, bfile, var_name = "b";
  auto* expand = app.add_subcommand("expand", "Expand det(A + b B(b)) in powers of b");
  expand->add_option("a", afile, "Matrix file for A")->required();
  expand->add_option("bmat", bfile, "Matrix file for B(b)")->required();
  expand->add_option("--var", var_name, "Expansion variable");

  std::string suite = "all", data_dir = FDISP_DATA_DIR;
  auto* verify = app.add_subcommand("verify", "Run the built-in identity checks");
  verify->add_option("suite", suite, "all, detexp, mindlin, crosspoint, mech or pipeline");
  verify->add_option("--data-dir", data_dir, "Directory holding the .lag files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*lag) return cmd_lagrangian(lag_file, emit, specialize, lag_sets);
    if (*model) {
      std::optional<Grid> grid;
      if (!kmin.empty() || !kmax.empty() || ksteps) {
        if (kmin.empty() || kmax.empty() || ksteps < 2) throw UsageError("--k-min, --k-max and --k-steps >= 2 go together");
        grid = Grid{number(kmin, "--k-min"), number(kmax, "--k-max"), ksteps};
        if (!(grid->hi > grid->lo)) throw UsageError("--k-min must be below --k-max");
      }
      return cmd_model(model_name, model_bs, grid, zoom, model_sets, out_path);
    }
    if (*cp) return cmd_crosspoint(g1, g2, gammas, ggs, krange, cp_out);
    if (*mech) return cmd_mech(mech_bs, pmin, pmax, psteps, mech_sets, mech_out);
    if (*expand) return cmd_expand(afile, bfile, var_name);
    if (*verify) return cmd_verify(suite, data_dir);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
