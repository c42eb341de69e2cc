#pragma once

// Programmatic self-checks behind `fdisp verify`: determinant identities,
// Mindlin factorization and asymptotics, the cross-point model, the
// oscillator analog and the .lag pipeline.

#include <cmath>
#include <complex>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fdisp/asymptotics.hpp"
#include "fdisp/branches.hpp"
#include "fdisp/crosspoint.hpp"
#include "fdisp/lagparse.hpp"
#include "fdisp/mechanalog.hpp"
#include "fdisp/models/kirchhoff.hpp"
#include "fdisp/models/mindlin.hpp"
#include "fdisp/models/twt.hpp"
#include "fdisp/models/wing.hpp"

namespace fdisp {

struct Check {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace verify_detail {

using Result = std::pair<bool, std::string>;

inline std::string fmt(double x, int prec = 6) {
  std::ostringstream os;
  os.precision(prec);
  os << x;
  return os.str();
}

inline RationalMatrix random_int_matrix(std::mt19937& rng, std::size_t n, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> d(lo, hi);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

inline RationalMatrix random_rational_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = make_rational(num(rng), den(rng));
  return m;
}

inline Rational random_positive(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(1, 30), den(1, 10);
  return make_rational(num(rng), den(rng));
}

inline PolyMatrix to_poly_matrix(const RationalMatrix& m) {
  return m.map([](const Rational& q) { return MultiPoly(q); });
}

using CMat = std::vector<std::vector<std::complex<double>>>;

inline CMat cmul(const CMat& a, const CMat& b) {
  CMat c(a.size(), std::vector<std::complex<double>>(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline double max_abs(const CMat& a) {
  double m = 0;
  for (const auto& r : a)
    for (const auto& x : r) m = std::max(m, std::abs(x));
  return m;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline QuadraticLagrangian parse_or_throw(const std::string& text, const std::string& what) {
  ParseOutcome out = parse_lagrangian(text);
  if (!out.ok()) {
    std::string msg = what + ": ";
    for (const auto& d : out.diagnostics) msg += d.str() + "; ";
    throw std::runtime_error(msg);
  }
  return *out.lagrangian;
}

inline void run(std::vector<Check>& out, const std::string& suite, const std::string& name,
                const std::function<Result()>& body) {
  Check c{suite, name, false, ""};
  try {
    auto [ok, detail] = body();
    c.pass = ok;
    c.detail = detail;
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = std::string("exception: ") + e.what();
  }
  out.push_back(std::move(c));
}

}  // namespace verify_detail

inline std::vector<Check> verify_detexp() {
  using namespace verify_detail;
  std::vector<Check> out;
  const std::string s = "detexp";

  run(out, s, "Markus expansion = det(A+B), 100 integer pairs for n = 2..5", [] {
    std::mt19937 rng(11);
    for (std::size_t n = 2; n <= 5; ++n)
      for (int t = 0; t < 100; ++t) {
        RationalMatrix a = random_int_matrix(rng, n), b = random_int_matrix(rng, n);
        if (markus_expansion(a, b) != det(RationalMatrix(a + b)))
          return Result(false, "mismatch at n = " + std::to_string(n));
      }
    return Result(true, std::string("400 pairs exact"));
  });

  run(out, s, "coupled expansion reassembles det(A + b B(b)); b^1 coefficient = tr(adj(A) B(0))", [] {
    std::mt19937 rng(12);
    const MultiPoly b = var("b");
    for (std::size_t n = 2; n <= 4; ++n)
      for (int t = 0; t < 10; ++t) {
        PolyMatrix a = to_poly_matrix(random_int_matrix(rng, n));
        PolyMatrix b0 = to_poly_matrix(random_int_matrix(rng, n)), b1 = to_poly_matrix(random_int_matrix(rng, n));
        PolyMatrix bm = b0 + b * b1;
        auto ex = coupled_b_expansion(a, bm, "b");
        MultiPoly direct = det(PolyMatrix(a + b * bm));
        if (ex.reassembled != direct) return Result(false, "reassembly mismatch at n = " + std::to_string(n));
        auto cs = direct.coefficients_in("b");
        MultiPoly c1 = cs.size() > 1 ? cs[1] : MultiPoly();
        if (c1 != first_order_coefficient(a, b0)) return Result(false, "first-order coefficient mismatch");
        PolyMatrix ad = PolyMatrix::diagonal({a(0, 0), a(1, 1)});
        if (n == 2 && first_order_coefficient_diagonal(ad, b0) != first_order_coefficient(ad, b0))
          return Result(false, "diagonal formula mismatch");
      }
    return Result(true, std::string("exact"));
  });

  run(out, s, "adj(A) A = det(A) I and Laplace expansion by every row set, rational n <= 5", [] {
    std::mt19937 rng(13);
    for (std::size_t n = 1; n <= 5; ++n)
      for (int t = 0; t < 10; ++t) {
        RationalMatrix a = random_rational_matrix(rng, n);
        Rational d = det(a);
        if (adjugate(a) * a != d * RationalMatrix::identity(n)) return Result(false, std::string("adjugate"));
        for (std::size_t r = 1; r < n; ++r)
          for (const auto& rows : IndexSet::all(r, n))
            if (laplace_expand(a, rows) != d) return Result(false, std::string("Laplace"));
      }
    return Result(true, std::string("exact"));
  });

  run(out, s, "det(I + tau A) = 1 + tr(A) tau + O(tau^2)", [] {
    std::mt19937 rng(14);
    const MultiPoly tau = var("tau");
    for (std::size_t n = 2; n <= 5; ++n) {
      PolyMatrix a = to_poly_matrix(random_rational_matrix(rng, n));
      auto cs = det(PolyMatrix(PolyMatrix::identity(n) + tau * a)).coefficients_in("tau");
      if (cs[0] != MultiPoly(1) || cs[1] != a.trace()) return Result(false, std::string("mismatch"));
    }
    return Result(true, std::string("exact"));
  });

  run(out, s, "wing: det = (Im w^2 - GJ k^2)(m w^2 - EI k^4) - b^2 a^2 EI k^4 m w^2", [] {
    WingCoeffs c = WingCoeffs::symbolic();
    const MultiPoly w = var("w"), k = var("k"), b = var("b");
    MultiPoly expect = (c.Im * w.pow(2) - c.GJ * k.pow(2)) * (c.m * w.pow(2) - c.EI * k.pow(4)) -
                       b.pow(2) * c.a.pow(2) * c.EI * k.pow(4) * c.m * w.pow(2);
    bool ok = det(wing_matrix(c)) == expect;
    return Result(ok, std::string("remainder carries k^4, taken from the matrix form"));
  });

  run(out, s, "TWT: M(b) = D_b M(1) D_b in (k, w, b) and in (u, w, b)", [] {
    std::mt19937 rng(15);
    const PolyMatrix Db = twt_scaling_matrix();
    for (int t = 0; t < 5; ++t) {
      TwtParams p{random_positive(rng), random_positive(rng), random_positive(rng), random_positive(rng),
                  random_positive(rng), random_positive(rng), random_positive(rng)};
      for (const PolyMatrix& m : {twt_matrix(p), twt_u_matrix(p)}) {
        PolyMatrix m1 = partial_eval(m, {{"b", Rational(1)}});
        if (m != Db * m1 * Db) return Result(false, std::string("scaling identity fails"));
      }
    }
    return Result(true, std::string("exact"));
  });
  return out;
}

inline std::vector<Check> verify_mindlin() {
  using namespace verify_detail;
  std::vector<Check> out;
  const std::string s = "mindlin";
  const MindlinParams ref = MindlinParams::reference(make_rational(1, 10));

  run(out, s, "det C_b = h f A, exact in (k, w, b) with symbolic parameters", [] {
    MindlinCoeffs c = MindlinCoeffs::symbolic();
    GaussPoly d = det(mindlin_Cb(c));
    return Result(d == GaussPoly(c.h * mindlin_f(c) * mindlin_A(c)), std::string("exact"));
  });

  run(out, s, "B_b = T C_b T^T and B_b tau_3 = f tau_3 at 50 random points", [] {
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> u(-2.0, 2.0), pos(0.2, 3.0), nu(-0.9, 0.5);
    double worst_sim = 0, worst_eig = 0;
    for (int t = 0; t < 50; ++t) {
      MindlinParams p;
      p.rho = from_double(pos(rng));
      p.h = from_double(pos(rng));
      p.D = from_double(pos(rng));
      p.nu = from_double(nu(rng));
      p.kappa = from_double(pos(rng));
      p.G = from_double(pos(rng));
      MindlinCoeffs c = MindlinCoeffs::from(p);
      double kx = u(rng), ky = u(rng);
      std::map<std::string, double> at{{"kx", kx}, {"ky", ky}, {"w", u(rng)}, {"b", pos(rng)}};
      MindlinBlockDiag bd = mindlin_block_diag(c, kx, ky);
      at["k"] = bd.k;
      CMat B = eval_complex(mindlin_full_matrix(c), at);
      CMat C = eval_complex(bd.C, at);
      CMat T(3, std::vector<std::complex<double>>(3)), Tt = T;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          T[i][j] = bd.T[i][j];
          Tt[j][i] = bd.T[i][j];
        }
      CMat S = cmul(cmul(T, C), Tt);
      double scale = max_abs(B), diff = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) diff = std::max(diff, std::abs(S[i][j] - B[i][j]));
      worst_sim = std::max(worst_sim, diff / scale);
      auto t3 = tau(bd, 2);
      const double f = mindlin_f(c).eval(at);
      for (int i = 0; i < 3; ++i) {
        std::complex<double> bt = 0;
        for (int j = 0; j < 3; ++j) bt += B[i][j] * t3[j];
        worst_eig = std::max(worst_eig, std::abs(bt - f * t3[i]) / scale);
      }
    }
    return Result(worst_sim <= 1e-10 && worst_eig <= 1e-12,
                          "similarity rel " + fmt(worst_sim) + ", eigenvector rel " + fmt(worst_eig));
  });

  run(out, s, "threshold w0 = 0.2 sqrt(3) at b = 0.1", [&] {
    MultiPoly A0 = mindlin_A(MindlinCoeffs::from(ref)).partial_eval({{"b", ref.b}, {"k", Rational(0)}});
    auto roots = real_roots(A0, 1e-14);
    const double w0 = 0.2 * std::sqrt(3.0);
    const double series_w0 = upper_series(ref).values()[0];
    double err = std::max(std::fabs(roots.back().value - w0), std::fabs(series_w0 - w0));
    return Result(roots.size() == 3 && roots[1].multiplicity == 2 && err <= 1e-12, "error " + fmt(err));
  });

  run(out, s, "lower series c1 = 10 exact at b = 0.1", [&] {
    auto ex = lower_series(ref).exact();
    return Result(ex && (*ex)[0] == Rational(10), ex ? "c1 = " + to_string((*ex)[0]) : std::string("inexact"));
  });

  const auto ks = log_samples(1e-3, 1e-1, 9);
  run(out, s, "lower series residual order 8 +- 0.3 (w-space, k in [1e-3, 1e-1])", [&] {
    SeriesCoeffs ls = lower_series(ref);
    auto fit = residual_order([&](double k) { return series_residual(ref, ls, k).omega; }, ks, 8.0);
    auto raw = residual_order([&](double k) { return series_residual(ref, ls, k).raw; }, ks, 10.0);
    return Result(fit.pass, "slope " + fmt(fit.slope, 4) + " (raw |A| slope " + fmt(raw.slope, 4) + ")");
  });

  run(out, s, "upper series residual order 6 +- 0.3", [&] {
    SeriesCoeffs us = upper_series(ref);
    auto fit = residual_order([&](double k) { return series_residual(ref, us, k).omega; }, ks, 6.0);
    auto raw = residual_order([&](double k) { return series_residual(ref, us, k).raw; }, ks, 6.0);
    return Result(fit.pass, "slope " + fmt(fit.slope, 4) + " (raw |A| slope " + fmt(raw.slope, 4) + ")");
  });

  run(out, s, "Laurent S+- residual in the S-quadratic of order w^4 +- 0.3", [&] {
    std::string detail;
    bool ok = true;
    for (int sign : {1, -1}) {
      auto fit = residual_order([&](double w) { return laurent_residual(ref, sign, w); }, ks, 4.0);
      auto ex = laurent_S_exact(ref, sign);
      auto series = laurent_residual_series(ref, *ex);
      bool val4 = series.valuation() && *series.valuation() == Rational(4);
      ok = ok && fit.pass && val4;
      detail += std::string(sign > 0 ? "S+" : "S-") + " slope " + fmt(fit.slope, 4) + (val4 ? " valuation 4; " : " ; ");
    }
    return Result(ok, detail);
  });

  run(out, s, "large k: w/k within 1e-3 of {1, sqrt 12} at k = 100, b = 0.2", [] {
    MindlinParams p = MindlinParams::reference(make_rational(1, 5));
    MultiPoly A = mindlin_A(MindlinCoeffs::from(p)).partial_eval("b", p.b);
    auto traces = trace_branches(A, linear_grid(Rational(99), Rational(100), 11));
    auto sl = asymptotic_slopes(p);
    double worst = 0;
    int n = 0;
    for (const auto& t : traces) {
      if (t.samples.back().k != 100.0) continue;
      double r = std::fabs(t.samples.back().omega) / 100.0;
      worst = std::max(worst, std::min(std::fabs(r - sl.s1), std::fabs(r - sl.s2)));
      ++n;
    }
    return Result(n == 4 && worst <= 1e-3, std::to_string(n) + " branches, max deviation " + fmt(worst));
  });

  run(out, s, "lower branch opens more slowly for larger b (k = 0.01, b = 0.1 vs 0.2)", [] {
    auto lowest = [](const Rational& b) {
      MindlinParams p = MindlinParams::reference(b);
      MultiPoly A = mindlin_A(MindlinCoeffs::from(p)).partial_eval({{"b", b}, {"k", make_rational(1, 100)}});
      for (const auto& r : real_roots(A))
        if (r.value > 0) return r.value;
      return 0.0;
    };
    double w1 = lowest(make_rational(1, 10)), w2 = lowest(make_rational(1, 5));
    return Result(w2 < w1 && w2 > 0, "w(b=0.1) = " + fmt(w1, 8) + ", w(b=0.2) = " + fmt(w2, 8));
  });

  run(out, s, "c_T^2 / c_P^2 = (1 - nu)/2 for nu = 0, 0.05, ..., 0.45", [] {
    double worst = 0;
    for (int i = 0; i <= 9; ++i) {
      double nu = 0.05 * i;
      auto sp = wave_speeds(1.0, nu, 1.0);
      worst = std::max(worst, std::fabs(sp.cT * sp.cT / (sp.cP * sp.cP) - (1 - nu) / 2));
    }
    return Result(worst <= 1e-14, "max error " + fmt(worst));
  });

  run(out, s, "f-branch speed c_T sqrt(1 + 12 kappa b^2/(h^2 k^2)); k -> inf expansion residual order 4", [] {
    MindlinParams p = MindlinParams::from_material(Rational(1), make_rational(3, 10), Rational(1), Rational(1),
                                                   make_rational(5, 6), Rational(1));
    const double cT = wave_speeds(p).cT, kap = 5.0 / 6.0;
    double worst = 0;
    for (double k : log_samples(0.1, 100.0, 13)) {
      double c = f_branch_speed(p, k);
      worst = std::max(worst, std::fabs(c - cT * std::sqrt(1 + 12 * kap / (k * k))) / c);
    }
    auto fit = residual_order(
        [&](double x) {
          double k = 1.0 / x;
          return f_branch_speed(p, k) - cT * (1 + 6 * kap / (k * k));
        },
        log_samples(1e-3, 1e-1, 9), 4.0);
    return Result(worst <= 1e-12 && fit.pass, "rel " + fmt(worst) + ", slope in 1/k " + fmt(fit.slope, 4));
  });
  return out;
}

inline std::vector<Check> verify_crosspoint() {
  using namespace verify_detail;
  std::vector<Check> out;
  const std::string s = "crosspoint";

  run(out, s, "hyperbola invariant d'^2 - k'^2 = gamma g_c on 1000 samples per (gamma, g_gamma)", [] {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> kd(-5.0, 5.0);
    double worst = 0;
    for (double gamma : {0.4, 2.0, 4.0})
      for (double gg : {1.0, -1.0}) {
        CrossPointData cp = CrossPointData::normalized(1, 10, gamma, gg);
        int n = 0;
        while (n < 1000) {
          double kappa = kd(rng);
          auto r = solve_delta(cp, kappa);
          if (!r) continue;
          double delta = (n % 2) ? r->first : r->second;
          auto [dp, kp] = normal_form(cp, delta, kappa);
          worst = std::max(worst, std::fabs(dp * dp - kp * kp - gamma * cp.gc));
          ++n;
        }
      }
    return Result(worst <= 1e-10, "max error " + fmt(worst));
  });

  run(out, s, "kappa (d + g1 kappa) -> gamma g_gamma/(g2 - g1) within 1% at kappa = 1e3", [] {
    CrossPointData cp = CrossPointData::normalized(1, 10, 1, 1);
    auto dev = branch_deviation(cp, 1e3, 1);
    double est = 1e3 * dev->offset, lim = asymptotic_deviation_constant(cp);
    return Result(std::fabs(est / lim - 1) <= 0.01,
                          "offset " + fmt(dev->offset) + ", kappa*offset " + fmt(est) + " vs " + fmt(lim));
  });

  run(out, s, "Lagrangian round trip for 100 random rational (A, B, C, D)", [] {
    std::mt19937 rng(32);
    std::uniform_int_distribution<int> num(-30, 30), den(1, 9);
    for (int t = 0; t < 100; ++t) {
      QuadDispersion q{make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)),
                       make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
      if (sgn(q.A) == 0) q.A = 1;
      if (dispersion_poly(crosspoint_lagrangian(q)) != quad_dispersion_poly(q))
        return Result(false, std::string("mismatch"));
    }
    QuadDispersion q = crosspoint_coeffs(Rational(1), Rational(10), Rational(1), Rational(1));
    const MultiPoly w = var("w"), k = var("k");
    bool ok = quad_dispersion_poly(q) == (w + k) * (w + MultiPoly(10) * k) - MultiPoly(1);
    return Result(ok, std::string("exact"));
  });
  return out;
}

inline std::vector<Check> verify_mech() {
  using namespace verify_detail;
  std::vector<Check> out;
  const std::string s = "mech";
  OscillatorPair o;
  o.p_limit.reset();

  run(out, s, "p* = 1/11 and W*^2 = 12/11 exact, W* = 1.044", [&] {
    Rational ps = crossing_param(o);
    auto [W1, W2] = partial_freqs(o, ps);
    double Ws = std::sqrt(to_double(W1));
    bool ok = ps == make_rational(1, 11) && W1 == make_rational(12, 11) && W2 == W1 && std::fabs(Ws - 1.044) < 5e-4;
    return Result(ok, "p* = " + to_string(ps) + ", W*^2 = " + to_string(W1) + ", W* = " + fmt(Ws, 8));
  });

  run(out, s, "split law w+-^2(p*, b) = 12/11 +- b for b = 0.2, 0.4, 0.6", [&] {
    Rational ps = crossing_param(o);
    for (int i : {1, 2, 3}) {
      Rational b = make_rational(i, 5);
      EigenFreqs e = eigenfreqs(o, ps, b);
      if (!e.plus_exact || *e.plus_exact != make_rational(12, 11) + b || *e.minus_exact != make_rational(12, 11) - b)
        return Result(false, "fails at b = " + to_string(b));
    }
    return Result(true, std::string("exact"));
  });

  run(out, s, "closed-form eigenfrequencies = determinant roots on a 100-point (p, b) grid", [&] {
    double worst = 0;
    for (const auto& p : linear_grid(make_rational(-1, 20), make_rational(23, 100), 10))
      for (const auto& b : linear_grid(Rational(0), make_rational(9, 10), 10)) {
        EigenFreqs e = eigenfreqs(o, p, b);
        auto roots = expand_multiplicities(real_roots(characteristic_in_w2(o, p, b), 1e-15));
        if (roots.size() != 2) return Result(false, std::string("root count"));
        worst = std::max({worst, std::fabs(roots[0] - e.minus), std::fabs(roots[1] - e.plus)});
      }
    return Result(worst <= 1e-12, "max difference " + fmt(worst));
  });

  run(out, s, "minimum of w+^2 - w-^2 within one grid step of p*", [&] {
    auto grid = linear_grid(make_rational(-1, 20), make_rational(23, 100), 541);
    const Rational step = grid[1] - grid[0];
    const Rational ps = crossing_param(o);
    std::string detail;
    bool ok = true;
    for (int i : {1, 2, 3}) {
      Rational pm = min_gap_param(o, grid, make_rational(i, 5));
      ok = ok && abs(pm - ps) <= step;
      detail += "b=0." + std::to_string(2 * i) + ": " + fmt(to_double(pm), 6) + "; ";
    }
    return Result(ok, detail);
  });

  run(out, s, "factorized remainder = -b^2 kappa^2/(m1 m2)", [&] {
    auto f = factorize_coupled(characteristic_system(o, make_rational(1, 20)));
    return Result(f.remainder == -var("b").pow(2), "remainder " + format_poly(f.remainder));
  });
  return out;
}

inline std::vector<Check> verify_pipeline(const std::string& data_dir) {
  using namespace verify_detail;
  std::vector<Check> out;
  const std::string s = "pipeline";
  auto load = [&](const std::string& name) { return parse_or_throw(read_file(data_dir + "/" + name), name); };

  run(out, s, "wing.lag symbol = B_b up to signature diag(1, -1)", [&] {
    GaussMatrix m = symbol_matrix(load("wing.lag"));
    auto sig = equal_up_to_signature(real_part(m), wing_matrix(WingCoeffs::symbolic()));
    bool ok = sig && (*sig)[0] == 1 && (*sig)[1] * (*sig)[2] == -1;
    bool disp = dispersion_poly(load("wing.lag")) == wing_dispersion(WingCoeffs::symbolic());
    return Result(ok && disp, std::string(ok ? "signature (+, -)" : "no signature match") +
                                          (disp ? ", dispersion equal" : ", dispersion differs"));
  });

  run(out, s, "twt.lag: -C times the symbol = physical TWT matrix", [&] {
    QuadraticLagrangian lag = load("twt.lag");
    TwtParams p{make_rational(2), make_rational(3), make_rational(5), make_rational(7, 2), make_rational(1, 3),
                make_rational(1, 2), make_rational(3, 4)};
    auto vals = twt_lagrangian_values(p);
    vals.erase("b");
    PolyMatrix m = real_part(specialize(symbol_matrix(lag), vals));
    return Result(MultiPoly(Rational(-p.C)) * m == twt_physical_matrix(p), std::string("factor -C"));
  });

  run(out, s, "kirchhoff.lag dispersion = rho h w^2 - D (kx^2 + ky^2)^2; null terms change nothing", [&] {
    std::string text = read_file(data_dir + "/kirchhoff.lag");
    std::istringstream in(text);
    std::string line, stripped;
    while (std::getline(in, line))
      if (line.find("# null") == std::string::npos) stripped += line + "\n";
    QuadraticLagrangian full = parse_or_throw(text, "kirchhoff.lag");
    QuadraticLagrangian bare = parse_or_throw(stripped, "kirchhoff.lag (null terms removed)");
    bool same = symbol_matrix(full) == symbol_matrix(bare);
    bool disp = dispersion_poly(full) == kirchhoff_dispersion(var("rho"), var("h"), var("D"));
    return Result(same && disp, std::string(same ? "null terms cancel" : "null terms contribute"));
  });

  run(out, s, "mindlin.lag symbol = B_b exactly", [&] {
    return Result(symbol_matrix(load("mindlin.lag")) == mindlin_full_matrix(MindlinCoeffs::symbolic()),
                          std::string("fields (psi_y, psi_x, u)"));
  });

  run(out, s, "crosspoint.lag dispersion = (w + g1 k)(w + g2 k) - gg", [&] {
    const MultiPoly w = var("w"), k = var("k");
    MultiPoly expect = (w + var("g1") * k) * (w + var("g2") * k) - var("gg");
    return Result(dispersion_poly(load("crosspoint.lag")) == expect, std::string("exact"));
  });
  return out;
}

inline const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"detexp", "mindlin", "crosspoint", "mech", "pipeline"};
  return names;
}

inline std::vector<Check> verify_suite(const std::string& name, const std::string& data_dir) {
  if (name == "detexp") return verify_detexp();
  if (name == "mindlin") return verify_mindlin();
  if (name == "crosspoint") return verify_crosspoint();
  if (name == "mech") return verify_mech();
  if (name == "pipeline") return verify_pipeline(data_dir);
  if (name == "all") {
    std::vector<Check> all;
    for (const auto& n : verify_suite_names()) {
      auto part = verify_suite(n, data_dir);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw std::invalid_argument("unknown verify suite '" + name + "'");
}

}  // namespace fdisp
