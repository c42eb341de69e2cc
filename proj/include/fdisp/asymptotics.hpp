#pragma once

// Small-k and large-k asymptotics of the coupled Mindlin factor A(k, w):
// lower (pinned) and upper (lifted) branch series, the Laurent series of
// S = k^2 / w^2, residual-order fits and the large-k slopes.

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdisp/models/mindlin.hpp"
#include "fdisp/series.hpp"

namespace fdisp {

// q * sqrt(r), exact when r is a rational square.
struct Surd {
  Rational q{0};
  Rational r{1};

  double value() const { return to_double(q) * std::sqrt(to_double(r)); }
  std::optional<Rational> exact() const {
    auto s = exact_sqrt(r);
    if (!s) return std::nullopt;
    return Rational(q * *s);
  }
};

enum class SeriesKind { lower, upper };

struct SeriesCoeffs {
  SeriesKind kind = SeriesKind::lower;
  std::array<Surd, 3> terms{};  // (c1, c2, c3) or (w0, d1, d2)
  std::map<std::string, Rational> params;

  std::array<double, 3> values() const { return {terms[0].value(), terms[1].value(), terms[2].value()}; }

  // All three coefficients as rationals, when every surd is exact.
  std::optional<std::array<Rational, 3>> exact() const {
    std::array<Rational, 3> out;
    for (std::size_t i = 0; i < 3; ++i) {
      auto e = terms[i].exact();
      if (!e) return std::nullopt;
      out[i] = *e;
    }
    return out;
  }

  // Lower: c1 k^2 + c2 k^4 + c3 k^6.  Upper: w0 + d1 k^2 + d2 k^4.
  double eval(double k) const {
    auto v = values();
    const double k2 = k * k;
    if (kind == SeriesKind::lower) return k2 * (v[0] + k2 * (v[1] + k2 * v[2]));
    return v[0] + k2 * (v[1] + k2 * v[2]);
  }

  // Same, in exact arithmetic; coefficients fall back to their double values.
  Rational eval_exact(const Rational& k) const {
    std::array<Rational, 3> c;
    for (std::size_t i = 0; i < 3; ++i) {
      auto e = terms[i].exact();
      c[i] = e ? *e : from_double(terms[i].value());
    }
    Rational k2 = k * k;
    if (kind == SeriesKind::lower) return k2 * (c[0] + k2 * (c[1] + k2 * c[2]));
    return c[0] + k2 * (c[1] + k2 * c[2]);
  }
};

namespace detail {
inline void require_coupled(const MindlinParams& p) {
  p.validate();
  if (sgn(p.b) == 0) throw std::domain_error("series is singular at b = 0");
}
}  // namespace detail

// w = c1 k^2 + c2 k^4 + c3 k^6 + ...
inline SeriesCoeffs lower_series(const MindlinParams& p) {
  detail::require_coupled(p);
  const Rational &D = p.D, &rho = p.rho, &h = p.h, &b = p.b;
  const Rational kG = p.kappa * p.G;
  const Rational h3 = h * h * h;
  SeriesCoeffs s;
  s.kind = SeriesKind::lower;
  s.params = p.values();
  s.terms[0] = {Rational(1 / b), Rational(D / (rho * h))};
  s.terms[1] = {Rational(-(12 * D + kG * h3) / (24 * kG * b * b * b)), Rational(D / (rho * h3))};
  s.terms[2] = {Rational((4 * D + kG * h3) * (36 * D + kG * h3) / (384 * kG * kG * rational_pow(b, 5))),
                Rational(D / (rho * h3 * h * h))};
  return s;
}

// w = w0 + d1 k^2 + d2 k^4 + ...
inline SeriesCoeffs upper_series(const MindlinParams& p) {
  detail::require_coupled(p);
  const Rational &D = p.D, &rho = p.rho, &h = p.h, &b = p.b;
  const Rational kG = p.kappa * p.G;
  const Rational h3 = h * h * h;
  SeriesCoeffs s;
  s.kind = SeriesKind::upper;
  s.params = p.values();
  s.terms[0] = {Rational(2 * b / h), Rational(3 * kG / rho)};
  s.terms[1] = {Rational((D + kG * h3 / 12) / (b * h * h)), Rational(3 / (kG * rho))};
  s.terms[2] = {Rational(-(144 * D * D + 72 * D * kG * h3 + kG * kG * h3 * h3) / (576 * kG * b * b * b * h3)),
                Rational(3 / (kG * rho))};
  return s;
}

// Threshold of the upper branch at k = 0: w0^2 = 12 b^2 kappa G / (rho h^2).
inline Rational omega0_squared(const MindlinParams& p) {
  return 12 * p.b * p.b * p.kappa * p.G / (p.rho * p.h * p.h);
}

// P, Q and R of the S-quadratic kappa G D S^2 - P S + rho^2 h^3/12 = b^2 kappa G rho h / w^2.
struct LaurentData {
  Rational P, Q;
  Surd R;
  Rational kGD;
};

inline LaurentData laurent_data(const MindlinParams& p) {
  const Rational kG = p.kappa * p.G;
  const Rational h3 = p.h * p.h * p.h;
  LaurentData d;
  d.P = p.rho * h3 * kG / 12 + p.rho * p.D;
  d.Q = p.rho * h3 * kG / 12 - p.rho * p.D;
  d.R = {Rational(2 * p.b * kG), Rational(p.D * p.rho * p.h)};
  d.kGD = kG * p.D;
  return d;
}

// Laurent series of S_+ (sign > 0) or S_- in |w|, through |w|^3; the first
// omitted term is |w|^5.
inline TruncSeries<double> laurent_S(const MindlinParams& p, int sign) {
  detail::require_coupled(p);
  if (sign != 1 && sign != -1) throw std::invalid_argument("laurent_S: sign must be +1 or -1");
  const LaurentData d = laurent_data(p);
  const double kGD = to_double(d.kGD), P = to_double(d.P), Q = to_double(d.Q), R = d.R.value();
  TruncSeries<double> s("w", Rational(1), Rational(5));
  s.set(Rational(-1), sign * R / (2 * kGD));
  s.set(Rational(0), P / (2 * kGD));
  s.set(Rational(1), sign * Q * Q / (4 * kGD * R));
  s.set(Rational(3), -sign * std::pow(Q, 4) / (16 * kGD * R * R * R));
  return s;
}

// Exact variant, available when R is rational.
inline std::optional<TruncSeries<Rational>> laurent_S_exact(const MindlinParams& p, int sign) {
  detail::require_coupled(p);
  if (sign != 1 && sign != -1) throw std::invalid_argument("laurent_S: sign must be +1 or -1");
  const LaurentData d = laurent_data(p);
  auto R = d.R.exact();
  if (!R) return std::nullopt;
  const Rational sg(sign);
  TruncSeries<Rational> s("w", Rational(1), Rational(5));
  s.set(Rational(-1), Rational(sg * *R / (2 * d.kGD)));
  s.set(Rational(0), Rational(d.P / (2 * d.kGD)));
  s.set(Rational(1), Rational(sg * d.Q * d.Q / (4 * d.kGD * *R)));
  s.set(Rational(3), Rational(-sg * rational_pow(d.Q, 4) / (16 * d.kGD * rational_pow(*R, 3))));
  return s;
}

// w^2 times the S-quadratic, as a polynomial in (S, w).
inline MultiPoly s_quadratic_times_w2(const MindlinParams& p) {
  const Rational kG = p.kappa * p.G;
  const LaurentData d = laurent_data(p);
  const MultiPoly S = var("S"), w = var("w");
  return (MultiPoly(d.kGD) * S.pow(2) - MultiPoly(d.P) * S + MultiPoly(Rational(p.rho * p.rho * p.h * p.h * p.h / 12))) *
             w.pow(2) -
         MultiPoly(Rational(p.b * p.b * kG * p.rho * p.h));
}

// Residual of the S-quadratic along a truncated series, as a series in w:
// its valuation is the residual order.
template <typename C>
TruncSeries<C> laurent_residual_series(const MindlinParams& p, const TruncSeries<C>& s) {
  return series_substitute(s_quadratic_times_w2(p), "S", s).shifted(Rational(-2));
}

// Value of the S-quadratic residual at a sample w > 0, exact when possible.
inline double laurent_residual(const MindlinParams& p, int sign, double w) {
  const LaurentData d = laurent_data(p);
  const Rational kG = p.kappa * p.G;
  const Rational c0 = p.rho * p.rho * p.h * p.h * p.h / 12;
  const Rational rhs = p.b * p.b * kG * p.rho * p.h;
  const Rational x = from_double(w);
  Rational S;
  if (auto ex = laurent_S_exact(p, sign)) {
    for (const auto& [e, c] : ex->terms()) {
      long n = e.get_num().get_si();
      S += c * (n >= 0 ? rational_pow(x, static_cast<unsigned>(n)) : Rational(1 / rational_pow(x, static_cast<unsigned>(-n))));
    }
  } else {
    S = from_double(laurent_S(p, sign).eval(w));
  }
  Rational r = d.kGD * S * S - d.P * S + c0 - rhs / (x * x);
  return to_double(r);
}

// First-order distance in w from (k, w) to the zero set of A: A / (dA/dw),
// evaluated exactly.
inline double omega_residual(const MultiPoly& A, const Rational& k, const Rational& w) {
  std::map<std::string, Rational> at{{"k", k}, {"w", w}};
  Rational a = A.eval_exact(at);
  if (sgn(a) == 0) return 0.0;
  Rational da = A.derivative("w").eval_exact(at);
  if (sgn(da) == 0) throw std::domain_error("dA/dw vanishes at the sample point");
  return to_double(Rational(a / da));
}

// The same residual and the raw |A| for a branch series.
struct SeriesResidual {
  double omega;  // A / dA/dw
  double raw;    // A
};

inline SeriesResidual series_residual(const MindlinParams& p, const SeriesCoeffs& s, double k) {
  MindlinParams q = p;
  MultiPoly A = mindlin_A(MindlinCoeffs::from(q)).partial_eval("b", q.b);
  Rational kr = from_double(k);
  Rational w = s.eval_exact(kr);
  std::map<std::string, Rational> at{{"k", kr}, {"w", w}};
  return {omega_residual(A, kr, w), to_double(A.eval_exact(at))};
}

struct ResidualFit {
  double slope = 0.0;
  bool exact = false;  // residual vanished at every sample
  bool pass = false;
  double expected = 0.0;
};

// Least-squares slope of log|r| against log x.
inline double loglog_slope(const std::vector<double>& xs, const std::vector<double>& rs) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (rs[i] == 0.0) continue;
    double lx = std::log(xs[i]), ly = std::log(std::fabs(rs[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) throw std::domain_error("slope fit needs two nonzero residuals");
  const double dn = static_cast<double>(n);
  return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

inline std::vector<double> log_samples(double lo, double hi, std::size_t n) {
  if (!(lo > 0) || !(hi > lo) || n < 2) throw std::invalid_argument("log samples need 0 < lo < hi and n >= 2");
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * static_cast<double>(i) / static_cast<double>(n - 1));
  return v;
}

inline ResidualFit residual_order(const std::function<double(double)>& residual, const std::vector<double>& samples,
                                  double expected, double tol = 0.3) {
  if (samples.size() < 2) throw std::invalid_argument("residual order needs at least two samples");
  double lo = samples.front(), hi = samples.front();
  for (double x : samples) {
    if (!(x > 0)) throw std::invalid_argument("residual order samples must be positive");
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (hi / lo < 100.0 * (1 - 1e-12)) throw std::invalid_argument("residual order samples must span two decades");
  std::vector<double> rs;
  bool all_zero = true;
  for (double x : samples) {
    rs.push_back(residual(x));
    if (rs.back() != 0.0) all_zero = false;
  }
  ResidualFit f;
  f.expected = expected;
  if (all_zero) {
    f.exact = true;
    f.pass = true;
    return f;
  }
  f.slope = loglog_slope(samples, rs);
  f.pass = std::fabs(f.slope - expected) <= tol;
  return f;
}

// Large-k slopes sqrt(kappa G / rho) and sqrt(12 D / (rho h^3)).
struct Slopes {
  double s1, s2;
};

inline Slopes asymptotic_slopes(const MindlinParams& p) {
  p.validate();
  return {std::sqrt(to_double(p.kappa * p.G / p.rho)), std::sqrt(to_double(12 * p.D / (p.rho * p.h * p.h * p.h)))};
}

// Roots of kappa G D S^2 - P S + rho^2 h^3 / 12 = 0: rho/(kappa G) and rho h^3/(12 D).
inline std::pair<Rational, Rational> s_infinity(const MindlinParams& p) {
  return {Rational(p.rho / (p.kappa * p.G)), Rational(p.rho * p.h * p.h * p.h / (12 * p.D))};
}

}  // namespace fdisp
