#pragma once

// Local model at a crossing of two dispersion curves G1 = 0, G2 = 0 with
// G1 G2 = gamma Gc: linearization, hyperbola normal form, branch solving
// and a one-field Lagrangian realizing a quadratic dispersion function.

#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "fdisp/lagrangian.hpp"

namespace fdisp {

struct CrossPointData {
  double g1 = 0, g2 = 0;   // g_jk / g_jw
  double gamma = 1;        // coupling coefficient
  double g_gamma = 0;      // g_c / (g_1w g_2w)
  double g1w = 0, g1k = 0, g2w = 0, g2k = 0, gc = 0;  // raw derivatives and coupling value
  bool normalizable = true;

  // Normalized data with g_jw = 1.
  static CrossPointData normalized(double g1, double g2, double gamma, double g_gamma) {
    CrossPointData d;
    d.g1 = g1;
    d.g2 = g2;
    d.gamma = gamma;
    d.g_gamma = g_gamma;
    d.g1w = d.g2w = 1;
    d.g1k = g1;
    d.g2k = g2;
    d.gc = g_gamma;
    return d;
  }
};

class NonNormalizableCrossing : public std::runtime_error {
 public:
  explicit NonNormalizableCrossing(CrossPointData d)
      : std::runtime_error("non-normalizable crossing: dG/dw vanishes for a factor"), data_(d) {}
  // The bilinear form (g_1w d + g_1k k)(g_2w d + g_2k k) = gamma g_c is still available.
  const CrossPointData& data() const { return data_; }

 private:
  CrossPointData data_;
};

namespace detail {

// Sum of |term| at the point: the scale for the on-curve test.
inline double local_scale(const MultiPoly& p, const std::map<std::string, double>& at) {
  double s = 0;
  const auto& vars = p.variables();
  for (const auto& [e, c] : p.terms()) {
    double t = std::fabs(to_double(c));
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (e[i]) t *= std::pow(std::fabs(at.at(vars[i])), static_cast<double>(e[i]));
    s += t;
  }
  return s;
}

}  // namespace detail

// Linearizes G1, G2 at (w0, k0) and evaluates Gc there.
inline CrossPointData extract_crosspoint(const MultiPoly& G1, const MultiPoly& G2, const MultiPoly& Gc, double w0,
                                         double k0, double gamma = 1.0, double tol = 1e-9,
                                         const std::string& wvar = "w", const std::string& kvar = "k") {
  const std::map<std::string, double> at{{wvar, w0}, {kvar, k0}};
  for (const MultiPoly* g : {&G1, &G2, &Gc})
    for (const auto& v : g->used_variables())
      if (v != wvar && v != kvar) throw std::invalid_argument("crossing functions depend on unassigned variable " + v);
  for (const MultiPoly* g : {&G1, &G2}) {
    const double scale = std::max(1.0, detail::local_scale(*g, at));
    if (std::fabs(g->eval(at)) > tol * scale) throw std::domain_error("point is not on both zero sets");
  }
  auto d_at = [&](const MultiPoly& g, const std::string& v) { return g.has_variable(v) ? g.derivative(v).eval(at) : 0.0; };
  CrossPointData d;
  d.gamma = gamma;
  d.g1w = d_at(G1, wvar);
  d.g1k = d_at(G1, kvar);
  d.g2w = d_at(G2, wvar);
  d.g2k = d_at(G2, kvar);
  d.gc = Gc.eval(at);
  if (d.g1w == 0.0 || d.g2w == 0.0) {
    d.normalizable = false;
    throw NonNormalizableCrossing(d);
  }
  d.g1 = d.g1k / d.g1w;
  d.g2 = d.g2k / d.g2w;
  d.g_gamma = d.gc / (d.g1w * d.g2w);
  return d;
}

// (d', k') with l_j = g_jw d + g_jk k, d' = (l1 + l2)/2, k' = (l1 - l2)/2.
inline std::pair<double, double> normal_form(const CrossPointData& cp, double delta, double kappa) {
  if (cp.g1w * cp.g2k == cp.g2w * cp.g1k) throw std::domain_error("linear forms are parallel");
  const double l1 = cp.g1w * delta + cp.g1k * kappa;
  const double l2 = cp.g2w * delta + cp.g2k * kappa;
  return {(l1 + l2) / 2, (l1 - l2) / 2};
}

// Roots of (d + g1 k)(d + g2 k) = gamma g_gamma in d, sorted; none in the gap.
inline std::optional<std::pair<double, double>> solve_delta(const CrossPointData& cp, double kappa) {
  const double s = (cp.g1 + cp.g2) * kappa;  // d^2 + s d + c = 0
  const double c = cp.g1 * cp.g2 * kappa * kappa - cp.gamma * cp.g_gamma;
  const double disc = (cp.g1 - cp.g2) * (cp.g1 - cp.g2) * kappa * kappa + 4 * cp.gamma * cp.g_gamma;
  if (disc < 0) return std::nullopt;
  const double r = std::sqrt(disc);
  // Larger-magnitude root first, the other from the product c.
  const double big = s >= 0 ? (-s - r) / 2 : (-s + r) / 2;
  double other = big != 0.0 ? c / big : (-s + r) / 2;
  double lo = std::min(big, other), hi = std::max(big, other);
  if (big == 0.0) lo = hi = 0.0;
  return std::make_pair(lo, hi);
}

// Root nearer a reference line d = -g_j k and its offset from that line.
struct Deviation {
  int line = 1;
  double delta = 0;
  double offset = 0;  // delta + g_line * kappa
};

inline std::optional<Deviation> branch_deviation(const CrossPointData& cp, double kappa, int line) {
  auto roots = solve_delta(cp, kappa);
  if (!roots) return std::nullopt;
  const double g = line == 1 ? cp.g1 : cp.g2;
  double best = roots->first;
  if (std::fabs(roots->second + g * kappa) < std::fabs(roots->first + g * kappa)) best = roots->second;
  return Deviation{line, best, best + g * kappa};
}

// Limit of kappa * (d + g1 kappa) on the branch near line 1.
inline double asymptotic_deviation_constant(const CrossPointData& cp) {
  if (cp.g1 == cp.g2) throw std::domain_error("degenerate crossing: g1 = g2");
  return cp.gamma * cp.g_gamma / (cp.g2 - cp.g1);
}

// G(k, w) = A w^2 - 2 B w k - C k^2 - D.
struct QuadDispersion {
  Rational A{1}, B{0}, C{0}, D{0};
};

inline MultiPoly quad_dispersion_poly(const QuadDispersion& q) {
  const MultiPoly w = var("w"), k = var("k");
  return MultiPoly(q.A) * w.pow(2) - MultiPoly(Rational(2 * q.B)) * w * k - MultiPoly(q.C) * k.pow(2) - MultiPoly(q.D);
}

// Coefficients with G = (w + g1 k)(w + g2 k) - gamma g_gamma.
inline QuadDispersion crosspoint_coeffs(const Rational& g1, const Rational& g2, const Rational& gamma,
                                        const Rational& g_gamma) {
  return {Rational(1), Rational(-(g1 + g2) / 2), Rational(-g1 * g2), Rational(gamma * g_gamma)};
}

// L = 1/2 [A Q_t^2 + 2 B Q_t Q_z - C Q_z^2 - D Q^2].
inline QuadraticLagrangian crosspoint_lagrangian(const QuadDispersion& q) {
  QuadraticLagrangian lag;
  lag.dim = 1;
  lag.fields = {"Q"};
  const Slot t{0, {1, 0}}, z{0, {0, 1}}, o{0, {0, 0}};
  auto put = [&](const Slot& x, const Slot& y, const Rational& v) {
    if (sgn(v) != 0) lag.coeff[{x, y}] = MultiPoly(v);
  };
  put(t, t, q.A);
  put(t, z, q.B);
  put(z, t, q.B);
  put(z, z, Rational(-q.C));
  put(o, o, Rational(-q.D));
  return lag;
}

}  // namespace fdisp
