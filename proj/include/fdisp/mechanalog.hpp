#pragma once

// Two oscillators coupled through a spring b*kappa, detuned by a scalar
// parameter p that plays the role of the wavenumber.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fdisp/branches.hpp"
#include "fdisp/coupled.hpp"
#include "fdisp/roots.hpp"

namespace fdisp {

struct OscillatorPair {
  Rational m1{1}, m2{1};
  Rational kappa1{1}, kappa2{6, 5};
  Rational kappa{1};
  Rational alpha1{1}, alpha2{-1};
  Rational b{0};
  std::optional<Rational> p_limit = Rational(1, 5);  // |p| bound; nullopt disables

  void validate() const {
    if (sgn(m1) <= 0 || sgn(m2) <= 0 || sgn(kappa1) <= 0 || sgn(kappa2) <= 0 || sgn(kappa) <= 0)
      throw std::invalid_argument("oscillators need positive masses and spring constants");
    if (sgn(b) < 0) throw std::invalid_argument("coupling amplitude b must be non-negative");
  }

  void check_p(const Rational& p) const {
    validate();
    if (p_limit && abs(p) > *p_limit) throw std::domain_error("|p| = " + to_string(abs(p)) + " exceeds " + to_string(*p_limit));
  }
};

// Stiffness matrix of the full Lagrangian with springs kappa_j - b kappa,
// detuning p alpha_j kappa_j and the relative coupling b kappa (x1 - x2)^2.
inline RationalMatrix full_stiffness(const OscillatorPair& o, const Rational& p) {
  o.check_p(p);
  RationalMatrix K(2, 2);
  K(0, 0) = (o.kappa1 - o.b * o.kappa) + p * o.alpha1 * o.kappa1 + o.b * o.kappa;
  K(1, 1) = (o.kappa2 - o.b * o.kappa) + p * o.alpha2 * o.kappa2 + o.b * o.kappa;
  K(0, 1) = K(1, 0) = -o.b * o.kappa;
  return K;
}

// Diagonal of the full stiffness: (1 + p alpha_j) kappa_j.
inline std::pair<Rational, Rational> effective_stiffness(const OscillatorPair& o, const Rational& p) {
  RationalMatrix K = full_stiffness(o, p);
  if (sgn(K(0, 0)) <= 0 || sgn(K(1, 1)) <= 0) throw std::domain_error("effective stiffness is not positive");
  return {K(0, 0), K(1, 1)};
}

inline std::pair<Rational, Rational> partial_freqs(const OscillatorPair& o, const Rational& p) {
  auto [k1, k2] = effective_stiffness(o, p);
  return {Rational(k1 / o.m1), Rational(k2 / o.m2)};
}

// p* where the partial frequencies coincide.
inline Rational crossing_param(const OscillatorPair& o) {
  o.validate();
  const Rational den = o.alpha1 * o.kappa1 / o.m1 - o.alpha2 * o.kappa2 / o.m2;
  if (sgn(den) == 0) throw std::domain_error("no transversal crossing: detuning rates are equal");
  return (o.kappa2 / o.m2 - o.kappa1 / o.m1) / den;
}

struct EigenFreqs {
  double minus = 0, plus = 0;  // w_-^2, w_+^2
  std::optional<Rational> minus_exact, plus_exact;
};

// (W1 + W2)/2 -+ sqrt((W1 - W2)^2/4 + b^2 kappa^2/(m1 m2)), W_j the partial frequencies squared.
inline EigenFreqs eigenfreqs(const OscillatorPair& o, const Rational& p, const Rational& b) {
  if (sgn(b) < 0) throw std::invalid_argument("coupling amplitude b must be non-negative");
  auto [W1, W2] = partial_freqs(o, p);
  const Rational mean = (W1 + W2) / 2;
  const Rational disc = (W1 - W2) * (W1 - W2) / 4 + b * b * o.kappa * o.kappa / (o.m1 * o.m2);
  EigenFreqs e;
  if (auto r = exact_sqrt(disc)) {
    e.minus_exact = Rational(mean - *r);
    e.plus_exact = Rational(mean + *r);
    e.minus = to_double(*e.minus_exact);
    e.plus = to_double(*e.plus_exact);
  } else {
    const double s = std::sqrt(to_double(disc));
    e.minus = to_double(mean) - s;
    e.plus = to_double(mean) + s;
  }
  return e;
}

// Rows divided by the masses: Lambda = diag(w^2 - W1, w^2 - W2), coupling
// b [[0, kappa/m1], [kappa/m2, 0]].
inline CoupledSystem characteristic_system(const OscillatorPair& o, const Rational& p) {
  auto [W1, W2] = partial_freqs(o, p);
  const MultiPoly w2 = var("w").pow(2), b = var("b");
  PolyMatrix l1{{w2 - MultiPoly(W1)}};
  PolyMatrix l2{{w2 - MultiPoly(W2)}};
  PolyMatrix c(2, 2);
  c(0, 1) = b * MultiPoly(Rational(o.kappa / o.m1));
  c(1, 0) = b * MultiPoly(Rational(o.kappa / o.m2));
  return CoupledSystem(l1, l2, c, "b");
}

// det of the characteristic system at fixed b as a polynomial in z = w^2.
inline UniPoly characteristic_in_w2(const OscillatorPair& o, const Rational& p, const Rational& b) {
  MultiPoly d = det(characteristic_system(o, p).system()).partial_eval("b", b);
  auto cs = d.coefficients_in("w");
  std::vector<Rational> z;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i % 2) {
      if (!cs[i].is_zero()) throw std::logic_error("characteristic polynomial is not even in w");
      continue;
    }
    z.push_back(cs[i].constant_term());
  }
  return UniPoly(std::move(z));
}

// Traces w_-(p) (branch 0) and w_+(p) (branch 1) for each b.
inline std::vector<BranchTrace> sweep(const OscillatorPair& o, const std::vector<Rational>& pgrid,
                                      const std::vector<Rational>& bs) {
  if (pgrid.empty()) throw std::invalid_argument("sweep needs a non-empty p grid");
  if (bs.empty()) throw std::invalid_argument("sweep needs at least one b value");
  std::vector<BranchTrace> out;
  int id = 0;
  for (const auto& b : bs) {
    BranchTrace lo, hi;
    lo.id = id++;
    hi.id = id++;
    for (auto* t : {&lo, &hi}) {
      t->model = "mech";
      t->b = to_double(b);
    }
    for (const auto& p : pgrid) {
      EigenFreqs e = eigenfreqs(o, p, b);
      lo.samples.push_back({to_double(p), std::sqrt(e.minus)});
      hi.samples.push_back({to_double(p), std::sqrt(e.plus)});
    }
    out.push_back(std::move(lo));
    out.push_back(std::move(hi));
  }
  return out;
}

// Grid point minimizing the squared gap w_+^2 - w_-^2.
inline Rational min_gap_param(const OscillatorPair& o, const std::vector<Rational>& pgrid, const Rational& b) {
  if (pgrid.empty()) throw std::invalid_argument("min gap needs a non-empty p grid");
  Rational best_p = pgrid.front();
  double best = 0;
  bool first = true;
  for (const auto& p : pgrid) {
    EigenFreqs e = eigenfreqs(o, p, b);
    const double g = e.plus - e.minus;
    if (first || g < best) {
      best = g;
      best_p = p;
      first = false;
    }
  }
  return best_p;
}

}  // namespace fdisp
