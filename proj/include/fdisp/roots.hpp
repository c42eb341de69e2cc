#pragma once

// Real roots of univariate rational polynomials: square-free split (Yun),
// Sturm-sequence isolation with exact rational sign evaluation, then
// bisection to the requested tolerance.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdisp/multipoly.hpp"

namespace fdisp {

// Dense univariate polynomial, coefficients from degree 0 upward.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

  static UniPoly from_multipoly(const MultiPoly& p) {
    auto used = p.used_variables();
    if (used.size() > 1) throw std::invalid_argument("polynomial is not univariate");
    if (used.empty()) return UniPoly({p.constant_term()});
    auto cs = p.coefficients_in(used.front());
    std::vector<Rational> c;
    for (const auto& q : cs) c.push_back(q.constant_term());
    return UniPoly(std::move(c));
  }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& lead() const { return c_.back(); }

  Rational eval(const Rational& x) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      r *= x;
      r += *it;
    }
    return r;
  }

  int sign_at(const Rational& x) const { return sgn(eval(x)); }

  // Sign as x -> +inf or -inf.
  int sign_at_infinity(bool positive) const {
    if (c_.empty()) return 0;
    int s = sgn(lead());
    return (positive || degree() % 2 == 0) ? s : -s;
  }

  UniPoly derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(Rational(c_[i] * static_cast<long>(i)));
    return UniPoly(std::move(d));
  }

  UniPoly monic() const {
    if (c_.empty()) return *this;
    std::vector<Rational> m = c_;
    Rational l = lead();
    for (auto& x : m) x /= l;
    return UniPoly(std::move(m));
  }

  // Quotient and remainder of a / b.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r = a.c_;
    int db = b.degree();
    if (a.degree() < db) return {UniPoly(), a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
    for (int i = a.degree(); i >= db; --i) {
      Rational f = r[static_cast<std::size_t>(i)] / b.lead();
      q[static_cast<std::size_t>(i - db)] = f;
      if (sgn(f) == 0) continue;
      for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
  }

  static UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
      UniPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator-(const UniPoly& a) { return UniPoly() - a; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

struct SquareFreeFactor {
  UniPoly factor;
  unsigned multiplicity;
};

// Yun's algorithm: f = lead * prod a_i^i with square-free, pairwise coprime a_i.
inline std::vector<SquareFreeFactor> square_free_decomposition(const UniPoly& f) {
  std::vector<SquareFreeFactor> out;
  if (f.degree() < 1) return out;
  UniPoly fp = f.derivative();
  UniPoly a0 = UniPoly::gcd(f, fp);
  UniPoly b = UniPoly::divmod(f, a0).first;
  UniPoly c = UniPoly::divmod(fp, a0).first;
  UniPoly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() >= 1) {
    UniPoly a = UniPoly::gcd(b, d);
    if (a.degree() >= 1) out.push_back({a, i});
    b = UniPoly::divmod(b, a).first;
    c = UniPoly::divmod(d, a).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

class SturmSequence {
 public:
  explicit SturmSequence(const UniPoly& p) {
    seq_.push_back(p);
    seq_.push_back(p.derivative());
    while (!seq_.back().is_zero() && seq_.back().degree() > 0) {
      UniPoly r = UniPoly::divmod(seq_[seq_.size() - 2], seq_.back()).second;
      if (r.is_zero()) break;
      seq_.push_back(-r);
    }
  }

  int variations(const Rational& x) const {
    int v = 0, last = 0;
    for (const auto& p : seq_) {
      int s = p.sign_at(x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  // Number of distinct roots in (a, b].
  int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

 private:
  std::vector<UniPoly> seq_;
};

struct Root {
  double value = 0.0;
  unsigned multiplicity = 1;
  std::optional<Rational> exact;  // set for rational roots found along the way (linear or split quadratic factor, bisection hit)
};

// Cauchy bound: every root satisfies |x| < 1 + max |c_i / c_n|.
inline Rational cauchy_bound(const UniPoly& p) {
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeffs()[static_cast<std::size_t>(i)] / p.lead());
    if (r > m) m = r;
  }
  return m + 1;
}

namespace detail {

inline Root refine(const UniPoly& g, Rational lo, Rational hi, const Rational& tol, unsigned mult) {
  // Exactly one simple root in (lo, hi].
  if (g.degree() == 1) {
    Rational r = -g.coeffs()[0] / g.coeffs()[1];
    return {to_double(r), mult, r};
  }
  if (g.degree() == 2) {
    const auto& c = g.coeffs();
    if (auto sq = exact_sqrt(Rational(c[1] * c[1] - 4 * c[2] * c[0]))) {
      for (const Rational& r : {Rational((-c[1] - *sq) / (2 * c[2])), Rational((-c[1] + *sq) / (2 * c[2]))})
        if (lo < r && r <= hi) return {to_double(r), mult, r};
    }
  }
  int shi = g.sign_at(hi);
  if (shi == 0) return {to_double(hi), mult, hi};
  // Past tol, keep going until the bracket is below double resolution
  // (absolute floor tol * 2^-40 for roots near zero).
  const Rational floor_w = tol / Rational(mpz_class(1) << 40);
  auto done = [&] {
    const Rational w = hi - lo;
    if (w > tol) return false;
    if (w <= floor_w) return true;
    return to_double(lo) == to_double(hi);
  };
  while (!done()) {
    Rational mid = (lo + hi) / 2;
    int s = g.sign_at(mid);
    if (s == 0) return {to_double(mid), mult, mid};
    if (s == shi)
      hi = mid;
    else
      lo = mid;
  }
  return {to_double(Rational((lo + hi) / 2)), mult, std::nullopt};
}

inline void isolate(const UniPoly& g, const SturmSequence& st, const Rational& lo, const Rational& hi, int n,
                    const Rational& tol, unsigned mult, std::vector<Root>& out) {
  if (n == 0) return;
  if (n == 1) {
    out.push_back(refine(g, lo, hi, tol, mult));
    return;
  }
  Rational mid = (lo + hi) / 2;
  int left = st.count(lo, mid);
  isolate(g, st, lo, mid, left, tol, mult, out);
  isolate(g, st, mid, hi, n - left, tol, mult, out);
}

}  // namespace detail

inline std::vector<Root> real_roots(const UniPoly& p, double tol = 1e-12) {
  if (p.is_zero()) throw std::invalid_argument("real roots of the zero polynomial are undefined");
  if (!(tol > 0)) throw std::invalid_argument("root tolerance must be positive");
  std::vector<Root> out;
  const Rational rtol = from_double(tol);
  for (const auto& sf : square_free_decomposition(p)) {
    const UniPoly& g = sf.factor;
    SturmSequence st(g);
    Rational b = cauchy_bound(g);
    int n = st.count(Rational(-b), b);
    detail::isolate(g, st, Rational(-b), b, n, rtol, sf.multiplicity, out);
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) { return a.value < b.value; });
  return out;
}

inline std::vector<Root> real_roots(const MultiPoly& p, double tol = 1e-12) {
  return real_roots(UniPoly::from_multipoly(p), tol);
}

// Root values with each root repeated by its multiplicity.
inline std::vector<double> expand_multiplicities(const std::vector<Root>& roots) {
  std::vector<double> v;
  for (const auto& r : roots)
    for (unsigned i = 0; i < r.multiplicity; ++i) v.push_back(r.value);
  return v;
}

}  // namespace fdisp
