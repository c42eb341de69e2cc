#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "fdisp/multipoly.hpp"

namespace fdisp {

inline Rational rational_gcd(const Rational& a, const Rational& b) {
  if (sgn(a) == 0) return abs(b);
  if (sgn(b) == 0) return abs(a);
  BigInt num, den;
  BigInt x = a.get_num() * b.get_den();
  BigInt y = b.get_num() * a.get_den();
  mpz_gcd(num.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  den = a.get_den() * b.get_den();
  return make_rational(num, den);
}

template <typename C>
C coeff_from_rational(const Rational& q) {
  if constexpr (std::is_same_v<C, double>)
    return to_double(q);
  else
    return q;
}

template <typename C>
bool coeff_is_zero(const C& c) {
  if constexpr (std::is_same_v<C, double>)
    return c == 0.0;
  else
    return sgn(c) == 0;
}

// Truncated generalized power series in one variable x:
//   sum_n a_n x^{e_n} + O(x^order),
// with rational exponents on a lattice base + n*step. An absent order
// means the series is exact (a finite sum).
template <typename C>
class TruncSeries {
 public:
  using Terms = std::map<Rational, C>;

  TruncSeries() = default;
  TruncSeries(std::string var, Rational step, std::optional<Rational> order = std::nullopt)
      : var_(std::move(var)), step_(std::move(step)), order_(std::move(order)) {
    if (sgn(step_) <= 0) throw std::invalid_argument("series step must be positive");
  }

  static TruncSeries monomial(const std::string& var, const C& c, const Rational& exponent, const Rational& step,
                              std::optional<Rational> order = std::nullopt) {
    TruncSeries s(var, step, std::move(order));
    s.set(exponent, c);
    return s;
  }

  const std::string& variable() const { return var_; }
  const Rational& step() const { return step_; }
  const std::optional<Rational>& order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool is_exact() const { return !order_.has_value(); }
  bool is_zero() const { return terms_.empty(); }

  // Lowest stored exponent; for an all-zero truncated series, its order.
  std::optional<Rational> valuation() const {
    if (!terms_.empty()) return terms_.begin()->first;
    return order_;
  }

  std::optional<Rational> base() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }

  C coefficient(const Rational& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  void set(const Rational& e, const C& c) {
    if (order_ && e >= *order_) return;
    if (coeff_is_zero(c))
      terms_.erase(e);
    else
      terms_[e] = c;
  }

  void add(const Rational& e, const C& c) {
    if (order_ && e >= *order_) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!coeff_is_zero(c)) terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (coeff_is_zero(it->second)) terms_.erase(it);
  }

  TruncSeries truncated(const Rational& order) const {
    TruncSeries s = *this;
    if (!s.order_ || order < *s.order_) s.order_ = order;
    for (auto it = s.terms_.begin(); it != s.terms_.end();)
      it = (it->first >= *s.order_) ? s.terms_.erase(it) : std::next(it);
    return s;
  }

  // Multiplies by x^shift.
  TruncSeries shifted(const Rational& shift) const {
    TruncSeries s(var_, step_, order_ ? std::optional<Rational>(Rational(*order_ + shift)) : std::nullopt);
    for (const auto& [e, c] : terms_) s.terms_.emplace(Rational(e + shift), c);
    return s;
  }

  TruncSeries scaled(const C& f) const {
    TruncSeries s(var_, step_, order_);
    for (const auto& [e, c] : terms_) s.set(e, C(c * f));
    return s;
  }

  TruncSeries operator-() const { return scaled(C(-1)); }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    check_var(a, b);
    TruncSeries s(a.var_, rational_gcd(a.step_, b.step_), min_order(a.order_, b.order_));
    for (const auto& [e, c] : a.terms_) s.add(e, c);
    for (const auto& [e, c] : b.terms_) s.add(e, c);
    return s;
  }

  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

  // Order of a product: min(o_a + v_b, o_b + v_a), v the valuations.
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    check_var(a, b);
    std::optional<Rational> order;
    auto va = a.valuation();
    auto vb = b.valuation();
    if (a.order_ && vb) order = Rational(*a.order_ + *vb);
    if (b.order_ && va) order = min_order(order, Rational(*b.order_ + *va));
    if (a.is_exact() && a.is_zero()) order.reset();
    if (b.is_exact() && b.is_zero()) order.reset();
    TruncSeries s(a.var_, rational_gcd(a.step_, b.step_), order);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) s.add(Rational(ea + eb), C(ca * cb));
    return s;
  }

  TruncSeries pow(unsigned n) const {
    TruncSeries r = one(var_, step_);
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  static TruncSeries one(const std::string& var, const Rational& step) {
    return monomial(var, C(1), Rational(0), step);
  }

  // Evaluates the stored terms at x > 0 (or any x when all exponents are integers).
  double eval(double x) const {
    double s = 0.0;
    for (const auto& [e, c] : terms_) {
      double cd;
      if constexpr (std::is_same_v<C, double>)
        cd = c;
      else
        cd = to_double(c);
      if (is_integer(e))
        s += cd * std::pow(x, static_cast<double>(e.get_num().get_si()));
      else
        s += cd * std::pow(x, to_double(e));
    }
    return s;
  }

 private:
  static void check_var(const TruncSeries& a, const TruncSeries& b) {
    if (a.var_ != b.var_) throw std::invalid_argument("series in different variables: " + a.var_ + ", " + b.var_);
  }
  static std::optional<Rational> min_order(const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (!a) return b;
    if (!b) return a;
    return *a < *b ? *a : *b;
  }

  std::string var_;
  Rational step_{1};
  std::optional<Rational> order_;
  Terms terms_;
};

class SeriesOrderError : public std::runtime_error {
 public:
  SeriesOrderError(const Rational& achievable, const Rational& requested)
      : std::runtime_error("requested series order " + to_string(requested) + " exceeds achievable order " +
                           to_string(achievable)),
        achievable_(achievable) {}
  const Rational& achievable() const { return achievable_; }

 private:
  Rational achievable_;
};

// Substitutes y = s(x) into p(y, x). The result carries the order up to
// which every coefficient is determined; when `requested` exceeds it, an
// error reports the achievable order.
template <typename C>
TruncSeries<C> series_substitute(const MultiPoly& p, const std::string& y, const TruncSeries<C>& s,
                                 std::optional<Rational> requested = std::nullopt) {
  const std::string& x = s.variable();
  for (const auto& v : p.used_variables())
    if (v != x && v != y) throw std::invalid_argument("polynomial depends on variable " + v + " besides " + y + ", " + x);
  auto ycoeffs = p.coefficients_in(y);
  TruncSeries<C> total(x, s.step());
  TruncSeries<C> spow = TruncSeries<C>::one(x, s.step());
  for (std::size_t i = 0; i < ycoeffs.size(); ++i) {
    if (i > 0) spow = spow * s;
    if (ycoeffs[i].is_zero()) continue;
    TruncSeries<C> cx(x, Rational(1));
    auto xc = ycoeffs[i].coefficients_in(x);
    for (std::size_t j = 0; j < xc.size(); ++j)
      if (!xc[j].is_zero()) cx.add(Rational(static_cast<long>(j)), coeff_from_rational<C>(xc[j].constant_term()));
    total = total + cx * spow;
  }
  if (requested) {
    if (total.order() && *total.order() < *requested) throw SeriesOrderError(*total.order(), *requested);
    total = total.truncated(*requested);
  }
  return total;
}

}  // namespace fdisp
