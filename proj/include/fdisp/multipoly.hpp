#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fdisp/rational.hpp"

namespace fdisp {

// Exact multivariate polynomial over Q in named variables.
//
// Canonical form: the variable list is sorted and duplicate free, every
// exponent tuple has one entry per variable, and no zero coefficient is
// stored. Binary operations embed both operands into the union of their
// variable sets, so polynomials over (k, w) and (b, k, w) mix freely.
// A variable may be declared without occurring in any term; equality
// ignores such variables.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;
  using TermMap = std::map<Exponents, Rational>;

  MultiPoly() = default;
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(const Rational& c) {                  // NOLINT(google-explicit-constructor)
    if (sgn(c) != 0) terms_.emplace(Exponents{}, c);
  }

  static MultiPoly variable(const std::string& name) {
    MultiPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Exponents{1}, Rational(1));
    return p;
  }

  // Builds a polynomial from terms over an arbitrary variable order.
  // Duplicate exponent tuples are summed.
  static MultiPoly make(const std::vector<std::string>& vars,
                        const std::vector<std::pair<Exponents, Rational>>& terms) {
    std::vector<std::string> sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("duplicate variable name in polynomial construction");
    std::vector<std::size_t> pos(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i)
      pos[i] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), vars[i]) - sorted.begin());
    MultiPoly p;
    p.vars_ = std::move(sorted);
    for (const auto& [exps, c] : terms) {
      if (exps.size() != vars.size())
        throw std::invalid_argument("exponent tuple length " + std::to_string(exps.size()) +
                                    " does not match variable count " + std::to_string(vars.size()));
      Exponents e(vars.size(), 0);
      for (std::size_t i = 0; i < vars.size(); ++i) e[pos[i]] = exps[i];
      p.add_term(std::move(e), c);
    }
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool has_variable(const std::string& name) const {
    return std::binary_search(vars_.begin(), vars_.end(), name);
  }

  // True when `name` occurs with a positive exponent in some term.
  bool depends_on(const std::string& name) const {
    auto idx = index_of(name);
    if (!idx) return false;
    for (const auto& [e, c] : terms_)
      if (e[*idx] > 0) return true;
    return false;
  }

  bool is_constant() const {
    for (const auto& [e, c] : terms_)
      for (unsigned x : e)
        if (x != 0) return false;
    return true;
  }

  std::optional<Rational> constant_value() const {
    if (!is_constant()) return std::nullopt;
    return constant_term();
  }

  Rational constant_term() const {
    auto it = terms_.find(Exponents(vars_.size(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  unsigned degree(const std::string& name) const {
    auto idx = index_of(name);
    if (!idx) return 0;
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[*idx]);
    return d;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
      unsigned s = 0;
      for (unsigned x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  // Variables that actually occur.
  std::vector<std::string> used_variables() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (const auto& [e, c] : terms_)
        if (e[i] > 0) {
          out.push_back(vars_[i]);
          break;
        }
    return out;
  }

  // Same polynomial over `target`, which must be a sorted superset.
  MultiPoly embed(const std::vector<std::string>& target) const {
    if (target == vars_) return *this;
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::lower_bound(target.begin(), target.end(), vars_[i]);
      if (it == target.end() || *it != vars_[i])
        throw std::invalid_argument("embedding target lacks variable " + vars_[i]);
      pos[i] = static_cast<std::size_t>(it - target.begin());
    }
    MultiPoly p;
    p.vars_ = target;
    for (const auto& [e, c] : terms_) {
      Exponents ne(target.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
      p.terms_.emplace(std::move(ne), c);
    }
    return p;
  }

  MultiPoly operator-() const {
    MultiPoly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
  }

  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    auto vars = union_vars(a.vars_, b.vars_);
    MultiPoly r = a.embed(vars);
    MultiPoly bb = b.embed(vars);
    for (const auto& [e, c] : bb.terms_) r.add_term(e, c);
    return r;
  }

  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    auto vars = union_vars(a.vars_, b.vars_);
    MultiPoly aa = a.embed(vars);
    MultiPoly bb = b.embed(vars);
    MultiPoly r;
    r.vars_ = vars;
    Exponents e(vars.size());
    for (const auto& [ea, ca] : aa.terms_)
      for (const auto& [eb, cb] : bb.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, Rational(ca * cb));
      }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    auto vars = union_vars(a.vars_, b.vars_);
    return a.embed(vars).terms_ == b.embed(vars).terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(unsigned n) const {
    MultiPoly result(1);
    MultiPoly base = *this;
    while (n > 0) {
      if (n & 1u) result *= base;
      n >>= 1u;
      if (n > 0) base *= base;
    }
    return result.embed(union_vars(result.vars_, vars_));
  }

  MultiPoly scaled(const Rational& s) const {
    if (sgn(s) == 0) return MultiPoly().embed(vars_);
    MultiPoly p = *this;
    for (auto& [e, c] : p.terms_) c *= s;
    return p;
  }

  MultiPoly derivative(const std::string& name) const {
    auto idx = index_of(name);
    if (!idx) throw std::invalid_argument("derivative with respect to unknown variable " + name);
    MultiPoly r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
      if (e[*idx] == 0) continue;
      Exponents ne = e;
      --ne[*idx];
      r.add_term(std::move(ne), Rational(c * e[*idx]));
    }
    return r;
  }

  // Full evaluation. Every variable occurring in a term must be assigned.
  template <typename Map>
  double eval(const Map& values) const {
    std::vector<std::vector<double>> powers(vars_.size());
    std::vector<unsigned> maxdeg(vars_.size(), 0);
    for (const auto& [e, c] : terms_)
      for (std::size_t i = 0; i < e.size(); ++i) maxdeg[i] = std::max(maxdeg[i], e[i]);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (maxdeg[i] == 0) continue;
      auto it = values.find(vars_[i]);
      if (it == values.end()) throw std::invalid_argument("no value for variable " + vars_[i]);
      double x = static_cast<double>(it->second);
      powers[i].resize(maxdeg[i] + 1);
      powers[i][0] = 1.0;
      for (unsigned d = 1; d <= maxdeg[i]; ++d) powers[i][d] = powers[i][d - 1] * x;
    }
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
      double t = to_double(c);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) t *= powers[i][e[i]];
      sum += t;
    }
    return sum;
  }

  double eval(const std::map<std::string, double>& values) const {
    return eval<std::map<std::string, double>>(values);
  }

  Rational eval_exact(const std::map<std::string, Rational>& values) const {
    MultiPoly r = partial_eval(values);
    auto v = r.constant_value();
    if (!v) {
      auto used = r.used_variables();
      throw std::invalid_argument("no value for variable " + used.front());
    }
    return *v;
  }

  // Substitutes the assigned variables and removes them from the result.
  MultiPoly partial_eval(const std::map<std::string, Rational>& values) const {
    std::vector<std::string> keep;
    std::vector<std::size_t> keep_idx;
    std::vector<std::pair<std::size_t, const Rational*>> subst;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = values.find(vars_[i]);
      if (it == values.end()) {
        keep.push_back(vars_[i]);
        keep_idx.push_back(i);
      } else {
        subst.emplace_back(i, &it->second);
      }
    }
    if (subst.empty()) return *this;
    MultiPoly r;
    r.vars_ = keep;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (const auto& [i, v] : subst)
        if (e[i] > 0) t *= rational_pow(*v, e[i]);
      Exponents ne(keep.size());
      for (std::size_t j = 0; j < keep.size(); ++j) ne[j] = e[keep_idx[j]];
      r.add_term(std::move(ne), t);
    }
    return r;
  }

  MultiPoly partial_eval(const std::string& name, const Rational& value) const {
    return partial_eval(std::map<std::string, Rational>{{name, value}});
  }

  // Coefficients of successive powers of `name`; the result polynomials
  // no longer carry `name`.
  std::vector<MultiPoly> coefficients_in(const std::string& name) const {
    auto idx = index_of(name);
    std::vector<std::string> rest;
    for (const auto& v : vars_)
      if (v != name) rest.push_back(v);
    if (!idx) {
      MultiPoly p = *this;
      return {p};
    }
    std::vector<MultiPoly> out(degree(name) + 1);
    for (auto& p : out) p.vars_ = rest;
    for (const auto& [e, c] : terms_) {
      Exponents ne;
      ne.reserve(rest.size());
      for (std::size_t i = 0; i < e.size(); ++i)
        if (i != *idx) ne.push_back(e[i]);
      out[e[*idx]].add_term(std::move(ne), c);
    }
    return out;
  }

  // Composition p(..., name := q, ...).
  MultiPoly substitute(const std::string& name, const MultiPoly& q) const {
    if (!has_variable(name)) return *this;
    auto coeffs = coefficients_in(name);
    MultiPoly result;
    for (std::size_t d = coeffs.size(); d-- > 0;) result = result * q + coeffs[d];
    std::vector<std::string> vars;
    for (const auto& v : vars_)
      if (v != name) vars.push_back(v);
    return result.embed(union_vars(result.vars_, vars));
  }

  // Divides by name^1; every term must contain `name`.
  MultiPoly divide_by_variable(const std::string& name) const {
    auto idx = index_of(name);
    if (!idx) {
      if (is_zero()) return *this;
      throw std::invalid_argument("polynomial not divisible by " + name);
    }
    MultiPoly r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
      if (e[*idx] == 0) throw std::invalid_argument("polynomial not divisible by " + name);
      Exponents ne = e;
      --ne[*idx];
      r.terms_.emplace(std::move(ne), c);
    }
    return r;
  }

  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
    if (it == vars_.end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
  }

  static std::vector<std::string> union_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a == b) return a;
    std::vector<std::string> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

 private:
  void add_term(Exponents e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  std::vector<std::string> vars_;
  TermMap terms_;
};

inline MultiPoly var(const std::string& name) { return MultiPoly::variable(name); }

// Replaces k^(2m) by (k_1^2 + ... + k_n^2)^m; p must be even in k.
inline MultiPoly radial_lift(const MultiPoly& p, const std::string& k, const std::vector<std::string>& components) {
  if (!p.has_variable(k)) return p;
  MultiPoly r2;
  for (const auto& c : components) r2 += MultiPoly::variable(c).pow(2);
  auto coeffs = p.coefficients_in(k);
  MultiPoly out;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    if (coeffs[d].is_zero()) continue;
    if (d % 2) throw std::invalid_argument("radial lift needs a polynomial even in " + k);
    out += coeffs[d] * r2.pow(static_cast<unsigned>(d / 2));
  }
  return out;
}

// Constant-rational shorthand for building model polynomials.
inline MultiPoly rat(long num, long den = 1) { return MultiPoly(make_rational(num, den)); }

}  // namespace fdisp
