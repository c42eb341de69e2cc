#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fdisp/determinant.hpp"
#include "fdisp/matrix.hpp"
#include "fdisp/multipoly.hpp"

namespace fdisp {

// Derivative orders (mu_0, mu_1, ..., mu_n): mu_0 counts time derivatives,
// mu_j derivatives along spatial axis j.
using MultiIndex = std::vector<unsigned>;

inline unsigned order_of(const MultiIndex& mu) {
  unsigned s = 0;
  for (unsigned m : mu) s += m;
  return s;
}

// A field together with the derivative applied to it.
struct Slot {
  std::size_t field = 0;
  MultiIndex mi;

  friend bool operator<(const Slot& a, const Slot& b) { return std::tie(a.field, a.mi) < std::tie(b.field, b.mi); }
  friend bool operator==(const Slot& a, const Slot& b) { return a.field == b.field && a.mi == b.mi; }
};

// Frequency variable name and wavenumber names for a spatial dimension.
inline const std::string kOmega = "w";

inline std::vector<std::string> wavenumber_names(unsigned dim) {
  if (dim == 1) return {"k"};
  static const char* names[] = {"kx", "ky", "kz"};
  if (dim > 3) throw std::invalid_argument("spatial dimension above 3 is not supported");
  return std::vector<std::string>(names, names + dim);
}

inline bool is_reserved_name(const std::string& s) {
  return s == "w" || s == "k" || s == "kx" || s == "ky" || s == "kz";
}

// L = 1/2 sum a_{X;Y} v_X v_Y over slots X, Y with a symmetric table whose
// entries are polynomials in the named parameters.
struct QuadraticLagrangian {
  unsigned dim = 0;
  std::vector<std::string> fields;
  std::map<std::string, Rational> params;
  std::optional<std::string> coupling;
  std::map<std::pair<Slot, Slot>, MultiPoly> coeff;

  MultiPoly a(const Slot& x, const Slot& y) const {
    auto it = coeff.find({x, y});
    return it == coeff.end() ? MultiPoly() : it->second;
  }

  bool is_symmetric() const {
    for (const auto& [k, v] : coeff)
      if (a(k.second, k.first) != v) return false;
    return true;
  }

  friend bool operator==(const QuadraticLagrangian& l, const QuadraticLagrangian& r) {
    if (l.dim != r.dim || l.fields != r.fields || l.params != r.params || l.coupling != r.coupling) return false;
    if (l.coeff.size() != r.coeff.size()) return false;
    for (const auto& [k, v] : l.coeff) {
      auto it = r.coeff.find(k);
      if (it == r.coeff.end() || it->second != v) return false;
    }
    return true;
  }
  friend bool operator!=(const QuadraticLagrangian& l, const QuadraticLagrangian& r) { return !(l == r); }
};

// a_{X;Y} = (raw_{X;Y} + raw_{Y;X}) / 2
inline QuadraticLagrangian symmetrize(const QuadraticLagrangian& raw) {
  QuadraticLagrangian out = raw;
  out.coeff.clear();
  const Rational half = make_rational(1, 2);
  for (const auto& [k, v] : raw.coeff) {
    MultiPoly s = (v + raw.a(k.second, k.first)).scaled(half);
    if (!s.is_zero()) {
      out.coeff[k] = s;
      out.coeff[{k.second, k.first}] = s;
    }
  }
  return out;
}

// Plane-wave symbol of d^mu under u ~ exp(-i(w t - k.x)):
//   d_t -> -i w,  d_{x_j} -> i k_j.
// Returned as (power of i mod 4, real sign, monomial).
namespace detail {

inline GaussPoly unit_power(int p) {
  switch (((p % 4) + 4) % 4) {
    case 0:
      return GaussPoly(1);
    case 1:
      return GaussPoly::imag_unit();
    case 2:
      return GaussPoly(-1);
    default:
      return -GaussPoly::imag_unit();
  }
}

inline MultiPoly symbol_monomial(const MultiIndex& mu, const std::vector<std::string>& knames) {
  MultiPoly m(1);
  if (mu[0] > 0) m *= MultiPoly::variable(kOmega).pow(mu[0]);
  for (std::size_t j = 1; j < mu.size(); ++j)
    if (mu[j] > 0) m *= MultiPoly::variable(knames[j - 1]).pow(mu[j]);
  return m;
}

}  // namespace detail

// conj(s^eta) * s^gamma for the plane-wave symbols s.
inline GaussPoly symbol_pair(const MultiIndex& eta, const MultiIndex& gamma, unsigned dim) {
  auto knames = dim > 0 ? wavenumber_names(dim) : std::vector<std::string>{};
  // s^mu = (-1)^{mu_0} i^{|mu|} w^{mu_0} k^{mu'}; its conjugate has (-i)^{|mu|}.
  int sign_exp = static_cast<int>(eta[0] + gamma[0] + order_of(eta));
  int ipow = static_cast<int>(order_of(eta) + order_of(gamma));
  GaussPoly unit = detail::unit_power(ipow);
  if (sign_exp % 2) unit = -unit;
  return unit * GaussPoly(detail::symbol_monomial(eta, knames) * detail::symbol_monomial(gamma, knames));
}

// Entry (i, j) = sum a_{(i,eta);(j,gamma)} conj(s^eta) s^gamma. Hermitian for
// a symmetric real table. Parameters stay symbolic.
inline GaussMatrix symbol_matrix(const QuadraticLagrangian& lag) {
  const std::size_t n = lag.fields.size();
  GaussMatrix m(n, n);
  for (const auto& [key, a] : lag.coeff) {
    const Slot& x = key.first;
    const Slot& y = key.second;
    if (x.mi.size() != lag.dim + 1 || y.mi.size() != lag.dim + 1)
      throw std::invalid_argument("multi-index length does not match the spatial dimension");
    m(x.field, y.field) += GaussPoly(a) * symbol_pair(x.mi, y.mi, lag.dim);
  }
  return m;
}

inline MultiPoly dispersion_poly(const QuadraticLagrangian& lag) {
  GaussPoly d = det(symbol_matrix(lag));
  if (!d.is_real()) throw std::runtime_error("symbol determinant is not real; the coefficient table is not symmetric");
  return d.re;
}

// Substitutes the given parameter values (default: the declared ones).
inline GaussMatrix specialize(const GaussMatrix& m, const std::map<std::string, Rational>& values) {
  return partial_eval(m, values);
}

inline QuadraticLagrangian scaled(const QuadraticLagrangian& lag, const Rational& s) {
  QuadraticLagrangian out = lag;
  out.coeff.clear();
  if (sgn(s) == 0) return out;
  for (const auto& [k, v] : lag.coeff) out.coeff[k] = v.scaled(s);
  return out;
}

// Finds signs e_i = +-1 and a global sign s with A = s * factor * E B E,
// E = diag(e). Returns the sign vector (global sign first) if one exists.
template <typename R>
std::optional<std::vector<int>> equal_up_to_signature(const Matrix<R>& a, const Matrix<R>& b, const R& factor = R(1)) {
  const std::size_t n = a.rows();
  if (a.rows() != b.rows() || a.cols() != b.cols() || !a.is_square() || n > 16) return std::nullopt;
  Matrix<R> fb = factor * b;
  for (int global : {1, -1})
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      if (mask & 1u) continue;  // first sign fixed; the global sign covers the rest
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < n && ok; ++j) {
          int s = global * (((mask >> i) & 1u) ? -1 : 1) * (((mask >> j) & 1u) ? -1 : 1);
          R expect = s > 0 ? fb(i, j) : R(-fb(i, j));
          ok = a(i, j) == expect;
        }
      if (ok) {
        std::vector<int> signs{global};
        for (std::size_t i = 0; i < n; ++i) signs.push_back(((mask >> i) & 1u) ? -1 : 1);
        return signs;
      }
    }
  return std::nullopt;
}

}  // namespace fdisp
