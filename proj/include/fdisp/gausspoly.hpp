#pragma once

#include <string>

#include "fdisp/multipoly.hpp"

namespace fdisp {

// Polynomial with Gaussian-rational coefficients, held as re + i*im.
// Symbol matrices of Lagrangians with odd-order cross terms carry
// imaginary entries; their determinants come out real.
struct GaussPoly {
  MultiPoly re;
  MultiPoly im;

  GaussPoly() = default;
  GaussPoly(long c) : re(c) {}                    // NOLINT(google-explicit-constructor)
  GaussPoly(const Rational& c) : re(c) {}         // NOLINT(google-explicit-constructor)
  GaussPoly(const MultiPoly& r) : re(r) {}        // NOLINT(google-explicit-constructor)
  GaussPoly(MultiPoly r, MultiPoly i) : re(std::move(r)), im(std::move(i)) {}

  static GaussPoly imag_unit() { return {MultiPoly(), MultiPoly(1)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  GaussPoly conj() const { return {re, -im}; }

  GaussPoly operator-() const { return {-re, -im}; }
  GaussPoly& operator+=(const GaussPoly& o) { return *this = *this + o; }
  GaussPoly& operator-=(const GaussPoly& o) { return *this = *this - o; }
  GaussPoly& operator*=(const GaussPoly& o) { return *this = *this * o; }

  friend GaussPoly operator+(const GaussPoly& a, const GaussPoly& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussPoly operator-(const GaussPoly& a, const GaussPoly& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussPoly operator*(const GaussPoly& a, const GaussPoly& b) {
    if (a.is_real() && b.is_real()) return GaussPoly(a.re * b.re);
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussPoly& a, const GaussPoly& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GaussPoly& a, const GaussPoly& b) { return !(a == b); }

  GaussPoly scaled(const Rational& s) const { return {re.scaled(s), im.scaled(s)}; }

  GaussPoly pow(unsigned n) const {
    GaussPoly r(1);
    for (unsigned i = 0; i < n; ++i) r *= *this;
    return r;
  }

  GaussPoly partial_eval(const std::map<std::string, Rational>& values) const {
    return {re.partial_eval(values), im.partial_eval(values)};
  }

  GaussPoly substitute(const std::string& name, const MultiPoly& q) const {
    return {re.substitute(name, q), im.substitute(name, q)};
  }

  bool depends_on(const std::string& name) const { return re.depends_on(name) || im.depends_on(name); }
};

// Ring helpers shared by the matrix code.
inline bool ring_is_zero(const MultiPoly& p) { return p.is_zero(); }
inline bool ring_is_zero(const GaussPoly& p) { return p.is_zero(); }
inline bool ring_is_zero(const Rational& q) { return sgn(q) == 0; }

inline bool ring_depends_on(const MultiPoly& p, const std::string& v) { return p.depends_on(v); }
inline bool ring_depends_on(const GaussPoly& p, const std::string& v) { return p.depends_on(v); }

}  // namespace fdisp
