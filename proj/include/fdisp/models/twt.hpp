#pragma once

// Traveling wave tube: a transmission line (charge Q) coupled to an
// electron beam (charge q). Fields are ordered (Q, q).
//
// Parameters: C, L, C_c the line capacitance, inductance and serial
// capacitance per length; beta = (sigma_B / 4 pi) w_rp^2 the beam constant;
// wrp2 = w_rp^2 the reduced plasma frequency squared; v the beam velocity;
// b the coupling amplitude. Derived: 1/w^2 = C L, w_c^2 / w^2 = C / C_c and
// the principal parameter gamma = b^2 beta / C.

#include <map>
#include <stdexcept>
#include <string>

#include "fdisp/matrix.hpp"

namespace fdisp {

struct TwtParams {
  Rational C{1};
  Rational L{1};
  Rational Cc{1};
  Rational beta{1};
  Rational wrp2{1};
  Rational v{1};
  Rational b{1};

  void validate() const {
    if (sgn(C) <= 0 || sgn(L) <= 0 || sgn(Cc) <= 0) throw std::invalid_argument("twt: C, L, C_c must be positive");
    if (sgn(beta) <= 0) throw std::invalid_argument("twt: beam constant beta must be positive");
    if (sgn(wrp2) <= 0) throw std::invalid_argument("twt: plasma frequency squared must be positive");
    if (sgn(b) <= 0) throw std::invalid_argument("twt: coupling amplitude b must be positive");
  }

  Rational gamma() const { return Rational(b * b * beta / C); }
  Rational inv_w2() const { return Rational(C * L); }          // 1/w^2
  Rational wc2_over_w2() const { return Rational(C / Cc); }    // w_c^2 / w^2
};

// M_kw(b) with gamma held at its value for the configured b, so that b
// enters only through the explicit factors.
inline PolyMatrix twt_matrix(const TwtParams& p) {
  p.validate();
  const MultiPoly k = var("k"), w = var("w"), b = var("b");
  const MultiPoly k2 = k.pow(2);
  MultiPoly m11 = k2 + (MultiPoly(p.wc2_over_w2()) - MultiPoly(p.inv_w2()) * w.pow(2));
  MultiPoly m22 = b.pow(2) * (k2 + (MultiPoly(p.wrp2) - (w - MultiPoly(p.v) * k).pow(2)).scaled(Rational(1 / p.gamma())));
  return PolyMatrix{{m11, b * k2}, {b * k2, m22}};
}

// Phase-velocity form M_uw(b), u = w/k, multiplied through by u^2 so that
// every entry is a polynomial in (u, w, b).
inline PolyMatrix twt_u_matrix(const TwtParams& p) {
  p.validate();
  const MultiPoly u = var("u"), w = var("w"), b = var("b");
  const MultiPoly w2 = w.pow(2), u2 = u.pow(2);
  MultiPoly m11 = w2 + u2 * (MultiPoly(p.wc2_over_w2()) - MultiPoly(p.inv_w2()) * w2);
  MultiPoly m22 =
      b.pow(2) * (w2 + (u2 * MultiPoly(p.wrp2) - w2 * (u - MultiPoly(p.v)).pow(2)).scaled(Rational(1 / p.gamma())));
  return PolyMatrix{{m11, b * w2}, {b * w2, m22}};
}

// The matrix before introducing gamma: the transformed Euler-Lagrange
// equations multiplied by C, in (k, w, b).
inline PolyMatrix twt_physical_matrix(const TwtParams& p) {
  p.validate();
  const MultiPoly k = var("k"), w = var("w"), b = var("b");
  const MultiPoly k2 = k.pow(2);
  MultiPoly m11 = k2 - MultiPoly(p.inv_w2()) * w.pow(2) + MultiPoly(p.wc2_over_w2());
  MultiPoly m22 = b.pow(2) * k2 + (MultiPoly(p.wrp2) - (w - MultiPoly(p.v) * k).pow(2)).scaled(Rational(p.C / p.beta));
  return PolyMatrix{{m11, b * k2}, {b * k2, m22}};
}

inline PolyMatrix twt_scaling_matrix() { return PolyMatrix{{MultiPoly(1), MultiPoly()}, {MultiPoly(), var("b")}}; }

// Values of the parameters used by the TWT Lagrangian file.
inline std::map<std::string, Rational> twt_lagrangian_values(const TwtParams& p) {
  return {{"L", p.L},          {"C_inv", Rational(1 / p.C)}, {"Cc_inv", Rational(1 / p.Cc)},
          {"beta_inv", Rational(1 / p.beta)}, {"wrp2", p.wrp2}, {"v", p.v},
          {"b", p.b}};
}

}  // namespace fdisp
