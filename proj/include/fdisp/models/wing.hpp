#pragma once

// Bending-torsion beam (airplane wing). Fields are ordered (theta, w):
// twist angle and bending deflection; a is the offset between the elastic
// axis and the centroid, b the coupling amplitude.

#include <stdexcept>

#include "fdisp/coupled.hpp"
#include "fdisp/matrix.hpp"

namespace fdisp {

struct WingParams {
  Rational m{1};
  Rational Im{1};
  Rational E{1};
  Rational I{1};
  Rational G{1};
  Rational J{1};
  Rational a{1};

  void validate() const {
    if (sgn(m) <= 0 || sgn(Im) <= 0) throw std::invalid_argument("wing: m and I_m must be positive");
    if (sgn(E * I) <= 0 || sgn(G * J) <= 0) throw std::invalid_argument("wing: EI and GJ must be positive");
  }
};

// Coefficients as polynomials, so the same formulas serve numeric and
// symbolic parameters.
struct WingCoeffs {
  MultiPoly m, Im, EI, GJ, a;

  static WingCoeffs from(const WingParams& p) {
    p.validate();
    return {MultiPoly(p.m), MultiPoly(p.Im), MultiPoly(Rational(p.E * p.I)), MultiPoly(Rational(p.G * p.J)),
            MultiPoly(p.a)};
  }
  static WingCoeffs symbolic() { return {var("m"), var("Im"), var("EI"), var("GJ"), var("a")}; }
};

inline MultiPoly wing_g1(const WingCoeffs& c) { return c.Im * var("w").pow(2) - c.GJ * var("k").pow(2); }
inline MultiPoly wing_g2(const WingCoeffs& c) { return c.m * var("w").pow(2) - c.EI * var("k").pow(4); }

// B_b in (k, w, b).
inline PolyMatrix wing_matrix(const WingCoeffs& c) {
  const MultiPoly k4 = var("k").pow(4);
  const MultiPoly b = var("b");
  const MultiPoly off = b * c.a * c.EI * k4;
  return PolyMatrix{{wing_g1(c) - b.pow(2) * c.a.pow(2) * c.EI * k4, off}, {off, wing_g2(c)}};
}

inline CoupledSystem wing_system(const WingCoeffs& c) {
  const MultiPoly k4 = var("k").pow(4);
  const MultiPoly b = var("b");
  const MultiPoly off = b * c.a * c.EI * k4;
  PolyMatrix coupling{{-(b.pow(2) * c.a.pow(2) * c.EI * k4), off}, {off, MultiPoly()}};
  return CoupledSystem(PolyMatrix{{wing_g1(c)}}, PolyMatrix{{wing_g2(c)}}, coupling, "b");
}

// The coupling remainder of the determinant: -b^2 a^2 EI k^4 m w^2.
inline MultiPoly wing_remainder(const WingCoeffs& c) {
  return -(var("b").pow(2) * c.a.pow(2) * c.EI * var("k").pow(4) * c.m * var("w").pow(2));
}

inline MultiPoly wing_dispersion(const WingCoeffs& c) { return wing_g1(c) * wing_g2(c) + wing_remainder(c); }

}  // namespace fdisp
