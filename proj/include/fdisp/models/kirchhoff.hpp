#pragma once

// Kirchhoff plate: rho h w^2 = D (kx^2 + ky^2)^2.

#include <stdexcept>

#include "fdisp/multipoly.hpp"

namespace fdisp {

inline MultiPoly kirchhoff_dispersion(const MultiPoly& rho, const MultiPoly& h, const MultiPoly& D) {
  return rho * h * var("w").pow(2) - D * (var("kx").pow(2) + var("ky").pow(2)).pow(2);
}

inline MultiPoly kirchhoff_dispersion(const Rational& rho, const Rational& h, const Rational& D) {
  if (sgn(rho) <= 0 || sgn(h) <= 0 || sgn(D) <= 0) throw std::invalid_argument("kirchhoff: parameters must be positive");
  return kirchhoff_dispersion(MultiPoly(rho), MultiPoly(h), MultiPoly(D));
}

// Same relation in the radial wavenumber k.
inline MultiPoly kirchhoff_radial(const Rational& rho, const Rational& h, const Rational& D) {
  if (sgn(rho) <= 0 || sgn(h) <= 0 || sgn(D) <= 0) throw std::invalid_argument("kirchhoff: parameters must be positive");
  return MultiPoly(Rational(rho * h)) * var("w").pow(2) - MultiPoly(D) * var("k").pow(4);
}

}  // namespace fdisp
