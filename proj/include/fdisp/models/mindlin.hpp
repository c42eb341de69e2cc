#pragma once

// Mindlin-Reissner plate with the shear coupling scaled by b. Fields are
// ordered (psi_y, psi_x, w): rotations and transverse deflection.

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "fdisp/determinant.hpp"
#include "fdisp/matrix.hpp"

namespace fdisp {

struct MindlinParams {
  Rational rho{1};
  Rational h{1};
  Rational D{1};
  Rational nu{1, 2};
  Rational kappa{1};
  Rational G{1};
  Rational b{1, 10};
  std::optional<Rational> E;  // Young's modulus, when the parameters come from a material

  // Reference data set: unit density, thickness, rigidity, shear factor and
  // modulus with Poisson ratio 1/2.
  static MindlinParams reference(const Rational& b) {
    MindlinParams p;
    p.b = b;
    return p;
  }

  // G = E / (2(1+nu)), D = E h^3 / (12 (1 - nu^2)).
  static MindlinParams from_material(const Rational& E, const Rational& nu, const Rational& rho, const Rational& h,
                                     const Rational& kappa, const Rational& b) {
    MindlinParams p;
    p.E = E;
    p.nu = nu;
    p.rho = rho;
    p.h = h;
    p.kappa = kappa;
    p.b = b;
    p.G = E / (2 * (1 + nu));
    p.D = E * h * h * h / (12 * (1 - nu * nu));
    p.validate();
    return p;
  }

  // nu = 1/2 is admitted: the reference data set sits on that bound.
  void validate() const {
    if (sgn(rho) <= 0 || sgn(h) <= 0 || sgn(D) <= 0 || sgn(kappa) <= 0 || sgn(G) <= 0)
      throw std::invalid_argument("mindlin: rho, h, D, kappa, G must be positive");
    if (nu <= -1 || nu > Rational(1, 2)) throw std::invalid_argument("mindlin: Poisson ratio must lie in (-1, 1/2]");
    if (E && sgn(*E) <= 0) throw std::invalid_argument("mindlin: E must be positive");
  }

  std::map<std::string, Rational> values() const {
    return {{"rho", rho}, {"h", h}, {"D", D}, {"nu", nu}, {"kappa", kappa}, {"G", G}, {"b", b}};
  }
};

struct MindlinCoeffs {
  MultiPoly rho, h, D, nu, kappa, G;

  static MindlinCoeffs from(const MindlinParams& p) {
    p.validate();
    return {MultiPoly(p.rho), MultiPoly(p.h), MultiPoly(p.D), MultiPoly(p.nu), MultiPoly(p.kappa), MultiPoly(p.G)};
  }
  static MindlinCoeffs symbolic() { return {var("rho"), var("h"), var("D"), var("nu"), var("kappa"), var("G")}; }

  MultiPoly rot_inertia() const { return rho * h.pow(3) * rat(1, 12); }  // rho h^3 / 12
  MultiPoly shear() const { return kappa * h * G; }                       // kappa h G
};

// 3x3 Hermitian symbol matrix B_b in (kx, ky, w, b).
inline GaussMatrix mindlin_full_matrix(const MindlinCoeffs& c) {
  const MultiPoly kx = var("kx"), ky = var("ky"), w = var("w"), b = var("b");
  const MultiPoly diag0 = c.rot_inertia() * w.pow(2) - c.shear() * b.pow(2);
  const MultiPoly half_1mnu = (MultiPoly(1) - c.nu) * rat(1, 2);
  const MultiPoly a11 = diag0 - c.D * (half_1mnu * kx.pow(2) + ky.pow(2));
  const MultiPoly a22 = diag0 - c.D * (half_1mnu * ky.pow(2) + kx.pow(2));
  const MultiPoly a12 = -(c.D * (MultiPoly(1) + c.nu) * rat(1, 2) * kx * ky);
  const MultiPoly s = b * c.shear();
  const GaussPoly iu = GaussPoly::imag_unit();
  GaussMatrix m(3, 3);
  m(0, 0) = a11;
  m(0, 1) = a12;
  m(1, 0) = a12;
  m(1, 1) = a22;
  m(0, 2) = -(iu * GaussPoly(s * ky));
  m(1, 2) = -(iu * GaussPoly(s * kx));
  m(2, 0) = iu * GaussPoly(s * ky);
  m(2, 1) = iu * GaussPoly(s * kx);
  m(2, 2) = c.h * (c.rho * w.pow(2) - c.kappa * c.G * (kx.pow(2) + ky.pow(2)));
  return m;
}

inline MultiPoly mindlin_g(const MindlinCoeffs& c) {
  return c.rot_inertia() * var("w").pow(2) - c.D * var("k").pow(2) - var("b").pow(2) * c.shear();
}

inline MultiPoly mindlin_f(const MindlinCoeffs& c) {
  return c.rot_inertia() * var("w").pow(2) - c.D * (MultiPoly(1) - c.nu) * rat(1, 2) * var("k").pow(2) -
         var("b").pow(2) * c.shear();
}

inline MultiPoly mindlin_A(const MindlinCoeffs& c) {
  const MultiPoly w2 = var("w").pow(2), k2 = var("k").pow(2);
  return (c.rot_inertia() * w2 - c.D * k2) * (c.rho * w2 - c.kappa * c.G * k2) -
         var("b").pow(2) * c.kappa * c.G * c.rho * c.h * w2;
}

// Block-diagonal form C_b in the radial variable k = |(kx, ky)|, basis
// (tau_1, tau_2, tau_3) = (deflection, longitudinal, transverse).
inline GaussMatrix mindlin_Cb(const MindlinCoeffs& c) {
  const MultiPoly k = var("k"), w = var("w"), b = var("b");
  const GaussPoly iu = GaussPoly::imag_unit();
  const MultiPoly s = b * c.shear() * k;
  GaussMatrix m(3, 3);
  m(0, 0) = c.h * (c.rho * w.pow(2) - c.kappa * c.G * k.pow(2));
  m(0, 1) = iu * GaussPoly(s);
  m(1, 0) = -(iu * GaussPoly(s));
  m(1, 1) = mindlin_g(c);
  m(2, 2) = mindlin_f(c);
  return m;
}

struct MindlinFactors {
  MultiPoly f;
  MultiPoly A;
};

inline MindlinFactors mindlin_factorized(const MindlinCoeffs& c) { return {mindlin_f(c), mindlin_A(c)}; }

// The 2x2 deflection/longitudinal block of C_b and its coupled-system split.
inline GaussMatrix mindlin_reduced_block(const MindlinCoeffs& c) {
  GaussMatrix cb = mindlin_Cb(c);
  return cb.submatrix({0, 1}, {0, 1});
}

using RealMatrix3 = std::array<std::array<double, 3>, 3>;
using ComplexMatrix = std::vector<std::vector<std::complex<double>>>;

struct MindlinBlockDiag {
  double k = 0;
  RealMatrix3 T{};  // columns tau_1, tau_2, tau_3
  GaussMatrix C;    // C_b in (k, w, b)
};

// B_b = T_k C_b T_k^T with T_k orthogonal; k = 0 leaves T_k undefined.
inline MindlinBlockDiag mindlin_block_diag(const MindlinCoeffs& c, double kx, double ky) {
  double k = std::hypot(kx, ky);
  if (!(k > 0)) throw std::invalid_argument("block diagonalization needs a nonzero wavevector");
  MindlinBlockDiag out;
  out.k = k;
  out.T = {{{0.0, ky / k, -kx / k}, {0.0, kx / k, ky / k}, {1.0, 0.0, 0.0}}};
  out.C = mindlin_Cb(c);
  return out;
}

inline std::array<double, 3> tau(const MindlinBlockDiag& bd, int j) {
  return {bd.T[0][j], bd.T[1][j], bd.T[2][j]};
}

template <typename R>
ComplexMatrix eval_complex(const Matrix<R>& m, const std::map<std::string, double>& at) {
  ComplexMatrix out(m.rows(), std::vector<std::complex<double>>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_same_v<R, GaussPoly>)
        out[i][j] = {m(i, j).re.eval(at), m(i, j).im.eval(at)};
      else
        out[i][j] = {m(i, j).eval(at), 0.0};
    }
  return out;
}

struct WaveSpeeds {
  double cL, cT, cP;
};

// Longitudinal, transverse and plate speeds of an isotropic material.
inline WaveSpeeds wave_speeds(double E, double nu, double rho) {
  if (!(rho > 0) || !(E > 0)) throw std::invalid_argument("wave speeds need positive E and rho");
  if (!(nu > -1.0) || !(nu < 0.5)) throw std::invalid_argument("wave speeds need -1 < nu < 1/2 (c_L diverges at 1/2)");
  WaveSpeeds s;
  s.cL = std::sqrt(E * (1 - nu) / (rho * (1 + nu) * (1 - 2 * nu)));
  s.cT = std::sqrt(E / (2 * rho * (1 + nu)));
  s.cP = std::sqrt(E / (rho * (1 - nu * nu)));
  return s;
}

inline WaveSpeeds wave_speeds(const MindlinParams& p) {
  if (!p.E) throw std::invalid_argument("wave speeds need Young's modulus E");
  return wave_speeds(to_double(*p.E), to_double(p.nu), to_double(p.rho));
}

// c_T^2 = G / rho and c_P^2 = 12 D / (rho h^3); these agree with the
// material formulas when the parameters come from from_material.
inline double shear_speed_sq(const MindlinParams& p) { return to_double(p.G) / to_double(p.rho); }
inline double plate_speed_sq(const MindlinParams& p) {
  return 12.0 * to_double(p.D) / (to_double(p.rho) * std::pow(to_double(p.h), 3));
}

// (h^2 k^2 / 12)(1 - c^2/(kappa c_T^2))(c_P^2/c^2 - 1) - b^2, which equals
// A(k, c k) / (kappa G rho h c^2 k^2).
inline double velocity_residual_A(const MindlinParams& p, double c, double k) {
  if (c == 0.0) throw std::invalid_argument("velocity relation undefined at c = 0");
  const double h = to_double(p.h), kap = to_double(p.kappa), b = to_double(p.b);
  const double cT2 = shear_speed_sq(p), cP2 = plate_speed_sq(p);
  return h * h * k * k / 12.0 * (1.0 - c * c / (kap * cT2)) * (cP2 / (c * c) - 1.0) - b * b;
}

// Phase speed of the f-branch: c^2 = 6 D (1-nu)/(rho h^3) + 12 kappa G b^2/(rho h^2 k^2).
inline double f_branch_speed(const MindlinParams& p, double k) {
  if (!(k > 0)) throw std::invalid_argument("f-branch speed needs k > 0");
  const double rho = to_double(p.rho), h = to_double(p.h), D = to_double(p.D), nu = to_double(p.nu);
  const double kap = to_double(p.kappa), G = to_double(p.G), b = to_double(p.b);
  return std::sqrt(6.0 * D * (1.0 - nu) / (rho * h * h * h) + 12.0 * kap * G * b * b / (rho * h * h * k * k));
}

}  // namespace fdisp
