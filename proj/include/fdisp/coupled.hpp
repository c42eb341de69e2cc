#pragma once

#include <stdexcept>
#include <string>

#include "fdisp/determinant.hpp"

namespace fdisp {

// System matrix M(b) = diag(Lambda1, Lambda2) + coupling(b), where the
// coupling term vanishes at b = 0 and therefore equals b * B(b).
template <typename R>
struct CoupledSystemT {
  Matrix<R> lambda1;
  Matrix<R> lambda2;
  Matrix<R> coupling;
  std::string var = "b";

  CoupledSystemT() = default;
  CoupledSystemT(Matrix<R> l1, Matrix<R> l2, Matrix<R> c, std::string v = "b")
      : lambda1(std::move(l1)), lambda2(std::move(l2)), coupling(std::move(c)), var(std::move(v)) {
    const std::size_t n = lambda1.rows() + lambda2.rows();
    if (!lambda1.is_square() || !lambda2.is_square() || coupling.rows() != n || coupling.cols() != n)
      throw std::invalid_argument("coupled system blocks have inconsistent dimensions");
  }

  std::size_t size() const { return coupling.rows(); }

  Matrix<R> lambda() const { return block_diagonal(lambda1, lambda2); }
  Matrix<R> system() const { return lambda() + coupling; }

  // B(b) = coupling / b.
  Matrix<R> coupling_matrix() const {
    return coupling.map([&](const R& e) -> R {
      if constexpr (std::is_same_v<R, GaussPoly>)
        return GaussPoly(divide(e.re), divide(e.im));
      else
        return divide(e);
    });
  }

 private:
  MultiPoly divide(const MultiPoly& p) const {
    if (!p.partial_eval(var, Rational(0)).is_zero())
      throw std::invalid_argument("coupling does not vanish at " + var + " = 0");
    return p.divide_by_variable(var);
  }
};

using CoupledSystem = CoupledSystemT<MultiPoly>;
using GaussCoupledSystem = CoupledSystemT<GaussPoly>;

template <typename R>
struct Factorization {
  R g1;
  R g2;
  R remainder;  // det M(b) - G1 G2
};

// G_j = det Lambda_j and the coupling remainder det(Lambda + b B(b)) - G1 G2.
template <typename R>
Factorization<R> factorize_coupled(const CoupledSystemT<R>& sys) {
  Matrix<R> at_zero = partial_eval(sys.coupling, {{sys.var, Rational(0)}});
  if (!at_zero.is_zero()) throw std::invalid_argument("coupling does not vanish at " + sys.var + " = 0");
  Factorization<R> f;
  f.g1 = det(sys.lambda1);
  f.g2 = det(sys.lambda2);
  f.remainder = det(sys.system()) - f.g1 * f.g2;
  return f;
}

}  // namespace fdisp
