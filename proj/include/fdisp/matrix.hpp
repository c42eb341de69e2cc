#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdisp/gausspoly.hpp"
#include "fdisp/multipoly.hpp"

namespace fdisp {

// Dense row-major matrix over a commutative ring R (Rational, MultiPoly
// or GaussPoly).
template <typename R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, R(0)) {}
  Matrix(std::initializer_list<std::initializer_list<R>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  static Matrix diagonal(const std::vector<R>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  R& at(std::size_t i, std::size_t j) {
    check(i, j);
    return (*this)(i, j);
  }
  const R& at(std::size_t i, std::size_t j) const {
    check(i, j);
    return (*this)(i, j);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // Rows and columns given as 0-based index lists.
  Matrix submatrix(const std::vector<std::size_t>& r, const std::vector<std::size_t>& c) const {
    Matrix s(r.size(), c.size());
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) s(i, j) = at(r[i], c[j]);
    return s;
  }

  template <typename F>
  auto map(F f) const {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    Matrix<S> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!ring_is_zero(x)) return false;
    return true;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    same_shape(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    same_shape(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        R s(0);
        for (std::size_t k = 0; k < a.cols_; ++k)
          if (!ring_is_zero(a(i, k)) && !ring_is_zero(b(k, j))) s += a(i, k) * b(k, j);
        r(i, j) = s;
      }
    return r;
  }
  friend Matrix operator*(const R& s, const Matrix& m) {
    Matrix r = m;
    for (auto& x : r.data_) x = s * x;
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  R trace() const {
    if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
    R s(0);
    for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
  }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
      throw std::out_of_range("matrix index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  }
  static void same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> data_;
};

using PolyMatrix = Matrix<MultiPoly>;
using GaussMatrix = Matrix<GaussPoly>;
using RationalMatrix = Matrix<Rational>;

inline GaussMatrix to_gauss(const PolyMatrix& m) {
  return m.map([](const MultiPoly& p) { return GaussPoly(p); });
}

inline PolyMatrix to_poly(const RationalMatrix& m) {
  return m.map([](const Rational& q) { return MultiPoly(q); });
}

// Real part of a Gaussian matrix; throws if any entry has an imaginary part.
inline PolyMatrix real_part(const GaussMatrix& m) {
  return m.map([](const GaussPoly& p) {
    if (!p.is_real()) throw std::invalid_argument("matrix entry has a nonzero imaginary part");
    return p.re;
  });
}

template <typename R>
Matrix<R> partial_eval(const Matrix<R>& m, const std::map<std::string, Rational>& values) {
  return m.map([&](const R& p) { return p.partial_eval(values); });
}

template <typename R>
Matrix<R> block_diagonal(const Matrix<R>& a, const Matrix<R>& b) {
  Matrix<R> m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

}  // namespace fdisp
