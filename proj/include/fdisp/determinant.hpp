#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "fdisp/matrix.hpp"

namespace fdisp {

// Strictly increasing 1-based index sequence (i_1 < ... < i_r) in 1..n.
class IndexSet {
 public:
  IndexSet(std::vector<std::size_t> indices, std::size_t n) : idx_(std::move(indices)), n_(n) {
    for (std::size_t k = 0; k < idx_.size(); ++k) {
      if (idx_[k] < 1 || idx_[k] > n_)
        throw std::invalid_argument("index " + std::to_string(idx_[k]) + " outside 1.." + std::to_string(n_));
      if (k > 0 && idx_[k] <= idx_[k - 1]) throw std::invalid_argument("index set must be strictly increasing");
    }
  }

  std::size_t size() const { return idx_.size(); }
  std::size_t ambient() const { return n_; }
  const std::vector<std::size_t>& indices() const { return idx_; }

  // |alpha| = i_1 + ... + i_r
  std::size_t weight() const { return std::accumulate(idx_.begin(), idx_.end(), std::size_t{0}); }

  IndexSet complement() const {
    std::vector<std::size_t> c;
    std::size_t k = 0;
    for (std::size_t i = 1; i <= n_; ++i) {
      if (k < idx_.size() && idx_[k] == i)
        ++k;
      else
        c.push_back(i);
    }
    return IndexSet(std::move(c), n_);
  }

  std::vector<std::size_t> zero_based() const {
    std::vector<std::size_t> z(idx_.size());
    for (std::size_t k = 0; k < idx_.size(); ++k) z[k] = idx_[k] - 1;
    return z;
  }

  // All r-subsets of 1..n in lexicographic order.
  static std::vector<IndexSet> all(std::size_t r, std::size_t n) {
    std::vector<IndexSet> out;
    if (r > n) return out;
    std::vector<std::size_t> cur(r);
    std::iota(cur.begin(), cur.end(), std::size_t{1});
    while (true) {
      out.emplace_back(cur, n);
      std::size_t k = r;
      while (k > 0 && cur[k - 1] == n - r + k) --k;
      if (k == 0) break;
      ++cur[k - 1];
      for (std::size_t j = k; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.n_ == b.n_ && a.idx_ == b.idx_; }

 private:
  std::vector<std::size_t> idx_;
  std::size_t n_;
};

namespace detail {

// Fraction-free elimination (Bareiss) over the integers after clearing
// denominators row by row.
inline Rational bareiss_det(RationalMatrix a) {
  const std::size_t n = a.rows();
  if (n == 0) return Rational(1);
  Rational scale(1);
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) m[i][j] = BigInt(a(i, j).get_num() * (l / a(i, j).get_den()));
    scale /= Rational(l);
  }
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return Rational(0);
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Rational d(m[n - 1][n - 1]);
  return sign > 0 ? Rational(d * scale) : Rational(-d * scale);
}

template <typename R>
std::optional<RationalMatrix> constant_entries(const Matrix<R>& m) {
  if constexpr (std::is_same_v<R, Rational>) {
    return m;
  } else {
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const MultiPoly* re;
        if constexpr (std::is_same_v<R, GaussPoly>) {
          if (!m(i, j).is_real()) return std::nullopt;
          re = &m(i, j).re;
        } else {
          re = &m(i, j);
        }
        auto v = re->constant_value();
        if (!v) return std::nullopt;
        out(i, j) = *v;
      }
    return out;
  }
}

// Cofactor expansion along successive rows with minors memoized by the
// set of remaining columns.
template <typename R>
R cofactor_det(const Matrix<R>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return R(1);
  if (n > 20) throw std::invalid_argument("cofactor determinant limited to n <= 20");
  std::unordered_map<std::uint32_t, R> memo;
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
  std::function<R(std::uint32_t)> minor = [&](std::uint32_t cols) -> R {
    int used = n - __builtin_popcount(cols);
    if (cols == 0) return R(1);
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    const std::size_t row = static_cast<std::size_t>(used);
    R acc(0);
    int pos = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(cols & (1u << c))) continue;
      const R& e = m(row, c);
      if (!ring_is_zero(e)) {
        R sub = minor(cols & ~(1u << c));
        if (!ring_is_zero(sub)) {
          if (pos % 2 == 0)
            acc += e * sub;
          else
            acc -= e * sub;
        }
      }
      ++pos;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return minor(full);
}

}  // namespace detail

template <typename R>
R det(const Matrix<R>& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (auto c = detail::constant_entries(m)) return R(detail::bareiss_det(*c));
  return detail::cofactor_det(m);
}

// det A[alpha|beta]; the empty minor is 1.
template <typename R>
R minor_det(const Matrix<R>& m, const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor needs equally many rows and columns");
  if (rows.ambient() != m.rows() || cols.ambient() != m.cols())
    throw std::invalid_argument("index set ambient dimension does not match the matrix");
  return det(m.submatrix(rows.zero_based(), cols.zero_based()));
}

// [adj A]_{ij} = (-1)^{i+j} det of A with row j and column i removed.
template <typename R>
Matrix<R> adjugate(const Matrix<R>& m) {
  if (!m.is_square() || m.rows() == 0) throw std::invalid_argument("adjugate needs a non-empty square matrix");
  const std::size_t n = m.rows();
  Matrix<R> adj(n, n);
  if (n == 1) {
    adj(0, 0) = R(1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> r, c;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) r.push_back(k);
        if (k != i) c.push_back(k);
      }
      R d = det(m.submatrix(r, c));
      adj(i, j) = ((i + j) % 2 == 0) ? d : R(-d);
    }
  return adj;
}

inline bool odd_weight(const IndexSet& a, const IndexSet& b) { return (a.weight() + b.weight()) % 2 == 1; }

// Laplace expansion by the given rows:
//   det A = sum over beta of (-1)^{|alpha|+|beta|} det A[alpha|beta] det A[alpha^c|beta^c].
template <typename R>
R laplace_expand(const Matrix<R>& m, const IndexSet& rows) {
  if (!m.is_square()) throw std::invalid_argument("Laplace expansion of a non-square matrix");
  const std::size_t n = m.rows();
  if (rows.ambient() != n) throw std::invalid_argument("row set does not match the matrix dimension");
  if (rows.size() == 0) throw std::invalid_argument("row set must be non-empty");
  IndexSet rc = rows.complement();
  R acc(0);
  for (const auto& beta : IndexSet::all(rows.size(), n)) {
    R a = minor_det(m, rows, beta);
    if (ring_is_zero(a)) continue;
    R term = a * minor_det(m, rc, beta.complement());
    if (odd_weight(rows, beta))
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

// Sum over complementary minor products of a and b with r rows taken from a.
template <typename R>
R mixed_minor_sum(const Matrix<R>& a, const Matrix<R>& b, std::size_t r) {
  const std::size_t n = a.rows();
  R acc(0);
  auto sets = IndexSet::all(r, n);
  for (const auto& alpha : sets) {
    IndexSet ac = alpha.complement();
    for (const auto& beta : sets) {
      R x = minor_det(a, alpha, beta);
      if (ring_is_zero(x)) continue;
      R term = x * minor_det(b, ac, beta.complement());
      if (odd_weight(alpha, beta))
        acc -= term;
      else
        acc += term;
    }
  }
  return acc;
}

// Markus expansion of det(A + B) into complementary minor products.
template <typename R>
R markus_expansion(const Matrix<R>& a, const Matrix<R>& b) {
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("Markus expansion needs two square matrices of equal dimension");
  const std::size_t n = a.rows();
  R acc = det(a) + det(b);
  for (std::size_t r = 1; r < n; ++r) acc += mixed_minor_sum(a, b, r);
  return acc;
}

template <typename R>
struct CoupledExpansion {
  R det_a;
  std::vector<R> coeffs;  // coeffs[r-1] = c_r(b), r = 1..n-1
  R det_b;
  R reassembled;  // det A + sum c_r b^r + b^n det B
};

// det(A + b B(b)) = det A + sum_{r=1}^{n-1} c_r(b) b^r + b^n det B(b), where
// c_r collects products of (n-r)-minors of A with complementary r-minors of B.
template <typename R>
CoupledExpansion<R> coupled_b_expansion(const Matrix<R>& a, const Matrix<R>& bmat, const std::string& var = "b") {
  if (!a.is_square() || a.rows() != bmat.rows() || a.cols() != bmat.cols())
    throw std::invalid_argument("coupled expansion needs two square matrices of equal dimension");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (ring_depends_on(a(i, j), var))
        throw std::invalid_argument("matrix A must not contain the expansion variable " + var);
  const std::size_t n = a.rows();
  CoupledExpansion<R> out;
  out.det_a = det(a);
  out.det_b = det(bmat);
  const R bvar(MultiPoly::variable(var));
  R total = out.det_a;
  R bpow = bvar;
  for (std::size_t r = 1; r < n; ++r) {
    out.coeffs.push_back(mixed_minor_sum(a, bmat, n - r));
    total += out.coeffs.back() * bpow;
    bpow *= bvar;
  }
  total += out.det_b * bpow;
  out.reassembled = total;
  return out;
}

// c_1 = tr(adj(A) B).
template <typename R>
R first_order_coefficient(const Matrix<R>& a, const Matrix<R>& b) {
  return (adjugate(a) * b).trace();
}

// c_1 for diagonal A: sum_i (prod_{j != i} A_jj) B_ii.
template <typename R>
R first_order_coefficient_diagonal(const Matrix<R>& a, const Matrix<R>& b) {
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && !ring_is_zero(a(i, j))) throw std::invalid_argument("matrix A is not diagonal");
  R acc(0);
  for (std::size_t i = 0; i < n; ++i) {
    R prod(1);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) prod *= a(j, j);
    acc += prod * b(i, i);
  }
  return acc;
}

}  // namespace fdisp
