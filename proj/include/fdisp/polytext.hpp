#pragma once

// Text form of polynomials and polynomial matrices.
//
//   polynomial:  1*w^2 - 1*c^2*k^2      (coefficient always written, ^1 omitted)
//   matrix:      [w^2 - k^2, b*k; b*k, w^2 - 4*k^2]
//
// Terms are printed by descending exponent of the lexicographically last
// variable first, so w (frequency) leads. The parser accepts the printed
// form and ordinary arithmetic: + - * ^n, parentheses and division by
// constants.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fdisp/gausspoly.hpp"
#include "fdisp/matrix.hpp"
#include "fdisp/multipoly.hpp"

namespace fdisp {

class TextError : public std::runtime_error {
 public:
  TextError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

inline std::string format_monomial(const std::vector<std::string>& vars, const MultiPoly::Exponents& e) {
  std::string s;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (e[i] == 0) continue;
    s += '*';
    s += vars[i];
    if (e[i] > 1) s += '^' + std::to_string(e[i]);
  }
  return s;
}

inline std::string format_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<const std::pair<const MultiPoly::Exponents, Rational>*> terms;
  for (const auto& t : p.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(), [](auto* a, auto* b) {
    return std::lexicographical_compare(b->first.rbegin(), b->first.rend(), a->first.rbegin(), a->first.rend());
  });
  std::string out;
  bool first = true;
  for (auto* t : terms) {
    const Rational& c = t->second;
    if (first) {
      if (sgn(c) < 0) out += '-';
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    out += to_string(Rational(abs(c)));
    out += format_monomial(p.variables(), t->first);
    first = false;
  }
  return out;
}

inline std::string format_poly(const GaussPoly& p) {
  if (p.is_real()) return format_poly(p.re);
  if (p.re.is_zero()) return "i*(" + format_poly(p.im) + ")";
  return "(" + format_poly(p.re) + ") + i*(" + format_poly(p.im) + ")";
}

template <typename R>
std::string format_matrix(const Matrix<R>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += format_poly(m(i, j));
    }
  }
  return out + "]";
}

namespace detail {

// Recursive-descent expression parser over a ring R. In Gaussian mode
// the identifier `i` denotes the imaginary unit.
template <typename R>
class ExprParser {
 public:
  ExprParser(std::string_view text, std::size_t pos, bool gaussian) : s_(text), pos_(pos), gaussian_(gaussian) {}

  R parse_expr() {
    skip();
    R acc = parse_term();
    while (true) {
      skip();
      if (peek('+')) {
        ++pos_;
        acc = acc + parse_term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - parse_term();
      } else {
        return acc;
      }
    }
  }

  std::size_t pos() const { return pos_; }

 private:
  R parse_term() {
    R acc = parse_unary();
    while (true) {
      skip();
      if (peek('*')) {
        ++pos_;
        acc = acc * parse_unary();
      } else if (peek('/')) {
        std::size_t at = ++pos_;
        R d = parse_unary();
        acc = divide(acc, d, at);
      } else {
        return acc;
      }
    }
  }

  R parse_unary() {
    skip();
    if (peek('-')) {
      ++pos_;
      return -parse_unary();
    }
    if (peek('+')) {
      ++pos_;
      return parse_unary();
    }
    return parse_power();
  }

  R parse_power() {
    R base = parse_primary();
    skip();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw TextError("expected a non-negative integer exponent", start);
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 1000) throw TextError("exponent too large", start);
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  R parse_primary() {
    skip();
    if (pos_ >= s_.size()) throw TextError("unexpected end of expression", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      R v = parse_expr();
      skip();
      if (!peek(')')) throw TextError("expected ')'", pos_);
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E'))
        throw TextError("numeric literal is not an exact rational", start);
      return R(Rational(BigInt(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if constexpr (std::is_same_v<R, GaussPoly>) {
        if (gaussian_ && name == "i") return GaussPoly::imag_unit();
      }
      return R(MultiPoly::variable(name));
    }
    throw TextError(std::string("unexpected character '") + c + "'", pos_);
  }

  static const MultiPoly& real_of(const R& r) {
    if constexpr (std::is_same_v<R, GaussPoly>)
      return r.re;
    else
      return r;
  }

  R divide(const R& num, const R& den, std::size_t at) {
    if constexpr (std::is_same_v<R, GaussPoly>) {
      if (!den.is_real()) throw TextError("division by a non-real value", at);
    }
    auto v = real_of(den).constant_value();
    if (!v) throw TextError("division by a non-constant polynomial", at);
    if (sgn(*v) == 0) throw TextError("division by zero", at);
    return num.scaled(Rational(1 / *v));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  std::string_view s_;
  std::size_t pos_;
  bool gaussian_;
};

template <typename R>
R parse_whole(std::string_view text, bool gaussian) {
  ExprParser<R> p(text, 0, gaussian);
  R v = p.parse_expr();
  std::size_t pos = p.pos();
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw TextError("trailing input", pos);
  return v;
}

// Splits on a separator at parenthesis depth zero.
inline std::vector<std::pair<std::string_view, std::size_t>> split_top(std::string_view s, char sep, std::size_t base) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      out.emplace_back(s.substr(start, i - start), base + start);
      start = i + 1;
    }
  }
  out.emplace_back(s.substr(start), base + start);
  return out;
}

template <typename R>
Matrix<R> parse_matrix_impl(std::string_view text, bool gaussian) {
  std::size_t b = text.find_first_not_of(" \t\r\n");
  std::size_t e = text.find_last_not_of(" \t\r\n");
  if (b == std::string_view::npos || text[b] != '[' || text[e] != ']')
    throw TextError("matrix must be enclosed in [ ]", b == std::string_view::npos ? 0 : b);
  std::string_view body = text.substr(b + 1, e - b - 1);
  auto rows = split_top(body, ';', b + 1);
  std::vector<std::vector<R>> cells;
  for (const auto& [row, off] : rows) {
    std::vector<R> r;
    for (const auto& [cell, coff] : split_top(row, ',', off)) {
      try {
        r.push_back(parse_whole<R>(cell, gaussian));
      } catch (const TextError& err) {
        throw TextError(std::string("bad matrix entry: ") + err.what(), coff);
      }
    }
    cells.push_back(std::move(r));
  }
  std::size_t n = cells.size();
  for (const auto& r : cells)
    if (r.size() != cells.front().size()) throw TextError("rows have different lengths", b);
  Matrix<R> m(n, cells.front().size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = cells[i][j];
  return m;
}

}  // namespace detail

inline MultiPoly parse_poly(std::string_view text) { return detail::parse_whole<MultiPoly>(text, false); }

// Gaussian form: `i` is the imaginary unit.
inline GaussPoly parse_gauss_poly(std::string_view text) { return detail::parse_whole<GaussPoly>(text, true); }

inline PolyMatrix parse_matrix(std::string_view text) { return detail::parse_matrix_impl<MultiPoly>(text, false); }

inline GaussMatrix parse_gauss_matrix(std::string_view text) {
  return detail::parse_matrix_impl<GaussPoly>(text, true);
}

}  // namespace fdisp
