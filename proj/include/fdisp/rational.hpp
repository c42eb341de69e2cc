#pragma once

// Exact rational scalars. Thin helpers over GMP's mpq_class, which keeps
// values canonical (lowest terms, positive denominator) after every
// arithmetic operation.

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fdisp {

using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Exact conversion: every finite double is a dyadic rational.
inline Rational from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("cannot rationalize a non-finite value");
  return Rational(x);
}

// Rounded to nearest; mpq_get_d truncates, which turns 1/5 into 0.19999999999999998.
inline double to_double(const Rational& q) {
  if (sgn(q) == 0) return 0.0;
  mpz_class n = abs(q.get_num());
  const mpz_class& d = q.get_den();
  // Quotient with 63 or 64 bits, remainder folded into a sticky bit.
  const long s = 63 - (static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) -
                       static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2)));
  mpz_class num = n, den = d;
  if (s >= 0)
    num <<= static_cast<mp_bitcnt_t>(s);
  else
    den <<= static_cast<mp_bitcnt_t>(-s);
  mpz_class quo, rem;
  mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  unsigned long long bits = 0;
  mpz_export(&bits, nullptr, -1, sizeof bits, 0, 0, quo.get_mpz_t());
  if (rem != 0) bits |= 1ULL;
  const double r = std::ldexp(static_cast<double>(bits), static_cast<int>(-s));
  return sgn(q) < 0 ? -r : r;
}

inline std::string to_string(const Rational& q) { return q.get_str(10); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Parses `p` or `p/q` with optional leading sign. Decimal points and
// exponents are rejected; those are not exact rationals in this format.
inline std::optional<Rational> parse_rational(std::string_view text) {
  std::size_t i = 0;
  std::string num;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '-') num.push_back('-');
    ++i;
  }
  std::size_t start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) num.push_back(text[i++]);
  if (i == start) return std::nullopt;
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    den.clear();
    std::size_t dstart = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) den.push_back(text[i++]);
    if (i == dstart) return std::nullopt;
  }
  if (i != text.size()) return std::nullopt;
  BigInt d(den);
  if (d == 0) return std::nullopt;
  return make_rational(BigInt(num), d);
}

// Like parse_rational, but also accepts decimal notation such as `0.1`,
// `-2.5e-3` or `1E2`, converted exactly (0.1 is 1/10, not the nearest double).
inline std::optional<Rational> parse_number(std::string_view text) {
  if (auto q = parse_rational(text)) return q;
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
  std::string digits;
  long frac = 0;
  bool any = false;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits.push_back(text[i++]);
    any = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits.push_back(text[i++]);
      ++frac;
      any = true;
    }
  }
  if (!any) return std::nullopt;
  long exp10 = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) eneg = text[i++] == '-';
    std::size_t start = i;
    long e = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      e = e * 10 + (text[i++] - '0');
      if (e > 4000) return std::nullopt;
    }
    if (i == start) return std::nullopt;
    exp10 = eneg ? -e : e;
  }
  if (i != text.size()) return std::nullopt;
  BigInt num(digits);
  if (neg) num = -num;
  long shift = exp10 - frac;
  BigInt ten = 1;
  mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  return shift < 0 ? make_rational(num, ten) : make_rational(BigInt(num * ten), BigInt(1));
}

// Returns sqrt(q) when q is the square of a rational.
inline std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  BigInt n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return make_rational(n, d);
}

inline Rational rational_pow(const Rational& base, unsigned e) {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace fdisp
