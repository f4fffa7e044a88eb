#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "knotcx/error.hpp"

namespace knotcx {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }

inline Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

/// Canonical "p/q" text ("p" when the denominator is 1).
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Inverse of to_string; also accepts a bare integer and non-reduced input.
inline Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string_view s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-')
    fail(ErrorKind::parse_error, "not a rational: '" + std::string(text) + "'");
  Integer n(std::string(strip_plus(num)), 10), d(std::string(strip_plus(den)), 10);
  if (d == 0) fail(ErrorKind::parse_error, "zero denominator in '" + std::string(text) + "'");
  return make_rational(n, d);
}

/// Decimal approximation with 12 significant digits.
inline std::string to_decimal(const Rational& q, int digits = 12) {
  mpfr_t x;
  mpfr_init2(x, 256);
  mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, x);
  std::string out(buf);
  mpfr_free_str(buf);
  mpfr_clear(x);
  return out;
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace knotcx
