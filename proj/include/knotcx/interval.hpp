#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "knotcx/rational.hpp"

namespace knotcx {

/// Closed interval of doubles. Every operation rounds to nearest and then
/// widens by one ulp on each side, which encloses the exact result.
struct DInterval {
  double lo = 0.0;
  double hi = 0.0;

  static double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
  static double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

  static DInterval point(double x) { return {x, x}; }

  /// Enclosure of an arbitrary integer; fails (returns false) on overflow.
  static bool from_integer(const Integer& z, DInterval& out) {
    if (mpz_sizeinbase(z.get_mpz_t(), 2) > 1000) return false;
    if (mpz_sizeinbase(z.get_mpz_t(), 2) <= 53) {
      out = point(mpz_get_d(z.get_mpz_t()));
      return true;
    }
    const double v = mpz_get_d(z.get_mpz_t());  // truncates toward zero
    out = sgn(z) > 0 ? DInterval{v, up(v)} : DInterval{down(v), v};
    return true;
  }

  bool contains_zero() const { return lo <= 0.0 && hi >= 0.0; }
  int sign() const { return lo > 0.0 ? 1 : (hi < 0.0 ? -1 : 0); }
  bool finite() const { return std::isfinite(lo) && std::isfinite(hi); }

  friend DInterval operator+(const DInterval& a, const DInterval& b) { return {down(a.lo + b.lo), up(a.hi + b.hi)}; }
  friend DInterval operator-(const DInterval& a, const DInterval& b) { return {down(a.lo - b.hi), up(a.hi - b.lo)}; }
  friend DInterval operator-(const DInterval& a) { return {-a.hi, -a.lo}; }
  friend DInterval operator*(const DInterval& a, const DInterval& b) {
    const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {down(std::min({p1, p2, p3, p4})), up(std::max({p1, p2, p3, p4}))};
  }
  /// Caller guarantees b excludes zero.
  friend DInterval operator/(const DInterval& a, const DInterval& b) {
    const DInterval inv{down(1.0 / b.hi), up(1.0 / b.lo)};
    return a * inv;
  }
};

/// Closed interval with MPFR endpoints at a fixed precision, directed rounding.
class MpInterval {
 public:
  explicit MpInterval(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  MpInterval(const MpInterval& o) : MpInterval(o.precision()) {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  MpInterval& operator=(const MpInterval& o) {
    if (this != &o) {
      mpfr_set_prec(lo_, o.precision());
      mpfr_set_prec(hi_, o.precision());
      mpfr_set(lo_, o.lo_, MPFR_RNDD);
      mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
  }
  ~MpInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }

  static MpInterval from_integer(const Integer& z, mpfr_prec_t prec) {
    MpInterval out(prec);
    mpfr_set_z(out.lo_, z.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(out.hi_, z.get_mpz_t(), MPFR_RNDU);
    return out;
  }

  static MpInterval from_rational(const Rational& q, mpfr_prec_t prec) {
    MpInterval out(prec);
    mpfr_set_q(out.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(out.hi_, q.get_mpq_t(), MPFR_RNDU);
    return out;
  }

  /// Enclosure of cos(2 pi r / d) (or sin when want_sin).
  static MpInterval unit_circle(long r, long d, mpfr_prec_t prec, bool want_sin = false) {
    MpInterval out(prec);
    r %= d;
    if (r < 0) r += d;
    if (r == 0) {
      if (want_sin)
        mpfr_set_zero(out.lo_, 1), mpfr_set_zero(out.hi_, 1);
      else
        mpfr_set_ui(out.lo_, 1, MPFR_RNDD), mpfr_set_ui(out.hi_, 1, MPFR_RNDU);
      return out;
    }
    mpfr_t tlo, thi, w, tmp;
    mpfr_inits2(prec + 16, tlo, thi, w, tmp, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(tlo, MPFR_RNDD);
    mpfr_const_pi(thi, MPFR_RNDU);
    mpfr_mul_ui(tlo, tlo, static_cast<unsigned long>(2 * r), MPFR_RNDD);
    mpfr_mul_ui(thi, thi, static_cast<unsigned long>(2 * r), MPFR_RNDU);
    mpfr_div_ui(tlo, tlo, static_cast<unsigned long>(d), MPFR_RNDD);
    mpfr_div_ui(thi, thi, static_cast<unsigned long>(d), MPFR_RNDU);
    mpfr_sub(w, thi, tlo, MPFR_RNDU);
    // |f(t) - f(tlo)| <= |t - tlo| <= w for f = cos, sin
    if (want_sin) {
      mpfr_sin(tmp, tlo, MPFR_RNDD);
      mpfr_sub(out.lo_, tmp, w, MPFR_RNDD);
      mpfr_sin(tmp, tlo, MPFR_RNDU);
      mpfr_add(out.hi_, tmp, w, MPFR_RNDU);
    } else {
      mpfr_cos(tmp, tlo, MPFR_RNDD);
      mpfr_sub(out.lo_, tmp, w, MPFR_RNDD);
      mpfr_cos(tmp, tlo, MPFR_RNDU);
      mpfr_add(out.hi_, tmp, w, MPFR_RNDU);
    }
    if (mpfr_cmp_si(out.lo_, -1) < 0) mpfr_set_si(out.lo_, -1, MPFR_RNDD);
    if (mpfr_cmp_si(out.hi_, 1) > 0) mpfr_set_si(out.hi_, 1, MPFR_RNDU);
    mpfr_clears(tlo, thi, w, tmp, static_cast<mpfr_ptr>(nullptr));
    return out;
  }

  int sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
  }
  bool contains_zero() const { return sign() == 0; }

  /// Outward-rounded double endpoints.
  double lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

  double midpoint() const {
    return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
  }

  friend MpInterval operator+(const MpInterval& a, const MpInterval& b) {
    MpInterval out(std::max(a.precision(), b.precision()));
    mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return out;
  }
  friend MpInterval operator-(const MpInterval& a, const MpInterval& b) {
    MpInterval out(std::max(a.precision(), b.precision()));
    mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return out;
  }
  friend MpInterval operator*(const MpInterval& a, const MpInterval& b) {
    const mpfr_prec_t prec = std::max(a.precision(), b.precision());
    MpInterval out(prec);
    mpfr_t p;
    mpfr_init2(p, prec);
    const mpfr_srcptr xs[2] = {a.lo_, a.hi_};
    const mpfr_srcptr ys[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : xs)
      for (auto y : ys) {
        mpfr_mul(p, x, y, MPFR_RNDD);
        if (first || mpfr_cmp(p, out.lo_) < 0) mpfr_set(out.lo_, p, MPFR_RNDD);
        mpfr_mul(p, x, y, MPFR_RNDU);
        if (first || mpfr_cmp(p, out.hi_) > 0) mpfr_set(out.hi_, p, MPFR_RNDU);
        first = false;
      }
    mpfr_clear(p);
    return out;
  }
  /// Caller guarantees b excludes zero.
  friend MpInterval operator/(const MpInterval& a, const MpInterval& b) {
    MpInterval inv(b.precision());
    mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
    return a * inv;
  }

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace knotcx
