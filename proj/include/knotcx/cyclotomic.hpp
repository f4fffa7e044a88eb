#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "knotcx/rational.hpp"

namespace knotcx {

namespace detail {

inline long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

inline int moebius(long n) {
  int mu = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

// Phi_d = prod_{e | d} (x^e - 1)^{mu(d/e)}; multiply the numerator factors
// first, then divide out the denominator factors (exact division by x^e - 1).
inline std::vector<std::int64_t> cyclotomic_polynomial(long d) {
  std::vector<long> up, down;
  for (long e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    const int mu = moebius(d / e);
    if (mu == 1) up.push_back(e);
    if (mu == -1) down.push_back(e);
  }
  std::vector<std::int64_t> poly{1};
  for (long e : up) {  // poly *= (x^e - 1)
    std::vector<std::int64_t> next(poly.size() + static_cast<std::size_t>(e), 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + static_cast<std::size_t>(e)] += poly[i];
      next[i] -= poly[i];
    }
    poly = std::move(next);
  }
  for (long e : down) {  // poly /= (x^e - 1): q_i = q_{i-e} - p_i from the bottom
    const auto ue = static_cast<std::size_t>(e);
    std::vector<std::int64_t> q(poly.size() - ue, 0);
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = (i >= ue ? q[i - ue] : 0) - poly[i];
    poly = std::move(q);
  }
  return poly;
}

}  // namespace detail

/// Q(zeta_d) presented as Q[x]/Phi_d(x). Instances are interned by order and
/// live for the whole program, so elements hold a plain pointer.
class CyclotomicField {
 public:
  explicit CyclotomicField(long order) : order_(order), degree_(detail::euler_phi(order)) {}

  long order() const noexcept { return order_; }
  long degree() const noexcept { return degree_; }

  /// Coefficients of Phi_d, lowest degree first (monic, length degree + 1).
  const std::vector<std::int64_t>& modulus() const {
    std::call_once(modulus_once_, [this] {
      modulus_ = detail::cyclotomic_polynomial(order_);
      for (std::size_t t = 0; t < modulus_.size(); ++t)
        if (modulus_[t] != 0) modulus_support_.push_back(t);
    });
    return modulus_;
  }

  const std::vector<std::size_t>& modulus_support() const {
    modulus();
    return modulus_support_;
  }

 private:
  long order_;
  long degree_;
  mutable std::once_flag modulus_once_;
  mutable std::vector<std::int64_t> modulus_;
  mutable std::vector<std::size_t> modulus_support_;
};

inline const CyclotomicField* cyclotomic_field(long order) {
  require(order >= 1, ErrorKind::invalid_argument, "cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<long, std::unique_ptr<CyclotomicField>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = registry[order];
  if (!slot) slot = std::make_unique<CyclotomicField>(order);
  return slot.get();
}

/// Exact element of Q(omega), omega a primitive d-th root of unity.
///
/// Stored as omega^offset * (c_0 + c_1 omega + ... + c_{s-1} omega^{s-1}) / den
/// with c_0, c_{s-1} nonzero, den > 0 and the content reduced. The span s is
/// kept <= deg Phi_d: whenever an operation would exceed it, the element is
/// reduced to the canonical residue of degree < deg Phi_d. A nonzero
/// polynomial of degree < deg Phi_d cannot vanish at omega, so an element is
/// zero iff it has no coefficients.
class CyclotomicElement {
 public:
  CyclotomicElement() = default;

  explicit CyclotomicElement(const CyclotomicField* field) : field_(field) {}

  CyclotomicElement(const CyclotomicField* field, const Rational& value) : field_(field) {
    if (value != 0) {
      coeffs_.push_back(value.get_num());
      den_ = value.get_den();
    }
  }

  /// sum_j coeffs[j] omega^(offset + j) / den, normalized.
  CyclotomicElement(const CyclotomicField* field, long offset, std::vector<Integer> coeffs, Integer den = 1)
      : field_(field), offset_(offset), coeffs_(std::move(coeffs)), den_(std::move(den)) {
    require(den_ != 0, ErrorKind::invalid_argument, "zero denominator");
    if (den_ < 0) {
      den_ = -den_;
      for (auto& c : coeffs_) c = -c;
    }
    normalize();
  }

  static CyclotomicElement omega_power(const CyclotomicField* field, long exponent) {
    return CyclotomicElement(field, exponent, {Integer(1)});
  }

  const CyclotomicField* field() const noexcept { return field_; }
  long offset() const noexcept { return offset_; }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  const Integer& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Canonical residue mod Phi_d: coefficients of 1, omega, ..., omega^{phi-1}
  /// (rationals), always of length deg Phi_d.
  std::vector<Rational> canonical() const {
    std::vector<Integer> dense = reduced_dense();
    std::vector<Rational> out(static_cast<std::size_t>(field_->degree()));
    for (std::size_t i = 0; i < out.size() && i < dense.size(); ++i) out[i] = make_rational(dense[i], den_);
    return out;
  }

  CyclotomicElement conj() const {
    CyclotomicElement out(*this);
    if (is_zero()) return out;
    std::reverse(out.coeffs_.begin(), out.coeffs_.end());
    out.offset_ = wrap(-(offset_ + static_cast<long>(coeffs_.size()) - 1));
    return out;
  }

  CyclotomicElement operator-() const {
    CyclotomicElement out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b) {
    return combine(a, b, false);
  }
  friend CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b) {
    return combine(a, b, true);
  }

  friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
    const CyclotomicField* field = a.field_ ? a.field_ : b.field_;
    if (a.is_zero() || b.is_zero()) return CyclotomicElement(field);
    check_same_field(a, b);
    std::vector<Integer> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) mpz_addmul(prod[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    return CyclotomicElement(field, a.offset_ + b.offset_, std::move(prod), a.den_ * b.den_);
  }

  friend CyclotomicElement operator*(const CyclotomicElement& a, const Rational& q) {
    if (a.is_zero() || q == 0) return CyclotomicElement(a.field_);
    std::vector<Integer> scaled(a.coeffs_);
    for (auto& c : scaled) c *= q.get_num();
    return CyclotomicElement(a.field_, a.offset_, std::move(scaled), a.den_ * q.get_den());
  }

  CyclotomicElement& operator+=(const CyclotomicElement& b) { return *this = *this + b; }
  CyclotomicElement& operator-=(const CyclotomicElement& b) { return *this = *this - b; }
  CyclotomicElement& operator*=(const CyclotomicElement& b) { return *this = *this * b; }

  /// Multiplicative inverse via the extended Euclidean algorithm against Phi_d.
  CyclotomicElement inverse() const {
    require(!is_zero(), ErrorKind::invalid_argument, "inverse of zero cyclotomic element");
    using Poly = std::vector<Rational>;
    auto trim = [](Poly& p) {
      while (!p.empty() && p.back() == 0) p.pop_back();
    };
    auto deg = [](const Poly& p) { return static_cast<long>(p.size()) - 1; };

    const auto& phi = field_->modulus();
    Poly r0(phi.begin(), phi.end());
    Poly r1(coeffs_.begin(), coeffs_.end());
    Poly t0, t1{Rational(1)};
    trim(r1);
    while (deg(r1) > 0) {
      // monic r1 keeps the coefficient growth of the remainder sequence down
      const Rational lead = r1.back();
      for (auto& c : r1) c /= lead;
      for (auto& c : t1) c /= lead;
      Poly q(static_cast<std::size_t>(std::max(0L, deg(r0) - deg(r1) + 1)));
      while (deg(r0) >= deg(r1) && !r0.empty()) {
        const auto shift = static_cast<std::size_t>(deg(r0) - deg(r1));
        const Rational c = r0.back();
        q[shift] = c;
        for (std::size_t i = 0; i < r1.size(); ++i) r0[i + shift] -= c * r1[i];
        trim(r0);
      }
      Poly t2(std::max(t0.size(), q.size() + t1.size() - 1));
      for (std::size_t i = 0; i < t0.size(); ++i) t2[i] = t0[i];
      for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < t1.size(); ++j) t2[i + j] -= q[i] * t1[j];
      trim(t2);
      t0 = std::move(t1);
      t1 = std::move(t2);
      std::swap(r0, r1);  // r0 <- divisor, r1 <- remainder
    }
    require(!r1.empty(), ErrorKind::internal_inconsistency, "cyclotomic inverse: element shares a factor with Phi_d");
    const Rational c = r1[0];
    // t1 * f == c (mod Phi), so f^{-1} = t1 / c; numerator/denominator split:
    Integer common = 1;
    for (const auto& v : t1) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> num(t1.size());
    for (std::size_t i = 0; i < t1.size(); ++i) num[i] = t1[i].get_num() * (common / t1[i].get_den());
    // f^{-1} = num / (common * c); multiply by den_ for our own denominator
    Rational scale = Rational(den_) / (Rational(common) * c);
    scale.canonicalize();
    for (auto& v : num) v *= scale.get_num();
    return CyclotomicElement(field_, -offset_, std::move(num), scale.get_den());
  }

  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) { return (a - b).is_zero(); }
  friend bool operator!=(const CyclotomicElement& a, const CyclotomicElement& b) { return !(a == b); }

  std::string to_string() const {
    const auto c = canonical();
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c[i].get_str() + ")";
      if (i > 0) out += "*w^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  static void check_same_field(const CyclotomicElement& a, const CyclotomicElement& b) {
    require(a.field_ == b.field_, ErrorKind::invalid_argument, "cyclotomic elements from different fields");
  }

  long wrap(long e) const {
    const long d = field_->order();
    e %= d;
    return e < 0 ? e + d : e;
  }

  static CyclotomicElement combine(const CyclotomicElement& a, const CyclotomicElement& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    check_same_field(a, b);
    const long d = a.field_->order();
    // place b relative to a using the shortest representative of the shift
    long shift = (b.offset_ - a.offset_) % d;
    if (shift < 0) shift += d;
    if (shift > d / 2) shift -= d;
    const long lo = std::min(0L, shift);
    const long hi = std::max(static_cast<long>(a.coeffs_.size()), shift + static_cast<long>(b.coeffs_.size()));
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.den_.get_mpz_t(), b.den_.get_mpz_t());
    const Integer fa = l / a.den_, fb = l / b.den_;
    std::vector<Integer> out(static_cast<std::size_t>(hi - lo));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[static_cast<std::size_t>(static_cast<long>(i) - lo)] = a.coeffs_[i] * fa;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      auto& slot = out[static_cast<std::size_t>(shift + static_cast<long>(j) - lo)];
      if (subtract)
        mpz_submul(slot.get_mpz_t(), b.coeffs_[j].get_mpz_t(), fb.get_mpz_t());
      else
        mpz_addmul(slot.get_mpz_t(), b.coeffs_[j].get_mpz_t(), fb.get_mpz_t());
    }
    return CyclotomicElement(a.field_, a.offset_ + lo, std::move(out), l);
  }

  // Fold exponents mod d, then divide by the monic Phi_d; result has
  // length deg Phi_d and represents the element times den_.
  std::vector<Integer> reduced_dense() const {
    const long d = field_->order();
    const auto phi = static_cast<std::size_t>(field_->degree());
    std::vector<Integer> folded(static_cast<std::size_t>(d));
    for (std::size_t j = 0; j < coeffs_.size(); ++j) folded[static_cast<std::size_t>(wrap(offset_ + static_cast<long>(j)))] += coeffs_[j];
    const auto& mod = field_->modulus();
    const auto& support = field_->modulus_support();
    for (std::size_t i = folded.size(); i-- > phi;) {
      if (folded[i] == 0) continue;
      const Integer c = folded[i];
      for (std::size_t t : support) mpz_submul_ui_signed(folded[i - phi + t], c, mod[t]);
    }
    folded.resize(phi);
    return folded;
  }

  static void mpz_submul_ui_signed(Integer& target, const Integer& c, std::int64_t m) {
    if (m >= 0)
      mpz_submul_ui(target.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(m));
    else
      mpz_addmul_ui(target.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-m));
  }

  void trim() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      offset_ = 0;
      return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == 0) --last;
    if (first > 0 || last < coeffs_.size()) {
      coeffs_ = std::vector<Integer>(std::make_move_iterator(coeffs_.begin() + static_cast<long>(first)),
                                     std::make_move_iterator(coeffs_.begin() + static_cast<long>(last)));
    }
    offset_ = wrap(offset_ + static_cast<long>(first));
  }

  void normalize() {
    if (!field_) {
      require(coeffs_.empty(), ErrorKind::invalid_argument, "cyclotomic element without a field");
      return;
    }
    offset_ = wrap(offset_);
    trim();
    if (static_cast<long>(coeffs_.size()) > field_->degree()) {
      coeffs_ = reduced_dense();
      offset_ = 0;
      trim();
    }
    if (coeffs_.empty()) {
      den_ = 1;
      return;
    }
    Integer g = den_;
    for (const auto& c : coeffs_) {
      if (g == 1) break;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (g != 1) {
      for (auto& c : coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
  }

  const CyclotomicField* field_ = nullptr;
  long offset_ = 0;
  std::vector<Integer> coeffs_;
  Integer den_ = 1;
};

}  // namespace knotcx
