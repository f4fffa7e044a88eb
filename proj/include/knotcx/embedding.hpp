#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <cstddef>
#include <memory>
#include <unordered_map>
#include <vector>

#include "knotcx/cyclotomic.hpp"
#include "knotcx/interval.hpp"

namespace knotcx {

namespace detail {

// Rigorous double enclosures of cos(2 pi r / d), r in [0, d), built by
// repeated interval multiplication with an MPFR enclosure of exp(2 pi i / d).
// Width after r steps stays below ~ e^pi * r * ulp.
inline std::shared_ptr<const std::vector<DInterval>> cos_table(long d) {
  thread_local std::unordered_map<long, std::shared_ptr<const std::vector<DInterval>>> cache;
  thread_local std::size_t cached_entries = 0;
  if (auto it = cache.find(d); it != cache.end()) return it->second;

  auto table = std::make_shared<std::vector<DInterval>>(static_cast<std::size_t>(d));
  auto to_double = [](const MpInterval& v) { return DInterval{v.lower_double(), v.upper_double()}; };
  const DInterval c1 = to_double(MpInterval::unit_circle(1, d, 96));
  const DInterval s1 = to_double(MpInterval::unit_circle(1, d, 96, true));
  DInterval c = DInterval::point(1.0), s = DInterval::point(0.0);
  auto clamp = [](DInterval v) {
    v.lo = std::max(v.lo, -1.0);
    v.hi = std::min(v.hi, 1.0);
    return v;
  };
  (*table)[0] = c;
  for (long r = 1; 2 * r <= d; ++r) {
    const DInterval nc = c * c1 - s * s1;
    const DInterval ns = c * s1 + s * c1;
    c = clamp(nc);
    s = clamp(ns);
    (*table)[static_cast<std::size_t>(r)] = c;
    (*table)[static_cast<std::size_t>(d - r)] = c;
  }
  if (cached_entries > (1u << 22)) {
    cache.clear();
    cached_entries = 0;
  }
  cached_entries += static_cast<std::size_t>(d);
  cache.emplace(d, table);
  return table;
}

inline long exponent_index(long offset, std::size_t j, long k, long d) {
  const long long e = (static_cast<long long>(offset) + static_cast<long long>(j)) % d;
  return static_cast<long>((e * static_cast<long long>(k)) % d);
}

}  // namespace detail

/// The complex embedding omega -> exp(2 pi i k / d) of Q(zeta_d), gcd(k, d) = 1.
class Embedding {
 public:
  Embedding(const CyclotomicField* field, long k) : field_(field), k_(k % field->order()) {
    if (k_ < 0) k_ += field->order();
  }

  const CyclotomicField* field() const noexcept { return field_; }
  long order() const noexcept { return field_->order(); }
  long k() const noexcept { return k_; }

  /// Enclosure of Re(x) in double arithmetic; false if coefficients overflow.
  bool real_part(const CyclotomicElement& x, DInterval& out) const {
    out = DInterval::point(0.0);
    if (x.is_zero()) return true;
    DInterval den;
    if (!DInterval::from_integer(x.denominator(), den)) return false;
    const auto table = detail::cos_table(order());
    const auto& cs = x.coefficients();
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (cs[j] == 0) continue;
      DInterval c;
      if (!DInterval::from_integer(cs[j], c)) return false;
      out = out + c * (*table)[static_cast<std::size_t>(detail::exponent_index(x.offset(), j, k_, order()))];
    }
    if (x.denominator() != 1) out = out / den;
    return out.finite();
  }

  /// Enclosure of Re(x) itself at the given MPFR precision.
  MpInterval real_part(const CyclotomicElement& x, mpfr_prec_t prec) const {
    MpInterval out(prec);
    if (x.is_zero()) return out;
    const auto& cs = x.coefficients();
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (cs[j] == 0) continue;
      const long r = detail::exponent_index(x.offset(), j, k_, order());
      out = out + MpInterval::from_integer(cs[j], prec) * MpInterval::unit_circle(r, order(), prec);
    }
    return out / MpInterval::from_integer(x.denominator(), prec);
  }

  /// Sign of a real element, certified: exact zero is decided symbolically,
  /// otherwise enclosures are refined until they exclude zero.
  int sign(const CyclotomicElement& x) const {
    if (x.is_zero()) return 0;
    DInterval fast;
    if (real_part(x, fast) && !fast.contains_zero()) return fast.sign();
    std::size_t bits = 0;
    for (const auto& c : x.coefficients()) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    for (mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits) + 128; prec <= (1L << 22); prec *= 2) {
      const int s = real_part(x, prec).sign();
      if (s != 0) return s;
    }
    fail(ErrorKind::internal_inconsistency, "could not separate a nonzero cyclotomic value from zero");
  }

  /// Floating-point value, for heuristics only (pivot choice, float mode).
  std::complex<double> approximate(const CyclotomicElement& x) const {
    if (x.is_zero()) return {0.0, 0.0};
    const long d = order();
    const auto& cs = x.coefficients();
    // split c_j = m_j 2^e_j so huge coefficients neither overflow nor underflow
    std::vector<signed long> exps(cs.size());
    std::vector<double> mants(cs.size());
    signed long top = std::numeric_limits<signed long>::min();
    for (std::size_t j = 0; j < cs.size(); ++j) {
      mants[j] = mpz_get_d_2exp(&exps[j], cs[j].get_mpz_t());
      if (cs[j] != 0) top = std::max(top, exps[j]);
    }
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (cs[j] == 0) continue;
      const double angle = 2.0 * M_PI * static_cast<double>(detail::exponent_index(x.offset(), j, k_, d)) / static_cast<double>(d);
      acc += std::ldexp(mants[j], static_cast<int>(exps[j] - top)) * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    signed long den_exp = 0;
    const double den_mant = mpz_get_d_2exp(&den_exp, x.denominator().get_mpz_t());
    const int shift = static_cast<int>(top - den_exp);
    return {std::ldexp(acc.real() / den_mant, shift), std::ldexp(acc.imag() / den_mant, shift)};
  }

 private:
  const CyclotomicField* field_;
  long k_;
};

}  // namespace knotcx
