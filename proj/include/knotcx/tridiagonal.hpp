#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "knotcx/cyclotomic.hpp"
#include "knotcx/embedding.hpp"
#include "knotcx/inertia.hpp"
#include "knotcx/interval.hpp"
#include "knotcx/seifert.hpp"

namespace knotcx {

/// Integer polynomial in t, coefficient i of t^i.
using IntPoly = std::vector<Integer>;

namespace detail {

inline void poly_trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  poly_trim(out);
  return out;
}

inline IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
  IntPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  poly_trim(out);
  return out;
}

/// Sign pattern of leading minors P_0 = 1, P_1, ..., P_L of an irreducible
/// Hermitian tridiagonal block -> inertia. Zero minors never occur twice in
/// a row; each one is skipped when counting sign changes.
inline InertiaTriple inertia_from_minor_signs(const std::vector<int>& signs) {
  const std::size_t len = signs.size() - 1;
  InertiaTriple out;
  out.zero = signs[len] == 0 ? 1 : 0;
  int last = signs[0];
  for (std::size_t j = 1; j <= len; ++j) {
    if (signs[j] == 0) continue;
    if (signs[j] != last) ++out.negative;
    last = signs[j];
  }
  out.positive = len - out.zero - out.negative;
  return out;
}

}  // namespace detail

/// Inertia machinery for Seifert matrices with A_ij = 0 whenever |i - j| > 1
/// (the two-bridge chains). The Hermitian form H = (1 - conj w) (A^T - w A)
/// is then tridiagonal, its leading minors are (1 - conj w)^j Q_j(w) with
/// Q_j integer polynomials computed once, and the inertia at any root of
/// unity follows from the signs of those minors.
class TridiagonalProfile {
 public:
  static bool applies(const SeifertMatrix& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j)
        if ((i > j + 1 || j > i + 1) && a(i, j) != 0) return false;
    return true;
  }

  explicit TridiagonalProfile(const SeifertMatrix& a) : m_(a.size()) {
    require(applies(a), ErrorKind::invalid_argument, "Seifert matrix is not tridiagonal");
    alpha_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) alpha_[i] = a(i, i);
    for (std::size_t i = 0; i + 1 < m_; ++i) {
      x_.push_back(a(i, i + 1));
      y_.push_back(a(i + 1, i));
    }
    generic_ = build_chain(false);
    at_minus_one_ = build_chain(true);
    // det(A^T - t A) by the continuant over the whole chain
    IntPoly prev{Integer(1)}, prev2;
    for (std::size_t i = 0; i < m_; ++i) {
      IntPoly next = detail::poly_mul(diagonal_poly(i), prev);
      if (i > 0) next = detail::poly_sub(next, detail::poly_mul(offdiagonal_product(i - 1), prev2));
      prev2 = std::move(prev);
      prev = std::move(next);
    }
    alexander_ = std::move(prev);
  }

  std::size_t size() const noexcept { return m_; }

  /// det(A^T - t A) as an integer polynomial.
  const IntPoly& alexander_polynomial() const noexcept { return alexander_; }

  /// Inertia of H at exp(2 pi i k / d), gcd(k, d) = 1, d >= 2.
  InertiaTriple inertia(long k, long d) const {
    const Chain& chain = d == 2 ? at_minus_one_ : generic_;
    const CyclotomicField* field = cyclotomic_field(d);
    InertiaTriple total;
    for (std::size_t b = 0; b < chain.blocks.size(); ++b) {
      auto fast = block_inertia_fast(chain, b, k, d, field);
      total += fast ? *fast : block_inertia_exact(chain, b, k, field);
    }
    return total;
  }

  /// Same, but always through exact minor signs (no double recurrence).
  InertiaTriple inertia_exact(long k, long d) const {
    const Chain& chain = d == 2 ? at_minus_one_ : generic_;
    const CyclotomicField* field = cyclotomic_field(d);
    InertiaTriple total;
    for (std::size_t b = 0; b < chain.blocks.size(); ++b) total += block_inertia_exact(chain, b, k, field);
    return total;
  }

 private:
  struct Chain {
    std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [start, start + len)
    std::vector<std::vector<IntPoly>> minors;                 // Q_0 .. Q_len per block
  };

  // (A^T - t A)_ii = alpha (1 - t)
  IntPoly diagonal_poly(std::size_t i) const {
    if (alpha_[i] == 0) return {};
    return {Integer(static_cast<long>(alpha_[i])), Integer(-static_cast<long>(alpha_[i]))};
  }

  // (y - t x)(x - t y) for the pair (i, i + 1)
  IntPoly offdiagonal_product(std::size_t i) const {
    const IntPoly u{Integer(static_cast<long>(y_[i])), Integer(-static_cast<long>(x_[i]))};
    const IntPoly v{Integer(static_cast<long>(x_[i])), Integer(-static_cast<long>(y_[i]))};
    IntPoly u2 = u, v2 = v;
    detail::poly_trim(u2);
    detail::poly_trim(v2);
    return detail::poly_mul(u2, v2);
  }

  // |H_{i,i+1}|^2 vanishes identically when x = y = 0, and at w = -1 also when x = -y
  bool splits(std::size_t i, bool minus_one) const {
    return (x_[i] == 0 && y_[i] == 0) || (minus_one && x_[i] == -y_[i]);
  }

  Chain build_chain(bool minus_one) const {
    Chain chain;
    std::size_t start = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i + 1 == m_ || splits(i, minus_one)) {
        chain.blocks.emplace_back(start, i + 1 - start);
        start = i + 1;
      }
    }
    for (const auto& [s, len] : chain.blocks) {
      std::vector<IntPoly> q{IntPoly{Integer(1)}};
      for (std::size_t j = 1; j <= len; ++j) {
        IntPoly next = detail::poly_mul(diagonal_poly(s + j - 1), q[j - 1]);
        if (j >= 2) next = detail::poly_sub(next, detail::poly_mul(offdiagonal_product(s + j - 2), q[j - 2]));
        q.push_back(std::move(next));
      }
      chain.minors.push_back(std::move(q));
    }
    return chain;
  }

  static bool minor_vanishes(const IntPoly& q, const CyclotomicField* field) {
    return CyclotomicElement(field, 0, q).is_zero();
  }

  std::optional<InertiaTriple> block_inertia_fast(const Chain& chain, std::size_t b, long k, long d,
                                                  const CyclotomicField* field) const {
    constexpr double exact_limit = 67108864.0;  // 2^26: products of entries stay exact
    const auto [start, len] = chain.blocks[b];
    const DInterval c = (*detail::cos_table(d))[static_cast<std::size_t>(k)];
    const DInterval s = DInterval::point(2.0) - DInterval::point(2.0) * c;
    std::vector<int> signs{1};
    bool have_d = false, prev_zero = false;
    DInterval dprev;
    for (std::size_t j = 1; j <= len; ++j) {
      const std::size_t i = start + j - 1;
      if (prev_zero) {
        signs.push_back(-signs[j - 2]);
        prev_zero = false;
        have_d = false;
        continue;
      }
      const double alpha = static_cast<double>(alpha_[i]);
      if (std::abs(alpha) > exact_limit) return std::nullopt;
      DInterval dj = DInterval::point(alpha) * s;
      if (have_d) {
        const double x = static_cast<double>(x_[i - 1]), y = static_cast<double>(y_[i - 1]);
        if (std::abs(x) > exact_limit || std::abs(y) > exact_limit) return std::nullopt;
        const DInterval norm = s * (DInterval::point(x * x + y * y) - DInterval::point(2.0 * x * y) * c);
        dj = dj - norm / dprev;
      }
      if (!dj.contains_zero()) {
        signs.push_back(signs[j - 1] * dj.sign());
        dprev = dj;
        have_d = true;
      } else if (minor_vanishes(chain.minors[b][j], field)) {
        signs.push_back(0);
        prev_zero = true;
        have_d = false;
      } else {
        return std::nullopt;
      }
    }
    return detail::inertia_from_minor_signs(signs);
  }

  InertiaTriple block_inertia_exact(const Chain& chain, std::size_t b, long k, const CyclotomicField* field) const {
    const Embedding emb(field, k);
    const auto len = chain.blocks[b].second;
    const CyclotomicElement factor(field, -1, {Integer(-1), Integer(1)});  // 1 - conj w
    CyclotomicElement power(field, Rational(1));
    std::vector<int> signs{1};
    for (std::size_t j = 1; j <= len; ++j) {
      power *= factor;
      signs.push_back(emb.sign(power * CyclotomicElement(field, 0, chain.minors[b][j])));
    }
    return detail::inertia_from_minor_signs(signs);
  }

  std::size_t m_;
  std::vector<SeifertMatrix::Entry> alpha_, x_, y_;
  Chain generic_, at_minus_one_;
  IntPoly alexander_;
};

}  // namespace knotcx
