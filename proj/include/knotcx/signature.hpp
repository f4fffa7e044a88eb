#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <vector>

#include "knotcx/cyclotomic.hpp"
#include "knotcx/embedding.hpp"
#include "knotcx/inertia.hpp"
#include "knotcx/seifert.hpp"
#include "knotcx/tridiagonal.hpp"
#include "knotcx/unit_root.hpp"

namespace knotcx {

/// H = (1 - w) A + (1 - conj w) A^T over Q(zeta_d), d the order of w.
inline HermitianMatrix<CyclotomicElement> hermitian_form(const SeifertMatrix& a, const UnitRoot& omega) {
  const CyclotomicField* field = cyclotomic_field(omega.order());
  const CyclotomicElement u(field, 0, {Integer(1), Integer(-1)});   // 1 - w
  const CyclotomicElement ub(field, -1, {Integer(-1), Integer(1)});  // 1 - w^{-1}
  HermitianMatrix<CyclotomicElement> h(a.size(), CyclotomicElement(field));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      CyclotomicElement v(field);
      if (a(i, j) != 0) v += u * Rational(static_cast<long>(a(i, j)));
      if (a(j, i) != 0) v += ub * Rational(static_cast<long>(a(j, i)));
      h(i, j) = std::move(v);
    }
  return h;
}

/// The same form in complex doubles.
inline Eigen::MatrixXcd numeric_hermitian_form(const SeifertMatrix& a, const UnitRoot& omega) {
  const double theta = 2.0 * M_PI * static_cast<double>(omega.reduced_numerator()) / static_cast<double>(omega.order());
  const std::complex<double> w(std::cos(theta), std::sin(theta));
  const auto n = static_cast<Eigen::Index>(a.size());
  Eigen::MatrixXcd h(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      h(i, j) = (1.0 - w) * static_cast<double>(a(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) +
                (1.0 - std::conj(w)) * static_cast<double>(a(static_cast<std::size_t>(j), static_cast<std::size_t>(i)));
  return h;
}

/// Exact inertia of a Hermitian form over Q(zeta_d) under w -> exp(2 pi i k/d).
inline InertiaTriple inertia(const HermitianMatrix<CyclotomicElement>& h, const UnitRoot& omega) {
  return cyclotomic_inertia(h, Embedding(cyclotomic_field(omega.order()), omega.reduced_numerator()));
}

/// det of a square matrix over Q(zeta_d) by Gaussian elimination.
inline CyclotomicElement field_determinant(std::vector<CyclotomicElement> m, std::size_t n, const CyclotomicField* field) {
  CyclotomicElement det(field, Rational(1));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv * n + col].is_zero()) ++piv;
    if (piv == n) return CyclotomicElement(field);
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[piv * n + j], m[col * n + j]);
      det = -det;
    }
    det *= m[col * n + col];
    const CyclotomicElement inv = m[col * n + col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r * n + col].is_zero()) continue;
      const CyclotomicElement f = m[r * n + col] * inv;
      for (std::size_t j = col + 1; j < n; ++j)
        if (!m[col * n + j].is_zero()) m[r * n + j] -= f * m[col * n + j];
    }
  }
  return det;
}

struct SignatureValue {
  long value = 0;
  InertiaTriple inertia;
  bool certified() const noexcept { return inertia.certified; }
};

struct AverageSignature {
  Rational value;
  bool certified = true;
};

/// Levine-Tristram signature function of one Seifert matrix. Tridiagonal
/// matrices go through the minor recurrence, all others through pivoted
/// LDL*. Sums over primitive roots of each order are memoized, so one
/// instance serves sweeps over many averages. Safe to share across threads.
class SignatureFunction {
 public:
  explicit SignatureFunction(SeifertMatrix a) : a_(std::move(a)) {
    if (TridiagonalProfile::applies(a_)) profile_.emplace(a_);
  }

  const SeifertMatrix& matrix() const noexcept { return a_; }
  bool tridiagonal() const noexcept { return profile_.has_value(); }

  InertiaTriple inertia(const UnitRoot& omega, Mode mode = Mode::exact) const {
    if (omega.is_one()) return InertiaTriple{0, a_.size(), 0, true};
    if (mode == Mode::floating) return float_inertia(numeric_hermitian_form(a_, omega));
    if (profile_) return profile_->inertia(omega.reduced_numerator(), omega.order());
    return knotcx::inertia(hermitian_form(a_, omega), omega);
  }

  /// Exact inertia through the general LDL* route, whatever the shape.
  InertiaTriple inertia_general(const UnitRoot& omega) const {
    if (omega.is_one()) return InertiaTriple{0, a_.size(), 0, true};
    return knotcx::inertia(hermitian_form(a_, omega), omega);
  }

  SignatureValue operator()(const UnitRoot& omega, Mode mode = Mode::exact) const {
    SignatureValue out;
    out.inertia = inertia(omega, mode);
    out.value = out.inertia.signature();
    return out;
  }

  /// det(A^T - w A), w != 1.
  CyclotomicElement alexander(const UnitRoot& omega) const {
    require(!omega.is_one(), ErrorKind::invalid_argument, "Alexander evaluation at w = 1 is not defined here");
    const CyclotomicField* field = cyclotomic_field(omega.order());
    if (profile_) return CyclotomicElement(field, 0, profile_->alexander_polynomial());
    const std::size_t n = a_.size();
    const CyclotomicElement w = CyclotomicElement::omega_power(field, 1);
    std::vector<CyclotomicElement> b(n * n, CyclotomicElement(field));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Rational at(static_cast<long>(a_(j, i))), aij(static_cast<long>(a_(i, j)));
        b[i * n + j] = CyclotomicElement(field, at) - w * aij;
      }
    return field_determinant(std::move(b), n, field);
  }

  /// Sum of sigma over the primitive roots of unity of the given order.
  Integer primitive_sum(long order) const {
    require(order >= 1, ErrorKind::invalid_argument, "root order must be positive");
    if (order == 1 || a_.empty()) return 0;
    {
      std::lock_guard lock(mutex_);
      if (auto it = sums_.find(order); it != sums_.end()) return it->second;
    }
    // sigma(k/d) = sigma((d - k)/d): the forms are complex conjugate
    Integer total = 0;
    for (long k = 1; 2 * k <= order; ++k) {
      if (std::gcd(k, order) != 1) continue;
      const long s = inertia(UnitRoot(k, order)).signature();
      total += (2 * k == order) ? s : 2 * s;
    }
    std::lock_guard lock(mutex_);
    sums_.emplace(order, total);
    return total;
  }

  /// (1/d) sum_{k=1}^{d-1} sigma(exp(2 pi i k / d)).
  AverageSignature average(long d, Mode mode = Mode::exact) const {
    require(d >= 1, ErrorKind::invalid_argument, "average needs d >= 1, got " + std::to_string(d));
    AverageSignature out;
    if (d == 1 || a_.empty()) {
      out.value = 0;
      return out;
    }
    Integer total = 0;
    if (mode == Mode::exact) {
      for (long e = 2; e <= d; ++e)
        if (d % e == 0) total += primitive_sum(e);
    } else {
      for (long k = 1; k < d; ++k) {
        const auto t = inertia(UnitRoot(k, d), Mode::floating);
        total += t.signature();
        out.certified = out.certified && t.certified;
      }
    }
    out.value = make_rational(total, Integer(d));
    return out;
  }

 private:
  SeifertMatrix a_;
  std::optional<TridiagonalProfile> profile_;
  mutable std::mutex mutex_;
  mutable std::map<long, Integer> sums_;
};

inline SignatureValue levine_tristram(const SeifertMatrix& a, const UnitRoot& omega, Mode mode = Mode::exact) {
  return SignatureFunction(a)(omega, mode);
}

inline CyclotomicElement alexander_at(const SeifertMatrix& a, const UnitRoot& omega) {
  return SignatureFunction(a).alexander(omega);
}

inline Rational avg_signature(const SeifertMatrix& a, long d, Mode mode = Mode::exact) {
  return SignatureFunction(a).average(d, mode).value;
}

/// 2n - 2 floor((2n + 1)(1/2 - x)) for rational x in (0, 1/2].
inline long litherland_torus_signature(long n, const Rational& x) {
  require(n >= 1, ErrorKind::invalid_parameter, "torus parameter must be >= 1");
  require(x > 0 && x <= Rational(1, 2), ErrorKind::invalid_argument, "x must lie in (0, 1/2], got " + to_string(x));
  const Integer f = floor(Rational(2 * n + 1) * (Rational(1, 2) - x));
  return 2 * n - 2 * f.get_si();
}

/// (1 - 1/d^2) n - (d - 1)/(2d).
inline Rational torus_avg_lower_bound(long n, long d) {
  require(n >= 1, ErrorKind::invalid_parameter, "n must be >= 1");
  require(d >= 2, ErrorKind::invalid_parameter, "d must be >= 2");
  return (1 - make_rational(1, d * d)) * n - make_rational(d - 1, 2 * d);
}

/// (1 - 1/d^2) n - (5d - 1)/(2d).
inline Rational jn_avg_lower_bound(long n, long d) {
  require(n >= 1, ErrorKind::invalid_parameter, "n must be >= 1");
  require(d >= 2, ErrorKind::invalid_parameter, "d must be >= 2");
  return (1 - make_rational(1, d * d)) * n - make_rational(5 * d - 1, 2 * d);
}

}  // namespace knotcx
