#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "knotcx/cyclotomic.hpp"
#include "knotcx/embedding.hpp"
#include "knotcx/rational.hpp"

namespace knotcx {

enum class Mode { exact, floating };

inline std::string_view to_string(Mode m) { return m == Mode::exact ? "exact" : "float"; }

inline Mode parse_mode(std::string_view text) {
  if (text == "exact") return Mode::exact;
  if (text == "float") return Mode::floating;
  fail(ErrorKind::parse_error, "mode must be exact or float, got '" + std::string(text) + "'");
}

struct InertiaTriple {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;
  bool certified = true;

  std::size_t size() const noexcept { return positive + zero + negative; }
  long signature() const noexcept { return static_cast<long>(positive) - static_cast<long>(negative); }

  friend bool operator==(const InertiaTriple& a, const InertiaTriple& b) {
    return a.positive == b.positive && a.zero == b.zero && a.negative == b.negative;
  }
  InertiaTriple& operator+=(const InertiaTriple& o) {
    positive += o.positive;
    zero += o.zero;
    negative += o.negative;
    certified = certified && o.certified;
    return *this;
  }
};

/// Dense square matrix over a field, row-major; Hermitian by convention.
template <class T>
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  HermitianMatrix(std::size_t n, const T& zero) : n_(n), entries_(n * n, zero) {}

  std::size_t size() const noexcept { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<T> entries_;
};

template <class T>
struct FieldOps;

template <>
struct FieldOps<Rational> {
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational conj(const Rational& x) { return x; }
  static Rational inverse(const Rational& x) { return 1 / x; }
};

template <>
struct FieldOps<CyclotomicElement> {
  static bool is_zero(const CyclotomicElement& x) { return x.is_zero(); }
  static CyclotomicElement conj(const CyclotomicElement& x) { return x.conj(); }
  static CyclotomicElement inverse(const CyclotomicElement& x) { return x.inverse(); }
};

/// Inertia by symmetric elimination S -> S - C E^{-1} C*. Pivots are the
/// nonzero diagonal entry of largest magnitude, or, when the remaining
/// diagonal vanishes, a 2x2 block on an off-diagonal entry (one positive and
/// one negative eigenvalue). sign_of must return the exact sign of a real
/// field element; magnitude is only a pivoting heuristic.
template <class T, class SignFn, class MagnitudeFn>
InertiaTriple pivoted_ldl_inertia(HermitianMatrix<T> s, SignFn&& sign_of, MagnitudeFn&& magnitude) {
  using F = FieldOps<T>;
  InertiaTriple out;
  std::vector<std::size_t> active(s.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;

  auto drop = [&active](std::size_t v) { std::erase(active, v); };

  while (!active.empty()) {
    std::size_t pivot = s.size();
    double best = -1.0;
    for (std::size_t i : active) {
      if (F::is_zero(s(i, i))) continue;
      const double m = magnitude(s(i, i));
      if (m > best) best = m, pivot = i;
    }

    if (pivot < s.size()) {
      const int sg = sign_of(s(pivot, pivot));
      require(sg != 0, ErrorKind::internal_inconsistency, "nonzero pivot evaluated to sign 0");
      (sg > 0 ? out.positive : out.negative) += 1;
      const T inv = F::inverse(s(pivot, pivot));
      drop(pivot);
      for (std::size_t a : active) {
        if (F::is_zero(s(a, pivot))) continue;
        const T f = s(a, pivot) * inv;
        for (std::size_t b : active) {
          if (b < a || F::is_zero(s(pivot, b))) continue;
          s(a, b) -= f * s(pivot, b);
          if (b != a) s(b, a) = F::conj(s(a, b));
        }
      }
      continue;
    }

    std::size_t pi = s.size(), pj = s.size();
    best = -1.0;
    for (std::size_t i : active)
      for (std::size_t j : active) {
        if (j <= i || F::is_zero(s(i, j))) continue;
        const double m = magnitude(s(i, j));
        if (m > best) best = m, pi = i, pj = j;
      }
    if (pi == s.size()) {
      out.zero += active.size();
      break;
    }
    // E = [[0, e], [conj e, 0]] has eigenvalues +-|e|
    out.positive += 1;
    out.negative += 1;
    const T inv_e = F::inverse(s(pi, pj));
    const T inv_e_bar = F::conj(inv_e);
    drop(pi);
    drop(pj);
    for (std::size_t a : active) {
      const bool ai = !F::is_zero(s(a, pi)), aj = !F::is_zero(s(a, pj));
      if (!ai && !aj) continue;
      for (std::size_t b : active) {
        if (b < a) continue;
        T delta{};
        bool touched = false;
        if (ai && !F::is_zero(s(pj, b))) delta += s(a, pi) * inv_e_bar * s(pj, b), touched = true;
        if (aj && !F::is_zero(s(pi, b))) delta += s(a, pj) * inv_e * s(pi, b), touched = true;
        if (!touched) continue;
        s(a, b) -= delta;
        if (b != a) s(b, a) = F::conj(s(a, b));
      }
    }
  }
  return out;
}

/// Inertia of a rational symmetric matrix (row-major).
inline InertiaTriple rational_inertia(const std::vector<Rational>& entries, std::size_t n) {
  HermitianMatrix<Rational> s(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) = entries[i * n + j];
  return pivoted_ldl_inertia(std::move(s), [](const Rational& x) { return sgn(x); },
                             [](const Rational& x) { return std::abs(x.get_d()); });
}

/// Exact inertia of a Hermitian matrix over Q(zeta_d) under an embedding.
inline InertiaTriple cyclotomic_inertia(HermitianMatrix<CyclotomicElement> h, const Embedding& emb) {
  return pivoted_ldl_inertia(
      std::move(h), [&emb](const CyclotomicElement& x) { return emb.sign(x); },
      [&emb](const CyclotomicElement& x) { return std::abs(emb.approximate(x)); });
}

/// Machine-precision inertia from eigenvalues. Certified only when every
/// eigenvalue clears 1e6 * eps * ||H||; eigenvalues under that threshold are
/// reported as zero.
inline InertiaTriple float_inertia(const Eigen::MatrixXcd& h) {
  InertiaTriple out;
  if (h.rows() == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  const double norm = h.cwiseAbs().rowwise().sum().maxCoeff();
  const double tol = 1e6 * std::numeric_limits<double>::epsilon() * norm;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lambda = solver.eigenvalues()[i];
    if (std::abs(lambda) <= tol) {
      ++out.zero;
      out.certified = false;
    } else {
      (lambda > 0 ? out.positive : out.negative) += 1;
    }
  }
  return out;
}

}  // namespace knotcx
