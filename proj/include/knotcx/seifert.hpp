#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "knotcx/error.hpp"
#include "knotcx/integer_linalg.hpp"

namespace knotcx {

/// Whether a Seifert matrix comes from a knot (A - A^T unimodular, even
/// size) or a link (no unimodularity requirement).
enum class SurfaceKind { knot, link };

/// Square integer matrix of a Seifert pairing. Immutable once built; the
/// constructor validates the invariants for the declared kind.
class SeifertMatrix {
 public:
  using Entry = std::int64_t;

  SeifertMatrix() = default;

  SeifertMatrix(SurfaceKind kind, std::size_t size, std::vector<Entry> entries)
      : kind_(kind), size_(size), entries_(std::move(entries)) {
    validate();
  }

  static SeifertMatrix from_rows(SurfaceKind kind, const std::vector<std::vector<Entry>>& rows) {
    std::vector<Entry> flat;
    flat.reserve(rows.size() * rows.size());
    for (const auto& row : rows) {
      require(row.size() == rows.size(), ErrorKind::validation_error, "Seifert matrix must be square");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return SeifertMatrix(kind, rows.size(), std::move(flat));
  }

  SurfaceKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  Entry operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  /// det(A - A^T), exact.
  Integer skew_determinant() const {
    std::vector<Integer> skew(size_ * size_);
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t j = 0; j < size_; ++j)
        skew[i * size_ + j] = Integer(static_cast<long>((*this)(i, j))) - Integer(static_cast<long>((*this)(j, i)));
    return integer_determinant(std::move(skew), size_);
  }

  friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) {
    return a.kind_ == b.kind_ && a.size_ == b.size_ && a.entries_ == b.entries_;
  }

 private:
  void validate() const {
    require(entries_.size() == size_ * size_, ErrorKind::validation_error,
            "Seifert matrix of size " + std::to_string(size_) + " needs " + std::to_string(size_ * size_) +
                " entries, got " + std::to_string(entries_.size()));
    if (kind_ == SurfaceKind::knot) {
      require(size_ % 2 == 0, ErrorKind::validation_error,
              "knot Seifert matrix must have even size, got " + std::to_string(size_));
      const Integer det = skew_determinant();
      require(det == 1 || det == -1, ErrorKind::validation_error,
              "knot Seifert matrix needs det(A - A^T) = +-1, got " + det.get_str());
    }
  }

  SurfaceKind kind_ = SurfaceKind::knot;
  std::size_t size_ = 0;
  std::vector<Entry> entries_;
};

namespace detail {

inline SeifertMatrix two_bridge_chain(long n, SeifertMatrix::Entry last) {
  require(n >= 1, ErrorKind::invalid_parameter, "family parameter must be >= 1, got " + std::to_string(n));
  const auto m = static_cast<std::size_t>(2 * n);
  std::vector<SeifertMatrix::Entry> a(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    a[i * m + i] = 1;
    if (i + 1 < m) a[i * m + i + 1] = 1;
  }
  a[m * m - 1] = last;
  return SeifertMatrix(SurfaceKind::knot, m, std::move(a));
}

}  // namespace detail

/// 2n x 2n bidiagonal Seifert matrix of the 2-bridge knot J_n:
/// diagonal (1, ..., 1, -1), superdiagonal all 1.
inline SeifertMatrix jn_seifert(long n) { return detail::two_bridge_chain(n, -1); }

/// Seifert matrix of the torus knot T(2, 2n+1); J_n's matrix with the
/// bottom-right entry flipped to +1.
inline SeifertMatrix torus_knot_seifert(long n) { return detail::two_bridge_chain(n, 1); }

inline SeifertMatrix unknot_seifert() { return SeifertMatrix(SurfaceKind::knot, 0, {}); }

/// -A^T, a Seifert matrix of the mirror image.
inline SeifertMatrix mirror(const SeifertMatrix& a) {
  const std::size_t m = a.size();
  std::vector<SeifertMatrix::Entry> out(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out[i * m + j] = -a(j, i);
  return SeifertMatrix(a.kind(), m, std::move(out));
}

enum class KnotFamily { unknot, torus2, jn, custom };

struct KnotFamilyId {
  KnotFamily family = KnotFamily::unknot;
  long parameter = 0;
};

inline SeifertMatrix make_seifert(const KnotFamilyId& id) {
  switch (id.family) {
    case KnotFamily::unknot: return unknot_seifert();
    case KnotFamily::torus2: return torus_knot_seifert(id.parameter);
    case KnotFamily::jn: return jn_seifert(id.parameter);
    case KnotFamily::custom: break;
  }
  fail(ErrorKind::invalid_parameter, "custom knots have no generator; load a Seifert matrix instead");
}

}  // namespace knotcx
