#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

#include "knotcx/rational.hpp"
#include "knotcx/signature.hpp"

namespace knotcx {

/// Published constants, used as given.
struct PublishedConstants {
  static constexpr long universal = 209139840;          // |rho| <= universal * c(M)
  static constexpr long denominator = 627419520;        // 3 * universal
  static constexpr long upper_per_slope = 96;           // c(M(K,n)) <= 96|n| + 128 c(K)
  static constexpr long upper_per_crossing = 128;
  static constexpr double link_volume = 5.3335;         // Vol of the seed link complement
  static constexpr double v3 = 1.01494;                 // regular ideal tetrahedron
  static constexpr double published_norm_bound = 5.2552;
  static constexpr double meridian_re = -0.4204;
  static constexpr double meridian_im = 1.1124;
  static constexpr double longitude = 3.3636;
  static constexpr double two_pi = 6.283185307179586;
};

static_assert(PublishedConstants::denominator == 3 * PublishedConstants::universal);

struct CuspData {
  std::complex<double> meridian;
  double longitude;

  CuspData(std::complex<double> m, double l) : meridian(m), longitude(l) {
    require(l > 0, ErrorKind::invalid_argument, "longitude translation must be positive");
  }
};

inline CuspData published_cusp() {
  return CuspData({PublishedConstants::meridian_re, PublishedConstants::meridian_im}, PublishedConstants::longitude);
}

inline Rational over_denominator(const Integer& numerator) {
  return make_rational(numerator, Integer(PublishedConstants::denominator));
}

/// (|n| - 3 - 6 g4) / 627419520; negative values are returned unclamped.
inline Rational lower_bound_slice_genus(long n, long g4) {
  require(n != 0, ErrorKind::invalid_slope, "surgery slope must be nonzero");
  require(g4 >= 0, ErrorKind::invalid_argument, "slice genus must be nonnegative");
  return over_denominator(Integer(std::labs(n)) - 3 - 6 * Integer(g4));
}

/// (|n| - 3 - 6 c) / 627419520 with c the crossing number.
inline Rational lower_bound_crossing(long n, long c) {
  require(n != 0, ErrorKind::invalid_slope, "surgery slope must be nonzero");
  require(c >= 0, ErrorKind::invalid_argument, "crossing number must be nonnegative");
  return over_denominator(Integer(std::labs(n)) - 3 - 6 * Integer(c));
}

/// (3 |avg sigma(K, |n|)| - |n| + 1) / 627419520.
inline Rational lower_bound_signature(const SignatureFunction& sig, long n) {
  require(n != 0, ErrorKind::invalid_slope, "surgery slope must be nonzero");
  const long m = std::labs(n);
  return (3 * abs(sig.average(m).value) - m + 1) / Rational(PublishedConstants::denominator);
}

inline Rational lower_bound_signature(const SeifertMatrix& a, long n) {
  return lower_bound_signature(SignatureFunction(a), n);
}

/// 96 |n| + 128 c.
inline Integer upper_bound(long n, long c) {
  require(c >= 0, ErrorKind::invalid_argument, "crossing number must be nonnegative");
  return PublishedConstants::upper_per_slope * Integer(std::labs(n)) + PublishedConstants::upper_per_crossing * Integer(c);
}

inline Integer universal_rho_bound(long complexity) {
  require(complexity >= 0, ErrorKind::invalid_argument, "complexity must be nonnegative");
  return Integer(PublishedConstants::universal) * complexity;
}

/// |rho| / 209139840, the complexity forced by a rho value.
inline Rational complexity_from_rho(const Rational& rho) { return abs(rho) / Rational(PublishedConstants::universal); }

/// |p m + q l|.
inline double slope_length(const CuspData& cusp, long p, long q) {
  require(p != 0 || q != 0, ErrorKind::invalid_slope, "slope (0, 0) is not a slope");
  return std::abs(static_cast<double>(p) * cusp.meridian + static_cast<double>(q) * cusp.longitude);
}

inline std::vector<bool> two_pi_check(const CuspData& cusp, const std::vector<std::pair<long, long>>& slopes) {
  std::vector<bool> out;
  out.reserve(slopes.size());
  for (const auto& [p, q] : slopes) out.push_back(slope_length(cusp, p, q) > PublishedConstants::two_pi);
  return out;
}

struct GromovNormBound {
  double computed;
  double published;
};

inline GromovNormBound gromov_norm_bound() {
  return {PublishedConstants::link_volume / PublishedConstants::v3, PublishedConstants::published_norm_bound};
}

/// (3 (1 - 1/d^2) n - (d + 7)) / 627419520 - 6, for n > 2, d > 1.
inline Rational gap_lower_bound(long n, long d) {
  require(n > 2, ErrorKind::hypothesis_violation, "gap bound needs n > 2, got " + std::to_string(n));
  require(d > 1, ErrorKind::hypothesis_violation, "gap bound needs d > 1, got " + std::to_string(d));
  const Rational dd = Rational(d) * d;
  return (3 * (1 - 1 / dd) * n - (d + 7)) / Rational(PublishedConstants::denominator) - 6;
}

/// A lower bound of at most 0 says nothing about c(M).
inline bool vacuous(const Rational& lower) { return sgn(lower) <= 0; }

struct BoundReport {
  long slope = 0;
  std::optional<long> crossing;
  std::optional<long> g4;
  Rational lower_signature;
  std::optional<Rational> lower_slice_genus;
  std::optional<Rational> lower_crossing;
  std::optional<Integer> upper;
  Rational best_lower;
};

inline BoundReport bound_report(const SignatureFunction& sig, long n, std::optional<long> crossing = std::nullopt,
                                std::optional<long> g4 = std::nullopt) {
  require(n != 0, ErrorKind::invalid_slope, "surgery slope must be nonzero");
  BoundReport r;
  r.slope = n;
  r.crossing = crossing;
  r.g4 = g4;
  r.lower_signature = lower_bound_signature(sig, n);
  r.best_lower = r.lower_signature;
  if (g4) {
    r.lower_slice_genus = lower_bound_slice_genus(n, *g4);
    r.best_lower = std::max(r.best_lower, *r.lower_slice_genus);
  }
  if (crossing) {
    r.lower_crossing = lower_bound_crossing(n, *crossing);
    r.best_lower = std::max(r.best_lower, *r.lower_crossing);
    r.upper = upper_bound(n, *crossing);
    require(r.best_lower <= Rational(*r.upper), ErrorKind::internal_inconsistency,
            "lower bound " + to_string(r.best_lower) + " exceeds upper bound " + r.upper->get_str());
  }
  return r;
}

inline BoundReport bound_report(const SeifertMatrix& a, long n, std::optional<long> crossing = std::nullopt,
                                std::optional<long> g4 = std::nullopt) {
  return bound_report(SignatureFunction(a), n, crossing, g4);
}

}  // namespace knotcx
