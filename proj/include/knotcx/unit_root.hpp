#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "knotcx/rational.hpp"

namespace knotcx {

/// omega = exp(2 pi i k / d). Keeps the grid coordinates (k, d) with
/// 0 <= k < d and the reduced fraction num/den.
class UnitRoot {
 public:
  UnitRoot(long k, long d) : d_(d) {
    require(d >= 1, ErrorKind::invalid_argument, "root of unity denominator must be positive, got " + std::to_string(d));
    k_ = ((k % d) + d) % d;
    if (k_ == 0) {
      num_ = 0;
      den_ = 1;
    } else {
      const long g = std::gcd(k_, d_);
      num_ = k_ / g;
      den_ = d_ / g;
    }
  }

  /// Accepts "k/d" (or "k", meaning k/1); the fraction need not be reduced.
  static UnitRoot parse(std::string_view text) {
    const auto slash = text.find('/');
    // parse the parts separately: parse_rational would reduce k/d
    const Rational k = parse_rational(text.substr(0, slash));
    const Rational d = slash == std::string_view::npos ? Rational(1) : parse_rational(text.substr(slash + 1));
    require(k.get_den() == 1 && d.get_den() == 1 && (slash == std::string_view::npos || text.find('/', slash + 1) == std::string_view::npos),
            ErrorKind::parse_error, "root of unity must be k/d, got '" + std::string(text) + "'");
    require(d > 0, ErrorKind::parse_error, "root of unity denominator must be positive in '" + std::string(text) + "'");
    require(k.get_num().fits_slong_p() && d.get_num().fits_slong_p(), ErrorKind::invalid_argument,
            "root of unity '" + std::string(text) + "' is out of range");
    return UnitRoot(k.get_num().get_si(), d.get_num().get_si());
  }

  long k() const noexcept { return k_; }
  long d() const noexcept { return d_; }
  long reduced_numerator() const noexcept { return num_; }
  long order() const noexcept { return den_; }

  bool is_one() const noexcept { return k_ == 0; }
  UnitRoot conjugate() const { return UnitRoot(d_ - k_, d_); }

  /// k/d as a rational in [0, 1).
  Rational fraction() const { return make_rational(num_, den_); }

  std::string to_string() const { return std::to_string(k_) + "/" + std::to_string(d_); }

 private:
  long k_ = 0;
  long d_ = 1;
  long num_ = 0;
  long den_ = 1;
};

}  // namespace knotcx
