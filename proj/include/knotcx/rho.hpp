#pragma once

#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include "knotcx/inertia.hpp"
#include "knotcx/seifert.hpp"
#include "knotcx/signature.hpp"
#include "knotcx/surgery.hpp"

namespace knotcx {

/// Seifert data for the cable link L' of a surgery presentation: either the
/// presented link itself (every residue 1, so each component is its own
/// 1-cable) or a user-supplied Seifert matrix of the full cable link.
class CableData {
 public:
  static CableData trivial(SeifertMatrix link) { return CableData(std::move(link), 0, false); }

  static CableData supplied(SeifertMatrix cable_link, std::size_t components) {
    require(components >= 1, ErrorKind::missing_cable_data, "cable link must be nonempty");
    return CableData(std::move(cable_link), components, true);
  }

  bool is_trivial() const noexcept { return !supplied_; }
  const SeifertMatrix& seifert() const noexcept { return seifert_; }
  std::size_t components() const noexcept { return components_; }

  /// Throws unless this data describes L' for the given presentation.
  void check_against(const SurgeryPresentation& pres) const {
    if (supplied_) {
      require(components_ >= pres.components(), ErrorKind::missing_cable_data,
              "cable link has " + std::to_string(components_) + " components, presentation has " +
                  std::to_string(pres.components()) + "; every component needs a nonempty cable");
      return;
    }
    const auto one = 1 % pres.modulus();
    for (std::size_t i = 0; i < pres.components(); ++i)
      require(pres.residues()[i] == one, ErrorKind::missing_cable_data,
              "component " + std::to_string(i) + " has residue " + std::to_string(pres.residues()[i]) +
                  "; a Seifert matrix of its cable must be supplied");
  }

  CableData mirrored() const { return CableData(mirror(seifert_), components_, supplied_); }

 private:
  CableData(SeifertMatrix a, std::size_t components, bool supplied)
      : seifert_(std::move(a)), components_(components), supplied_(supplied) {}

  SeifertMatrix seifert_;
  std::size_t components_;
  bool supplied_;
};

struct RhoResult {
  Rational value;
  std::vector<Rational> per_level;  // sigma_k for k = 0 .. d-1
  SurgeryPresentation presentation;
  bool mirrored = false;  // evaluated on the mirror with positive framing
};

/// sign of the linking matrix.
inline long linking_signature(const SurgeryPresentation& pres) {
  std::vector<Rational> e;
  e.reserve(pres.linking_matrix().size());
  for (auto v : pres.linking_matrix()) e.emplace_back(static_cast<long>(v));
  return rational_inertia(e, pres.components()).signature();
}

namespace detail {

inline Rational gilmer_level(const SignatureFunction& cable, long sign_lambda, const Integer& form, long k, long d) {
  const long sigma = cable(UnitRoot(k, d)).value;
  return Rational(sigma - sign_lambda) + make_rational(2 * (d - k) * k, d * d) * Rational(form);
}

}  // namespace detail

/// Casson-Gordon sigma_k of the surgered manifold, 0 < k < d.
inline Rational casson_gordon_sigma(const SurgeryPresentation& pres, const CableData& cable, long k) {
  const long d = pres.modulus();
  require(k > 0 && k < d, ErrorKind::invalid_argument,
          "level k must satisfy 0 < k < " + std::to_string(d) + ", got " + std::to_string(k));
  cable.check_against(pres);
  return detail::gilmer_level(SignatureFunction(cable.seifert()), linking_signature(pres), pres.linking_form(), k, d);
}

/// rho over Z_d: closed form, checked against the average of the levels.
inline RhoResult rho_finite_cyclic(const SurgeryPresentation& pres, const CableData& cable, long d) {
  require(d >= 1, ErrorKind::invalid_parameter, "d must be positive");
  require(d == pres.modulus(), ErrorKind::inconsistent_modulus,
          "presentation is over Z_" + std::to_string(pres.modulus()) + ", asked for Z_" + std::to_string(d));
  cable.check_against(pres);

  if (pres.is_knot_surgery() && pres.linking(0, 0) < 0) {
    const SurgeryPresentation flipped(1, {-pres.linking(0, 0)}, pres.residues(), d);
    RhoResult out = rho_finite_cyclic(flipped, cable.mirrored(), d);
    out.mirrored = true;
    return out;
  }

  const SignatureFunction sig(cable.seifert());
  const long sign_lambda = linking_signature(pres);
  const Integer form = pres.linking_form();

  RhoResult out{0, {}, pres, false};
  out.value = sig.average(d).value - make_rational(d - 1, d) * sign_lambda +
              make_rational(d * d - 1, 3 * d * d) * Rational(form);

  out.per_level.assign(static_cast<std::size_t>(d), Rational(0));
  Rational total = 0;
  for (long k = 1; k < d; ++k) {
    out.per_level[static_cast<std::size_t>(k)] = detail::gilmer_level(sig, sign_lambda, form, k, d);
    total += out.per_level[static_cast<std::size_t>(k)];
  }
  total /= d;
  require(total == out.value, ErrorKind::internal_inconsistency,
          "closed form " + to_string(out.value) + " differs from level average " + to_string(total));
  return out;
}

/// rho of n-surgery on a knot with phi onto Z_|n|; negative n is evaluated on
/// the mirror with slope |n|.
inline Rational rho_knot_surgery(const SignatureFunction& sig, long n) {
  require(n != 0, ErrorKind::invalid_slope, "surgery slope must be nonzero");
  const long m = std::labs(n);
  const Rational avg = n > 0 ? sig.average(m).value : SignatureFunction(mirror(sig.matrix())).average(m).value;
  return make_rational(m, 3) + make_rational(2, 3 * m) - 1 + avg;
}

inline Rational rho_knot_surgery(const SeifertMatrix& a, long n) { return rho_knot_surgery(SignatureFunction(a), n); }

}  // namespace knotcx
