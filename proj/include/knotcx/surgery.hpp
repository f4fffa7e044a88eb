#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "knotcx/rational.hpp"

namespace knotcx {

/// Integer-framed surgery link data together with a homomorphism to Z_d
/// given by meridian residues.
class SurgeryPresentation {
 public:
  using Entry = std::int64_t;

  /// linking is r x r row-major; residues are reduced into [0, modulus).
  SurgeryPresentation(std::size_t components, std::vector<Entry> lambda, std::vector<Entry> residues, Entry modulus)
      : components_(components), linking_(std::move(lambda)), residues_(std::move(residues)), modulus_(modulus) {
    require(components_ >= 1, ErrorKind::invalid_parameter, "surgery presentation needs at least one component");
    require(modulus_ >= 1, ErrorKind::invalid_parameter, "modulus must be positive, got " + std::to_string(modulus_));
    require(linking_.size() == components_ * components_, ErrorKind::validation_error,
            "linking matrix must be " + std::to_string(components_) + "x" + std::to_string(components_));
    require(residues_.size() == components_, ErrorKind::validation_error,
            "need one meridian residue per component");
    for (std::size_t i = 0; i < components_; ++i)
      for (std::size_t j = i + 1; j < components_; ++j)
        require(linking(i, j) == linking(j, i), ErrorKind::validation_error, "linking matrix must be symmetric");
    for (auto& r : residues_) r = ((r % modulus_) + modulus_) % modulus_;
    // phi must kill the relations Lambda * meridians = 0 of H_1 of the surgered manifold.
    for (std::size_t i = 0; i < components_; ++i) {
      Integer row = 0;
      for (std::size_t j = 0; j < components_; ++j) row += Integer(static_cast<long>(linking(i, j))) * static_cast<long>(residues_[j]);
      require(mpz_divisible_ui_p(row.get_mpz_t(), static_cast<unsigned long>(modulus_)) != 0,
              ErrorKind::inconsistent_modulus,
              "residues do not define a homomorphism to Z_" + std::to_string(modulus_) + " (row " + std::to_string(i) +
                  " of Lambda*r is not divisible)");
    }
  }

  std::size_t components() const noexcept { return components_; }
  Entry linking(std::size_t i, std::size_t j) const { return linking_[i * components_ + j]; }
  const std::vector<Entry>& linking_matrix() const noexcept { return linking_; }
  const std::vector<Entry>& residues() const noexcept { return residues_; }
  Entry modulus() const noexcept { return modulus_; }

  /// sum_{i,j} r_i r_j n_ij.
  Integer linking_form() const {
    Integer total = 0;
    for (std::size_t i = 0; i < components_; ++i)
      for (std::size_t j = 0; j < components_; ++j)
        total += Integer(static_cast<long>(residues_[i])) * static_cast<long>(residues_[j]) *
                 static_cast<long>(linking(i, j));
    return total;
  }

  /// Single component with one framing: the shape produced by knot surgery.
  bool is_knot_surgery() const noexcept { return components_ == 1; }

 private:
  std::size_t components_;
  std::vector<Entry> linking_;
  std::vector<Entry> residues_;
  Entry modulus_;
};

/// n-surgery on a knot with phi the abelianization onto Z_|n|.
inline SurgeryPresentation knot_surgery_presentation(std::int64_t n, std::int64_t d) {
  require(n != 0, ErrorKind::invalid_slope, "surgery slope must be nonzero");
  require(d == std::llabs(n), ErrorKind::inconsistent_modulus,
          "abelianization of " + std::to_string(n) + "-surgery is Z_" + std::to_string(std::llabs(n)) + ", not Z_" +
              std::to_string(d));
  return SurgeryPresentation(1, {n}, {1}, d);
}

struct TwistedSlopes {
  std::int64_t integral;  // slope on the knotted component
  Rational reciprocal;    // 1/n on the unknotted circle
};

/// (1/n)-surgery on the circle of the seed link shifts the framing of the
/// other component by -4n, so M(J_n, d) is (d + 4n, 1/n)-surgery on the link.
inline TwistedSlopes twist_reduction(std::int64_t d, std::int64_t n) {
  require(n != 0, ErrorKind::degenerate_slope, "1/0 slope: twist parameter must be nonzero");
  return {d + 4 * n, make_rational(1, static_cast<long>(n))};
}

}  // namespace knotcx
