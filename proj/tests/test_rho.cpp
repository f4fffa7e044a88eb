#include <gtest/gtest.h>

#include "knotcx/rho.hpp"

using namespace knotcx;

namespace {

const SeifertMatrix trefoil = torus_knot_seifert(1);

CableData knot_cable(const SeifertMatrix& a) { return CableData::trivial(a); }

}  // namespace

TEST(CassonGordon, UnknotTwoSurgery) {
  const auto pres = knot_surgery_presentation(2, 2);
  EXPECT_EQ(casson_gordon_sigma(pres, knot_cable(unknot_seifert()), 1), 0);
}

TEST(CassonGordon, TrefoilThreeSurgery) {
  const auto pres = knot_surgery_presentation(3, 3);
  EXPECT_EQ(casson_gordon_sigma(pres, knot_cable(trefoil), 1), make_rational(7, 3));
  EXPECT_EQ(casson_gordon_sigma(pres, knot_cable(trefoil), 2), make_rational(7, 3));
}

TEST(CassonGordon, LevelRange) {
  const auto pres = knot_surgery_presentation(3, 3);
  EXPECT_THROW(casson_gordon_sigma(pres, knot_cable(trefoil), 0), Error);
  EXPECT_THROW(casson_gordon_sigma(pres, knot_cable(trefoil), 3), Error);
}

TEST(RhoFiniteCyclic, UnknotClosedForm) {
  for (long n = 1; n <= 20; ++n) {
    const auto r = rho_finite_cyclic(knot_surgery_presentation(n, n), knot_cable(unknot_seifert()), n);
    EXPECT_EQ(r.value, make_rational(n, 3) + make_rational(2, 3 * n) - 1) << n;
    EXPECT_EQ(r.per_level.size(), static_cast<std::size_t>(n));
    EXPECT_EQ(r.per_level[0], 0);
  }
}

TEST(RhoFiniteCyclic, TrivialCharacter) {
  const auto r = rho_finite_cyclic(knot_surgery_presentation(1, 1), knot_cable(trefoil), 1);
  EXPECT_EQ(r.value, 0);
  EXPECT_EQ(r.per_level, std::vector<Rational>{0});
}

TEST(RhoFiniteCyclic, TrefoilThree) {
  const auto r = rho_finite_cyclic(knot_surgery_presentation(3, 3), knot_cable(trefoil), 3);
  EXPECT_EQ(r.value, make_rational(14, 9));
  EXPECT_EQ(r.per_level, (std::vector<Rational>{0, make_rational(7, 3), make_rational(7, 3)}));
}

TEST(RhoFiniteCyclic, TwoComponentLink) {
  // Hopf link, Seifert matrix [-1] of an annulus; Lambda = [[2,1],[1,2]], r = (1,1) over Z_3
  const SurgeryPresentation pres(2, {2, 1, 1, 2}, {1, 1}, 3);
  const auto r = rho_finite_cyclic(pres, CableData::trivial(SeifertMatrix(SurfaceKind::link, 1, {-1})), 3);
  // avg sigma = -2/3, sign Lambda = 2, form = 6: -2/3 - 4/3 + 16/9
  EXPECT_EQ(r.value, make_rational(-2, 9));
}

TEST(RhoFiniteCyclic, CableDataRequirements) {
  const SurgeryPresentation pres(2, {3, 0, 0, 3}, {1, 2}, 3);
  const auto link = SeifertMatrix(SurfaceKind::link, 1, {-1});
  try {
    rho_finite_cyclic(pres, CableData::trivial(link), 3);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::missing_cable_data);
  }
  EXPECT_NO_THROW(rho_finite_cyclic(pres, CableData::supplied(SeifertMatrix(SurfaceKind::link, 2, {1, 0, 0, -1}), 3), 3));
  EXPECT_THROW(rho_finite_cyclic(pres, CableData::supplied(link, 1), 3), Error);
  EXPECT_THROW(rho_finite_cyclic(knot_surgery_presentation(3, 3), knot_cable(trefoil), 4), Error);
}

TEST(RhoKnotSurgery, Examples) {
  EXPECT_EQ(rho_knot_surgery(unknot_seifert(), 1), 0);
  EXPECT_EQ(rho_knot_surgery(unknot_seifert(), 2), 0);
  EXPECT_EQ(rho_knot_surgery(trefoil, 3), make_rational(14, 9));
  EXPECT_EQ(rho_knot_surgery(jn_seifert(1), 2), 0);
  EXPECT_THROW(rho_knot_surgery(trefoil, 0), Error);
}

TEST(RhoKnotSurgery, NegativeSlopeUsesMirror) {
  EXPECT_EQ(rho_knot_surgery(trefoil, -3), rho_knot_surgery(mirror(trefoil), 3));
  // mirror trefoil has avg sigma -4/3 at d = 3
  EXPECT_EQ(rho_knot_surgery(trefoil, -3), make_rational(2, 9) - make_rational(4, 3));
}

TEST(RhoKnotSurgery, MatchesGeneralSurgeryFormula) {
  for (const auto& a : {unknot_seifert(), trefoil, torus_knot_seifert(3), jn_seifert(1), jn_seifert(4)}) {
    const SignatureFunction sf(a);
    for (long n = -40; n <= 40; ++n) {
      if (std::labs(n) < 2) continue;
      const auto r = rho_finite_cyclic(knot_surgery_presentation(n, std::labs(n)), knot_cable(a), std::labs(n));
      EXPECT_EQ(r.value, rho_knot_surgery(sf, n)) << n;
      EXPECT_EQ(r.mirrored, n < 0);
      for (std::size_t k = 1; k < r.per_level.size(); ++k) EXPECT_EQ(r.per_level[k], r.per_level[r.per_level.size() - k]);
    }
  }
}

TEST(RhoKnotSurgery, FirstEstimateDirection) {
  for (long n = 1; n <= 12; ++n)
    for (const auto& a : {torus_knot_seifert(n), jn_seifert(n)}) {
      const SignatureFunction sf(a);
      for (long s = 1; s <= 60; ++s) {
        const Rational avg = sf.average(s).value;
        EXPECT_GE(abs(rho_knot_surgery(sf, s)), (s - 3 - 3 * abs(avg)) / Rational(3)) << n << " " << s;
      }
    }
}
