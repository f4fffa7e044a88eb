#include <gtest/gtest.h>

#include "knotcx/seifert.hpp"
#include "knotcx/seifert_json.hpp"
#include "knotcx/surgery.hpp"

using namespace knotcx;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorKind::internal_inconsistency;
}

}  // namespace

TEST(Seifert, JnSmallest) {
  const auto a = jn_seifert(1);
  EXPECT_EQ(a, SeifertMatrix::from_rows(SurfaceKind::knot, {{1, 1}, {0, -1}}));
}

TEST(Seifert, JnTwoShape) {
  const auto a = jn_seifert(2);
  ASSERT_EQ(a.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(a(i, i), i == 3 ? -1 : 1);
    for (std::size_t j = 0; j < 4; ++j) {
      const long expected = j == i + 1 ? 1 : 0;
      if (j != i) {
        EXPECT_EQ(a(i, j), expected);
      }
    }
  }
}

TEST(Seifert, TorusShape) {
  EXPECT_EQ(torus_knot_seifert(1), SeifertMatrix::from_rows(SurfaceKind::knot, {{1, 1}, {0, 1}}));
  const auto t3 = torus_knot_seifert(3);
  ASSERT_EQ(t3.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(t3(i, i), 1);
}

TEST(Seifert, FamiliesValidateUpTo200) {
  for (long n = 1; n <= 200; ++n) {
    // the tridiagonal skew matrix has determinant exactly 1
    EXPECT_EQ(jn_seifert(n).skew_determinant(), 1) << n;
    EXPECT_EQ(torus_knot_seifert(n).skew_determinant(), 1) << n;
  }
}

TEST(Seifert, BadParameters) {
  EXPECT_EQ(kind_of([] { jn_seifert(0); }), ErrorKind::invalid_parameter);
  EXPECT_EQ(kind_of([] { torus_knot_seifert(-2); }), ErrorKind::invalid_parameter);
}

TEST(Seifert, Unknot) {
  const auto u = unknot_seifert();
  EXPECT_TRUE(u.empty());
  EXPECT_EQ(u.skew_determinant(), 1);
}

TEST(Seifert, Mirror) {
  const auto m = mirror(torus_knot_seifert(1));
  EXPECT_EQ(m, SeifertMatrix::from_rows(SurfaceKind::knot, {{-1, 0}, {-1, -1}}));
  EXPECT_EQ(mirror(mirror(jn_seifert(3))), jn_seifert(3));
}

TEST(Seifert, KnotValidation) {
  EXPECT_EQ(kind_of([] { SeifertMatrix::from_rows(SurfaceKind::knot, {{1, 2}, {0, 1}}); }), ErrorKind::validation_error);
  EXPECT_EQ(kind_of([] { SeifertMatrix(SurfaceKind::knot, 1, {1}); }), ErrorKind::validation_error);
  // link matrices need no unimodularity
  EXPECT_NO_THROW(SeifertMatrix::from_rows(SurfaceKind::link, {{1, 2}, {0, 1}}));
  EXPECT_NO_THROW(SeifertMatrix(SurfaceKind::link, 1, {3}));
}

TEST(SeifertJson, RoundTrip) {
  const auto a = jn_seifert(2);
  EXPECT_EQ(seifert_from_json(seifert_to_json(a)), a);
  const auto b = parse_seifert_json(R"({"kind":"knot","size":2,"entries":[[1,1],[0,1]]})");
  EXPECT_EQ(b, torus_knot_seifert(1));
}

TEST(SeifertJson, ParseVersusValidation) {
  EXPECT_EQ(kind_of([] { parse_seifert_json("{not json"); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { parse_seifert_json(R"({"kind":"knot","size":2,"entries":[[1,1],[0]]})"); }),
            ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { parse_seifert_json(R"({"kind":"knot","size":2,"entries":[[1,1.5],[0,1]]})"); }),
            ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { parse_seifert_json(R"({"kind":"braid","size":0,"entries":[]})"); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { parse_seifert_json(R"({"kind":"knot","size":2,"entries":[[2,1],[1,2]]})"); }),
            ErrorKind::validation_error);
}

TEST(Surgery, KnotPresentation) {
  const auto p = knot_surgery_presentation(5, 5);
  EXPECT_EQ(p.components(), 1u);
  EXPECT_EQ(p.linking(0, 0), 5);
  EXPECT_EQ(p.residues(), std::vector<SurgeryPresentation::Entry>{1});
  EXPECT_EQ(p.linking_form(), 5);
  EXPECT_NO_THROW(knot_surgery_presentation(-5, 5));
  EXPECT_EQ(kind_of([] { knot_surgery_presentation(0, 1); }), ErrorKind::invalid_slope);
  EXPECT_EQ(kind_of([] { knot_surgery_presentation(6, 3); }), ErrorKind::inconsistent_modulus);
}

TEST(Surgery, ConsistencyAcrossSlopes) {
  for (long n = -40; n <= 40; ++n) {
    if (n == 0) continue;
    EXPECT_NO_THROW(knot_surgery_presentation(n, std::labs(n))) << n;
  }
}

TEST(Surgery, ResiduesNormalizedAndChecked) {
  const SurgeryPresentation p(2, {2, 1, 1, 2}, {-2, 4}, 3);
  EXPECT_EQ(p.residues(), (std::vector<SurgeryPresentation::Entry>{1, 1}));
  EXPECT_EQ(p.linking_form(), 6);
  EXPECT_EQ(kind_of([] { SurgeryPresentation(2, {2, 1, 1, 2}, {1, 0}, 3); }), ErrorKind::inconsistent_modulus);
  EXPECT_EQ(kind_of([] { SurgeryPresentation(2, {2, 1, 0, 2}, {1, 1}, 3); }), ErrorKind::validation_error);
}

TEST(Surgery, TwistReduction) {
  auto t = twist_reduction(2, 3);
  EXPECT_EQ(t.integral, 14);
  EXPECT_EQ(t.reciprocal, make_rational(1, 3));
  t = twist_reduction(0, 1);
  EXPECT_EQ(t.integral, 4);
  EXPECT_EQ(t.reciprocal, 1);
  t = twist_reduction(5, 2);
  EXPECT_EQ(t.integral, 13);
  EXPECT_EQ(t.reciprocal, make_rational(1, 2));
  EXPECT_EQ(kind_of([] { twist_reduction(3, 0); }), ErrorKind::degenerate_slope);
}
