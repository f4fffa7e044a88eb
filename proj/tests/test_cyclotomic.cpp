#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "knotcx/cyclotomic.hpp"
#include "knotcx/embedding.hpp"
#include "knotcx/interval.hpp"

using namespace knotcx;

namespace {

// direct evaluation of sum c_j w^(offset + j) / den at w = exp(2 pi i k / d)
std::complex<long double> evaluate(const CyclotomicElement& x, long k) {
  const long d = x.field() ? x.field()->order() : 1;
  std::complex<long double> acc = 0;
  for (std::size_t j = 0; j < x.coefficients().size(); ++j) {
    const long double angle = 2.0L * M_PIl * static_cast<long double>(k) *
                              static_cast<long double>(x.offset() + static_cast<long>(j)) / static_cast<long double>(d);
    acc += static_cast<long double>(x.coefficients()[j].get_d()) * std::polar(1.0L, angle);
  }
  return acc / static_cast<long double>(x.denominator().get_d());
}

CyclotomicElement random_element(const CyclotomicField* f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, static_cast<int>(f->degree()) + 3), c(-5, 5);
  std::uniform_int_distribution<long> off(-f->order(), f->order());
  std::vector<Integer> coeffs(static_cast<std::size_t>(len(rng)));
  for (auto& v : coeffs) v = c(rng);
  return CyclotomicElement(f, off(rng), std::move(coeffs), std::uniform_int_distribution<int>(1, 4)(rng));
}

}  // namespace

TEST(Cyclotomic, Polynomials) {
  EXPECT_EQ(detail::cyclotomic_polynomial(1), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(detail::cyclotomic_polynomial(6), (std::vector<std::int64_t>{1, -1, 1}));
  EXPECT_EQ(detail::cyclotomic_polynomial(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
  // Phi_105 is the first with a coefficient -2
  const auto p105 = detail::cyclotomic_polynomial(105);
  EXPECT_EQ(p105.size(), 49u);
  EXPECT_EQ(p105[7], -2);
  for (long d = 1; d <= 120; ++d) EXPECT_EQ(static_cast<long>(detail::cyclotomic_polynomial(d).size()) - 1, detail::euler_phi(d));
}

TEST(Cyclotomic, ZeroIsSymbolic) {
  const auto* f = cyclotomic_field(6);
  // w^2 - w + 1 = Phi_6(w) = 0
  EXPECT_TRUE(CyclotomicElement(f, 0, {Integer(1), Integer(-1), Integer(1)}).is_zero());
  // 1 + w + ... + w^4 = 0 in Q(zeta_5)
  const auto* f5 = cyclotomic_field(5);
  EXPECT_TRUE(CyclotomicElement(f5, 3, std::vector<Integer>(5, Integer(1))).is_zero());
  EXPECT_FALSE(CyclotomicElement(f5, 0, std::vector<Integer>(4, Integer(1))).is_zero());
  EXPECT_TRUE((CyclotomicElement::omega_power(f5, 5) - CyclotomicElement(f5, Rational(1))).is_zero());
}

TEST(Cyclotomic, FieldAxiomsAgainstComplexEvaluation) {
  std::mt19937_64 rng(20240611);
  for (long d : {3L, 4L, 5L, 7L, 12L, 15L, 30L, 59L, 60L}) {
    const auto* f = cyclotomic_field(d);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_element(f, rng), b = random_element(f, rng);
      for (long k = 1; k < d; ++k) {
        if (std::gcd(k, d) != 1) continue;
        const auto ea = evaluate(a, k), eb = evaluate(b, k);
        EXPECT_LT(std::abs(evaluate(a + b, k) - (ea + eb)), 1e-9L);
        EXPECT_LT(std::abs(evaluate(a - b, k) - (ea - eb)), 1e-9L);
        EXPECT_LT(std::abs(evaluate(a * b, k) - ea * eb), 1e-7L);
        EXPECT_LT(std::abs(evaluate(a.conj(), k) - std::conj(ea)), 1e-9L);
      }
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), CyclotomicElement(f, Rational(1))) << "d=" << d << " a=" << a.to_string();
      }
      EXPECT_EQ(a.conj().conj(), a);
      EXPECT_EQ((a + b) * a, a * a + b * a);
    }
  }
}

TEST(Cyclotomic, CanonicalFormHasDegreeBelowPhi) {
  const auto* f = cyclotomic_field(12);
  const CyclotomicElement x(f, 5, {Integer(3), Integer(0), Integer(-2), Integer(7), Integer(1), Integer(1)}, 2);
  const auto c = x.canonical();
  EXPECT_EQ(static_cast<long>(c.size()), f->degree());
  std::vector<Integer> num(c.size());
  Integer den = 1;
  for (const auto& q : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  for (std::size_t i = 0; i < c.size(); ++i) num[i] = Rational(c[i] * den).get_num();
  EXPECT_EQ(CyclotomicElement(f, 0, num, den), x);
}

TEST(Embedding, SignsOfRealElements) {
  const auto* f = cyclotomic_field(6);
  // 2 - w - w^-1 = 2 - 2 cos(pi/3) = 1
  const CyclotomicElement s(f, -1, {Integer(-1), Integer(2), Integer(-1)});
  EXPECT_EQ(Embedding(f, 1).sign(s), 1);
  EXPECT_EQ(Embedding(f, 5).sign(s), 1);
  // w + w^-1 - 1 = 0 at primitive 6th roots
  const CyclotomicElement z(f, -1, {Integer(1), Integer(-1), Integer(1)});
  EXPECT_EQ(Embedding(f, 1).sign(z), 0);
  // small and negative: 2 cos(2 pi / 1000) - 2
  const auto* g = cyclotomic_field(1000);
  const CyclotomicElement t(g, -1, {Integer(1), Integer(-2), Integer(1)});
  EXPECT_EQ(Embedding(g, 1).sign(t), -1);
  EXPECT_EQ(Embedding(g, 999).sign(t), -1);
}

TEST(Embedding, ForcesHighPrecisionWhenNeeded) {
  const auto* f = cyclotomic_field(7);
  // (w + w^-1) * 10^30 - round(2 cos(2 pi/7) 10^30): nonzero but tiny relative to its terms
  const Integer big("1000000000000000000000000000000");
  const Integer approx("1246979603717467061050009768008");  // floor(2 cos(2pi/7) * 10^30), from mpmath
  const CyclotomicElement x = CyclotomicElement(f, -1, {big, Integer(0), big}) - CyclotomicElement(f, Rational(approx));
  const Embedding emb(f, 1);
  DInterval fast;
  ASSERT_TRUE(emb.real_part(x, fast));
  EXPECT_TRUE(fast.contains_zero());
  EXPECT_EQ(emb.sign(x), 1);
  EXPECT_EQ(emb.sign(-x), -1);
}

TEST(Interval, CosTableEnclosesCosine) {
  for (long d : {1L, 2L, 3L, 7L, 60L, 997L, 10000L}) {
    const auto t = detail::cos_table(d);
    for (long r = 0; r < d; ++r) {
      const auto& v = (*t)[static_cast<std::size_t>(r)];
      const long double c = std::cos(2.0L * M_PIl * static_cast<long double>(r) / static_cast<long double>(d));
      EXPECT_LE(static_cast<long double>(v.lo), c + 1e-18L) << d << " " << r;
      EXPECT_GE(static_cast<long double>(v.hi), c - 1e-18L) << d << " " << r;
      EXPECT_LT(v.hi - v.lo, 1e-10) << d << " " << r;
    }
  }
}
