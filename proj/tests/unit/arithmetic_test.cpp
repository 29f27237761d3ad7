#include "painleve/big_float.hpp"
#include "painleve/gauss_rational.hpp"
#include "painleve/poly.hpp"

#include <gtest/gtest.h>

namespace painleve {
namespace {

GaussRational gr(const char* s) { return GaussRational::from_string(s); }

TEST(GaussRational, ArithmeticIsExact) {
  const GaussRational a = gr("1/2+1/3i");
  const GaussRational b = gr("-3/4");
  EXPECT_EQ(a + b, gr("-1/4+1/3i"));
  EXPECT_EQ(a * b, gr("-3/8-1/4i"));
  EXPECT_EQ((a / b) * b, a);
  EXPECT_EQ(GaussRational::i() * GaussRational::i(), GaussRational(-1));
  EXPECT_THROW(a / GaussRational(), std::domain_error);
}

TEST(GaussRational, CanonicalFormFromNegativeDenominator) {
  const GaussRational x{mpq_class(mpz_class(3), mpz_class(-6))};
  EXPECT_EQ(x, GaussRational::from_fraction(-1, 2));
  EXPECT_EQ(x.re().get_den(), 2);
}

TEST(GaussRational, StringRoundTrip) {
  for (const char* s : {"0", "-3/4", "i", "-i", "2i", "1/2+1/3i", "-5-7/2i", "11/13i"}) {
    EXPECT_EQ(gr(s).to_string(), s);
  }
  EXPECT_THROW(gr("1/0"), std::invalid_argument);
  EXPECT_THROW(gr("abc"), std::invalid_argument);
}

TEST(GaussRational, CompareIsLexicographic) {
  EXPECT_LT(compare(gr("-1"), gr("1")), 0);
  EXPECT_LT(compare(gr("1-i"), gr("1+i")), 0);
  EXPECT_EQ(compare(gr("2/4"), gr("1/2")), 0);
}

TEST(Factorial, SmallValues) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(20), mpz_class("2432902008176640000"));
}

TEST(Poly, RingOperations) {
  const Poly x = Poly::variable();
  const Poly p = x * x - Poly(1);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p(GaussRational(3)), GaussRational(8));
  EXPECT_EQ(p.derivative(), x * GaussRational(2));
  EXPECT_EQ(p.to_string("q"), "q^2 - 1");
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).degree(), -1);
}

TEST(Poly, DivmodReconstructs) {
  const Poly a({gr("1"), gr("2"), gr("3"), gr("1/2+i")});
  const Poly b({gr("-1"), gr("1")});
  const auto [q, r] = divmod(a, b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
  EXPECT_THROW(divmod(a, Poly()), std::domain_error);
}

TEST(Poly, GcdAndSquarefree) {
  const Poly x = Poly::variable();
  const Poly p = (x - Poly(1)) * (x - Poly(1)) * (x + Poly(2));
  EXPECT_EQ(gcd(p, p.derivative()), x - Poly(1));
  const auto sqf = squarefree_decomposition(p * GaussRational(6));
  ASSERT_EQ(sqf.size(), 2u);
  EXPECT_EQ(sqf[0].first, x + Poly(2));
  EXPECT_EQ(sqf[0].second, 1u);
  EXPECT_EQ(sqf[1].first, x - Poly(1));
  EXPECT_EQ(sqf[1].second, 2u);
}

TEST(Poly, TaylorShift) {
  const Poly p({gr("1"), gr("0"), gr("1")});  // 1 + z^2
  EXPECT_EQ(p.taylor_shift(gr("2")), Poly({gr("5"), gr("4"), gr("1")}));
}

TEST(Poly, InterpolationRecoversPolynomial) {
  const Poly p({gr("1/3"), gr("-2"), gr("0"), gr("7/5+i")});
  std::vector<GaussRational> xs, ys;
  for (long k = 0; k <= 3; ++k) {
    xs.emplace_back(k);
    ys.push_back(p(GaussRational(k)));
  }
  EXPECT_EQ(interpolate(xs, ys), p);
}

TEST(BigFloat, BallInverseContainsTrueValue) {
  const mpfr_prec_t prec = 128;
  Ball b{BigComplex(gr("3"), prec), BigFloat::exp2(-60, prec)};
  Ball inv = inverse(b);
  Ball diff = inv;
  diff.mid -= BigComplex(gr("1/3"), prec);
  EXPECT_TRUE(diff.contains_zero());
  EXPECT_LT(inv.radius, BigFloat::exp2(-55, prec));
}

}  // namespace
}  // namespace painleve
