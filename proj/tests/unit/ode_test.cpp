#include "painleve/errors.hpp"
#include "painleve/ode.hpp"
#include "painleve/parser.hpp"
#include "support/random_equations.hpp"

#include <gtest/gtest.h>

namespace painleve {
namespace {

MultiIndex mi(std::vector<unsigned> e) { return MultiIndex(std::move(e)); }
GaussRational gr(const char* s) { return GaussRational::from_string(s); }

// Independent scan of the term map for the leading set.
std::set<MultiIndex> scan_leading(const PolynomialODE& ode, const mpq_class& b) {
  std::set<MultiIndex> out;
  for (const auto& [chi, a] : ode.terms()) {
    if (chi.degree() > 1 && b * chi.degree() + chi.weight() == ode.order() + b) out.insert(chi);
  }
  return out;
}

TEST(MultiIndex, DegreeAndWeight) {
  const MultiIndex chi = mi({1, 0, 2, 1});
  EXPECT_EQ(chi.degree(), 4u);
  EXPECT_EQ(chi.weight(), 7u);
  EXPECT_EQ(chi.to_string(), "(1,0,2,1)");
  EXPECT_EQ(MultiIndex::pattern_a(4), mi({1, 0, 0, 1}));
  EXPECT_EQ(*MultiIndex::pattern_b(4), mi({1, 0, 1, 0}));
  EXPECT_EQ(MultiIndex::pattern_a(1), mi({2}));
  EXPECT_EQ(*MultiIndex::pattern_b(2), mi({2, 0}));
  EXPECT_FALSE(MultiIndex::pattern_b(1).has_value());
}

TEST(MultiIndex, GradedOrder) {
  EXPECT_TRUE(graded_before(mi({3, 0}), mi({1, 1})));
  EXPECT_TRUE(graded_before(mi({1, 0, 1, 0}), mi({0, 2, 0, 0})));
  EXPECT_FALSE(graded_before(mi({0, 2, 0, 0}), mi({1, 0, 1, 0})));
}

TEST(PolynomialODE, DropsZeroAndValidatesKeys) {
  const PolynomialODE ode(2, {{mi({2, 0}), Poly()}, {mi({3, 0}), Poly(GaussRational(1))}});
  EXPECT_EQ(ode.terms().size(), 1u);
  EXPECT_THROW(PolynomialODE(2, {{mi({1}), Poly(GaussRational(1))}}), std::invalid_argument);
}

TEST(Bureau, Examples) {
  EXPECT_EQ(bureau_number(parse_equation("w[4] + 3*w*w[2] - 4*w[1]^2 = 0")), 2);
  EXPECT_EQ(bureau_number(parse_equation("w[3]=w[2]*w-2*w[1]^2")), 1);
  EXPECT_EQ(bureau_number(parse_equation("w[2]=2*w^3+z*w")), 1);
  EXPECT_EQ(bureau_number(parse_equation("w[2]=w^4")), mpq_class(2, 3));
  EXPECT_EQ(bureau_number(parse_equation("w[5]=w*w[4]")), 1);
  EXPECT_THROW(bureau_number(parse_equation("w[2]=z*w+1")), LinearEquation);
}

TEST(LeadingTerms, Examples) {
  auto bureau = leading_terms(parse_equation("w[4] + 3*w*w[2] - 4*w[1]^2 = 0"));
  EXPECT_EQ(bureau.omega0, (std::set<MultiIndex>{mi({1, 0, 1, 0}), mi({0, 2, 0, 0})}));
  EXPECT_EQ(bureau.top_degree, 2u);

  auto p2 = leading_terms(parse_equation("w[2]=2*w^3+z*w+1/2"));
  EXPECT_EQ(p2.omega0, std::set<MultiIndex>{mi({3, 0})});
  EXPECT_EQ(p2.top_degree, 3u);

  const auto hier_ode = parse_equation("w[4]=10*w^2*w[2]+10*w*w[1]^2-6*w^5+z*w");
  auto hier = leading_terms(hier_ode);
  EXPECT_EQ(hier.omega0, scan_leading(hier_ode, 1));
  EXPECT_EQ(hier.omega0.size(), 3u);
  EXPECT_EQ(hier.top_degree, 5u);
}

// Every leading index attains the minimum ratio; every other nonlinear index exceeds it.
TEST(LeadingTerms, RatioPropertyOnGeneratedEquations) {
  testing::EquationGenerator gen(0x0de0001);
  for (int k = 0; k < 300; ++k) {
    const auto g = gen.next();
    const auto lead = leading_terms(g.ode);
    EXPECT_EQ(lead.bureau, g.bureau);
    EXPECT_EQ(lead.omega0, scan_leading(g.ode, lead.bureau));
    for (const auto& [chi, a] : g.ode.terms()) {
      if (chi.degree() <= 1) continue;
      const mpq_class ratio(mpz_class(static_cast<long>(g.ode.order()) - static_cast<long>(chi.weight())),
                            mpz_class(chi.degree() - 1));
      mpq_class r = ratio;
      r.canonicalize();
      if (lead.omega0.count(chi)) EXPECT_EQ(r, lead.bureau);
      else EXPECT_GT(r, lead.bureau);
    }
  }
}

TEST(BasePoint, Examples) {
  EXPECT_EQ(choose_base_point(parse_equation("w[2]=2*w^3")), GaussRational(0));
  EXPECT_EQ(choose_base_point(parse_equation("w[2]=2*w^3+z*w")), GaussRational(1));
  EXPECT_EQ(choose_base_point(parse_equation("w[2]=(z-1)*(z-2)*w^3")), GaussRational(0));
  EXPECT_EQ(choose_base_point(parse_equation("w[2]=z*(z-1)*(z+1)*w^3")), GaussRational(2));
}

TEST(BasePoint, NeverARootOfAnyCoefficient) {
  testing::EquationGenerator gen(0xba5e);
  for (int k = 0; k < 200; ++k) {
    const auto g = gen.next();
    const auto z0 = choose_base_point(g.ode);
    for (const auto& [chi, a] : g.ode.terms()) EXPECT_FALSE(a(z0).is_zero());
  }
}

TEST(EvaluateAt, Examples) {
  const auto bureau = evaluate_at(parse_equation("w[4] + 3*w*w[2] - 4*w[1]^2 = 0"), 0);
  EXPECT_EQ(bureau.terms, (std::map<MultiIndex, GaussRational>{{mi({1, 0, 1, 0}), -3}, {mi({0, 2, 0, 0}), 4}}));
  EXPECT_EQ(bureau.coeff_b, GaussRational(-3));
  EXPECT_EQ(bureau.coeff_a, GaussRational(0));

  const auto p = evaluate_at(parse_equation("w[2]=2*w^3+z*w"), 1);
  EXPECT_EQ(p.terms, (std::map<MultiIndex, GaussRational>{{mi({3, 0}), 2}, {mi({1, 0}), 1}}));
  EXPECT_THROW(evaluate_at(parse_equation("w[2]=2*w^3+z*w"), 0), ExcludedPoint);
  EXPECT_EQ(p.local.at(mi({1, 0})), Poly({GaussRational(1), GaussRational(1)}));
}

TEST(EvaluateAt, CommutesWithScalingCoefficients) {
  const auto ode = parse_equation("w[3] = (z+2)*w*w[2] + w[1]^2 + z^2*w");
  const GaussRational k = gr("-2/7+i");
  std::map<MultiIndex, CoeffPoly> scaled;
  for (const auto& [chi, a] : ode.terms()) scaled[chi] = a * k;
  const auto e1 = evaluate_at(ode, 3);
  const auto e2 = evaluate_at(PolynomialODE(3, scaled), 3);
  for (const auto& [chi, v] : e1.terms) EXPECT_EQ(e2.terms.at(chi), v * k);
}

TEST(Rescale, ScalesCoefficientsAndKeepsStructure) {
  testing::EquationGenerator gen(0x5ca1e);
  for (const char* l : {"2", "-3", "1/5", "1+i"}) {
    const GaussRational lambda = gr(l);
    for (int k = 0; k < 50; ++k) {
      const auto g = gen.next();
      const auto r = rescale(g.ode, lambda);
      for (const auto& [chi, a] : g.ode.terms()) {
        EXPECT_EQ(r.terms().at(chi), a * (pow(lambda, chi.degree()) / lambda));
      }
      const auto l1 = leading_terms(g.ode), l2 = leading_terms(r);
      EXPECT_EQ(l1.bureau, l2.bureau);
      EXPECT_EQ(l1.omega0, l2.omega0);
      EXPECT_EQ(l1.top_degree, l2.top_degree);
    }
  }
}

}  // namespace
}  // namespace painleve
