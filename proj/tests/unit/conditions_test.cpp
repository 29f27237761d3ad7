#include "painleve/conditions.hpp"
#include "painleve/parser.hpp"

#include <gtest/gtest.h>

namespace painleve {
namespace {

GaussRational gr(const char* s) { return GaussRational::from_string(s); }
EvaluatedODE eq(const char* text, long z0 = 0) { return evaluate_at(parse_equation(text), z0); }

const char* kBureau = "w[4]+3*w*w[2]-4*w[1]^2=0";
const char* kHierarchy = "w[4]=10*w^2*w[2]+10*w*w[1]^2-6*w^5+z*w";

std::vector<PoleFamily> families(const EvaluatedODE& e) { return pole_families(e, determining_polynomial(e)); }

PoleFamily fake_family(std::vector<std::int64_t> resonances, bool all_integer = true) {
  PoleFamily f;
  f.q.exact = gr("1");
  f.resonances.values = std::move(resonances);
  f.resonances.all_integer = all_integer;
  GaussRational prod(1);
  for (auto r : f.resonances.values) prod = prod * GaussRational(static_cast<long>(r));
  f.product = Scalar{prod, {}};
  for (auto r : f.resonances.values) {
    if (r < 0) f.negatives.push_back(r);
  }
  return f;
}

TEST(CheckBureau, Examples) {
  EXPECT_EQ(check_bureau(eq(kBureau).leading).outcome, Outcome::kPass);
  EXPECT_EQ(check_bureau(leading_terms(parse_equation("w[2]=w^4"))).outcome, Outcome::kFail);
  EXPECT_EQ(check_bureau(leading_terms(parse_equation("w[5]=w*w[4]"))).outcome, Outcome::kPass);
  EXPECT_EQ(check_bureau(leading_terms(parse_equation("w[4]=w^2"))).outcome, Outcome::kFail);  // B = 4
}

TEST(CheckLeadingDerivative, Examples) {
  EXPECT_EQ(check_leading_derivative(eq(kBureau).leading, 4).outcome, Outcome::kPass);
  EXPECT_EQ(check_leading_derivative(eq("w[2]=2*w^3").leading, 2).outcome, Outcome::kPass);
  EXPECT_EQ(check_leading_derivative(eq("w[5]=w[1]^3").leading, 5).outcome, Outcome::kFail);
  EXPECT_EQ(check_leading_derivative(eq("w[1]=w^2").leading, 1).outcome, Outcome::kPass);
}

TEST(CheckVanish, Examples) {
  const auto v = eq("w[3]=w[2]*w-2*w[1]^2");
  const auto r = check_vanish(v.leading, determining_polynomial(v));
  EXPECT_EQ(r.outcome, Outcome::kFail);
  EXPECT_NE(r.detail.find("m = 0"), std::string::npos);
  const auto b = eq(kBureau);
  EXPECT_EQ(check_vanish(b.leading, determining_polynomial(b)).outcome, Outcome::kPass);
  const auto c = eq("w[2]=2*w^3");
  EXPECT_EQ(check_vanish(c.leading, determining_polynomial(c)).outcome, Outcome::kPass);
}

TEST(CheckFamilies, Examples) {
  const auto ok = check_families(families(eq(kBureau)), 4);
  ASSERT_EQ(ok.size(), 1u);
  EXPECT_EQ(ok[0].outcome, Outcome::kPass);
  EXPECT_EQ(ok[0].family, std::optional<std::size_t>(0));

  auto complex_pair = fake_family({}, false);
  complex_pair.res_poly.exact = Poly({gr("1"), gr("-1"), gr("1")});
  EXPECT_EQ(check_families({complex_pair}, 2)[0].outcome, Outcome::kFail);

  EXPECT_EQ(check_families({fake_family({-1, -1, 3})}, 3)[0].outcome, Outcome::kFail);
  EXPECT_EQ(check_families({fake_family({-2, 1, 3})}, 3)[0].outcome, Outcome::kFail);  // no -1
  EXPECT_EQ(check_families({fake_family({-1, 0, 3})}, 3)[0].outcome, Outcome::kFail);  // zero

  auto wrong_product = fake_family({-1, 2, 5});
  wrong_product.product->exact = gr("11");
  EXPECT_EQ(check_families({wrong_product}, 3)[0].outcome, Outcome::kFail);
}

TEST(CheckFamilies, MultipleRootFails) {
  const auto e = eq("w[2]=-2*w^3-4*w*w[1]");
  const auto r = check_families(families(e), 2);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].outcome, Outcome::kFail);
  EXPECT_NE(r[0].detail.find("multiplicity 2"), std::string::npos);
}

TEST(CheckResidueIdentity, Examples) {
  EXPECT_EQ(check_residue_identity(families(eq(kBureau)), 4, 2).outcome, Outcome::kPass);
  EXPECT_EQ(check_residue_identity(families(eq("w[2]=2*w^3")), 2, 1).outcome, Outcome::kPass);
  const auto hier = families(eq(kHierarchy, 1));
  ASSERT_EQ(hier.size(), 4u);
  EXPECT_EQ(*hier[0].product->exact, gr("144"));
  EXPECT_EQ(*hier[1].product->exact, gr("-36"));
  EXPECT_EQ(check_residue_identity(hier, 4, 1).outcome, Outcome::kPass);
  // dropping a family breaks the identity
  EXPECT_EQ(check_residue_identity({hier[0], hier[1]}, 4, 1).outcome, Outcome::kFail);
}

TEST(CheckResidueIdentity, NumericFamiliesUseEnclosures) {
  const auto e = eq("w[2]=(1+i)*w^3");
  const auto r = check_residue_identity(families(e), 2, 1);
  EXPECT_EQ(r.outcome, Outcome::kPass) << r.detail;
}

TEST(CheckSumIdentities, Examples) {
  const auto p1 = eq("w[2]=6*w^2+z", 1);
  const auto r1 = check_sum_identities(families(p1), p1);
  ASSERT_EQ(r1.size(), 1u);
  EXPECT_EQ(r1[0].outcome, Outcome::kPass) << r1[0].detail;
  EXPECT_NE(r1[0].detail.find("sum r^2 = 37"), std::string::npos);

  const auto c = eq("w[2]=2*w^3");
  for (const auto& r : check_sum_identities(families(c), c)) EXPECT_EQ(r.outcome, Outcome::kPass);

  const auto b = eq(kBureau);
  EXPECT_EQ(check_sum_identities(families(b), b)[0].outcome, Outcome::kPass);

  // a B = 2 family whose B q is negative
  auto negative = fake_family({-1, 6});
  negative.q.exact = gr("-1");
  EXPECT_EQ(check_sum_identities({negative}, p1)[0].outcome, Outcome::kFail);
}

TEST(CheckCompatibility, Examples) {
  const auto p1 = eq("w[2]=6*w^2+z", 1);
  EXPECT_EQ(check_compatibility(p1, families(p1))[0].outcome, Outcome::kPass);
  const auto bad = eq("w[2]=6*w^2+z^2", 1);
  const auto r = check_compatibility(bad, families(bad));
  EXPECT_EQ(r[0].outcome, Outcome::kFail);
  EXPECT_NE(r[0].detail.find("resonance 6"), std::string::npos);
  const auto c = eq("w[2]=2*w^3");
  EXPECT_EQ(check_compatibility(c, families(c), 3)[0].outcome, Outcome::kIndeterminate);
}

TEST(CheckNegativeResonanceTheorem, Examples) {
  const auto hier = families(eq(kHierarchy, 1));
  EXPECT_EQ(check_negative_resonance_theorem(hier, 5, 4).outcome, Outcome::kPass);
  EXPECT_EQ(check_negative_resonance_theorem(families(eq("w[2]=2*w^3")), 3, 2).outcome, Outcome::kSkipped);
  EXPECT_EQ(check_negative_resonance_theorem(hier, 2, 4).outcome, Outcome::kSkipped);

  const auto r = check_negative_resonance_theorem({fake_family({-1, 2, 3, 6})}, 3, 4);
  EXPECT_EQ(r.outcome, Outcome::kFail);
  EXPECT_TRUE(r.diagnostic);
  EXPECT_FALSE(r.hard_failure());
  EXPECT_NE(r.detail.find("InconsistencyWithTheorem"), std::string::npos);
}

TEST(FullVerdict, Examples) {
  const auto vanish = full_verdict(parse_equation("w[3]=w[2]*w-2*w[1]^2"));
  EXPECT_EQ(vanish.status, Status::kFailsPainleve);
  ASSERT_NE(vanish.first_failure(), nullptr);
  EXPECT_EQ(vanish.first_failure()->id, CheckId::kVanish);
  EXPECT_EQ(vanish.reasons.size(), 3u);

  const auto bureau = analyze(parse_equation(kBureau));
  EXPECT_EQ(bureau.verdict.status, Status::kPassesNecessary);
  EXPECT_FALSE(bureau.notes.empty());

  const auto p2 = analyze(parse_equation("w[2]=2*w^3+z*w+1/2"));
  EXPECT_EQ(p2.verdict.status, Status::kPassesNecessary);
  ASSERT_EQ(p2.families.size(), 2u);
  EXPECT_EQ(*p2.families[0].q.exact, gr("-1"));
  EXPECT_EQ(*p2.families[1].q.exact, gr("1"));
  for (const auto& f : p2.families) EXPECT_EQ(f.resonances.values, (std::vector<std::int64_t>{-1, 4}));

  EXPECT_EQ(full_verdict(parse_equation("w[2]=w^4")).status, Status::kFailsPainleve);
  EXPECT_EQ(full_verdict(parse_equation("w[5]=w[1]^3")).first_failure()->id, CheckId::kLeadingDerivative);
  EXPECT_EQ(full_verdict(parse_equation("w[2]=6*w^2+z^2")).first_failure()->id, CheckId::kCompatibility);
  EXPECT_EQ(full_verdict(parse_equation("w[2]=(1+i)*w^3")).status, Status::kIndeterminate);
  EXPECT_THROW(full_verdict(parse_equation("w[2]=z*w")), LinearEquation);
  EXPECT_THROW(full_verdict(parse_equation("w[2]=z*w^3"), GaussRational(0)), ExcludedPoint);
}

TEST(FullVerdict, HardFailuresCiteValues) {
  for (const char* text : {"w[3]=w[2]*w-2*w[1]^2", "w[2]=w^4", "w[2]=6*w^2+z^2", "w[3]=w^4+w*w[2]"}) {
    const auto v = full_verdict(parse_equation(text));
    ASSERT_NE(v.first_failure(), nullptr) << text;
    EXPECT_TRUE(std::any_of(v.first_failure()->detail.begin(), v.first_failure()->detail.end(),
                            [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        << v.first_failure()->detail;
  }
}

TEST(FullVerdict, SelfCheckAgreesOnFixtures) {
  AnalysisOptions o;
  o.self_check = true;
  for (const char* text : {kBureau, kHierarchy, "w[2]=6*w^2+z", "w[2]=2*w^3+z*w+1/2"}) {
    EXPECT_NO_THROW(analyze(parse_equation(text), o)) << text;
  }
}

TEST(Enums, NamesRoundTrip) {
  for (auto id : {CheckId::kBureau, CheckId::kLeadingDerivative, CheckId::kVanish, CheckId::kFamilies,
                  CheckId::kResidueIdentity, CheckId::kSumIdentities, CheckId::kCompatibility,
                  CheckId::kNegativeResonanceTheorem}) {
    EXPECT_EQ(check_id_from_string(to_string(id)), id);
  }
  EXPECT_EQ(status_from_string("PassesNecessary"), Status::kPassesNecessary);
  EXPECT_FALSE(outcome_from_string("maybe").has_value());
}

}  // namespace
}  // namespace painleve
