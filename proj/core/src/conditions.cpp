#include "painleve/conditions.hpp"

#include "painleve/errors.hpp"
#include "painleve/series.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <numeric>
#include <sstream>

namespace painleve {

namespace {

constexpr std::array<std::pair<CheckId, const char*>, 8> kCheckNames{{
    {CheckId::kBureau, "check_bureau"},
    {CheckId::kLeadingDerivative, "check_leading_derivative"},
    {CheckId::kVanish, "check_vanish"},
    {CheckId::kFamilies, "check_families"},
    {CheckId::kResidueIdentity, "check_residue_identity"},
    {CheckId::kSumIdentities, "check_sum_identities"},
    {CheckId::kCompatibility, "check_compatibility"},
    {CheckId::kNegativeResonanceTheorem, "check_negative_resonance_theorem"},
}};

constexpr std::array<std::pair<Outcome, const char*>, 4> kOutcomeNames{{
    {Outcome::kPass, "pass"},
    {Outcome::kFail, "fail"},
    {Outcome::kIndeterminate, "indeterminate"},
    {Outcome::kSkipped, "skipped"},
}};

constexpr std::array<std::pair<Status, const char*>, 3> kStatusNames{{
    {Status::kFailsPainleve, "FailsPainleve"},
    {Status::kPassesNecessary, "PassesNecessary"},
    {Status::kIndeterminate, "Indeterminate"},
}};

template <typename Table, typename Key>
std::string lookup_name(const Table& table, Key key) {
  for (const auto& [k, name] : table) {
    if (k == key) return name;
  }
  throw std::logic_error("unnamed enumerator");
}

template <typename Table>
auto lookup_key(const Table& table, const std::string& s) -> std::optional<decltype(table[0].first)> {
  for (const auto& [k, name] : table) {
    if (s == name) return k;
  }
  return std::nullopt;
}

CheckResult result(CheckId id, Outcome outcome, std::string detail,
                   std::optional<std::size_t> family = std::nullopt) {
  return CheckResult{id, outcome, std::move(detail), family, false};
}

std::string join(const std::vector<std::int64_t>& values) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << values[i];
  os << '}';
  return os.str();
}

GaussRational integer(long long v) { return GaussRational(mpq_class(mpz_class(std::to_string(v)))); }

/// Decides whether lhs(q) == 0 at the family's root.
std::optional<bool> holds_at(const Poly& lhs, const RootQ& q) {
  if (q.exact) return lhs(*q.exact).is_zero();
  return vanishes_at_root(lhs, q.owner, q.approx);
}

}  // namespace

std::string to_string(CheckId id) { return lookup_name(kCheckNames, id); }
std::string to_string(Outcome outcome) { return lookup_name(kOutcomeNames, outcome); }
std::string to_string(Status status) { return lookup_name(kStatusNames, status); }
std::optional<CheckId> check_id_from_string(const std::string& s) { return lookup_key(kCheckNames, s); }
std::optional<Outcome> outcome_from_string(const std::string& s) { return lookup_key(kOutcomeNames, s); }
std::optional<Status> status_from_string(const std::string& s) { return lookup_key(kStatusNames, s); }

const CheckResult* Verdict::first_failure() const {
  for (const auto& r : reasons) {
    if (r.hard_failure()) return &r;
  }
  return nullptr;
}

Status decide(const std::vector<CheckResult>& reasons) {
  bool undecided = false;
  for (const auto& r : reasons) {
    if (r.hard_failure()) return Status::kFailsPainleve;
    undecided = undecided || r.outcome == Outcome::kIndeterminate;
  }
  return undecided ? Status::kIndeterminate : Status::kPassesNecessary;
}

CheckResult check_bureau(const LeadingData& leading) {
  const mpq_class& b = leading.bureau;
  const bool ok = b == 1 || b == 2;
  return result(CheckId::kBureau, ok ? Outcome::kPass : Outcome::kFail,
                "B = " + b.get_str() + (ok ? " is 1 or 2" : " is neither 1 nor 2"));
}

CheckResult check_leading_derivative(const LeadingData& leading, unsigned order) {
  // For n <= 2 the index n-2 (or n-1) may be w itself.
  for (const auto& chi : leading.omega0) {
    if (chi[order - 1] > 0) {
      return result(CheckId::kLeadingDerivative, Outcome::kPass,
                    "leading term " + chi.to_string() + " contains w^(n-1)");
    }
    if (order >= 2 && chi[order - 2] > 0) {
      return result(CheckId::kLeadingDerivative, Outcome::kPass,
                    "leading term " + chi.to_string() + " contains w^(n-2)");
    }
  }
  return result(CheckId::kLeadingDerivative, Outcome::kFail,
                "no leading term contains w^(n-1) or w^(n-2)");
}

CheckResult check_vanish(const LeadingData& leading, const DeterminingPoly& h) {
  const int m = h.m();
  const int need = static_cast<int>(leading.top_degree) - 1;
  std::string detail = "H/q = " + h.reduced.to_string("q") + ", m = " + std::to_string(m) +
                       ", d - 1 = " + std::to_string(need);
  if (m < need) {
    return result(CheckId::kVanish, Outcome::kFail,
                  detail + ": the degree-" + std::to_string(leading.top_degree) +
                      " leading terms cancel in H");
  }
  return result(CheckId::kVanish, Outcome::kPass, detail);
}

std::vector<CheckResult> check_families(const std::vector<PoleFamily>& families, unsigned order) {
  std::vector<CheckResult> out;
  for (std::size_t k = 0; k < families.size(); ++k) {
    const PoleFamily& f = families[k];
    const std::string head = "q = " + f.q.to_string() + ": ";
    auto add = [&](Outcome o, const std::string& d) { out.push_back(result(CheckId::kFamilies, o, head + d, k)); };
    if (f.q.multiplicity > 1) {
      add(Outcome::kFail, "multiple root of H/q (multiplicity " + std::to_string(f.q.multiplicity) + ")");
      continue;
    }
    if (!f.resonances.certified) {
      add(Outcome::kIndeterminate, "could not certify the integer resonance candidates of R(r) = " +
                                       f.res_poly.to_string(20));
      continue;
    }
    if (!f.resonances.all_integer) {
      add(Outcome::kFail, "R(r) = " + f.res_poly.to_string(20) +
                              " has non-integer roots; integer roots " + join(f.resonances.values));
      continue;
    }
    const auto& r = f.resonances.values;
    if (auto dup = std::adjacent_find(r.begin(), r.end()); dup != r.end()) {
      add(Outcome::kFail, "repeated resonance " + std::to_string(*dup) + " in " + join(r));
      continue;
    }
    if (!std::binary_search(r.begin(), r.end(), -1)) {
      add(Outcome::kFail, "-1 missing from resonances " + join(r));
      continue;
    }
    if (std::binary_search(r.begin(), r.end(), 0)) {
      add(Outcome::kFail, "zero resonance in " + join(r));
      continue;
    }
    GaussRational prod(1);
    for (auto v : r) prod = prod * integer(v);
    bool agrees = true;
    if (f.product->exact) {
      agrees = *f.product->exact == prod;
    } else {
      Ball diff = f.product->ball;
      diff.mid -= BigComplex(prod, diff.mid.precision());
      agrees = diff.contains_zero();
    }
    if (!agrees) {
      add(Outcome::kFail, "product of resonances " + prod.to_string() + " differs from (-1)^" +
                              std::to_string(order) + " H'(q) = " + f.product->to_string(20));
      continue;
    }
    add(Outcome::kPass, "resonances " + join(r) + ", Pr = " + f.product->to_string(20));
  }
  return out;
}

CheckResult check_residue_identity(const std::vector<PoleFamily>& families, unsigned order,
                                   long pole_order) {
  const mpz_class fact = factorial(static_cast<unsigned>(order + pole_order - 1));
  const GaussRational target{mpq_class(mpz_class(-1), fact)};
  const std::string rhs = "-1/" + std::to_string(order + pole_order - 1) + "! = " + target.to_string();
  bool all_exact = true;
  for (const auto& f : families) {
    if (!f.product) {
      return result(CheckId::kResidueIdentity, Outcome::kIndeterminate, "a family has no product");
    }
    all_exact = all_exact && f.product->exact.has_value();
  }
  if (all_exact) {
    GaussRational sum;
    for (const auto& f : families) sum = sum + GaussRational(1) / *f.product->exact;
    const bool ok = sum == target;
    return result(CheckId::kResidueIdentity, ok ? Outcome::kPass : Outcome::kFail,
                  "sum 1/Pr = " + sum.to_string() + (ok ? " equals " : " differs from ") + rhs);
  }
  const mpfr_prec_t prec = families.front().product->ball.mid.precision();
  Ball sum{BigComplex(prec), BigFloat(0L, prec)};
  for (const auto& f : families) {
    if (f.product->ball.contains_zero()) {
      return result(CheckId::kResidueIdentity, Outcome::kIndeterminate,
                    "enclosure of Pr contains zero for q = " + f.q.to_string());
    }
    sum = sum + inverse(f.product->ball);
  }
  Ball diff = sum;
  diff.mid -= BigComplex(target, prec);
  const bool ok = diff.contains_zero();
  return result(CheckId::kResidueIdentity, ok ? Outcome::kPass : Outcome::kFail,
                "sum 1/Pr in disc " + sum.mid.re.to_string(20) + (sum.mid.im.sign() < 0 ? "" : "+") +
                    sum.mid.im.to_string(20) + "i +/- " + sum.radius.to_string(3) +
                    (ok ? ", containing " : ", excluding ") + rhs);
}

std::vector<CheckResult> check_sum_identities(const std::vector<PoleFamily>& families,
                                              const EvaluatedODE& eq) {
  std::vector<CheckResult> out;
  const long n = eq.order;
  const mpq_class& b = eq.leading.bureau;
  // The literal patterns collide with w^2 for small n and then count twice.
  const GaussRational a_eff = n == 1 ? eq.coeff_a * GaussRational(2) : eq.coeff_a;
  const GaussRational b_eff = n == 2 ? eq.coeff_b * GaussRational(2) : eq.coeff_b;
  for (std::size_t k = 0; k < families.size(); ++k) {
    const PoleFamily& f = families[k];
    auto add = [&](Outcome o, const std::string& d) {
      out.push_back(result(CheckId::kSumIdentities, o, "q = " + f.q.to_string() + ": " + d, k));
    };
    long long s1 = 0, s2 = 0;
    for (auto r : f.resonances.values) {
      s1 += r;
      s2 += static_cast<long long>(r) * r;
    }
    if (b == 1) {
      const long long base = n * (n + 1) / 2;
      const Poly lhs = Poly({integer(base - s1), a_eff});  // base + A q - sum r
      const auto holds = holds_at(lhs, f.q);
      const std::string d = "sum r = " + std::to_string(s1) + ", n(n+1)/2 + A q with A = " +
                            a_eff.to_string();
      if (!holds) add(Outcome::kIndeterminate, d + ": undecided");
      else add(*holds ? Outcome::kPass : Outcome::kFail, d + (*holds ? ": holds" : ": violated"));
      continue;
    }
    const long long base1 = 2 * n + n * (n - 1) / 2;
    long long base2 = 0;
    for (long j = 0; j < n; ++j) base2 += (2 + j) * (2 + j);
    if (s1 != base1) {
      add(Outcome::kFail, "sum r = " + std::to_string(s1) + " differs from 2n + n(n-1)/2 = " +
                              std::to_string(base1));
      continue;
    }
    const Poly lhs = Poly({integer(base2 - s2), b_eff * GaussRational(2)});
    const auto holds = holds_at(lhs, f.q);
    std::string d = "sum r = " + std::to_string(s1) + ", sum r^2 = " + std::to_string(s2) +
                    ", expected " + std::to_string(base2) + " + 2 B q with B = " + b_eff.to_string();
    if (!holds) {
      add(Outcome::kIndeterminate, d + ": undecided");
    } else if (!*holds) {
      add(Outcome::kFail, d + ": violated");
    } else if (!b_eff.is_zero() && s2 <= base2) {
      // The identity fixes B q = (sum r^2 - base) / 2, a real number.
      add(Outcome::kFail, d + ": B q = " + GaussRational(mpq_class(mpz_class(std::to_string(s2 - base2)), 2)).to_string() +
                              " is not positive");
    } else {
      add(Outcome::kPass, d + ": holds" + (b_eff.is_zero() ? "" : ", B q > 0"));
    }
  }
  return out;
}

std::vector<CheckResult> check_compatibility(const EvaluatedODE& eq,
                                             const std::vector<PoleFamily>& families,
                                             unsigned max_depth) {
  std::vector<CheckResult> out;
  for (std::size_t k = 0; k < families.size(); ++k) {
    const PoleFamily& f = families[k];
    auto add = [&](Outcome o, const std::string& d) {
      out.push_back(result(CheckId::kCompatibility, o, "q = " + f.q.to_string() + ": " + d, k));
    };
    std::vector<unsigned> positive;
    for (auto r : f.resonances.values) {
      if (r > 0) positive.push_back(static_cast<unsigned>(std::min<std::int64_t>(r, UINT32_MAX)));
    }
    if (positive.empty()) {
      add(Outcome::kPass, "no positive resonances");
      continue;
    }
    const unsigned depth = positive.back();
    if (depth > max_depth) {
      add(Outcome::kIndeterminate, "resonance " + std::to_string(depth) + " exceeds the depth limit " +
                                       std::to_string(max_depth));
      continue;
    }
    if (!f.q.exact) {
      add(Outcome::kIndeterminate, "recursion needs an exact leading coefficient");
      continue;
    }
    std::map<unsigned, GaussRational> zeros, generic;
    for (unsigned j : positive) {
      zeros[j] = GaussRational(0);
      generic[j] = GaussRational::from_fraction(2 * static_cast<long>(j) + 3, static_cast<long>(j) + 5);
    }
    try {
      expand_laurent(eq, f, depth, zeros, max_depth);
      expand_laurent(eq, f, depth, generic, max_depth);
      std::ostringstream os;
      os << "conditions hold at resonances";
      for (unsigned j : positive) os << ' ' << j;
      add(Outcome::kPass, os.str());
    } catch (const CompatibilityFailure& e) {
      add(Outcome::kFail, e.what());
    }
  }
  return out;
}

CheckResult check_negative_resonance_theorem(const std::vector<PoleFamily>& families,
                                             unsigned top_degree, unsigned order) {
  if (top_degree <= 2 || order <= 3) {
    return result(CheckId::kNegativeResonanceTheorem, Outcome::kSkipped,
                  "applies only when d > 2 and n > 3 (d = " + std::to_string(top_degree) +
                      ", n = " + std::to_string(order) + ")");
  }
  for (std::size_t k = 0; k < families.size(); ++k) {
    for (auto r : families[k].resonances.values) {
      if (r < -1) {
        return result(CheckId::kNegativeResonanceTheorem, Outcome::kPass,
                      "nontrivial negative resonance " + std::to_string(r) + " for q = " +
                          families[k].q.to_string());
      }
    }
  }
  CheckResult r = result(CheckId::kNegativeResonanceTheorem, Outcome::kFail,
                         "InconsistencyWithTheorem: every other check passed with d > 2 and n > 3, "
                         "yet no family has a resonance below -1");
  r.diagnostic = true;
  return r;
}

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(std::vector<std::pair<std::string, double>>& sink) : sink_(sink) {}
  void lap(const std::string& stage) {
    const auto now = std::chrono::steady_clock::now();
    sink_.emplace_back(stage, std::chrono::duration<double, std::milli>(now - last_).count());
    last_ = now;
  }

 private:
  std::vector<std::pair<std::string, double>>& sink_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

void self_check(const Analysis& a) {
  const Poly oracle_h = oracle_H(a.eq);
  if (oracle_h != a.h->full()) {
    throw SelfCheckMismatch("self-check: series oracle gives H = " + oracle_h.to_string("q") +
                            ", builder gives " + a.h->full().to_string("q"));
  }
  for (const auto& f : a.families) {
    if (!f.q.exact) continue;
    const Poly oracle_r = oracle_R(a.eq, *f.q.exact);
    if (oracle_r != *f.res_poly.exact) {
      throw SelfCheckMismatch("self-check: at q = " + f.q.to_string() + " series oracle gives R = " +
                              oracle_r.to_string("r") + ", builder gives " +
                              f.res_poly.exact->to_string("r"));
    }
  }
}

bool any_fails(const std::vector<CheckResult>& rs) {
  return std::any_of(rs.begin(), rs.end(), [](const CheckResult& r) { return r.hard_failure(); });
}

bool any_undecided(const std::vector<CheckResult>& rs) {
  return std::any_of(rs.begin(), rs.end(),
                     [](const CheckResult& r) { return r.outcome == Outcome::kIndeterminate; });
}

}  // namespace

Analysis analyze(const PolynomialODE& ode, const AnalysisOptions& options) {
  Analysis a;
  a.ode = ode;
  Stopwatch clock(a.timings_ms);
  const GaussRational z0 = options.z0 ? *options.z0 : choose_base_point(ode);
  if (!ode.is_nonlinear()) throw LinearEquation("equation has no term of degree above 1");
  a.eq = evaluate_at(ode, z0);
  const LeadingData& lead = a.eq.leading;
  const unsigned n = a.eq.order;
  auto& reasons = a.verdict.reasons;
  auto append = [&](std::vector<CheckResult> rs) { reasons.insert(reasons.end(), rs.begin(), rs.end()); };
  clock.lap("structure");

  auto finish = [&]() -> Analysis {
    a.verdict.status = decide(reasons);
    if (a.verdict.status == Status::kPassesNecessary) {
      a.notes.push_back(
          "passing covers necessary conditions for poles of order B only; it does not establish "
          "the Painlevé property");
    }
    clock.lap("verdict");
    return std::move(a);
  };

  reasons.push_back(check_bureau(lead));
  const bool typical = reasons.back().outcome == Outcome::kPass;
  const long s = typical ? lead.bureau.get_num().get_si() : 0;
  if (typical) {
    a.h = determining_polynomial(a.eq);
    if (a.h->m() >= 1) {
      try {
        a.families = pole_families(a.eq, *a.h, options.precision);
      } catch (const NumericFailure& e) {
        a.notes.push_back(std::string("pole families unavailable: ") + e.what());
      }
    }
    clock.lap("families");
    if (options.self_check) {
      self_check(a);
      clock.lap("self_check");
    }
  }
  if (!typical) return finish();

  reasons.push_back(check_leading_derivative(lead, n));
  if (reasons.back().hard_failure()) return finish();

  reasons.push_back(check_vanish(lead, *a.h));
  if (reasons.back().hard_failure()) return finish();

  if (a.families.empty()) {
    reasons.push_back(result(CheckId::kFamilies, Outcome::kIndeterminate,
                             "roots of H/q could not be certified at the requested precision"));
    return finish();
  }
  const auto fam = check_families(a.families, n);
  append(fam);
  if (any_fails(fam) || any_undecided(fam)) return finish();

  reasons.push_back(check_residue_identity(a.families, n, s));
  if (reasons.back().hard_failure()) return finish();

  const auto sums = check_sum_identities(a.families, a.eq);
  append(sums);
  if (s == 2) {
    a.notes.push_back("the second-moment identity is checked with coefficient 2 on B q, as "
                      "obtained from the resonance polynomial by Vieta's formulas");
  }
  if (any_fails(sums)) return finish();
  clock.lap("identities");

  const auto compat = check_compatibility(a.eq, a.families, options.max_depth);
  append(compat);
  clock.lap("compatibility");
  if (any_fails(compat)) return finish();

  if (decide(reasons) == Status::kPassesNecessary) {
    reasons.push_back(check_negative_resonance_theorem(a.families, lead.top_degree, n));
  } else {
    reasons.push_back(result(CheckId::kNegativeResonanceTheorem, Outcome::kSkipped,
                             "requires every other check to pass"));
  }
  return finish();
}

Verdict full_verdict(const PolynomialODE& ode, std::optional<GaussRational> z0) {
  AnalysisOptions options;
  options.z0 = std::move(z0);
  return analyze(ode, options).verdict;
}

}  // namespace painleve
