#pragma once

#include "painleve/errors.hpp"
#include "painleve/ode.hpp"
#include "painleve/painleve_test.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace painleve {

enum class CheckId {
  kBureau,
  kLeadingDerivative,
  kVanish,
  kFamilies,
  kResidueIdentity,
  kSumIdentities,
  kCompatibility,
  kNegativeResonanceTheorem,
};

enum class Outcome { kPass, kFail, kIndeterminate, kSkipped };

std::string to_string(CheckId id);   // "check_bureau", ...
std::string to_string(Outcome outcome);
std::optional<CheckId> check_id_from_string(const std::string& s);
std::optional<Outcome> outcome_from_string(const std::string& s);

struct CheckResult {
  CheckId id;
  Outcome outcome;
  std::string detail;
  std::optional<std::size_t> family;
  /// A failing diagnostic check is reported but does not decide the verdict.
  bool diagnostic = false;

  bool hard_failure() const { return outcome == Outcome::kFail && !diagnostic; }
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

enum class Status { kFailsPainleve, kPassesNecessary, kIndeterminate };

std::string to_string(Status status);
std::optional<Status> status_from_string(const std::string& s);

struct Verdict {
  Status status = Status::kIndeterminate;
  std::vector<CheckResult> reasons;

  /// First hard failure, if any.
  const CheckResult* first_failure() const;
};

/// FailsPainleve on any hard failure, else Indeterminate on any undecided
/// check, else PassesNecessary.
Status decide(const std::vector<CheckResult>& reasons);

CheckResult check_bureau(const LeadingData& leading);
CheckResult check_leading_derivative(const LeadingData& leading, unsigned order);
CheckResult check_vanish(const LeadingData& leading, const DeterminingPoly& h);
std::vector<CheckResult> check_families(const std::vector<PoleFamily>& families, unsigned order);
CheckResult check_residue_identity(const std::vector<PoleFamily>& families, unsigned order,
                                   long pole_order);
/// One result per family.
std::vector<CheckResult> check_sum_identities(const std::vector<PoleFamily>& families,
                                              const EvaluatedODE& eq);
/// Runs the Laurent recursion up to the largest positive resonance with two
/// assignments of the free coefficients. One result per family.
std::vector<CheckResult> check_compatibility(const EvaluatedODE& eq,
                                             const std::vector<PoleFamily>& families,
                                             unsigned max_depth = kDefaultMaxDepth);
/// Diagnostic: an equation that passes everything else with d > 2 and n > 3
/// must have a resonance below -1 in some family.
CheckResult check_negative_resonance_theorem(const std::vector<PoleFamily>& families,
                                             unsigned top_degree, unsigned order);

struct AnalysisOptions {
  std::optional<GaussRational> z0;
  mpfr_prec_t precision = kDefaultPrecision;
  unsigned max_depth = kDefaultMaxDepth;
  bool self_check = false;
};

/// Raised by --self-check when the builders and the series oracle disagree.
class SelfCheckMismatch : public Error {
 public:
  using Error::Error;
};

struct Analysis {
  PolynomialODE ode;
  EvaluatedODE eq;
  std::optional<DeterminingPoly> h;
  std::vector<PoleFamily> families;
  Verdict verdict;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, double>> timings_ms;
};

/// Runs the battery in the order bureau, leading derivative, vanish, families,
/// residue identity, sum identities, compatibility, negative-resonance theorem,
/// stopping at the first hard failure.
Analysis analyze(const PolynomialODE& ode, const AnalysisOptions& options = {});

Verdict full_verdict(const PolynomialODE& ode, std::optional<GaussRational> z0 = std::nullopt);

}  // namespace painleve
