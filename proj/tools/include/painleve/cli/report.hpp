#pragma once

#include "painleve/conditions.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace painleve::cli {

using Json = nlohmann::ordered_json;

/// An exact value ("1/2+1/3i") or a decimal enclosure.
struct ValueText {
  std::optional<std::string> exact;
  std::string re, im, error_bound;

  friend bool operator==(const ValueText&, const ValueText&) = default;
};

struct FamilySummary {
  ValueText q;
  unsigned multiplicity = 1;
  std::string resonance_poly;
  bool all_integer = false;
  std::vector<std::int64_t> resonances;
  std::optional<ValueText> product;
  std::vector<std::int64_t> negatives;

  friend bool operator==(const FamilySummary&, const FamilySummary&) = default;
};

struct AnalysisReport {
  std::string version;
  std::string input;
  std::string canonical;
  unsigned order = 0;
  std::string bureau;
  unsigned degree_d = 0;
  std::optional<int> m;
  std::string determining_poly;
  std::string z0;
  std::vector<FamilySummary> families;
  std::vector<CheckResult> checks;
  Status verdict = Status::kIndeterminate;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, double>> timings_ms;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Decimal digits matching a binary precision.
int decimal_digits(mpfr_prec_t precision);

AnalysisReport make_report(const Analysis& analysis, std::string input, mpfr_prec_t precision);

Json to_json(const AnalysisReport& report, bool with_timings = false);
/// Inverse of to_json; throws nlohmann::json::exception or std::invalid_argument.
AnalysisReport report_from_json(const Json& j);

std::string render_text(const AnalysisReport& report, bool with_timings = false);

}  // namespace painleve::cli
