#include "painleve/cli/report.hpp"

#include "painleve/parser.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#ifndef PAINLEVE_VERSION
#define PAINLEVE_VERSION "0.0.0"
#endif

namespace painleve::cli {

namespace {

ValueText value_text(const BigComplex& mid, const BigFloat& radius, int digits) {
  return {std::nullopt, mid.re.to_string(digits), mid.im.to_string(digits), radius.to_string(3)};
}

ValueText value_text(const RootQ& q, int digits) {
  if (q.exact) return {q.exact->to_string(), {}, {}, {}};
  return value_text(q.approx.value, q.approx.radius, digits);
}

ValueText value_text(const Scalar& s, int digits) {
  if (s.exact) return {s.exact->to_string(), {}, {}, {}};
  return value_text(s.ball.mid, s.ball.radius, digits);
}

Json value_json(const ValueText& v) {
  if (v.exact) return *v.exact;
  Json j;
  j["re"] = v.re;
  j["im"] = v.im;
  j["error_bound"] = v.error_bound;
  return j;
}

ValueText value_from_json(const Json& j) {
  if (j.is_string()) return {j.get<std::string>(), {}, {}, {}};
  return {std::nullopt, j.at("re").get<std::string>(), j.at("im").get<std::string>(),
          j.at("error_bound").get<std::string>()};
}

std::string value_string(const ValueText& v) {
  if (v.exact) return *v.exact;
  std::string out = v.re;
  if (v.im.empty() || v.im.front() != '-') out += '+';
  return out + v.im + "i +/- " + v.error_bound;
}

std::string join(const std::vector<std::int64_t>& values) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << values[i];
  os << '}';
  return os.str();
}

template <typename T, typename F>
T parse_enum(const Json& j, F from_string) {
  const auto s = j.get<std::string>();
  if (auto v = from_string(s)) return *v;
  throw std::invalid_argument("unknown value '" + s + "'");
}

}  // namespace

int decimal_digits(mpfr_prec_t precision) {
  return static_cast<int>(std::ceil(static_cast<double>(precision) * std::log10(2.0)));
}

AnalysisReport make_report(const Analysis& a, std::string input, mpfr_prec_t precision) {
  const int digits = decimal_digits(precision);
  AnalysisReport r;
  r.version = PAINLEVE_VERSION;
  r.input = std::move(input);
  r.canonical = render_canonical(a.ode);
  r.order = a.eq.order;
  r.bureau = a.eq.leading.bureau.get_str();
  r.degree_d = a.eq.leading.top_degree;
  if (a.h) {
    r.m = a.h->m();
    r.determining_poly = a.h->reduced.to_string("q");
  }
  r.z0 = a.eq.z0.to_string();
  for (const auto& f : a.families) {
    FamilySummary s;
    s.q = value_text(f.q, digits);
    s.multiplicity = f.q.multiplicity;
    s.resonance_poly = f.res_poly.to_string(digits);
    s.all_integer = f.resonances.all_integer;
    s.resonances = f.resonances.values;
    if (f.product) s.product = value_text(*f.product, digits);
    s.negatives = f.negatives;
    r.families.push_back(std::move(s));
  }
  r.checks = a.verdict.reasons;
  r.verdict = a.verdict.status;
  r.notes = a.notes;
  r.timings_ms = a.timings_ms;
  return r;
}

Json to_json(const AnalysisReport& r, bool with_timings) {
  Json j;
  j["version"] = r.version;
  j["input"] = r.input;
  j["canonical"] = r.canonical;
  j["order"] = r.order;
  j["bureau"] = r.bureau;
  j["degree_d"] = r.degree_d;
  j["m"] = r.m ? Json(*r.m) : Json(nullptr);
  j["determining_poly"] = r.determining_poly;
  j["z0"] = r.z0;
  j["families"] = Json::array();
  for (const auto& f : r.families) {
    Json fj;
    fj["q"] = value_json(f.q);
    fj["q_exact"] = f.q.exact.has_value();
    fj["multiplicity"] = f.multiplicity;
    fj["resonance_poly"] = f.resonance_poly;
    fj["resonances"] = f.resonances;
    fj["all_integer"] = f.all_integer;
    fj["product"] = f.product ? value_json(*f.product) : Json(nullptr);
    fj["negatives"] = f.negatives;
    j["families"].push_back(std::move(fj));
  }
  j["checks"] = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["id"] = to_string(c.id);
    cj["outcome"] = to_string(c.outcome);
    cj["detail"] = c.detail;
    cj["family"] = c.family ? Json(*c.family) : Json(nullptr);
    if (c.diagnostic) cj["diagnostic"] = true;
    j["checks"].push_back(std::move(cj));
  }
  j["verdict"] = to_string(r.verdict);
  j["notes"] = r.notes;
  if (with_timings) {
    Json t = Json::object();
    for (const auto& [stage, ms] : r.timings_ms) t[stage] = ms;
    j["timings_ms"] = std::move(t);
  }
  return j;
}

AnalysisReport report_from_json(const Json& j) {
  AnalysisReport r;
  r.version = j.at("version").get<std::string>();
  r.input = j.at("input").get<std::string>();
  r.canonical = j.at("canonical").get<std::string>();
  r.order = j.at("order").get<unsigned>();
  r.bureau = j.at("bureau").get<std::string>();
  r.degree_d = j.at("degree_d").get<unsigned>();
  if (!j.at("m").is_null()) r.m = j.at("m").get<int>();
  r.determining_poly = j.at("determining_poly").get<std::string>();
  r.z0 = j.at("z0").get<std::string>();
  for (const auto& fj : j.at("families")) {
    FamilySummary f;
    f.q = value_from_json(fj.at("q"));
    f.multiplicity = fj.at("multiplicity").get<unsigned>();
    f.resonance_poly = fj.at("resonance_poly").get<std::string>();
    f.resonances = fj.at("resonances").get<std::vector<std::int64_t>>();
    f.all_integer = fj.at("all_integer").get<bool>();
    if (!fj.at("product").is_null()) f.product = value_from_json(fj.at("product"));
    f.negatives = fj.at("negatives").get<std::vector<std::int64_t>>();
    r.families.push_back(std::move(f));
  }
  for (const auto& cj : j.at("checks")) {
    CheckResult c{parse_enum<CheckId>(cj.at("id"), check_id_from_string),
                  parse_enum<Outcome>(cj.at("outcome"), outcome_from_string),
                  cj.at("detail").get<std::string>(),
                  std::nullopt,
                  cj.value("diagnostic", false)};
    if (!cj.at("family").is_null()) c.family = cj.at("family").get<std::size_t>();
    r.checks.push_back(std::move(c));
  }
  r.verdict = parse_enum<Status>(j.at("verdict"), status_from_string);
  r.notes = j.at("notes").get<std::vector<std::string>>();
  if (j.contains("timings_ms")) {
    for (const auto& [stage, ms] : j.at("timings_ms").items()) r.timings_ms.emplace_back(stage, ms.get<double>());
  }
  return r;
}

std::string render_text(const AnalysisReport& r, bool with_timings) {
  std::ostringstream os;
  os << "painleve-probe " << r.version << '\n';
  os << "input:     " << r.input << '\n';
  os << "equation:  " << r.canonical << '\n';
  os << "order n = " << r.order << ", Bureau number B = " << r.bureau << ", top degree d = " << r.degree_d;
  if (r.m) os << ", m = " << *r.m;
  os << ", z0 = " << r.z0 << '\n';
  if (r.m) os << "H/q = " << r.determining_poly << '\n';
  for (std::size_t k = 0; k < r.families.size(); ++k) {
    const auto& f = r.families[k];
    os << "family " << k << ": q = " << value_string(f.q) << (f.q.exact ? " (exact)" : " (certified)");
    if (f.multiplicity > 1) os << ", multiplicity " << f.multiplicity;
    os << '\n';
    os << "  R(r) = " << f.resonance_poly << '\n';
    os << "  resonances: " << join(f.resonances) << (f.all_integer ? "" : " (not all integer)") << '\n';
    if (f.product) os << "  Pr = " << value_string(*f.product) << '\n';
    os << "  negatives: " << join(f.negatives) << '\n';
  }
  os << "checks:\n";
  for (const auto& c : r.checks) {
    os << "  [" << to_string(c.outcome) << "] " << to_string(c.id);
    if (c.family) os << " (family " << *c.family << ')';
    os << ": " << c.detail << '\n';
  }
  os << "verdict: " << to_string(r.verdict) << '\n';
  for (const auto& n : r.notes) os << "note: " << n << '\n';
  if (with_timings) {
    os << "timings:";
    for (const auto& [stage, ms] : r.timings_ms) os << ' ' << stage << '=' << std::fixed << std::setprecision(3) << ms << "ms";
    os << '\n';
  }
  return os.str();
}

}  // namespace painleve::cli
