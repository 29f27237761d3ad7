#include "painleve/ode.hpp"

#include "painleve/errors.hpp"

#include <numeric>
#include <sstream>

namespace painleve {

MultiIndex MultiIndex::pattern_a(std::size_t order) {
  std::vector<unsigned> e(order, 0);
  e[0] += 1;
  e[order - 1] += 1;
  return MultiIndex(std::move(e));
}

std::optional<MultiIndex> MultiIndex::pattern_b(std::size_t order) {
  if (order < 2) return std::nullopt;
  std::vector<unsigned> e(order, 0);
  e[0] += 1;
  e[order - 2] += 1;
  return MultiIndex(std::move(e));
}

unsigned MultiIndex::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0U);
}

unsigned MultiIndex::weight() const {
  unsigned nu = 0;
  for (std::size_t j = 0; j < exponents_.size(); ++j) nu += static_cast<unsigned>(j) * exponents_[j];
  return nu;
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < exponents_.size(); ++j) os << (j ? "," : "") << exponents_[j];
  os << ')';
  return os.str();
}

bool graded_before(const MultiIndex& a, const MultiIndex& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  return a > b;
}

PolynomialODE::PolynomialODE(unsigned order, std::map<MultiIndex, CoeffPoly> terms)
    : order_(order) {
  if (order == 0) throw std::invalid_argument("equation order must be at least 1");
  for (auto& [chi, a] : terms) {
    if (chi.size() != order) {
      throw std::invalid_argument("multi-index " + chi.to_string() + " does not match order " +
                                  std::to_string(order));
    }
    if (!a.is_zero()) terms_.emplace(chi, std::move(a));
  }
}

bool PolynomialODE::is_nonlinear() const {
  for (const auto& [chi, a] : terms_) {
    if (chi.degree() > 1) return true;
  }
  return false;
}

mpq_class bureau_number(const PolynomialODE& ode) {
  std::optional<mpq_class> best;
  const long n = ode.order();
  for (const auto& [chi, a] : ode.terms()) {
    if (chi.degree() <= 1) continue;
    mpq_class ratio{mpz_class(n - static_cast<long>(chi.weight())),
                    mpz_class(static_cast<long>(chi.degree()) - 1)};
    ratio.canonicalize();
    if (!best || ratio < *best) best = ratio;
  }
  if (!best) throw LinearEquation("equation has no term of degree greater than one");
  return *best;
}

LeadingData leading_terms(const PolynomialODE& ode) {
  LeadingData data;
  data.bureau = bureau_number(ode);
  const mpq_class target = ode.order() + data.bureau;
  for (const auto& [chi, a] : ode.terms()) {
    if (chi.degree() <= 1) continue;
    if (data.bureau * chi.degree() + chi.weight() == target) {
      data.omega0.insert(chi);
      data.top_degree = std::max(data.top_degree, chi.degree());
    }
  }
  const auto find = [&](const MultiIndex& chi) -> CoeffPoly {
    auto it = ode.terms().find(chi);
    return it == ode.terms().end() ? CoeffPoly() : it->second;
  };
  data.coeff_a = find(MultiIndex::pattern_a(ode.order()));
  if (auto b = MultiIndex::pattern_b(ode.order())) data.coeff_b = find(*b);
  return data;
}

GaussRational choose_base_point(const PolynomialODE& ode) {
  for (long k = 0; k < 1000; ++k) {
    // 0, 1, -1, 2, -2, ...
    const long candidate = (k % 2 == 1) ? (k + 1) / 2 : -(k / 2);
    const GaussRational z(candidate);
    bool clean = true;
    for (const auto& [chi, a] : ode.terms()) {
      if (a(z).is_zero()) {
        clean = false;
        break;
      }
    }
    if (clean) return z;
  }
  throw NoBasePoint("no admissible base point among the first 1000 probe values");
}

EvaluatedODE evaluate_at(const PolynomialODE& ode, const GaussRational& z0) {
  EvaluatedODE eq;
  eq.order = ode.order();
  eq.z0 = z0;
  for (const auto& [chi, a] : ode.terms()) {
    GaussRational value = a(z0);
    if (value.is_zero()) {
      throw ExcludedPoint("coefficient of " + chi.to_string() + " vanishes at z0 = " +
                          z0.to_string());
    }
    eq.terms.emplace(chi, std::move(value));
    eq.local.emplace(chi, a.taylor_shift(z0));
  }
  if (ode.is_nonlinear()) {
    eq.leading = leading_terms(ode);
    eq.coeff_a = eq.leading.coeff_a(z0);
    eq.coeff_b = eq.leading.coeff_b(z0);
  }
  return eq;
}

PolynomialODE rescale(const PolynomialODE& ode, const GaussRational& lambda) {
  if (lambda.is_zero()) throw std::invalid_argument("rescale by zero");
  std::map<MultiIndex, CoeffPoly> terms;
  for (const auto& [chi, a] : ode.terms()) {
    GaussRational factor = chi.degree() >= 1 ? pow(lambda, chi.degree() - 1)
                                             : GaussRational(1) / lambda;
    terms.emplace(chi, a * factor);
  }
  return PolynomialODE(ode.order(), std::move(terms));
}

}  // namespace painleve
