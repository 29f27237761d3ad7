#pragma once

#include "painleve/gauss_rational.hpp"
#include "painleve/poly.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace painleve {

/// Exponents (chi_0, ..., chi_{n-1}) of a monomial in w, w', ..., w^(n-1).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) {}

  /// e_0 + e_{n-1}: the w*w^(n-1) pattern (collapses to (2) for n = 1).
  static MultiIndex pattern_a(std::size_t order);
  /// e_0 + e_{n-2}: the w*w^(n-2) pattern (collapses to (2,0) for n = 2); none for n < 2.
  static std::optional<MultiIndex> pattern_b(std::size_t order);

  std::size_t size() const noexcept { return exponents_.size(); }
  unsigned operator[](std::size_t j) const { return exponents_[j]; }
  const std::vector<unsigned>& exponents() const noexcept { return exponents_; }

  /// |chi|
  unsigned degree() const;
  /// nu(chi) = sum j*chi_j
  unsigned weight() const;

  std::string to_string() const;  // "(1,0,1,0)"

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<unsigned> exponents_;
};

/// Degree descending, then lexicographically descending: the canonical term order.
bool graded_before(const MultiIndex& a, const MultiIndex& b);

using CoeffPoly = Poly;

/// w^(n) = sum over terms of a_chi(z) * prod (w^(j))^chi_j.
class PolynomialODE {
 public:
  PolynomialODE() = default;
  /// Zero coefficients are dropped; keys must have length `order`.
  PolynomialODE(unsigned order, std::map<MultiIndex, CoeffPoly> terms);

  unsigned order() const noexcept { return order_; }
  const std::map<MultiIndex, CoeffPoly>& terms() const noexcept { return terms_; }
  bool is_nonlinear() const;

  friend bool operator==(const PolynomialODE&, const PolynomialODE&) = default;

 private:
  unsigned order_ = 0;
  std::map<MultiIndex, CoeffPoly> terms_;
};

struct LeadingData {
  mpq_class bureau;
  std::set<MultiIndex> omega0;
  unsigned top_degree = 0;
  CoeffPoly coeff_a;  // a at pattern_a, zero when absent
  CoeffPoly coeff_b;  // a at pattern_b, zero when absent

  bool bureau_is_integer() const { return bureau.get_den() == 1; }
};

/// The equation with coefficients frozen at z0; `local` keeps a_chi(z0 + t).
struct EvaluatedODE {
  unsigned order = 0;
  GaussRational z0;
  std::map<MultiIndex, GaussRational> terms;
  std::map<MultiIndex, Poly> local;
  LeadingData leading;
  GaussRational coeff_a;
  GaussRational coeff_b;
};

/// min over nonlinear terms of (n - nu) / (|chi| - 1). Throws LinearEquation.
mpq_class bureau_number(const PolynomialODE& ode);

/// Omega_0 = { chi : B*|chi| + nu(chi) = n + B, |chi| > 1 } and d = max |chi|.
LeadingData leading_terms(const PolynomialODE& ode);

/// First of 0, 1, -1, 2, -2, ... that is a root of no term coefficient.
GaussRational choose_base_point(const PolynomialODE& ode);

/// Throws ExcludedPoint naming the first vanishing coefficient.
EvaluatedODE evaluate_at(const PolynomialODE& ode, const GaussRational& z0);

/// Coefficients of the equation satisfied by W where w = lambda * W:
/// a_chi -> a_chi * lambda^(|chi| - 1).
PolynomialODE rescale(const PolynomialODE& ode, const GaussRational& lambda);

}  // namespace painleve
