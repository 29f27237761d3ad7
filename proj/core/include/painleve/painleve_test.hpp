#pragma once

#include "painleve/big_float.hpp"
#include "painleve/ode.hpp"
#include "painleve/poly.hpp"
#include "painleve/roots.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace painleve {

inline constexpr mpfr_prec_t kDefaultPrecision = 256;
inline constexpr unsigned kDefaultMaxDepth = 64;

/// prod_{k=0}^{j-1} (-s - k): the coefficient produced by differentiating
/// t^(-s) j times. tau(s, 0) = 1.
mpz_class tau(long s, unsigned j);

/// H(q)/q for the pole order B.
struct DeterminingPoly {
  Poly reduced;        // constant term tau(B, n)
  GaussRational h_hat; // leading coefficient of `reduced`

  int m() const { return reduced.degree(); }
  /// H itself, q * reduced.
  Poly full() const { return reduced * Poly::variable(); }
};

/// H(q)/q = tau(B,n) - sum_{Omega_0} a_chi (prod_j tau(B,j)^chi_j) q^(|chi|-1).
/// Requires B to be a positive integer.
DeterminingPoly determining_polynomial(const EvaluatedODE& eq);

/// A nonzero root of H/q, exact in Q(i) or certified numerically.
struct RootQ {
  std::optional<GaussRational> exact;
  IsolatedRoot approx;   // radius 0 when exact
  Poly owner;            // squarefree factor whose only root in `approx` is this one
  unsigned multiplicity = 1;

  bool is_exact() const { return exact.has_value(); }
  std::string to_string(int digits = 30) const;
};

/// Total order: exact roots first, then lexicographic on (re, im).
bool root_before(const RootQ& a, const RootQ& b);

/// All m roots with multiplicity (exact gcd with the derivative first), rational
/// ones by divisor search, Gaussian-rational ones by lattice recognition, the
/// rest by certified simultaneous iteration. Throws NumericFailure.
std::vector<RootQ> determining_roots(const DeterminingPoly& h,
                                     mpfr_prec_t precision = kDefaultPrecision);

/// R(r, q) with q left symbolic: by_power[i] is the coefficient of r^i as a
/// polynomial in q.
struct ResonanceForm {
  std::vector<Poly> by_power;

  Poly at(const GaussRational& q) const;
  std::vector<BigComplex> at(const BigComplex& q) const;
  /// R(k, q) (or its m-th r-derivative) as a polynomial in q.
  Poly at_integer(const mpz_class& k, unsigned derivative = 0) const;
};

ResonanceForm resonance_form(const EvaluatedODE& eq);

struct ResonancePoly {
  unsigned order = 0;
  RootQ q;
  ResonanceForm form;
  std::optional<Poly> exact;       // when q is exact
  std::vector<BigComplex> approx;  // coefficients in r, always filled

  std::string to_string(int digits = 30) const;
};

/// R(r) = tau_r(n) - sum a_chi (prod tau(B,j)^chi_j) q^(|chi|-1) sum_j chi_j tau_r(j)/tau(B,j),
/// tau_r(j) = prod_{k<j} (r - B - k). Monic of degree n.
ResonancePoly resonance_polynomial(const EvaluatedODE& eq, const RootQ& q,
                                   mpfr_prec_t precision = kDefaultPrecision);

struct ResonanceSet {
  bool all_integer = false;
  bool certified = true;             // false when a numeric candidate stayed undecided
  std::vector<std::int64_t> values;  // ascending with multiplicity; integer subset otherwise
};

/// Integer roots of the resonance polynomial. Numeric candidates within 2^-40 of
/// an integer are certified against the exact form before being accepted.
ResonanceSet resonance_roots(const ResonancePoly& rp, mpfr_prec_t precision = kDefaultPrecision);

/// Exact value or certified enclosure.
struct Scalar {
  std::optional<GaussRational> exact;
  Ball ball;

  std::string to_string(int digits = 30) const;
};

/// Pr = (-1)^n H'(q). Throws ZeroProduct at a multiple root.
Scalar resonance_product(const EvaluatedODE& eq, const DeterminingPoly& h, const RootQ& q);

struct PoleFamily {
  RootQ q;
  ResonancePoly res_poly;
  ResonanceSet resonances;
  std::optional<Scalar> product;  // absent for a multiple root
  std::vector<std::int64_t> negatives;
};

/// One family per distinct root, sorted by root_before.
std::vector<PoleFamily> pole_families(const EvaluatedODE& eq, const DeterminingPoly& h,
                                      mpfr_prec_t precision = kDefaultPrecision);

struct LaurentExpansion {
  long pole_order = 0;
  GaussRational q;
  std::vector<GaussRational> coefficients;  // c_1 .. c_depth
  std::set<unsigned> free_indices;
};

/// Solves R(j) c_j = Q_j for j = 1..depth. At a positive resonance j the
/// right side must vanish (else CompatibilityFailure(j)) and c_j takes
/// free_values[j]. Throws DepthBeyondSupport when depth > max_depth.
LaurentExpansion expand_laurent(const EvaluatedODE& eq, const PoleFamily& family, unsigned depth,
                                const std::map<unsigned, GaussRational>& free_values,
                                unsigned max_depth = kDefaultMaxDepth);

}  // namespace painleve
