#pragma once

#include "painleve/big_float.hpp"
#include "painleve/poly.hpp"

#include <optional>
#include <vector>

namespace painleve {

/// A disc known to contain exactly one root of its owning polynomial.
struct IsolatedRoot {
  BigComplex value;
  BigFloat radius;
};

/// Aberth-Ehrlich simultaneous iteration; uncertified approximations.
std::vector<BigComplex> approximate_roots(const std::vector<BigComplex>& coefficients,
                                          mpfr_prec_t precision);

/// Certified isolation of every root of a squarefree polynomial.
///
/// Discs come from the Weierstrass correction bound (radius = deg * |W_i|),
/// are pairwise disjoint, and each has radius at most 2^(-precision/2).
/// Throws NumericFailure when that cannot be reached at up to twice the
/// requested working precision.
std::vector<IsolatedRoot> isolate_roots(const Poly& squarefree, mpfr_prec_t precision);

/// Enclosure of p over the disc of `at`.
Ball evaluate(const Poly& p, const IsolatedRoot& at);

/// Distinct rational roots of a polynomial with real rational coefficients by
/// the rational-root theorem. nullopt when the divisor search is out of budget.
std::optional<std::vector<GaussRational>> rational_roots(const Poly& p);

/// If the root isolated in `root` is a Gaussian rational, return it (verified exactly).
/// Uses the fact that lead(p_int) * root is a Gaussian integer.
std::optional<GaussRational> recognize_gaussian(const Poly& p, const IsolatedRoot& root);

/// Distinct rational-integer roots, ascending.
std::vector<mpz_class> integer_roots(const Poly& p, mpfr_prec_t precision = 256);

/// Decides g(x*) == 0 where x* is the single root of the squarefree `owner`
/// inside `root`. nullopt when the enclosures are too wide to tell.
std::optional<bool> vanishes_at_root(const Poly& g, const Poly& owner, const IsolatedRoot& root);

/// Positive divisors of |n| in ascending order, or nullopt when |n| > limit.
std::optional<std::vector<mpz_class>> divisors(const mpz_class& n, const mpz_class& limit);

}  // namespace painleve
