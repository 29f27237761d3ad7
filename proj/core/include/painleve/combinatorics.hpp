#pragma once

#include <gmpxx.h>

#include <vector>

namespace painleve {

/// Largest product of t pairwise different naturals summing to S:
/// (t + tau)! / ((tau - 1)! * zeta), realized by {tau, ..., tau + t} minus zeta.
/// Throws InfeasibleSum when S < t(t+1)/2.
mpz_class pmax(unsigned t, unsigned long S);

/// Exhaustive maximum. Limited to t <= 8, S <= 80 (OutOfBounds beyond).
mpz_class pmax_bruteforce(unsigned t, unsigned long S);

/// The dense-set parameters behind pmax.
struct DenseSet {
  unsigned long tau;
  unsigned long zeta;
};
DenseSet pmax_dense_set(unsigned t, unsigned long S);

using ResonancePattern = std::vector<long>;

/// Every ascending set of n distinct integers made of -1 and n - 1 integers
/// >= min_positive, with total required_sum. Lexicographic order.
std::vector<ResonancePattern> enumerate_resonance_sets(unsigned n, long required_sum,
                                                       unsigned min_positive);

}  // namespace painleve
