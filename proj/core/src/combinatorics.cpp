#include "painleve/combinatorics.hpp"

#include "painleve/errors.hpp"
#include "painleve/gauss_rational.hpp"

#include <functional>
#include <string>

namespace painleve {

namespace {

void require_feasible(unsigned t, unsigned long S) {
  if (t == 0) throw std::invalid_argument("t must be positive");
  const unsigned long least = static_cast<unsigned long>(t) * (t + 1) / 2;
  if (S < least) {
    throw InfeasibleSum("no " + std::to_string(t) + " distinct naturals sum to " + std::to_string(S) +
                        " (minimum " + std::to_string(least) + ")");
  }
}

}  // namespace

DenseSet pmax_dense_set(unsigned t, unsigned long S) {
  require_feasible(t, S);
  // S/t - (t-1)/2 = tau + eps, with eps*t an integer in [0, t).
  const unsigned long shifted = S - static_cast<unsigned long>(t) * (t - 1) / 2;
  const unsigned long tau = shifted / t;
  const unsigned long eps_t = shifted % t;
  return {tau, tau + t - eps_t};
}

mpz_class pmax(unsigned t, unsigned long S) {
  const DenseSet d = pmax_dense_set(t, S);
  const mpz_class num = factorial(static_cast<unsigned>(t + d.tau));
  const mpz_class den = factorial(static_cast<unsigned>(d.tau - 1)) * mpz_class(std::to_string(d.zeta));
  return num / den;
}

mpz_class pmax_bruteforce(unsigned t, unsigned long S) {
  if (t > 8 || S > 80) {
    throw OutOfBounds("exhaustive search limited to t <= 8 and S <= 80");
  }
  require_feasible(t, S);
  mpz_class best = 0;
  // Ascending choice of distinct naturals, each at least `from`.
  std::function<void(unsigned, unsigned long, unsigned long, const mpz_class&)> walk =
      [&](unsigned left, unsigned long from, unsigned long rest, const mpz_class& prod) {
        if (left == 0) {
          if (rest == 0 && prod > best) best = prod;
          return;
        }
        if (left == 1) {
          if (rest >= from) walk(0, rest + 1, 0, prod * rest);
          return;
        }
        for (unsigned long v = from;; ++v) {
          // The remaining left-1 values exceed v.
          const unsigned long tail = (left - 1) * v + static_cast<unsigned long>(left) * (left - 1) / 2;
          if (v + tail > rest) break;
          walk(left - 1, v + 1, rest - v, prod * v);
        }
      };
  walk(t, 1, S, mpz_class(1));
  return best;
}

std::vector<ResonancePattern> enumerate_resonance_sets(unsigned n, long required_sum,
                                                       unsigned min_positive) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (min_positive < 1) throw std::invalid_argument("min_positive must be at least 1");
  std::vector<ResonancePattern> out;
  ResonancePattern current{-1};
  std::function<void(unsigned, long, long)> walk = [&](unsigned left, long from, long rest) {
    if (left == 1) {
      if (rest >= from) {
        current.push_back(rest);
        out.push_back(current);
        current.pop_back();
      }
      return;
    }
    for (long v = from;; ++v) {
      // v plus left-1 larger values: v*left + left(left-1)/2 at least.
      if (v * static_cast<long>(left) + static_cast<long>(left) * (left - 1) / 2 > rest) break;
      current.push_back(v);
      walk(left - 1, v + 1, rest - v);
      current.pop_back();
    }
  };
  walk(n - 1, static_cast<long>(min_positive), required_sum + 1);
  return out;
}

}  // namespace painleve
