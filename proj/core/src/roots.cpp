#include "painleve/roots.hpp"

#include "painleve/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace painleve {

namespace {

const mpz_class kDivisorLimit("1000000000000");
constexpr std::size_t kCandidateBudget = 200000;

BigComplex horner(const std::vector<BigComplex>& c, const BigComplex& z) {
  BigComplex acc(z.precision());
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

std::vector<BigComplex> to_big(const Poly& p, mpfr_prec_t precision) {
  std::vector<BigComplex> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.emplace_back(c, precision);
  return out;
}

/// Sum of |a_k| |z|^k, the scale of rounding error in a Horner evaluation.
BigFloat magnitude_sum(const std::vector<BigComplex>& c, const BigFloat& r) {
  BigFloat acc(0L, r.precision());
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + abs(*it);
  return acc;
}

mpz_class common_denominator(const Poly& p) {
  mpz_class d = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.im().get_den_mpz_t());
  }
  return d;
}

Poly strip_zero_roots(Poly p, bool& had_zero) {
  had_zero = false;
  std::size_t shift = 0;
  const auto& c = p.coefficients();
  while (shift < c.size() && c[shift].is_zero()) ++shift;
  if (shift == 0) return p;
  had_zero = true;
  return Poly(std::vector<GaussRational>(c.begin() + static_cast<long>(shift), c.end()));
}

}  // namespace

std::vector<BigComplex> approximate_roots(const std::vector<BigComplex>& coefficients,
                                          mpfr_prec_t precision) {
  if (coefficients.size() < 2) return {};
  const std::size_t m = coefficients.size() - 1;
  std::vector<BigComplex> c;
  c.reserve(coefficients.size());
  for (const auto& x : coefficients) c.push_back(x / coefficients.back());
  if (m == 1) {
    BigComplex root(precision);
    root -= c[0];
    return {root};
  }
  std::vector<BigComplex> dc;
  for (std::size_t k = 1; k < c.size(); ++k) {
    dc.push_back(c[k] * BigComplex(BigFloat(static_cast<long>(k), precision), BigFloat(0L, precision)));
  }

  // Start on a circle of the Cauchy radius, rotated off the axes.
  BigFloat radius(1L, precision);
  for (std::size_t k = 0; k < m; ++k) radius = max(radius, abs(c[k]) + BigFloat(1L, precision));
  std::vector<BigComplex> z;
  BigFloat pi(precision);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  for (std::size_t k = 0; k < m; ++k) {
    BigFloat angle = pi * BigFloat(2.0 * static_cast<double>(k) / static_cast<double>(m), precision) +
                     BigFloat(0.7, precision);
    BigFloat cs(precision), sn(precision);
    mpfr_sin_cos(sn.get(), cs.get(), angle.get(), MPFR_RNDN);
    z.emplace_back(radius * cs, radius * sn);
  }

  const BigFloat tol = BigFloat::exp2(-static_cast<long>(precision) + 12, precision);
  const BigFloat one(1L, precision);
  const std::size_t max_iterations = 400 + 40 * m;
  for (std::size_t iter = 0; iter < max_iterations; ++iter) {
    BigFloat largest_step(0L, precision);
    for (std::size_t i = 0; i < m; ++i) {
      BigComplex p = horner(c, z[i]);
      if (p.re.is_zero() && p.im.is_zero()) continue;
      BigComplex dp = horner(dc, z[i]);
      BigComplex sum(precision);
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i) continue;
        BigComplex diff = z[i] - z[j];
        if (diff.re.is_zero() && diff.im.is_zero()) diff.re = tol;
        sum += BigComplex(one, BigFloat(0L, precision)) / diff;
      }
      BigComplex ratio = (dp.re.is_zero() && dp.im.is_zero())
                             ? BigComplex(one, one)
                             : p / dp;
      BigComplex denom = BigComplex(one, BigFloat(0L, precision)) - ratio * sum;
      BigComplex step = (denom.re.is_zero() && denom.im.is_zero()) ? ratio : ratio / denom;
      z[i] -= step;
      BigFloat rel = abs(step) / max(one, abs(z[i]));
      largest_step = max(largest_step, rel);
    }
    if (largest_step <= tol) break;
  }
  return z;
}

std::vector<IsolatedRoot> isolate_roots(const Poly& squarefree, mpfr_prec_t precision) {
  const int m = squarefree.degree();
  if (m < 1) return {};
  const BigFloat target = BigFloat::exp2(-static_cast<long>(precision) / 2, precision);
  for (mpfr_prec_t working : {precision, 2 * precision}) {
    const auto c = to_big(squarefree, working);
    const auto z = approximate_roots(c, working);
    const BigFloat lead = abs(c.back());
    std::vector<IsolatedRoot> out;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      BigComplex denom = c.back();
      for (int j = 0; j < m; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      const BigFloat denom_abs = abs(denom);
      if (denom_abs.is_zero()) {
        ok = false;
        break;
      }
      const BigFloat rounding = magnitude_sum(c, abs(z[i])) *
                                BigFloat::exp2(-static_cast<long>(working) + 8, working);
      BigFloat rho = (abs(horner(c, z[i])) + rounding) / denom_abs *
                     BigFloat(static_cast<long>(m), working);
      rho = rho + rho * BigFloat::exp2(-20, working);
      if (rho > target) ok = false;
      out.push_back({z[i], rho});
    }
    for (int i = 0; ok && i < m; ++i) {
      for (int j = i + 1; ok && j < m; ++j) {
        if (abs(out[i].value - out[j].value) <= out[i].radius + out[j].radius) ok = false;
      }
    }
    if (ok) return out;
  }
  throw NumericFailure("root isolation failed for " + squarefree.to_string("x") + " at " +
                       std::to_string(precision) + " bits");
}

Ball evaluate(const Poly& p, const IsolatedRoot& at) {
  const mpfr_prec_t prec = at.value.precision();
  const auto c = to_big(p, prec);
  BigComplex mid = horner(c, at.value);
  const BigFloat r = abs(at.value);
  const BigFloat outer = r + at.radius;
  // Lipschitz bound of p on the disc: sum k |a_k| (|z| + rho)^(k-1).
  BigFloat lip(0L, prec);
  for (std::size_t k = c.size(); k-- > 1;) {
    lip = lip * outer + abs(c[k]) * BigFloat(static_cast<long>(k), prec);
  }
  BigFloat radius = at.radius * lip +
                    magnitude_sum(c, r) * BigFloat::exp2(-static_cast<long>(prec) + 8, prec);
  return {std::move(mid), std::move(radius)};
}

std::optional<std::vector<mpz_class>> divisors(const mpz_class& n, const mpz_class& limit) {
  mpz_class v = abs(n);
  if (v > limit || v == 0) return std::nullopt;
  unsigned long long rest = v.get_ui();
  std::vector<std::pair<unsigned long long, unsigned>> factors;
  for (unsigned long long p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (rest > 1) factors.emplace_back(rest, 1);
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = out.size();
    mpz_class power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= static_cast<unsigned long>(p);
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<GaussRational>> rational_roots(const Poly& p) {
  if (!p.is_real()) return std::nullopt;
  if (p.degree() < 1) return std::vector<GaussRational>{};
  bool had_zero = false;
  Poly q = strip_zero_roots(p, had_zero);
  std::vector<GaussRational> roots;
  if (had_zero) roots.emplace_back(0);
  if (q.degree() >= 1) {
    const mpz_class d = common_denominator(q);
    const mpz_class a0 = mpz_class(q.coefficients().front().re() * d);
    const mpz_class am = mpz_class(q.leading().re() * d);
    auto num = divisors(a0, kDivisorLimit);
    auto den = divisors(am, kDivisorLimit);
    if (!num || !den || num->size() * den->size() > kCandidateBudget) return std::nullopt;
    std::set<mpq_class> seen;
    for (const auto& u : *num) {
      for (const auto& v : *den) {
        for (int sign : {1, -1}) {
          mpq_class cand{mpz_class(u * sign), v};
          cand.canonicalize();
          if (!seen.insert(cand).second) continue;
          if (q(GaussRational(cand)).is_zero()) roots.emplace_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const GaussRational& a, const GaussRational& b) { return compare(a, b) < 0; });
  return roots;
}

std::optional<GaussRational> recognize_gaussian(const Poly& p, const IsolatedRoot& root) {
  if (p.degree() < 1) return std::nullopt;
  const mpz_class d = common_denominator(p);
  const GaussRational lead = p.leading() * GaussRational(mpq_class(d));
  const mpfr_prec_t prec = root.value.precision();
  BigComplex scaled = root.value * BigComplex(lead, prec);
  const BigFloat reach = abs(BigComplex(lead, prec)) * root.radius;
  if (reach >= BigFloat(0.5, prec)) return std::nullopt;
  const mpz_class gr = scaled.re.round();
  const mpz_class gi = scaled.im.round();
  const GaussRational lattice{mpq_class(gr), mpq_class(gi)};
  if (abs(scaled - BigComplex(lattice, prec)) > reach + BigFloat::exp2(-static_cast<long>(prec) / 2, prec)) {
    return std::nullopt;
  }
  GaussRational candidate = lattice / lead;
  if (!p(candidate).is_zero()) return std::nullopt;
  return candidate;
}

std::vector<mpz_class> integer_roots(const Poly& p, mpfr_prec_t precision) {
  if (p.is_zero()) throw std::invalid_argument("integer_roots of the zero polynomial");
  std::vector<mpz_class> roots;
  bool had_zero = false;
  Poly q = strip_zero_roots(p, had_zero);
  if (had_zero) roots.emplace_back(0);
  if (q.degree() >= 1) {
    const mpz_class d = common_denominator(q);
    const GaussRational a0 = q.coefficients().front() * GaussRational(mpq_class(d));
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), mpz_class(a0.re()).get_mpz_t(), mpz_class(a0.im()).get_mpz_t());
    if (auto divs = divisors(g, kDivisorLimit)) {
      for (const auto& u : *divs) {
        for (int sign : {1, -1}) {
          mpz_class k = u * sign;
          if (q(GaussRational(mpq_class(k))).is_zero()) roots.push_back(k);
        }
      }
    } else {
      const Poly sqf = divmod(q, gcd(q, q.derivative())).first;
      for (const auto& r : isolate_roots(sqf, precision)) {
        const mpz_class k = r.value.re.round();
        BigComplex dist = r.value - BigComplex(GaussRational(mpq_class(k)), r.value.precision());
        if (abs(dist) > r.radius) continue;
        if (q(GaussRational(mpq_class(k))).is_zero()) roots.push_back(k);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::optional<bool> vanishes_at_root(const Poly& g, const Poly& owner, const IsolatedRoot& root) {
  if (g.is_zero()) return true;
  const Poly common = gcd(g, owner);
  if (common.degree() < 1) return false;
  if (common.degree() == owner.degree()) return true;
  const Poly cofactor = divmod(owner, common).first;
  if (!evaluate(common, root).contains_zero()) return false;
  if (!evaluate(cofactor, root).contains_zero()) return true;
  return std::nullopt;
}

}  // namespace painleve
