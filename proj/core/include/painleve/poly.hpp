#pragma once

#include "painleve/gauss_rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace painleve {

/// Dense univariate polynomial over Q(i), coefficients indexed by power.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<GaussRational> coefficients);
  Poly(GaussRational constant);  // NOLINT(google-explicit-constructor)

  static Poly monomial(GaussRational coefficient, unsigned power);
  static Poly variable() { return monomial(1, 1); }
  /// Product of (x - root) over the given roots.
  static Poly from_roots(const std::vector<GaussRational>& roots);

  const std::vector<GaussRational>& coefficients() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_real() const;

  GaussRational coefficient(std::size_t power) const;
  const GaussRational& leading() const;

  GaussRational operator()(const GaussRational& x) const;

  Poly derivative() const;
  /// p(a + t) as a polynomial in t.
  Poly taylor_shift(const GaussRational& a) const;
  Poly monic() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const GaussRational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const GaussRational& c) { return a *= c; }
  friend Poly operator*(const GaussRational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Human-readable form, highest power first, e.g. "2*q^2 + 120*q".
  std::string to_string(std::string_view var) const;

 private:
  void normalize();

  std::vector<GaussRational> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);
/// Yun decomposition: pairwise coprime squarefree factors with their multiplicity.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& p);
/// Unique polynomial of degree < xs.size() through the points (Newton divided differences).
Poly interpolate(const std::vector<GaussRational>& xs, const std::vector<GaussRational>& ys);

}  // namespace painleve
