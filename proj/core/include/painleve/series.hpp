#pragma once

#include "painleve/errors.hpp"
#include "painleve/gauss_rational.hpp"
#include "painleve/ode.hpp"
#include "painleve/poly.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace painleve {

/// a + b*eps with eps^2 = 0. Carries a first-order perturbation through
/// series arithmetic without any c^2 contamination.
struct Dual {
  GaussRational value;
  GaussRational slope;

  Dual() = default;
  Dual(GaussRational v) : value(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Dual(GaussRational v, GaussRational s) : value(std::move(v)), slope(std::move(s)) {}

  bool is_zero() const { return value.is_zero() && slope.is_zero(); }

  Dual& operator+=(const Dual& o) {
    value += o.value;
    slope += o.slope;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    value -= o.value;
    slope -= o.slope;
    return *this;
  }
  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(const Dual& a, const Dual& b) {
    return {a.value * b.value, a.value * b.slope + a.slope * b.value};
  }
  friend bool operator==(const Dual& a, const Dual& b) {
    return a.value == b.value && a.slope == b.slope;
  }
};

inline bool is_zero(const GaussRational& x) { return x.is_zero(); }
inline bool is_zero(const Dual& x) { return x.is_zero(); }

/// Finite window of a Laurent series in t: coefficients of
/// t^base, t^(base+1), ... known exactly below `order` (nullopt: the series
/// is a finite sum, known everywhere).
template <class S>
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(int base_exponent, std::vector<S> coefficients,
                  std::optional<int> order = std::nullopt)
      : base_(base_exponent), coeffs_(std::move(coefficients)), order_(order) {
    normalize();
  }

  static TruncatedSeries from_poly(const Poly& p) {
    std::vector<S> c(p.coefficients().begin(), p.coefficients().end());
    return TruncatedSeries(0, std::move(c));
  }

  int base_exponent() const noexcept { return base_; }
  const std::vector<S>& coefficients() const noexcept { return coeffs_; }
  std::optional<int> order() const noexcept { return order_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of t^exponent; throws WindowTooNarrow beyond the known window.
  S coefficient(int exponent) const {
    if (order_ && exponent >= *order_) {
      throw WindowTooNarrow(static_cast<std::size_t>(exponent - *order_ + 1),
                            "coefficient of t^" + std::to_string(exponent) +
                                " lies beyond the known window (order " +
                                std::to_string(*order_) + ")");
    }
    if (exponent < base_ || exponent >= base_ + static_cast<int>(coeffs_.size())) return S();
    return coeffs_[static_cast<std::size_t>(exponent - base_)];
  }

  TruncatedSeries derivative() const {
    std::vector<S> c;
    c.reserve(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      c.push_back(coeffs_[k] * S(GaussRational(base_ + static_cast<long>(k))));
    }
    std::optional<int> order = order_ ? std::optional<int>(*order_ - 1) : std::nullopt;
    return TruncatedSeries(base_ - 1, std::move(c), order);
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    return combine(a, b, false);
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return combine(a, b, true);
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::optional<int> order;
    const auto bound = [](const TruncatedSeries& x, const TruncatedSeries& y) -> std::optional<int> {
      if (!x.order_) return std::nullopt;
      if (y.coeffs_.empty()) {
        if (!y.order_) return std::nullopt;
        return *x.order_ + *y.order_;
      }
      return *x.order_ + y.base_;
    };
    if (a.coeffs_.empty() && !a.order_) return {};
    if (b.coeffs_.empty() && !b.order_) return {};
    for (auto o : {bound(a, b), bound(b, a)}) {
      if (o && (!order || *o < *order)) order = o;
    }
    if (a.coeffs_.empty() || b.coeffs_.empty()) return TruncatedSeries(0, {}, order);
    const int base = a.base_ + b.base_;
    std::size_t len = a.coeffs_.size() + b.coeffs_.size() - 1;
    if (order) len = std::min<std::size_t>(len, static_cast<std::size_t>(std::max(0, *order - base)));
    std::vector<S> c(len);
    for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
      if (painleve::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j) {
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return TruncatedSeries(base, std::move(c), order);
  }

 private:
  static TruncatedSeries combine(const TruncatedSeries& a, const TruncatedSeries& b, bool subtract) {
    std::optional<int> order = a.order_;
    if (b.order_ && (!order || *b.order_ < *order)) order = b.order_;
    if (a.coeffs_.empty() && b.coeffs_.empty()) return TruncatedSeries(0, {}, order);
    int base = a.coeffs_.empty() ? b.base_ : b.coeffs_.empty() ? a.base_ : std::min(a.base_, b.base_);
    int top = std::max(a.coeffs_.empty() ? base : a.base_ + static_cast<int>(a.coeffs_.size()),
                       b.coeffs_.empty() ? base : b.base_ + static_cast<int>(b.coeffs_.size()));
    if (order) top = std::min(top, *order);
    std::vector<S> c(static_cast<std::size_t>(std::max(0, top - base)));
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int e = base + static_cast<int>(k);
      c[k] = a.raw(e);
      if (subtract) {
        c[k] -= b.raw(e);
      } else {
        c[k] += b.raw(e);
      }
    }
    return TruncatedSeries(base, std::move(c), order);
  }

  S raw(int exponent) const {
    if (exponent < base_ || exponent >= base_ + static_cast<int>(coeffs_.size())) return S();
    return coeffs_[static_cast<std::size_t>(exponent - base_)];
  }

  void normalize() {
    if (order_) {
      const int keep = std::max(0, *order_ - base_);
      if (static_cast<int>(coeffs_.size()) > keep) coeffs_.resize(static_cast<std::size_t>(keep));
    }
    while (!coeffs_.empty() && painleve::is_zero(coeffs_.back())) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && painleve::is_zero(coeffs_[lead])) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      base_ = 0;
      return;
    }
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
      base_ += static_cast<int>(lead);
    }
  }

  int base_ = 0;
  std::vector<S> coeffs_;
  std::optional<int> order_;
};

/// Residual w^(n) - sum a_chi(z0 + t) prod (w^(j))^chi_j of the equation at
/// the series w (in t = z - z0). Every coefficient inside the returned
/// window is final.
template <class S>
TruncatedSeries<S> substitute_monomial(const EvaluatedODE& eq, const TruncatedSeries<S>& w) {
  std::vector<TruncatedSeries<S>> derivs{w};
  for (unsigned j = 1; j <= eq.order; ++j) derivs.push_back(derivs.back().derivative());
  TruncatedSeries<S> residual = derivs[eq.order];
  for (const auto& [chi, a] : eq.local) {
    TruncatedSeries<S> product = TruncatedSeries<S>::from_poly(a);
    for (std::size_t j = 0; j < chi.size(); ++j) {
      for (unsigned p = 0; p < chi[j]; ++p) product = product * derivs[j];
    }
    residual = residual - product;
  }
  return residual;
}

/// Coefficient of t^exponent in the residual. Throws WindowTooNarrow with the
/// minimal number of terms w must carry when its window is too short.
template <class S>
S residual_coefficient(const EvaluatedODE& eq, const TruncatedSeries<S>& w, int exponent) {
  const TruncatedSeries<S> r = substitute_monomial(eq, w);
  if (r.order() && exponent >= *r.order()) {
    const int shift = *r.order() - *w.order();
    const int needed_order = exponent + 1 - shift;
    throw WindowTooNarrow(static_cast<std::size_t>(needed_order - w.base_exponent()),
                          "series window too narrow for t^" + std::to_string(exponent));
  }
  return r.coefficient(exponent);
}

/// H(q) sampled by substituting q*t^(-B) and interpolated (degree <= d).
/// Requires an integer Bureau number >= 1.
Poly oracle_H(const EvaluatedODE& eq);

/// R(r) at fixed q, from the first-order response to q*t^(-B) + c*t^(-B+r),
/// sampled at r = 0..n and interpolated; always monic of degree n.
Poly oracle_R(const EvaluatedODE& eq, const GaussRational& q);

/// The raw sample behind oracle_R: the coefficient of c*t^(-B+r-n) for a
/// perturbation amplitude c.
GaussRational oracle_R_sample(const EvaluatedODE& eq, const GaussRational& q, long r,
                              const GaussRational& amplitude = GaussRational(1));

}  // namespace painleve
