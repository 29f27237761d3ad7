#include "painleve/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace painleve {

Poly::Poly(std::vector<GaussRational> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

Poly::Poly(GaussRational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Poly Poly::monomial(GaussRational coefficient, unsigned power) {
  std::vector<GaussRational> c(power + 1);
  c[power] = std::move(coefficient);
  return Poly(std::move(c));
}

Poly Poly::from_roots(const std::vector<GaussRational>& roots) {
  Poly p(1);
  for (const auto& r : roots) p *= Poly({-r, GaussRational(1)});
  return p;
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool Poly::is_real() const {
  for (const auto& c : coeffs_) {
    if (!c.is_real()) return false;
  }
  return true;
}

GaussRational Poly::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : GaussRational();
}

const GaussRational& Poly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

GaussRational Poly::operator()(const GaussRational& x) const {
  GaussRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<GaussRational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d[k - 1] = coeffs_[k] * GaussRational(static_cast<long>(k));
  }
  return Poly(std::move(d));
}

Poly Poly::taylor_shift(const GaussRational& a) const {
  if (a.is_zero()) return *this;
  // Horner in the ring Q(i)[t]: result = result * (t + a) + c_k.
  std::vector<GaussRational> out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    out.emplace_back();
    for (std::size_t k = out.size() - 1; k > 0; --k) out[k] = out[k - 1] + out[k] * a;
    out[0] = out[0] * a + *it;
  }
  return Poly(std::move(out));
}

Poly Poly::monic() const {
  if (coeffs_.empty()) return {};
  Poly p = *this;
  const GaussRational inv = GaussRational(1) / leading();
  p *= inv;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (coeffs_.empty() || o.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<GaussRational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a].is_zero()) continue;
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b) out[a + b] += coeffs_[a] * o.coeffs_[b];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

Poly& Poly::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

std::string Poly::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const GaussRational& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string body;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      mpq_class mag = abs(c.re());
      if (mag != 1 || k == 0) body = mag.get_str();
    } else if (sgn(c.re()) == 0) {
      negative = sgn(c.im()) < 0;
      body = GaussRational(mpq_class(0), abs(c.im())).to_string();
    } else {
      body = "(" + c.to_string() + ")";
    }
    if (k > 0) {
      if (!body.empty()) body += "*";
      body += std::string(var);
      if (k > 1) body += "^" + std::to_string(k);
    }
    if (first) {
      os << (negative ? "-" : "") << body;
    } else {
      os << (negative ? " - " : " + ") << body;
    }
    first = false;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<GaussRational> rem = a.coefficients();
  std::vector<GaussRational> quot(rem.size() - b.coefficients().size() + 1);
  const GaussRational inv_lead = GaussRational(1) / b.leading();
  const auto& bc = b.coefficients();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const GaussRational factor = rem[k + bc.size() - 1] * inv_lead;
    quot[k] = factor;
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[k + j] -= factor * bc[j];
  }
  rem.resize(bc.size() - 1);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& p) {
  std::vector<std::pair<Poly, unsigned>> out;
  if (p.degree() < 1) return out;
  const Poly f = p.monic();
  const Poly fp = f.derivative();
  Poly a = gcd(f, fp);
  Poly b = divmod(f, a).first;
  Poly c = divmod(fp, a).first;
  Poly d = c - b.derivative();
  unsigned multiplicity = 1;
  while (b.degree() >= 1) {
    Poly g = gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g, multiplicity);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
    ++multiplicity;
  }
  return out;
}

Poly interpolate(const std::vector<GaussRational>& xs, const std::vector<GaussRational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = xs.size();
  std::vector<GaussRational> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t k = n - 1; k >= level; --k) {
      const GaussRational span = xs[k] - xs[k - level];
      if (span.is_zero()) throw std::invalid_argument("interpolate: repeated abscissa");
      dd[k] = (dd[k] - dd[k - 1]) / span;
    }
  }
  Poly result;
  for (std::size_t k = n; k-- > 0;) {
    result *= Poly({-xs[k], GaussRational(1)});
    result += Poly(dd[k]);
  }
  return result;
}

}  // namespace painleve
