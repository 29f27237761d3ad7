#include "painleve/gauss_rational.hpp"

#include <ostream>
#include <stdexcept>

namespace painleve {

GaussRational GaussRational::from_fraction(long num, long den) {
  mpq_class q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return GaussRational(q);
}

namespace {

mpq_class parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
  q.canonicalize();
  return q;
}

mpq_class parse_imaginary(std::string_view text) {
  // text excludes the trailing 'i'
  if (text.empty() || text == "+") return 1;
  if (text == "-") return -1;
  return parse_rational(text.front() == '+' ? text.substr(1) : text);
}

}  // namespace

GaussRational GaussRational::from_string(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty Gaussian rational");
  if (text.back() != 'i') return GaussRational(parse_rational(text));
  const std::string_view body = text.substr(0, text.size() - 1);
  // The split point is the last sign that is not the leading character.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {mpq_class(0), parse_imaginary(body)};
  return {parse_rational(body.substr(0, split)), parse_imaginary(body.substr(split))};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const mpq_class n = o.norm();
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "i";
  }
  if (sgn(re_) == 0) return imag;
  return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + imag;
}

int compare(const GaussRational& a, const GaussRational& b) {
  if (int c = cmp(a.re(), b.re()); c != 0) return c < 0 ? -1 : 1;
  if (int c = cmp(a.im(), b.im()); c != 0) return c < 0 ? -1 : 1;
  return 0;
}

GaussRational pow(GaussRational base, unsigned exponent) {
  GaussRational result(1);
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& value) {
  return os << value.to_string();
}

mpz_class factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace painleve
