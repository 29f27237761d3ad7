#include "painleve/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace painleve {

namespace {

constexpr unsigned kMaxExponent = 1000;
constexpr unsigned kMaxDerivative = 1000;

/// Sparse polynomial in w, w', ... with z-polynomial coefficients.
/// Keys are derivative exponent vectors with trailing zeros trimmed.
using Monomial = std::vector<unsigned>;
using Expr = std::map<Monomial, Poly>;

Monomial trimmed(Monomial m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
  return m;
}

void add_into(Expr& acc, const Monomial& m, const Poly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

Expr add(const Expr& a, const Expr& b, bool subtract) {
  Expr out = a;
  for (const auto& [m, c] : b) add_into(out, m, subtract ? -c : c);
  return out;
}

Expr multiply(const Expr& a, const Expr& b) {
  Expr out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Monomial m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t j = 0; j < ma.size(); ++j) m[j] += ma[j];
      for (std::size_t j = 0; j < mb.size(); ++j) m[j] += mb[j];
      add_into(out, trimmed(std::move(m)), ca * cb);
    }
  }
  return out;
}

Expr constant(const Poly& c) {
  Expr e;
  add_into(e, {}, c);
  return e;
}

/// Constant value if `e` has no w and no z.
std::optional<GaussRational> as_constant(const Expr& e) {
  if (e.empty()) return GaussRational();
  if (e.size() != 1 || !e.begin()->first.empty() || !e.begin()->second.is_constant()) {
    return std::nullopt;
  }
  return e.begin()->second.coefficient(0);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : src_(text) {}

  std::pair<Expr, Expr> equation() {
    skip();
    if (at_end()) fail("empty equation");
    Expr lhs = expr();
    skip();
    if (at_end() || peek() != '=') fail("expected '='");
    ++pos_;
    Expr rhs = expr();
    skip();
    if (!at_end()) {
      if (peek() == '=') fail("equation must contain exactly one '='");
      fail(std::string("unexpected '") + peek() + "'");
    }
    return {std::move(lhs), std::move(rhs)};
  }

  Expr standalone() {
    Expr e = expr();
    skip();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(std::string message) const { fail_at(pos_, std::move(message)); }

  [[noreturn]] void fail_at(std::size_t offset, std::string message) const {
    throw SyntaxError(ParseDiagnostic{std::min(offset, src_.size()), std::move(message),
                                      ParseDiagnostic::Severity::kError});
  }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  mpz_class natural() {
    skip();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    return mpz_class(std::string(src_.substr(start, pos_ - start)), 10);
  }

  unsigned small_natural(unsigned limit, const char* what) {
    const std::size_t start = pos_;
    mpz_class v = natural();
    if (v > limit) fail_at(start, std::string(what) + " too large");
    return static_cast<unsigned>(v.get_ui());
  }

  Expr expr() {
    skip();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Expr acc = term();
    if (negate) acc = add(Expr{}, acc, true);
    for (;;) {
      if (accept('+')) {
        acc = add(acc, term(), false);
      } else if (accept('-')) {
        acc = add(acc, term(), true);
      } else {
        return acc;
      }
    }
  }

  Expr term() {
    Expr acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = multiply(acc, factor());
      } else if (accept('/')) {
        skip();
        const std::size_t at = pos_;
        Expr divisor = factor();
        auto value = as_constant(divisor);
        if (!value) throw NonPolynomial("division by a non-constant expression at offset " +
                                        std::to_string(at));
        if (value->is_zero()) fail_at(at, "division by zero");
        acc = multiply(acc, constant(Poly(GaussRational(1) / *value)));
      } else {
        return acc;
      }
    }
  }

  Expr factor() {
    Expr base = primary();
    if (!accept('^')) return base;
    skip();
    if (!at_end() && (peek() == '(' || peek() == '-' || peek() == '.')) {
      throw NonPolynomial("exponent at offset " + std::to_string(pos_) +
                          " must be a natural number");
    }
    const unsigned e = small_natural(kMaxExponent, "exponent");
    if (!at_end() && (peek() == '.' || peek() == '/')) {
      throw NonPolynomial("fractional exponent at offset " + std::to_string(pos_));
    }
    Expr out = constant(Poly(GaussRational(1)));
    for (unsigned k = 0; k < e; ++k) out = multiply(out, base);
    return out;
  }

  Expr primary() {
    skip();
    if (at_end()) fail("unexpected end of input");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return constant(Poly(GaussRational(mpq_class(natural()))));
    }
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
      const std::string_view ident = src_.substr(start, pos_ - start);
      if (ident == "i") return constant(Poly(GaussRational::i()));
      if (ident == "z") return constant(Poly::variable());
      if (ident == "w") return derivative();
      fail_at(start, "unknown identifier '" + std::string(ident) + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  Expr derivative() {
    unsigned order = 0;
    if (!at_end() && peek() == '\'') {
      const std::size_t start = pos_;
      while (!at_end() && peek() == '\'') {
        ++order;
        ++pos_;
      }
      if (order > 3) fail_at(start, "prime notation is limited to w'''; use w[k]");
    } else if (!at_end() && peek() == '[') {
      ++pos_;
      order = small_natural(kMaxDerivative, "derivative order");
      if (!accept(']')) fail("expected ']'");
    }
    Monomial m(order + 1, 0);
    m[order] = 1;
    Expr e;
    add_into(e, m, Poly(GaussRational(1)));
    return e;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

std::string render_coefficient_term(const Poly& a, const MultiIndex& chi, bool first) {
  // Atoms are the nonzero real and imaginary parts of each power of z.
  struct Atom {
    mpq_class value;
    bool imaginary;
    std::size_t power;
  };
  std::vector<Atom> atoms;
  for (std::size_t k = a.coefficients().size(); k-- > 0;) {
    const auto& c = a.coefficients()[k];
    if (sgn(c.re()) != 0) atoms.push_back({c.re(), false, k});
    if (sgn(c.im()) != 0) atoms.push_back({c.im(), true, k});
  }
  std::vector<std::string> w_factors;
  for (std::size_t j = 0; j < chi.size(); ++j) {
    if (chi[j] == 0) continue;
    std::string f = j == 0 ? "w" : "w[" + std::to_string(j) + "]";
    if (chi[j] > 1) f += "^" + std::to_string(chi[j]);
    w_factors.push_back(std::move(f));
  }
  const auto atom_body = [](const Atom& atom, bool keep_unit) {
    std::vector<std::string> parts;
    const mpq_class mag = abs(atom.value);
    if (mag != 1 || (keep_unit && !atom.imaginary && atom.power == 0)) parts.push_back(mag.get_str());
    if (atom.imaginary) parts.emplace_back("i");
    if (atom.power == 1) parts.emplace_back("z");
    if (atom.power > 1) parts.push_back("z^" + std::to_string(atom.power));
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? "*" : "") + parts[k];
    return out;
  };

  bool negative = false;
  std::vector<std::string> factors;
  if (atoms.size() == 1) {
    negative = sgn(atoms[0].value) < 0;
    std::string body = atom_body(atoms[0], w_factors.empty());
    if (!body.empty()) factors.push_back(std::move(body));
  } else {
    std::string sum = "(";
    for (std::size_t k = 0; k < atoms.size(); ++k) {
      const bool neg = sgn(atoms[k].value) < 0;
      if (k == 0) {
        sum += neg ? "-" : "";
      } else {
        sum += neg ? " - " : " + ";
      }
      sum += atom_body(atoms[k], true);
    }
    factors.push_back(sum + ")");
  }
  factors.insert(factors.end(), w_factors.begin(), w_factors.end());
  std::string body;
  for (std::size_t k = 0; k < factors.size(); ++k) body += (k ? "*" : "") + factors[k];
  if (first) return (negative ? "-" : "") + body;
  return (negative ? " - " : " + ") + body;
}

}  // namespace

PolynomialODE parse_equation(std::string_view text) {
  Parser parser(text);
  auto [lhs, rhs] = parser.equation();
  const Expr all = add(lhs, rhs, true);

  std::size_t order = 0;
  for (const auto& [m, c] : all) order = std::max(order, m.size() > 0 ? m.size() - 1 : 0);
  if (order == 0) throw MissingDerivative("no derivative of w occurs in the equation");

  Monomial top(order + 1, 0);
  top[order] = 1;
  const auto lead = all.find(top);
  for (const auto& [m, c] : all) {
    if (m.size() == order + 1 && m != top) {
      throw NonMonicLeading("w[" + std::to_string(order) + "] must appear linearly");
    }
  }
  if (lead == all.end()) throw NonMonicLeading("leading derivative vanishes");
  if (!lead->second.is_constant()) {
    throw NonMonicLeading("coefficient of w[" + std::to_string(order) +
                          "] must be a nonzero constant, got " + lead->second.to_string("z"));
  }
  const GaussRational scale = GaussRational(-1) / lead->second.coefficient(0);

  std::map<MultiIndex, CoeffPoly> terms;
  for (const auto& [m, c] : all) {
    if (m == top) continue;
    std::vector<unsigned> e(order, 0);
    std::copy(m.begin(), m.end(), e.begin());
    terms.emplace(MultiIndex(std::move(e)), c * scale);
  }
  return PolynomialODE(static_cast<unsigned>(order), std::move(terms));
}

std::string render_canonical(const PolynomialODE& ode) {
  std::vector<std::pair<MultiIndex, const CoeffPoly*>> sorted;
  for (const auto& [chi, a] : ode.terms()) sorted.emplace_back(chi, &a);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& x, const auto& y) { return graded_before(x.first, y.first); });
  std::string out = "w[" + std::to_string(ode.order()) + "] = ";
  if (sorted.empty()) return out + "0";
  bool first = true;
  for (const auto& [chi, a] : sorted) {
    out += render_coefficient_term(*a, chi, first);
    first = false;
  }
  return out;
}

GaussRational parse_constant(std::string_view text) {
  Parser parser(text);
  const Expr e = parser.standalone();
  auto value = as_constant(e);
  if (!value) throw NonPolynomial("expected a constant, got an expression in w or z");
  return *value;
}

}  // namespace painleve
