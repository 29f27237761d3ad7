#include "painleve/series.hpp"

namespace painleve {

namespace {

long integer_bureau(const EvaluatedODE& eq) {
  const mpq_class& b = eq.leading.bureau;
  if (b.get_den() != 1 || sgn(b) <= 0) {
    throw std::invalid_argument("series oracle needs a positive integer Bureau number, got " +
                                b.get_str());
  }
  return b.get_num().get_si();
}

}  // namespace

Poly oracle_H(const EvaluatedODE& eq) {
  const long s = integer_bureau(eq);
  const int target = static_cast<int>(-s - static_cast<long>(eq.order));
  const unsigned d = eq.leading.top_degree;
  std::vector<GaussRational> xs;
  std::vector<GaussRational> ys;
  for (unsigned k = 1; k <= d + 2; ++k) {
    const GaussRational q(static_cast<long>(k));
    TruncatedSeries<GaussRational> w(static_cast<int>(-s), {q});
    xs.push_back(q);
    ys.push_back(substitute_monomial(eq, w).coefficient(target));
  }
  const GaussRational check_x = xs.back();
  const GaussRational check_y = ys.back();
  xs.pop_back();
  ys.pop_back();
  Poly h = interpolate(xs, ys);
  if (h(check_x) != check_y) {
    throw InterpolationInconsistent("samples of H do not fit a polynomial of degree <= " +
                                    std::to_string(d));
  }
  if (!h.coefficient(0).is_zero()) {
    throw InterpolationInconsistent("sampled H has a nonzero constant term");
  }
  return h;
}

GaussRational oracle_R_sample(const EvaluatedODE& eq, const GaussRational& q, long r,
                              const GaussRational& amplitude) {
  const long s = integer_bureau(eq);
  if (r < 0) throw std::invalid_argument("oracle_R samples non-negative r only");
  std::vector<Dual> c(static_cast<std::size_t>(r) + 1);
  c[0] = Dual(q);
  c[static_cast<std::size_t>(r)] = Dual(c[static_cast<std::size_t>(r)].value, amplitude);
  TruncatedSeries<Dual> w(static_cast<int>(-s), std::move(c));
  const int target = static_cast<int>(-s + r - static_cast<long>(eq.order));
  return substitute_monomial(eq, w).coefficient(target).slope;
}

Poly oracle_R(const EvaluatedODE& eq, const GaussRational& q) {
  const unsigned n = eq.order;
  std::vector<GaussRational> xs;
  std::vector<GaussRational> ys;
  for (unsigned r = 0; r <= n + 1; ++r) {
    xs.emplace_back(static_cast<long>(r));
    ys.push_back(oracle_R_sample(eq, q, r));
  }
  const GaussRational check_x = xs.back();
  const GaussRational check_y = ys.back();
  xs.pop_back();
  ys.pop_back();
  Poly rp = interpolate(xs, ys);
  if (rp(check_x) != check_y) {
    throw InterpolationInconsistent("samples of R do not fit a polynomial of degree <= " +
                                    std::to_string(n));
  }
  if (rp.degree() != static_cast<int>(n) || rp.leading() != GaussRational(1)) {
    throw NotMonic("sampled resonance polynomial is not monic of degree " + std::to_string(n) +
                   ": " + rp.to_string("r"));
  }
  return rp;
}

}  // namespace painleve
