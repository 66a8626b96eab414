#include "deltalab/bump.hpp"

#include <stdexcept>

namespace deltalab::mollifiers {

using exactcalc::Polynomial;
using exactcalc::Scalar;
using exactcalc::rat;

namespace {

// Solves the square rational system M a = v by Gaussian elimination.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> m, std::vector<Rational> v) {
  const size_t n = v.size();
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::runtime_error("singular moment system");
    std::swap(m[pivot], m[col]);
    std::swap(v[pivot], v[col]);
    for (size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rational factor = m[row][col] / m[col][col];
      for (size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
      v[row] -= factor * v[col];
    }
  }
  std::vector<Rational> a(n);
  for (size_t row = n; row-- > 0;) {
    Rational acc = v[row];
    for (size_t k = row + 1; k < n; ++k) acc -= m[row][k] * a[k];
    a[row] = acc / m[row][row];
    a[row].canonicalize();
  }
  return a;
}

}  // namespace

PiecewisePolynomial build_bump(const BumpSpec& spec) {
  if (!(spec.support.lo < spec.support.hi))
    throw std::invalid_argument("bump support is degenerate");
  if (spec.smoothness < 0) throw std::invalid_argument("bump smoothness must be >= 0");
  for (size_t i = 0; i < spec.moments.size(); ++i) {
    if (spec.moments[i].first < 0) throw std::invalid_argument("negative moment order");
    for (size_t j = i + 1; j < spec.moments.size(); ++j)
      if (spec.moments[i].first == spec.moments[j].first)
        throw std::invalid_argument("duplicate moment orders");
  }

  // Normalize the support to t in [-1, 1]: t = (x - c)/h.
  const Rational c = (spec.support.lo + spec.support.hi) / 2;
  const Rational h = (spec.support.hi - spec.support.lo) / 2;
  Rational hinv(h.get_den(), h.get_num());
  hinv.canonicalize();
  const Polynomial t({Scalar(Rational(-c * hinv)), Scalar(hinv)});

  // Base shape (1 - t^2)^(k+1): vanishes to order k+1 at the edges, so the
  // zero-extension is exactly C^k.
  const Polynomial one_minus_t2 =
      Polynomial::constant(Scalar(rat(1))) - t * t;
  Polynomial base = Polynomial::constant(Scalar(rat(1)));
  for (int i = 0; i <= spec.smoothness; ++i) base = base * one_minus_t2;

  Polynomial shape = base;
  if (!spec.moments.empty()) {
    // One multiplier degree of freedom per constraint: bump = base * sum a_d t^d.
    const size_t n = spec.moments.size();
    std::vector<Polynomial> t_pow{Polynomial::constant(Scalar(rat(1)))};
    for (size_t d = 1; d < n; ++d) t_pow.push_back(t_pow.back() * t);

    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    std::vector<Rational> rhs(n);
    for (size_t row = 0; row < n; ++row) {
      const Polynomial xj = Polynomial::monomial(Scalar(rat(1)), spec.moments[row].first);
      rhs[row] = spec.moments[row].second;
      for (size_t col = 0; col < n; ++col) {
        const Polynomial integrand = xj * base * t_pow[col];
        m[row][col] = integrand.definite_integral(spec.support.lo, spec.support.hi).as_rational();
      }
    }
    const std::vector<Rational> a = solve_linear(std::move(m), std::move(rhs));
    Polynomial multiplier;
    for (size_t d = 0; d < n; ++d) multiplier += Scalar(a[d]) * t_pow[d];
    shape = base * multiplier;
  }
  return PiecewisePolynomial::on_interval(std::move(shape), spec.support.lo, spec.support.hi,
                                          spec.smoothness);
}

PiecewisePolynomial build_plateau(const Interval& core, const Interval& support, int smoothness) {
  if (!(support.lo < core.lo && core.hi < support.hi))
    throw std::invalid_argument("plateau core must lie strictly inside the support");
  BumpSpec rise{Interval(support.lo, core.lo), smoothness, {{0, Rational(1)}}};
  BumpSpec fall{Interval(core.hi, support.hi), smoothness, {{0, Rational(1)}}};
  const PiecewisePolynomial ramp = build_bump(rise) - build_bump(fall);
  return ramp.antiderivative(support.lo);
}

}  // namespace deltalab::mollifiers
