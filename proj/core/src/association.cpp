#include "deltalab/association.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace deltalab::association {

using exactcalc::Polynomial;
using exactcalc::rat;
using exactcalc::to_double;
using exactcalc::to_string;
using mollifiers::build_bump;
using mollifiers::build_plateau;
using mollifiers::BumpSpec;
using mollifiers::derivative_net;
using mollifiers::instantiate;
using mollifiers::scaled_instance;
using models::model;

TestFunction TestFunction::from_piecewise(PiecewisePolynomial psi, int jet_order) {
  if (!psi.compactly_supported())
    throw std::invalid_argument("test functions must be compactly supported");
  TestFunction t;
  t.jet0.reserve(static_cast<size_t>(jet_order) + 1);
  for (int i = 0; i <= jet_order; ++i)
    t.jet0.push_back(psi.derivative_at(Rational(0), i).as_rational());
  t.psi = std::move(psi);
  return t;
}

TestFunction TestFunction::monomial_plateau(int j, const Rational& core, const Rational& radius,
                                            int smoothness) {
  if (j < 0) throw std::invalid_argument("monomial order must be nonnegative");
  if (!(0 < core && core < radius))
    throw std::invalid_argument("need 0 < core < radius for the plateau test function");
  const PiecewisePolynomial plateau =
      build_plateau(Interval(Rational(-core), core), Interval(Rational(-radius), radius), smoothness);
  const PiecewisePolynomial monomial =
      PiecewisePolynomial::global(Polynomial::monomial(Scalar(rat(1)), j));
  return from_piecewise(monomial * plateau, std::max(j + 1, 4));
}

SigmaSchedule::SigmaSchedule(std::vector<Rational> s) : sigmas(std::move(s)) {
  if (sigmas.size() < 3) throw std::invalid_argument("schedule needs at least 3 scales");
  for (size_t i = 0; i < sigmas.size(); ++i) {
    if (sigmas[i] <= 0) throw std::invalid_argument("schedule scales must be positive");
    if (i > 0 && !(sigmas[i] < sigmas[i - 1]))
      throw std::invalid_argument("schedule must be strictly decreasing");
  }
}

SigmaSchedule SigmaSchedule::dyadic(int lo, int hi) {
  std::vector<Rational> s;
  for (int i = lo; i <= hi; ++i) s.push_back(exactcalc::pow_rational(rat(1, 2), i));
  return SigmaSchedule(std::move(s));
}

Scalar pairing(const PiecewisePolynomial& g, const TestFunction& psi) {
  const Interval ps = psi.psi.support_hull();
  Rational lo = ps.lo, hi = ps.hi;
  if (g.compactly_supported()) {
    const Interval gs = g.support_hull();
    lo = std::max(lo, gs.lo);
    hi = std::min(hi, gs.hi);
    if (lo >= hi) return Scalar();
  }
  return (g * psi.psi).integrate(lo, hi);
}

Scalar product_pairing(const PiecewiseModel& f, const Mollifier& m, int p, const Rational& sigma,
                       const TestFunction& psi) {
  if (sigma <= 0) throw std::invalid_argument("sigma must be positive");
  const Rational reach = sigma * m.support_radius();
  const PiecewisePolynomial f_sigma = model(f, m, sigma, reach).f_sigma;
  const PiecewisePolynomial net = derivative_net(m, sigma, p);
  return pairing(f_sigma * net, psi);
}

LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t n = x.size();
  if (n < 2 || y.size() != n) throw std::invalid_argument("fit needs >= 2 matched points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double det = static_cast<double>(n) * sxx - sx * sx;
  LinearFit fit;
  fit.slope = (static_cast<double>(n) * sxy - sx * sy) / det;
  fit.intercept = (sy - fit.slope * sx) / static_cast<double>(n);
  double ss = 0;
  for (size_t i = 0; i < n; ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss += r * r;
  }
  fit.rms_residual = std::sqrt(ss / static_cast<double>(n));
  return fit;
}

namespace {

struct FitOutcome {
  std::complex<double> intercept;
  double rms = 0.0;
};

FitOutcome fit_complex(const std::vector<Rational>& sigmas,
                       const std::vector<std::complex<double>>& values) {
  std::vector<double> xs, re, im;
  xs.reserve(sigmas.size());
  for (const auto& s : sigmas) xs.push_back(to_double(s));
  for (const auto& v : values) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  const LinearFit fr = fit_linear(xs, re);
  const LinearFit fi = fit_linear(xs, im);
  return {{fr.intercept, fi.intercept}, std::hypot(fr.rms_residual, fi.rms_residual)};
}

}  // namespace

namespace {

// Solves the rational system M c = rhs with Scalar right-hand sides, exactly.
std::vector<Scalar> solve_jet_system(std::vector<std::vector<Rational>> m,
                                     std::vector<Scalar> rhs) {
  const size_t n = rhs.size();
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::invalid_argument("test-function jet matrix is singular");
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rational factor = m[row][col] / m[col][col];
      factor.canonicalize();
      for (size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
      rhs[row] -= Scalar(factor) * rhs[col];
    }
  }
  std::vector<Scalar> c(n);
  for (size_t row = n; row-- > 0;) {
    Scalar acc = rhs[row];
    for (size_t k = row + 1; k < n; ++k) acc -= Scalar(m[row][k]) * c[k];
    Rational inv(m[row][row].get_den(), m[row][row].get_num());
    inv.canonicalize();
    c[row] = Scalar(inv) * acc;
  }
  return c;
}

}  // namespace

AssociationEstimate extract_with(const PiecewiseModel& f, const Mollifier& m, int p,
                                 const SigmaSchedule& schedule,
                                 const std::vector<TestFunction>& tests) {
  if (tests.empty()) throw std::invalid_argument("extraction needs at least one test function");
  const size_t count = tests.size();
  // jet matrix of the pairing expansion: I_i = sum_j c_j (-1)^j psi_i^(j)(0)
  std::vector<std::vector<Rational>> jet(count, std::vector<Rational>(count));
  for (size_t i = 0; i < count; ++i) {
    if (tests[i].jet0.size() < count)
      throw std::invalid_argument("test function carries too short a jet");
    for (size_t j = 0; j < count; ++j)
      jet[i][j] = j % 2 == 0 ? tests[i].jet0[j] : Rational(-tests[i].jet0[j]);
  }

  AssociationEstimate est;
  est.order = static_cast<int>(count) - 1;
  est.sigmas = schedule.sigmas;
  const size_t n = schedule.sigmas.size();
  est.raw_pairings.assign(count, {});
  est.coeff_by_sigma.assign(count, {});
  est.imag_residue.assign(n, 0.0);

  for (size_t i = 0; i < n; ++i) {
    const Rational& sigma = schedule.sigmas[i];
    const Rational reach = sigma * m.support_radius();
    // One convolution and one product per sigma; the pairings reuse them.
    const PiecewisePolynomial f_sigma = model(f, m, sigma, reach).f_sigma;
    const PiecewisePolynomial product = f_sigma * derivative_net(m, sigma, p);
    std::vector<Scalar> pairings;
    pairings.reserve(count);
    for (size_t j = 0; j < count; ++j) pairings.push_back(pairing(product, tests[j]));
    const std::vector<Scalar> coeffs = solve_jet_system(jet, pairings);
    for (size_t j = 0; j < count; ++j) {
      est.raw_pairings[j].push_back(pairings[j]);
      const std::complex<double> c = coeffs[j].embed();
      est.coeff_by_sigma[j].push_back(c);
      est.imag_residue[i] = std::max(est.imag_residue[i], std::abs(c.imag()));
    }
    est.max_imag_residue = std::max(est.max_imag_residue, est.imag_residue[i]);
  }

  for (size_t j = 0; j < count; ++j) {
    const FitOutcome fit = fit_complex(est.sigmas, est.coeff_by_sigma[j]);
    est.coeff.push_back(fit.intercept);
    est.fit_residual.push_back(fit.rms);
  }
  return est;
}

AssociationEstimate extract(const PiecewiseModel& f, const Mollifier& m, int p,
                            const SigmaSchedule& schedule, int order) {
  if (order < 0) throw std::invalid_argument("extraction order must be nonnegative");
  const Rational core = rat(1, 4), radius = rat(1, 2);
  if (!(schedule.max() * m.support_radius() < core))
    throw std::invalid_argument(
        "largest sigma breaks the plateau-window assumption (sigma * l must stay below the "
        "plateau core radius)");
  // The default x^j plateau family: its jet matrix is diagonal, so the solve
  // reduces to c_j = (-1)^j I_j / j!.
  std::vector<TestFunction> tests;
  tests.reserve(static_cast<size_t>(order) + 1);
  for (int j = 0; j <= order; ++j)
    tests.push_back(TestFunction::monomial_plateau(j, core, radius, m.smoothness()));
  return extract_with(f, m, p, schedule, tests);
}

DeltaCoeffs first_derivative_product_oracle(const PiecewiseModel& f) {
  if (f.class_order() < 2)
    throw std::invalid_argument("the D' product law needs class order >= 2");
  const auto [m0, h0] = f.mean_jump(0);
  const auto [m1, h1] = f.mean_jump(1);
  return DeltaCoeffs{{Rational(-(h0 + m1)), m0}};
}

DeltaCoeffs second_derivative_product_oracle(const PiecewiseModel& f) {
  if (f.class_order() < 3)
    throw std::invalid_argument("the D'' product law needs class order >= 3");
  const auto [m0, h0] = f.mean_jump(0);
  const auto [m1, h1] = f.mean_jump(1);
  const auto [m2, h2] = f.mean_jump(2);
  Rational c1 = -(rat(3, 2) * h0 + 2 * m1);
  c1.canonicalize();
  return DeltaCoeffs{{Rational(h1 + m2), std::move(c1), m0}};
}

DeltaCoeffs parity_product_oracle(const PiecewiseModel& f, ParityProduct which) {
  if (f.class_order() < 3)
    throw std::invalid_argument("the parity product laws need class order >= 3");
  const auto [m0, h0] = f.mean_jump(0);
  const auto [m1, h1] = f.mean_jump(1);
  const auto [m2, h2] = f.mean_jump(2);
  switch (which) {
    case ParityProduct::EvenDPrime:
      return DeltaCoeffs{{Rational(0), m0}};
    case ParityProduct::OddDPrime:
      return DeltaCoeffs{{Rational(-(h0 + m1)), Rational(0)}};
    case ParityProduct::EvenDSecond:
      return DeltaCoeffs{{Rational(h1 + m2), Rational(0), m0}};
    case ParityProduct::OddDSecond: {
      Rational c1 = -(rat(3, 2) * h0 + 2 * m1);
      c1.canonicalize();
      return DeltaCoeffs{{Rational(0), std::move(c1), Rational(0)}};
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

// Single-family coefficients of nu_(+-)^p . D^(order) over delta...delta^(order).
std::vector<Rational> one_sided_power_product(int p, bool plus, int order) {
  std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
  if (order == p + 1) {
    // (-+1)^(p+1) [ delta -+ (p+1)/2 delta' ]
    const int sign = plus ? ((p + 1) % 2 == 0 ? 1 : -1) : 1;
    Rational half_p1 = rat(p + 1, 2);
    c[0] = sign;
    c[1] = plus ? Rational(-sign * half_p1) : half_p1;
  } else {
    // (-+1)^p [ -+ (2p+3)/2 delta' + C(p+2,2)/2 delta'' ]
    const int sign = plus ? (p % 2 == 0 ? 1 : -1) : 1;
    const Rational choose = rat((p + 2) * (p + 1), 2);
    c[1] = plus ? Rational(-sign * rat(2 * p + 3, 2)) : rat(2 * p + 3, 2);
    c[2] = sign * choose / 2;
    c[2].canonicalize();
  }
  return c;
}

}  // namespace

DeltaCoeffs normed_power_product_oracle(int p, NormedPowerFamily family, int order) {
  if (p < 0) throw std::invalid_argument("power must be nonnegative");
  if (order != p + 1 && order != p + 2)
    throw std::invalid_argument("net derivative order must be p+1 or p+2");
  if (family == NormedPowerFamily::Abs && p % 2 == 0)
    throw std::invalid_argument("the |nu|^p product laws hold for odd p only");
  if (family == NormedPowerFamily::AbsSgn && p % 2 == 1)
    throw std::invalid_argument("the |nu|^p sgn product laws hold for even p only");

  const std::vector<Rational> plus = one_sided_power_product(p, true, order);
  const std::vector<Rational> minus = one_sided_power_product(p, false, order);
  DeltaCoeffs out;
  out.c.resize(static_cast<size_t>(order) + 1, Rational(0));
  for (size_t i = 0; i < out.c.size(); ++i) {
    switch (family) {
      case NormedPowerFamily::Plus:
        out.c[i] = plus[i];
        break;
      case NormedPowerFamily::Minus:
        out.c[i] = minus[i];
        break;
      case NormedPowerFamily::Abs:
        out.c[i] = plus[i] + minus[i];
        break;
      case NormedPowerFamily::AbsSgn:
        out.c[i] = plus[i] - minus[i];
        break;
    }
    out.c[i].canonicalize();
  }
  return out;
}

std::string DeltaCoeffs::str() const {
  std::string out = "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out += ", ";
    out += to_string(c[i]);
  }
  return out + ")";
}

bool IdentityReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

IdentityReport identity_suite(const Mollifier& m, const Rational& sigma) {
  const auto inst = instantiate(m, sigma);
  const Rational l = m.support_radius();
  const PiecewisePolynomial& d = inst.d;
  const PiecewisePolynomial d1 = d.differentiate();
  const PiecewisePolynomial v = PiecewisePolynomial::global(Polynomial::monomial(Scalar(rat(1)), 1));
  const PiecewisePolynomial v2 = v * v;

  IdentityReport report;
  report.sigma = sigma;
  auto push = [&report](std::string name, const Scalar& observed, const Scalar& expected) {
    report.checks.push_back({std::move(name), observed == expected, expected.str(), observed.str()});
  };

  push("Int v D^2 = 0", (v * d * d).integrate(-l, l), Scalar());
  const PiecewisePolynomial cumulative = d.antiderivative(-l);
  push("Int D (Int_{-l}^{v} D) = 1/2", (d * cumulative).integrate(-l, l), Scalar(rat(1, 2)));
  push("Int D D' = 0", (d * d1).integrate(-l, l), Scalar());
  Rational inv_sigma(sigma.get_den(), sigma.get_num());
  inv_sigma.canonicalize();
  push("(1/sigma) Int v D D' = -1/2", Scalar(inv_sigma) * (v * d * d1).integrate(-l, l),
       Scalar(rat(-1, 2)));
  push("Int v^2 D D' = 0", (v2 * d * d1).integrate(-l, l), Scalar());
  return report;
}

AssociationCheck association_check(AssociationKind kind, const Mollifier& m,
                                   const SigmaSchedule& schedule, const TestFunction& psi,
                                   const PiecewiseModel* f) {
  if (kind == AssociationKind::Model && f == nullptr)
    throw std::invalid_argument("model association needs a model");
  AssociationCheck check;
  check.sigmas = schedule.sigmas;
  std::vector<std::complex<double>> values;
  for (const Rational& sigma : schedule.sigmas) {
    Scalar raw;
    switch (kind) {
      case AssociationKind::Delta:
        raw = pairing(scaled_instance(m, sigma), psi);
        break;
      case AssociationKind::DeltaSquared: {
        const PiecewisePolynomial d_sigma = scaled_instance(m, sigma);
        raw = pairing(d_sigma * d_sigma, psi);
        break;
      }
      case AssociationKind::Model: {
        const Interval hull = psi.psi.support_hull();
        const Rational w =
            std::max(exactcalc::Rational(abs(hull.lo)), exactcalc::Rational(abs(hull.hi))) +
            sigma * m.support_radius();
        raw = pairing(model(*f, m, sigma, w).f_sigma, psi);
        break;
      }
    }
    check.raw.push_back(raw);
    const auto c = raw.embed();
    values.push_back(c);
    check.max_imag = std::max(check.max_imag, std::abs(c.imag()));
  }
  const FitOutcome fit = fit_complex(check.sigmas, values);
  check.intercept = fit.intercept;

  if (kind == AssociationKind::Model) {
    const Interval hull = psi.psi.support_hull();
    const Scalar target = pairing(f->to_piecewise(hull), psi);
    check.expected = target.embed().real();
    check.expected_exact = target.str();
  } else {
    check.expected = to_double(psi.jet0[0]);
    check.expected_exact = to_string(psi.jet0[0]);
  }
  check.abs_error = std::abs(check.intercept - std::complex<double>(check.expected, 0.0));
  return check;
}

DivergenceReport embedding_divergence(int q, const std::vector<Rational>& eps_schedule,
                                      const TestFunction& psi, int smoothness) {
  if (q < 0) throw std::invalid_argument("moment order must be nonnegative");
  BumpSpec spec{Interval(rat(-1), rat(1)), smoothness, {}};
  for (int j = 0; j <= q; ++j) spec.moments.push_back({j, j == 0 ? rat(1) : rat(0)});
  const PiecewisePolynomial phi = build_bump(spec);
  DivergenceReport report;
  report.phi_sq_integral = (phi * phi).integrate_support().as_rational();

  const PiecewisePolynomial one = PiecewisePolynomial::constant(Scalar(rat(1)));
  std::vector<double> xs, ys;
  for (const Rational& eps : eps_schedule) {
    const PiecewisePolynomial phi_eps = phi.scale_net(eps);
    const PiecewisePolynomial squared = phi_eps * phi_eps;
    DivergenceRow row;
    row.eps = eps;
    row.pairing_value = pairing(squared, psi);
    row.eps_times_pairing = Scalar(eps) * row.pairing_value;
    const Interval hull = phi_eps.support_hull();
    row.inside_core = psi.psi.restrict(hull) == one.restrict(hull);
    row.exact_match = row.inside_core && row.eps_times_pairing == Scalar(report.phi_sq_integral);
    xs.push_back(to_double(eps));
    ys.push_back(row.eps_times_pairing.embed().real());
    report.rows.push_back(std::move(row));
  }

  report.exact_regime_reached =
      std::any_of(report.rows.begin(), report.rows.end(),
                  [](const DivergenceRow& r) { return r.exact_match; });
  report.scaling_law_holds = true;
  bool any_pair = false;
  for (size_t i = 0; i + 1 < report.rows.size(); ++i) {
    const auto& a = report.rows[i];
    const auto& b = report.rows[i + 1];
    if (!(a.inside_core && b.inside_core)) continue;
    if (a.eps != b.eps * 2) continue;
    any_pair = true;
    if (b.pairing_value != Scalar(rat(2)) * a.pairing_value) report.scaling_law_holds = false;
  }
  report.scaling_law_holds = report.scaling_law_holds && any_pair;

  const LinearFit fit = fit_linear(xs, ys);
  report.fitted_limit = fit.intercept;
  report.expected_limit = to_double(psi.jet0[0]) * to_double(report.phi_sq_integral);
  return report;
}

}  // namespace deltalab::association
