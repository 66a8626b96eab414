#include "deltalab/mollifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace deltalab::mollifiers {

using exactcalc::rat;

Mollifier make_mollifier(PiecewisePolynomial f, PiecewisePolynomial g, int k) {
  if (k < 2) throw std::invalid_argument("mollifier smoothness must be at least C^2");
  if (!f.compactly_supported() || !g.compactly_supported())
    throw std::invalid_argument("f and g must be compactly supported");
  if (g.is_zero()) throw std::invalid_argument("g must not vanish identically");
  if (f.reflect() != f) throw std::invalid_argument("f must be even");
  if (g.reflect() != g) throw std::invalid_argument("g must be even");
  if (!(f * g).is_zero()) throw std::invalid_argument("f and g must have disjoint supports");
  if (f.integrate_support() != Scalar(rat(1)))
    throw std::invalid_argument("f must have unit mass");
  if (!g.integrate_support().is_zero())
    throw std::invalid_argument("g must have zero mass");
  if (!f.smoothness_check(k))
    throw std::invalid_argument("f is not C^" + std::to_string(k));
  if (!g.smoothness_check(k))
    throw std::invalid_argument("g is not C^" + std::to_string(k));

  Mollifier m;
  m.f_ = f.with_smoothness(k);
  m.g_ = g.with_smoothness(k);
  m.f2_ = (f * f).integrate_support().as_rational();
  m.g2_ = (g * g).integrate_support().as_rational();
  m.l_ = std::max(f.support_radius(), g.support_radius());
  m.k_ = k;
  return m;
}

MollifierInstance instantiate(const Mollifier& m, const Rational& s) {
  if (s <= 0) throw std::invalid_argument("scale parameter s must be positive");
  Rational r = (s - m.f_squared_integral()) / m.g_squared_integral();
  r.canonicalize();
  MollifierInstance inst;
  inst.s = s;
  inst.r = r;
  inst.degenerate = r == 0;  // lambda collapses to zero, D = f
  inst.d = m.f() + Scalar::with_lambda(Rational(0), Rational(1), r) * m.g();
  inst.support_radius = m.support_radius();
  inst.smoothness = m.smoothness();
  return inst;
}

PiecewisePolynomial scaled_instance(const Mollifier& m, const Rational& sigma) {
  return instantiate(m, sigma).d.scale_net(sigma);
}

PiecewisePolynomial derivative_net(const Mollifier& m, const Rational& sigma, int p) {
  if (p < 0) throw std::invalid_argument("derivative order must be nonnegative");
  if (p > m.smoothness() - 1)
    throw std::invalid_argument("derivative order " + std::to_string(p) +
                                " exceeds the smoothness budget C^" +
                                std::to_string(m.smoothness()));
  PiecewisePolynomial d = scaled_instance(m, sigma);
  for (int i = 0; i < p; ++i) d = d.differentiate();
  return d;
}

bool ConditionReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ConditionCheck& c) { return c.pass; });
}

ConditionReport verify_conditions(const MollifierInstance& inst) {
  ConditionReport report;
  const Rational l = inst.support_radius;

  const bool even = inst.d.reflect() == inst.d;
  report.checks.push_back({"evenness D(-x) = D(x)", even, "exact", even ? "exact" : "violated"});

  const Scalar mass = inst.d.integrate(-l, l);
  report.checks.push_back(
      {"unit mass Int D = 1", mass == Scalar(rat(1)), "1", mass.str()});

  const Scalar second = (inst.d * inst.d).integrate(-l, l);
  report.checks.push_back(
      {"Int D^2 = s", second == Scalar(inst.s), exactcalc::to_string(inst.s), second.str()});
  return report;
}

MollifierDescription default_geometry() {
  using exactcalc::Interval;
  MollifierDescription d;
  d.smoothness = 6;
  d.f_bumps.push_back({Interval(rat(-1, 4), rat(1, 4)), 6, {{0, rat(1)}}});
  d.g_bumps.push_back({Interval(rat(3, 8), rat(5, 8)), 6, {{0, rat(1, 2)}}});
  d.g_bumps.push_back({Interval(rat(-5, 8), rat(-3, 8)), 6, {{0, rat(1, 2)}}});
  d.g_bumps.push_back({Interval(rat(11, 16), rat(15, 16)), 6, {{0, rat(-1, 2)}}});
  d.g_bumps.push_back({Interval(rat(-15, 16), rat(-11, 16)), 6, {{0, rat(-1, 2)}}});
  return d;
}

MollifierDescription alternate_geometry() {
  using exactcalc::Interval;
  MollifierDescription d;
  d.smoothness = 5;
  d.f_bumps.push_back({Interval(rat(-1, 3), rat(1, 3)), 5, {{0, rat(1)}}});
  d.g_bumps.push_back({Interval(rat(5, 12), rat(7, 12)), 5, {{0, rat(2, 3)}}});
  d.g_bumps.push_back({Interval(rat(-7, 12), rat(-5, 12)), 5, {{0, rat(2, 3)}}});
  d.g_bumps.push_back({Interval(rat(2, 3), rat(11, 12)), 5, {{0, rat(-2, 3)}}});
  d.g_bumps.push_back({Interval(rat(-11, 12), rat(-2, 3)), 5, {{0, rat(-2, 3)}}});
  return d;
}

Mollifier build_mollifier(const MollifierDescription& desc) {
  PiecewisePolynomial f, g;
  for (const auto& spec : desc.f_bumps) f = f + build_bump(spec);
  for (const auto& spec : desc.g_bumps) g = g + build_bump(spec);
  return make_mollifier(std::move(f), std::move(g), desc.smoothness);
}

Mollifier default_mollifier() {
  static const Mollifier m = build_mollifier(default_geometry());
  return m;
}

Mollifier alternate_mollifier() {
  static const Mollifier m = build_mollifier(alternate_geometry());
  return m;
}

}  // namespace deltalab::mollifiers
