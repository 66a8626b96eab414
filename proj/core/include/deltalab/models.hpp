#ifndef DELTALAB_MODELS_HPP
#define DELTALAB_MODELS_HPP

#include <string>
#include <utility>
#include <vector>

#include "deltalab/mollifier.hpp"

namespace deltalab::models {

using exactcalc::Interval;
using exactcalc::PiecewisePolynomial;
using exactcalc::Rational;
using mollifiers::Mollifier;

/// A function with (at worst) a first-order discontinuity at 0: piecewise
/// polynomial sides on (-inf, 0] and [0, inf), each side with rational
/// coefficients, plus a declared class order kd = how many one-sided
/// derivatives are certified at 0.
///
/// mean_jump(i) returns the symmetric/antisymmetric jet combinations
///   m_i = (f^(i)(0+) + f^(i)(0-))/2,   h_i = f^(i)(0+) - f^(i)(0-).
class PiecewiseModel {
 public:
  PiecewiseModel(PiecewisePolynomial left, PiecewisePolynomial right, int class_order);

  static PiecewiseModel constant(const Rational& c);
  /// A single polynomial, smooth across 0.
  static PiecewiseModel smooth(const exactcalc::Polynomial& p, int class_order = 3);

  /// Normed power x^p/p! on the right semiaxis, 0 on the left.
  static PiecewiseModel nu_plus(int p);
  /// (-x)^p/p! on the left semiaxis, 0 on the right.
  static PiecewiseModel nu_minus(int p);
  /// Heaviside step: 1 for x > 0, 0 for x < 0 (equals nu_plus(0)).
  static PiecewiseModel heaviside();
  /// |nu|^p = nu_plus(p) + nu_minus(p).
  static PiecewiseModel abs_nu(int p);
  /// |nu|^p sgn x = nu_plus(p) - nu_minus(p).
  static PiecewiseModel abs_nu_sgn(int p);

  const PiecewisePolynomial& left() const { return left_; }
  const PiecewisePolynomial& right() const { return right_; }
  int class_order() const { return kd_; }

  /// (m_i, h_i); requires i <= class order.
  std::pair<Rational, Rational> mean_jump(int i) const;
  Rational one_sided(int i, bool from_right) const;

  PiecewiseModel reflect() const;  // x -> f(-x)
  PiecewiseModel scaled(const Rational& c) const;
  friend PiecewiseModel operator+(const PiecewiseModel& a, const PiecewiseModel& b);

  /// (f_0, f_1) with f_0 even, f_1 odd, f_0 + f_1 = f exactly.
  std::pair<PiecewiseModel, PiecewiseModel> even_odd_parts() const;

  /// Single piecewise polynomial on [lo, hi] (right-hand value at 0).
  PiecewisePolynomial to_piecewise(const Interval& window) const;

  friend bool operator==(const PiecewiseModel& a, const PiecewiseModel& b);

 private:
  PiecewisePolynomial left_, right_;
  int kd_;
};

/// The convolution model F_sigma = f * D_sigma, exact on [-W, W].
struct ModelInstance {
  PiecewiseModel source;
  Rational sigma;
  Rational window;  // W
  PiecewisePolynomial f_sigma;
};

/// Builds F_sigma = f * D_sigma on [-W, W]; f is consulted on
/// [-W - sigma*l, W + sigma*l] only. sigma > 0, W > 0.
ModelInstance model(const PiecewiseModel& f, const Mollifier& m, const Rational& sigma,
                    const Rational& window);

/// Exact check that d/dx (f * D_sigma) == df * D_sigma on [-W, W], where df
/// is the classical derivative model of f away from 0 (for the normed powers
/// this is the signed relation d/dx nu_(+-)^(p+1) = (+-) nu_(+-)^p).
bool derivative_consistency(const PiecewiseModel& f, const PiecewiseModel& df,
                            const Mollifier& m, const Rational& sigma, const Rational& window);

/// Parses "heaviside", "nu_plus:2", "nu_minus:0", "abs_nu:1", "abs_nu_sgn:1",
/// "constant:3/4", "poly:c0,c1,..."; throws std::invalid_argument otherwise.
PiecewiseModel named_model(const std::string& name);

}  // namespace deltalab::models

#endif
