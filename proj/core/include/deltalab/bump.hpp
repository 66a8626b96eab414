#ifndef DELTALAB_BUMP_HPP
#define DELTALAB_BUMP_HPP

#include <utility>
#include <vector>

#include "deltalab/piecewise.hpp"

namespace deltalab::mollifiers {

using exactcalc::Interval;
using exactcalc::PiecewisePolynomial;
using exactcalc::Rational;

/// Recipe for a compactly supported C^k bump with prescribed moments:
/// integral of x^j * bump over the support must equal the given value for
/// each (j, value) constraint. Orders must be distinct.
struct BumpSpec {
  Interval support;
  int smoothness = 6;
  std::vector<std::pair<int, Rational>> moments;  // (order j, Int x^j bump dx)
};

/// Builds the bump as (1 - t^2)^(k+1) * P(t) on the normalized support,
/// where the polynomial multiplier P is solved exactly from the linear
/// moment system (one degree of freedom per constraint). The base factor
/// vanishes to order k+1 at the support edges, so the zero-extension is
/// exactly C^k. Throws std::runtime_error when the moment system is
/// singular.
PiecewisePolynomial build_bump(const BumpSpec& spec);

/// C^(k+1) function identically 1 on the core interval and 0 outside the
/// support interval, assembled from antiderivatives of unit-mass bumps on
/// the two ramp intervals. core must be strictly inside support.
PiecewisePolynomial build_plateau(const Interval& core, const Interval& support, int smoothness);

}  // namespace deltalab::mollifiers

#endif
