#ifndef DELTALAB_MOLLIFIER_HPP
#define DELTALAB_MOLLIFIER_HPP

#include <string>
#include <vector>

#include "deltalab/bump.hpp"

namespace deltalab::mollifiers {

using exactcalc::Scalar;

/// The delta-modelling pair: an even unit-mass bump f and an even zero-mass
/// companion g with disjoint supports. Instances D(s,.) = f + lambda_s * g
/// are assembled per scale parameter s with lambda_s^2 = (s - Int f^2)/Int g^2,
/// which makes Int D = 1 and Int D^2 = s exact ring identities.
class Mollifier {
 public:
  const PiecewisePolynomial& f() const { return f_; }
  const PiecewisePolynomial& g() const { return g_; }
  const Rational& f_squared_integral() const { return f2_; }
  const Rational& g_squared_integral() const { return g2_; }
  /// Support radius l: supp f and supp g lie in [-l, l].
  const Rational& support_radius() const { return l_; }
  int smoothness() const { return k_; }

 private:
  friend Mollifier make_mollifier(PiecewisePolynomial f, PiecewisePolynomial g, int k);
  Mollifier() = default;
  PiecewisePolynomial f_, g_;
  Rational f2_, g2_, l_;
  int k_ = 0;
};

/// Validates and assembles a Mollifier. Throws std::invalid_argument when
/// f or g is asymmetric, their supports overlap, Int f != 1, Int g != 0,
/// g is identically zero, or either fails an exact C^k check (k >= 2).
Mollifier make_mollifier(PiecewisePolynomial f, PiecewisePolynomial g, int k);

/// D(s,.) at a specific rational s > 0, carrying the relation constant
/// r = (s - Int f^2)/Int g^2 of its lambda. s = Int f^2 collapses lambda to
/// zero; that instance is valid but flagged degenerate.
struct MollifierInstance {
  Rational s;
  Rational r;
  bool degenerate = false;
  PiecewisePolynomial d;  // f + lambda * g
  Rational support_radius;
  int smoothness = 0;
};

MollifierInstance instantiate(const Mollifier& m, const Rational& s);

/// The scaled net D_sigma(x) = (1/sigma) D(sigma, x/sigma); unit mass, support
/// inside [-sigma*l, sigma*l]. sigma > 0.
PiecewisePolynomial scaled_instance(const Mollifier& m, const Rational& sigma);

/// p-th derivative of D_sigma by exact piecewise differentiation; requires
/// p <= k - 1. derivative_net(m, sigma, p + 1) == differentiate(derivative_net(m, sigma, p)).
PiecewisePolynomial derivative_net(const Mollifier& m, const Rational& sigma, int p);

/// Result of checking one exact condition.
struct ConditionCheck {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string observed;
};

struct ConditionReport {
  std::vector<ConditionCheck> checks;
  bool all_pass() const;
};

/// Tolerance-zero verification of the instance: evenness, unit mass,
/// Int D^2 = s. Failures are report entries, never exceptions.
ConditionReport verify_conditions(const MollifierInstance& inst);

/// Bump-pair geometry description: masses of the f bump and the signed g
/// bumps, every support rational. Serializable (see serialize.hpp) and
/// sufficient to rebuild the mollifier exactly.
struct MollifierDescription {
  int smoothness = 6;
  std::vector<BumpSpec> f_bumps;
  std::vector<BumpSpec> g_bumps;
};

Mollifier build_mollifier(const MollifierDescription& desc);

/// The stock geometry: f of mass 1 on [-1/4, 1/4]; g = inner mirrored pair on
/// +-[3/8, 5/8] (mass 1/2 each) minus outer mirrored pair on +-[11/16, 15/16]
/// (mass 1/2 each); C^6.
MollifierDescription default_geometry();
/// A structurally different geometry (wider f, different masses, C^5) used to
/// confirm results do not depend on the particular admissible mollifier.
MollifierDescription alternate_geometry();

Mollifier default_mollifier();
Mollifier alternate_mollifier();

}  // namespace deltalab::mollifiers

#endif
