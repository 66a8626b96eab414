#ifndef DELTALAB_ASSOCIATION_HPP
#define DELTALAB_ASSOCIATION_HPP

#include <complex>
#include <string>
#include <vector>

#include "deltalab/models.hpp"

namespace deltalab::association {

using exactcalc::Interval;
using exactcalc::PiecewisePolynomial;
using exactcalc::Rational;
using exactcalc::Scalar;
using mollifiers::Mollifier;
using models::PiecewiseModel;

/// Compactly supported C^k test function with its exact jet at 0 cached.
struct TestFunction {
  PiecewisePolynomial psi;
  std::vector<Rational> jet0;  // psi^(i)(0), i = 0..jet0.size()-1

  static TestFunction from_piecewise(PiecewisePolynomial psi, int jet_order);
  /// x^j * plateau(x) for a plateau identically 1 on [-core, core] and
  /// supported in [-radius, radius]: the jet at 0 is diagonal,
  /// psi_j^(i)(0) = j! when i == j and 0 otherwise (to every order while the
  /// plateau is flat).
  static TestFunction monomial_plateau(int j, const Rational& core, const Rational& radius,
                                       int smoothness);
};

/// Strictly decreasing positive scale parameters, at least 3 of them.
struct SigmaSchedule {
  std::vector<Rational> sigmas;
  explicit SigmaSchedule(std::vector<Rational> s);
  /// 2^-lo, 2^-(lo+1), ..., 2^-hi.
  static SigmaSchedule dyadic(int lo = 3, int hi = 8);
  Rational max() const { return sigmas.front(); }
};

/// Exact pairing <G, psi> = Int G psi. G must either be compactly supported
/// inside psi's known domain or be defined on all of supp psi.
Scalar pairing(const PiecewisePolynomial& g, const TestFunction& psi);

/// Exact <F_sigma * D_sigma^(p), psi> for the model of f; the product is
/// supported in [-sigma*l, sigma*l], so only that window of F_sigma is built.
Scalar product_pairing(const PiecewiseModel& f, const Mollifier& m, int p, const Rational& sigma,
                       const TestFunction& psi);

/// Exact rational coefficients (c_0 ... c_J) of an associated distribution
/// sum_j c_j delta^(j).
struct DeltaCoeffs {
  std::vector<Rational> c;
  friend bool operator==(const DeltaCoeffs& a, const DeltaCoeffs& b) { return a.c == b.c; }
  std::string str() const;
};

/// sigma -> 0 extraction result: per-sigma coefficient estimates (complex,
/// after embedding), their linear-in-sigma least-squares intercepts, fit
/// residuals, and the imaginary residue left at each sigma.
struct AssociationEstimate {
  int order = 0;  // J
  std::vector<Rational> sigmas;
  std::vector<std::vector<Scalar>> raw_pairings;         // [j][i] exact <F D^(p), psi_j>
  std::vector<std::vector<std::complex<double>>> coeff_by_sigma;  // [j][i]
  std::vector<std::complex<double>> coeff;               // intercepts c_j*
  std::vector<double> fit_residual;                      // rms per j
  std::vector<double> imag_residue;                      // max_j |Im c_j(sigma_i)| per i
  double max_imag_residue = 0.0;
};

/// Runs the pairing sweep for <F_sigma * D_sigma^(p), x^j plateau>, j <= J,
/// solves c_j(sigma) = (-1)^j I_j(sigma)/j!, and fits c_j(sigma) = c_j* + b_j sigma.
/// Requires schedule.max() * l strictly below the plateau core radius.
AssociationEstimate extract(const PiecewiseModel& f, const Mollifier& m, int p,
                            const SigmaSchedule& schedule, int order);

/// Same sweep against an arbitrary test-function set: the exact jet system
/// I_i(sigma) = sum_j c_j(sigma) (-1)^j psi_i^(j)(0) is solved per sigma
/// (still in exact arithmetic), so any set with a nonsingular jet matrix
/// works, not just the diagonal x^j plateau family.
AssociationEstimate extract_with(const PiecewiseModel& f, const Mollifier& m, int p,
                                 const SigmaSchedule& schedule,
                                 const std::vector<TestFunction>& tests);

/// Coefficients of the distribution associated with F . D' for f of class
/// order >= 2: ( -(h_0 + m_1), m_0 ).
DeltaCoeffs first_derivative_product_oracle(const PiecewiseModel& f);

/// Coefficients for F . D'' for f of class order >= 3:
/// ( h_1 + m_2, -(3/2 h_0 + 2 m_1), m_0 ).
DeltaCoeffs second_derivative_product_oracle(const PiecewiseModel& f);

enum class ParityProduct { EvenDPrime, OddDPrime, EvenDSecond, OddDSecond };

/// Products of the even/odd parts F_0, F_1 with D' and D'', expressed with
/// the jets of f itself (the even part contributes no jumps, the odd part no
/// means): even-D' -> (0, m_0); odd-D' -> (-(h_0+m_1), 0);
/// even-D'' -> (h_1+m_2, 0, m_0); odd-D'' -> (0, -(3/2 h_0 + 2 m_1), 0).
DeltaCoeffs parity_product_oracle(const PiecewiseModel& f, ParityProduct which);

enum class NormedPowerFamily { Plus, Minus, Abs, AbsSgn };

/// Closed forms for the normed-power products X . D^(order) with
/// X = nu_+^p, nu_-^p, |nu|^p or |nu|^p sgn, order in {p+1, p+2}:
///   nu_+-^p . D^(p+1) = (-+1)^(p+1) [ delta -+ (p+1)/2 delta' ]
///   nu_+-^p . D^(p+2) = (-+1)^p [ -+ (2p+3)/2 delta' + C(p+2,2)/2 delta'' ]
/// summed/differenced for the abs families (Abs requires odd p, AbsSgn even
/// p >= 2). Returned as coefficients of delta ... delta^(order), trailing
/// zeros included.
DeltaCoeffs normed_power_product_oracle(int p, NormedPowerFamily family, int order);

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string observed;
};

struct IdentityReport {
  Rational sigma;
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
};

/// The five exact integral identities every admissible D(sigma, .) satisfies
/// on [-l, l], tolerance zero:
///   (i)   Int v D^2 dv = 0
///   (ii)  Int D(v) (Int_{-l}^{v} D) dv = 1/2
///   (iii) Int D D' dv = 0
///   (iv)  (1/sigma) Int v D D' dv = -1/2
///   (v)   Int v^2 D D' dv = 0
IdentityReport identity_suite(const Mollifier& m, const Rational& sigma);

enum class AssociationKind { Delta, DeltaSquared, Model };

struct AssociationCheck {
  std::vector<Rational> sigmas;
  std::vector<Scalar> raw;  // exact pairings per sigma
  std::complex<double> intercept;
  double expected = 0.0;
  std::string expected_exact;  // when the target is an exact rational
  double abs_error = 0.0;
  double max_imag = 0.0;
};

/// Delta: <D_sigma, psi> -> psi(0). DeltaSquared: <D_sigma^2, psi> -> psi(0).
/// Model: <f * D_sigma, psi> -> Int f psi (computed exactly).
AssociationCheck association_check(AssociationKind kind, const Mollifier& m,
                                   const SigmaSchedule& schedule, const TestFunction& psi,
                                   const PiecewiseModel* f = nullptr);

struct DivergenceRow {
  Rational eps;
  Scalar pairing_value;        // <phi_eps^2, psi>
  Scalar eps_times_pairing;    // eps * <phi_eps^2, psi>
  bool inside_core = false;    // supp phi_eps inside the plateau core
  bool exact_match = false;    // eps * pairing == Int phi^2 exactly
};

struct DivergenceReport {
  Rational phi_sq_integral;    // Int phi^2, exact
  std::vector<DivergenceRow> rows;
  bool scaling_law_holds = false;   // consecutive dyadic ratio of pairings = 2 exactly
  bool exact_regime_reached = false;
  double fitted_limit = 0.0;    // intercept of eps * pairing as eps -> 0
  double expected_limit = 0.0;  // psi(0) * Int phi^2
};

/// Certifies that <phi_eps^2, psi> diverges like 1/eps for a moment-normalized
/// bump phi (Int x^j phi = delta_0j, j <= q): eps * <phi_eps^2, psi> equals
/// Int phi^2 exactly once supp phi_eps sits inside the plateau core.
DivergenceReport embedding_divergence(int q, const std::vector<Rational>& eps_schedule,
                                      const TestFunction& psi, int smoothness = 6);

/// Least-squares intercept/slope of y = a + b x; also reports rms residual.
struct LinearFit {
  double intercept = 0.0;
  double slope = 0.0;
  double rms_residual = 0.0;
};
LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace deltalab::association

#endif
