#ifndef DELTALAB_PIECEWISE_HPP
#define DELTALAB_PIECEWISE_HPP

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "deltalab/polynomial.hpp"

namespace deltalab::exactcalc {

struct Interval {
  Rational lo;
  Rational hi;
  Interval(Rational l, Rational h);
  Rational length() const { return Rational(hi - lo); }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Declared smoothness sentinel for globally polynomial functions.
inline constexpr int kSmoothInf = 1 << 20;

/// A function that is polynomial between strictly increasing rational
/// breakpoints b_0 < ... < b_{n-1}. pieces()[0] lives on (-inf, b_0),
/// pieces()[i] on (b_{i-1}, b_i), pieces()[n] on (b_{n-1}, +inf); with no
/// breakpoints the function is a single global polynomial.
///
/// Values at a breakpoint use the right-hand piece; eval_left/eval_right give
/// the one-sided limits. Integrals never see the convention.
///
/// Two pieces of metadata ride along:
///  - a declared smoothness class k >= -1 (-1 means jumps allowed), kept
///    conservatively by operations and upgradeable through recertified();
///  - an optional domain interval. Evaluation and integration outside a
///    declared domain throw; convolution windows are validated against it.
class PiecewisePolynomial {
 public:
  /// The zero function.
  PiecewisePolynomial();

  /// A single polynomial valid on all of R (C^inf).
  static PiecewisePolynomial global(Polynomial p);
  static PiecewisePolynomial constant(Scalar c) { return global(Polynomial::constant(std::move(c))); }
  static PiecewisePolynomial zero() { return PiecewisePolynomial(); }

  /// p on [lo, hi], identically zero outside; declared smoothness k.
  static PiecewisePolynomial on_interval(Polynomial p, const Rational& lo, const Rational& hi,
                                         int smoothness = -1);

  /// Full constructor: pieces.size() must equal breakpoints.size() + 1.
  static PiecewisePolynomial from_pieces(std::vector<Rational> breakpoints,
                                         std::vector<Polynomial> pieces, int smoothness = -1,
                                         std::optional<Interval> domain = std::nullopt);

  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }
  int smoothness() const { return smoothness_; }
  const std::optional<Interval>& domain() const { return domain_; }

  bool is_zero() const;
  /// True when head and tail pieces vanish identically.
  bool compactly_supported() const;
  /// Smallest closed interval containing all nonzero pieces. Throws when the
  /// function is not compactly supported; the zero function yields [0, 0].
  Interval support_hull() const;
  /// Largest |x| over the support hull.
  Rational support_radius() const;

  /// Shared lambda-relation constant of the coefficients, if any.
  std::optional<Rational> relation() const;

  Scalar evaluate(const Rational& x) const;    // right-hand convention
  Scalar eval_left(const Rational& x) const;   // limit from below
  Scalar eval_right(const Rational& x) const;  // limit from above
  Scalar derivative_at(const Rational& x, int order) const;       // right-hand piece
  Scalar derivative_at_left(const Rational& x, int order) const;  // left-hand piece
  /// Exact evaluation at the rational the double represents, rounded once at
  /// the end. Reporting and float-oracle use; no domain checks.
  std::complex<double> embed_eval(double x) const;

  PiecewisePolynomial operator-() const;
  friend PiecewisePolynomial operator+(const PiecewisePolynomial& p, const PiecewisePolynomial& q);
  friend PiecewisePolynomial operator-(const PiecewisePolynomial& p, const PiecewisePolynomial& q);
  friend PiecewisePolynomial operator*(const PiecewisePolynomial& p, const PiecewisePolynomial& q);
  friend PiecewisePolynomial operator*(const Scalar& c, const PiecewisePolynomial& p);

  /// Piecewise derivative. Requires declared smoothness >= 1: differentiating
  /// across jumps would produce delta terms this representation cannot hold.
  PiecewisePolynomial differentiate() const;

  /// Exact antiderivative vanishing at the anchor; continuous across
  /// breakpoints, declared smoothness incremented.
  PiecewisePolynomial antiderivative(const Rational& anchor) const;

  /// Exact definite integral; [a, b] must lie inside the declared domain and,
  /// when head or tail pieces are nonzero, be finite (it always is here).
  Scalar integrate(const Rational& a, const Rational& b) const;

  /// Integral over the whole support (compactly supported functions only).
  Scalar integrate_support() const;

  /// x -> p(-x).
  PiecewisePolynomial reflect() const;
  /// x -> p(x - c).
  PiecewisePolynomial translate(const Rational& c) const;
  /// x -> (1/sigma) p(x/sigma); preserves total integral exactly. sigma > 0.
  PiecewisePolynomial scale_net(const Rational& sigma) const;

  /// Narrows the declared domain to the window (which must be contained in
  /// the current domain). Pieces outside the window are dropped.
  PiecewisePolynomial restrict(const Interval& window) const;

  /// Exact C^k matching of adjacent pieces at every breakpoint.
  bool smoothness_check(int k) const;
  /// Copy with declared smoothness k after an exact check; throws when the
  /// function is not actually C^k.
  PiecewisePolynomial recertified(int k) const;
  PiecewisePolynomial with_smoothness(int k) const;  // unchecked metadata override

  /// Structural equality of normalized representations (values everywhere);
  /// smoothness and domain metadata do not participate.
  friend bool operator==(const PiecewisePolynomial& p, const PiecewisePolynomial& q);
  friend bool operator!=(const PiecewisePolynomial& p, const PiecewisePolynomial& q) { return !(p == q); }

  std::string str() const;

  friend std::pair<PiecewisePolynomial, PiecewisePolynomial> align(const PiecewisePolynomial& p,
                                                                   const PiecewisePolynomial& q);

 private:
  void normalize();  // merge adjacent identical pieces
  int piece_index_right(const Rational& x) const;
  int piece_index_left(const Rational& x) const;
  void require_in_domain(const Rational& x) const;

  std::vector<Rational> breaks_;
  std::vector<Polynomial> pieces_;  // breaks_.size() + 1 entries
  int smoothness_ = -1;
  std::optional<Interval> domain_;
};

/// Exact convolution (p * q)(x) = Int p(y) q(x - y) dy as a piecewise
/// polynomial valid on the window. q must be compactly supported; p must be
/// known on window (+) [-supp q]. Result breakpoints are pairwise sums of the
/// input breakpoints clipped to the window.
PiecewisePolynomial convolve(const PiecewisePolynomial& p, const PiecewisePolynomial& q,
                             const Interval& window);

/// Refine both operands to a common breakpoint set (used by arithmetic and
/// tests that compare piecewise structures).
std::pair<PiecewisePolynomial, PiecewisePolynomial> align(const PiecewisePolynomial& p,
                                                          const PiecewisePolynomial& q);

/// Equality of values on a window: both restricted, then compared.
bool equal_on(const PiecewisePolynomial& p, const PiecewisePolynomial& q, const Interval& window);

}  // namespace deltalab::exactcalc

#endif
