#ifndef DELTALAB_SCALAR_HPP
#define DELTALAB_SCALAR_HPP

#include <complex>
#include <optional>
#include <string>

#include "deltalab/rational.hpp"

namespace deltalab::exactcalc {

/// Exact element a + b*lambda of the quadratic extension Q[lambda]/(lambda^2 - r),
/// with r rational and possibly negative. Pure rationals are the b == 0 case and
/// carry no relation constant. Arithmetic is exact; values with different
/// relation constants never mix (throws std::domain_error).
///
/// The final, unavoidable approximation lives in embed(): a + b*sqrt(r) as a
/// complex double (imaginary when r < 0).
class Scalar {
 public:
  Scalar() : a_(0) {}
  Scalar(Rational a) : a_(std::move(a)) {}  // NOLINT: implicit by design
  Scalar(long n) : a_(rat(n)) {}            // NOLINT

  /// a + b*lambda with lambda^2 = r. A zero relation constant collapses
  /// lambda to 0, so the result is the pure rational a.
  static Scalar with_lambda(Rational a, Rational b, Rational r);

  /// lambda itself for the given relation.
  static Scalar lambda(Rational r) { return with_lambda(Rational(0), Rational(1), std::move(r)); }

  const Rational& rational_part() const { return a_; }
  const Rational& lambda_part() const { return b_; }
  const std::optional<Rational>& relation() const { return r_; }

  bool is_rational() const { return !r_.has_value(); }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  /// The value as a plain rational; throws if a lambda component is present.
  const Rational& as_rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }

  /// Exact inverse (conjugate over the norm); throws on zero divisors.
  Scalar inverse() const;
  friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;  // relations already merged or absent
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  /// a + b*sqrt(r); imaginary part b*sqrt(-r) when r < 0. The only place
  /// floating point enters.
  std::complex<double> embed() const;

  std::string str() const;

 private:
  void normalize();
  /// Relation to use for a binary op; throws std::domain_error on a clash.
  static std::optional<Rational> merged_relation(const Scalar& x, const Scalar& y);

  Rational a_;
  Rational b_{0};
  std::optional<Rational> r_;
};

}  // namespace deltalab::exactcalc

#endif
