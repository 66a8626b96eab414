#ifndef DELTALAB_POLYNOMIAL_HPP
#define DELTALAB_POLYNOMIAL_HPP

#include <initializer_list>
#include <vector>

#include "deltalab/scalar.hpp"

namespace deltalab::exactcalc {

/// Dense univariate polynomial with Scalar coefficients, ascending powers.
/// Trailing zeros are trimmed on construction, so degree() is honest: the
/// zero polynomial has an empty coefficient list and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);
  Polynomial(std::initializer_list<Scalar> coeffs);

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(Scalar c);
  /// The monomial c * x^n.
  static Polynomial monomial(Scalar c, int n);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  const Scalar& coefficient(int n) const;  // 0 beyond degree

  Scalar operator()(const Rational& x) const { return eval(Scalar(x)); }
  Scalar eval(const Scalar& x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
  friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator*(const Scalar& c, const Polynomial& p);

  Polynomial derivative() const;
  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const;
  Scalar definite_integral(const Rational& a, const Rational& b) const;

  /// p(c0 + c1*x): enough composition for reflection, shifts and scale nets.
  Polynomial compose_linear(const Rational& c0, const Rational& c1) const;

  /// Derivative of given order evaluated at a point, exact.
  Scalar derivative_at(const Rational& x, int order) const;

  friend bool operator==(const Polynomial& x, const Polynomial& y) { return x.coeffs_ == y.coeffs_; }
  friend bool operator!=(const Polynomial& x, const Polynomial& y) { return !(x == y); }

  std::string str() const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

}  // namespace deltalab::exactcalc

#endif
