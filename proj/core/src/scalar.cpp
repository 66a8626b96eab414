#include "deltalab/scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace deltalab::exactcalc {

Scalar Scalar::with_lambda(Rational a, Rational b, Rational r) {
  Scalar s;
  s.a_ = std::move(a);
  if (r == 0) return s;  // lambda^2 = 0 forces lambda = 0
  s.b_ = std::move(b);
  if (s.b_ != 0) s.r_ = std::move(r);
  return s;
}

const Rational& Scalar::as_rational() const {
  if (!is_rational()) throw std::domain_error("Scalar has a lambda component: " + str());
  return a_;
}

void Scalar::normalize() {
  if (b_ == 0) r_.reset();
}

std::optional<Rational> Scalar::merged_relation(const Scalar& x, const Scalar& y) {
  if (!x.r_) return y.r_;
  if (!y.r_) return x.r_;
  if (*x.r_ != *y.r_)
    throw std::domain_error("incompatible lambda relations: lambda^2 = " + to_string(*x.r_) +
                            " vs " + to_string(*y.r_));
  return x.r_;
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  s.a_ = -s.a_;
  s.b_ = -s.b_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  r_ = merged_relation(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  r_ = merged_relation(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  auto rel = merged_relation(*this, o);
  // (a1 + b1 L)(a2 + b2 L) = a1 a2 + b1 b2 r + (a1 b2 + a2 b1) L
  Rational a = a_ * o.a_;
  if (b_ != 0 && o.b_ != 0) a += b_ * o.b_ * *rel;
  Rational b = a_ * o.b_ + o.a_ * b_;
  a_ = std::move(a);
  b_ = std::move(b);
  r_ = std::move(rel);
  normalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_rational()) {
    if (a_ == 0) throw std::domain_error("division by zero");
    Rational inv(a_.get_den(), a_.get_num());
    inv.canonicalize();
    return Scalar(inv);
  }
  const Rational norm = a_ * a_ - b_ * b_ * *r_;
  if (norm == 0) throw std::domain_error("zero divisor in quadratic extension: " + str());
  Rational ninv(norm.get_den(), norm.get_num());
  ninv.canonicalize();
  return with_lambda(Rational(a_ * ninv), Rational(-b_ * ninv), *r_);
}

std::complex<double> Scalar::embed() const {
  const double a = to_double(a_);
  if (is_rational()) return {a, 0.0};
  const double b = to_double(b_);
  const double r = to_double(*r_);
  if (r >= 0.0) return {a + b * std::sqrt(r), 0.0};
  return {a, b * std::sqrt(-r)};
}

std::string Scalar::str() const {
  if (is_rational()) return to_string(a_);
  return to_string(a_) + " + (" + to_string(b_) + ")*sqrt(" + to_string(*r_) + ")";
}

}  // namespace deltalab::exactcalc
