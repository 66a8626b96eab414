#include "deltalab/polynomial.hpp"

#include <stdexcept>

namespace deltalab::exactcalc {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(Scalar c) { return Polynomial({std::move(c)}); }

Polynomial Polynomial::monomial(Scalar c, int n) {
  if (n < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Scalar> v(static_cast<size_t>(n) + 1);
  v.back() = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Scalar& Polynomial::coefficient(int n) const {
  static const Scalar zero;
  if (n < 0 || n > degree()) return zero;
  return coeffs_[static_cast<size_t>(n)];
}

Scalar Polynomial::eval(const Scalar& x) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  std::vector<Scalar> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(-c);
  return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
  if (x.is_zero() || y.is_zero()) return Polynomial();
  std::vector<Scalar> v(x.coeffs_.size() + y.coeffs_.size() - 1);
  for (size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < y.coeffs_.size(); ++j) v[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial operator*(const Scalar& c, const Polynomial& p) {
  std::vector<Scalar> v;
  v.reserve(p.coeffs_.size());
  for (const auto& a : p.coeffs_) v.push_back(c * a);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Scalar> v(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = Scalar(rat(static_cast<long>(i))) * coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::antiderivative() const {
  if (is_zero()) return Polynomial();
  std::vector<Scalar> v(coeffs_.size() + 1);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    v[i + 1] = Scalar(rat(1, static_cast<long>(i) + 1)) * coeffs_[i];
  return Polynomial(std::move(v));
}

Scalar Polynomial::definite_integral(const Rational& a, const Rational& b) const {
  const Polynomial anti = antiderivative();
  return anti(b) - anti(a);
}

Polynomial Polynomial::compose_linear(const Rational& c0, const Rational& c1) const {
  // Horner in the argument polynomial c0 + c1 x.
  const Polynomial arg({Scalar(c0), Scalar(c1)});
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * arg + Polynomial::constant(*it);
  return acc;
}

Scalar Polynomial::derivative_at(const Rational& x, int order) const {
  if (order < 0) throw std::invalid_argument("negative derivative order");
  Polynomial p = *this;
  for (int i = 0; i < order; ++i) p = p.derivative();
  return p(x);
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[i].str() + ")";
    if (i == 1) out += "*x";
    if (i > 1) out += "*x^" + std::to_string(i);
  }
  return out;
}

}  // namespace deltalab::exactcalc
