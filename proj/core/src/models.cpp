#include "deltalab/models.hpp"

#include <algorithm>
#include <stdexcept>

namespace deltalab::models {

using exactcalc::Polynomial;
using exactcalc::Scalar;
using exactcalc::rat;
using mollifiers::scaled_instance;

namespace {

Rational inverse_factorial(int p) {
  Rational f(1);
  for (int i = 2; i <= p; ++i) f *= i;
  Rational inv(f.get_den(), f.get_num());
  inv.canonicalize();
  return inv;
}

// Stitches the two half-line representations at 0 into one function
// (right-hand value at 0 comes from the right part).
PiecewisePolynomial combine_at_zero(const PiecewisePolynomial& left,
                                    const PiecewisePolynomial& right) {
  const Rational zero(0);
  std::vector<Rational> nb;
  std::vector<Polynomial> np;
  const auto& lb = left.breakpoints();
  const size_t lcount =
      static_cast<size_t>(std::lower_bound(lb.begin(), lb.end(), zero) - lb.begin());
  for (size_t i = 0; i < lcount; ++i) nb.push_back(lb[i]);
  for (size_t i = 0; i <= lcount; ++i) np.push_back(left.pieces()[i]);
  nb.push_back(zero);
  const auto& rb = right.breakpoints();
  const size_t rskip =
      static_cast<size_t>(std::upper_bound(rb.begin(), rb.end(), zero) - rb.begin());
  for (size_t i = rskip; i < rb.size(); ++i) nb.push_back(rb[i]);
  for (size_t i = rskip; i < right.pieces().size(); ++i) np.push_back(right.pieces()[i]);
  return PiecewisePolynomial::from_pieces(std::move(nb), std::move(np), -1);
}

}  // namespace

PiecewiseModel::PiecewiseModel(PiecewisePolynomial left, PiecewisePolynomial right, int class_order)
    : left_(std::move(left)), right_(std::move(right)), kd_(class_order) {
  if (kd_ < 0) throw std::invalid_argument("class order must be nonnegative");
  if (left_.relation() || right_.relation())
    throw std::invalid_argument("models must have rational coefficients");
  if (left_.domain() || right_.domain())
    throw std::invalid_argument("model sides must be globally defined representations");
}

PiecewiseModel PiecewiseModel::constant(const Rational& c) {
  auto p = PiecewisePolynomial::constant(Scalar(c));
  return PiecewiseModel(p, p, 8);
}

PiecewiseModel PiecewiseModel::smooth(const Polynomial& p, int class_order) {
  auto pw = PiecewisePolynomial::global(p);
  return PiecewiseModel(pw, pw, class_order);
}

PiecewiseModel PiecewiseModel::nu_plus(int p) {
  if (p < 0) throw std::invalid_argument("normed power order must be nonnegative");
  auto right = PiecewisePolynomial::global(Polynomial::monomial(Scalar(inverse_factorial(p)), p));
  return PiecewiseModel(PiecewisePolynomial::zero(), right, p + 4);
}

PiecewiseModel PiecewiseModel::nu_minus(int p) {
  return nu_plus(p).reflect();
}

PiecewiseModel PiecewiseModel::heaviside() { return nu_plus(0); }

PiecewiseModel PiecewiseModel::abs_nu(int p) { return nu_plus(p) + nu_minus(p); }

PiecewiseModel PiecewiseModel::abs_nu_sgn(int p) { return nu_plus(p) + nu_minus(p).scaled(rat(-1)); }

std::pair<Rational, Rational> PiecewiseModel::mean_jump(int i) const {
  if (i < 0 || i > kd_)
    throw std::invalid_argument("jet order " + std::to_string(i) +
                                " beyond declared class order " + std::to_string(kd_));
  const Rational plus = one_sided(i, true);
  const Rational minus = one_sided(i, false);
  Rational m = (plus + minus) / 2;
  m.canonicalize();
  return {std::move(m), Rational(plus - minus)};
}

Rational PiecewiseModel::one_sided(int i, bool from_right) const {
  const Rational zero(0);
  if (from_right) return right_.derivative_at(zero, i).as_rational();
  return left_.derivative_at_left(zero, i).as_rational();
}

PiecewiseModel PiecewiseModel::reflect() const {
  return PiecewiseModel(right_.reflect(), left_.reflect(), kd_);
}

PiecewiseModel PiecewiseModel::scaled(const Rational& c) const {
  return PiecewiseModel(Scalar(c) * left_, Scalar(c) * right_, kd_);
}

PiecewiseModel operator+(const PiecewiseModel& a, const PiecewiseModel& b) {
  return PiecewiseModel(a.left_ + b.left_, a.right_ + b.right_, std::min(a.kd_, b.kd_));
}

std::pair<PiecewiseModel, PiecewiseModel> PiecewiseModel::even_odd_parts() const {
  const PiecewiseModel mirrored = reflect();
  const Rational half = rat(1, 2);
  PiecewiseModel even = (*this + mirrored).scaled(half);
  PiecewiseModel odd = (*this + mirrored.scaled(rat(-1))).scaled(half);
  return {std::move(even), std::move(odd)};
}

PiecewisePolynomial PiecewiseModel::to_piecewise(const Interval& window) const {
  return combine_at_zero(left_, right_).restrict(window);
}

bool operator==(const PiecewiseModel& a, const PiecewiseModel& b) {
  return a.left_ == b.left_ && a.right_ == b.right_;
}

ModelInstance model(const PiecewiseModel& f, const Mollifier& m, const Rational& sigma,
                    const Rational& window) {
  if (sigma <= 0) throw std::invalid_argument("sigma must be positive");
  if (window <= 0) throw std::invalid_argument("window must be positive");
  const Rational reach = sigma * m.support_radius();
  const PiecewisePolynomial d_sigma = scaled_instance(m, sigma);
  const PiecewisePolynomial source =
      f.to_piecewise(Interval(Rational(-window - reach), Rational(window + reach)));
  ModelInstance inst{f, sigma, window,
                     convolve(source, d_sigma, Interval(Rational(-window), window))};
  return inst;
}

bool derivative_consistency(const PiecewiseModel& f, const PiecewiseModel& df,
                            const Mollifier& m, const Rational& sigma, const Rational& window) {
  const PiecewisePolynomial lhs = model(f, m, sigma, window).f_sigma.differentiate();
  const PiecewisePolynomial rhs = model(df, m, sigma, window).f_sigma;
  return lhs == rhs;
}

PiecewiseModel named_model(const std::string& name) {
  const auto colon = name.find(':');
  const std::string head = name.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
  auto order = [&]() {
    try {
      size_t pos = 0;
      const int p = std::stoi(arg, &pos);
      if (pos != arg.size() || p < 0) throw std::invalid_argument(arg);
      return p;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad model order in '" + name + "'");
    }
  };
  if (head == "heaviside") return PiecewiseModel::heaviside();
  if (head == "nu_plus") return PiecewiseModel::nu_plus(order());
  if (head == "nu_minus") return PiecewiseModel::nu_minus(order());
  if (head == "abs_nu") return PiecewiseModel::abs_nu(order());
  if (head == "abs_nu_sgn") return PiecewiseModel::abs_nu_sgn(order());
  if (head == "constant") return PiecewiseModel::constant(exactcalc::parse_rational(arg));
  if (head == "poly") {
    std::vector<Scalar> coeffs;
    size_t start = 0;
    while (start <= arg.size()) {
      const size_t comma = arg.find(',', start);
      const std::string tok =
          arg.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      coeffs.emplace_back(exactcalc::parse_rational(tok));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return PiecewiseModel::smooth(Polynomial(std::move(coeffs)));
  }
  throw std::invalid_argument("unknown model '" + name + "'");
}

}  // namespace deltalab::models
