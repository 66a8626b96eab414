#ifndef DELTALAB_TESTS_GENERATORS_HPP
#define DELTALAB_TESTS_GENERATORS_HPP

#include <random>

#include "deltalab/models.hpp"
#include "deltalab/piecewise.hpp"

// Deterministic random inputs for property-style tests.
namespace deltalab::testing {

using exactcalc::Polynomial;
using exactcalc::Rational;
using exactcalc::Scalar;
using exactcalc::rat;

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }

  Rational rational(long max_num = 12, long max_den = 8) {
    return rat(integer(-max_num, max_num), integer(1, max_den));
  }

  Rational nonzero_rational(long max_num = 12, long max_den = 8) {
    Rational q = rational(max_num, max_den);
    while (q == 0) q = rational(max_num, max_den);
    return q;
  }

  Scalar scalar(const Rational& relation) {
    return Scalar::with_lambda(rational(), rational(), relation);
  }

  Polynomial polynomial(int max_degree, long max_num = 12, long max_den = 8) {
    std::vector<Scalar> coeffs;
    const int deg = static_cast<int>(integer(0, max_degree));
    for (int i = 0; i <= deg; ++i) coeffs.emplace_back(rational(max_num, max_den));
    return Polynomial(std::move(coeffs));
  }

  /// Compactly supported piecewise polynomial with a handful of pieces.
  exactcalc::PiecewisePolynomial compact_piecewise(int max_pieces = 3, int max_degree = 4) {
    const int n = static_cast<int>(integer(1, max_pieces));
    std::vector<Rational> breaks;
    long where = integer(-8, -4);
    for (int i = 0; i <= n; ++i) {
      breaks.push_back(rat(where, 4));
      where += integer(1, 4);
    }
    std::vector<Polynomial> pieces;
    pieces.emplace_back();
    for (int i = 0; i < n; ++i) pieces.push_back(polynomial(max_degree));
    pieces.emplace_back();
    return exactcalc::PiecewisePolynomial::from_pieces(std::move(breaks), std::move(pieces));
  }

  /// Random piecewise-cubic model: independent cubics left and right of 0,
  /// so jets of every order are certified.
  models::PiecewiseModel cubic_model(long max_num = 12, long max_den = 8) {
    return models::PiecewiseModel(
        exactcalc::PiecewisePolynomial::global(polynomial(3, max_num, max_den)),
        exactcalc::PiecewisePolynomial::global(polynomial(3, max_num, max_den)), 8);
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace deltalab::testing

#endif
