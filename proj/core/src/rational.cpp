#include "deltalab/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace deltalab::exactcalc {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto check_int = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!check_int(num) || !check_int(den))
    throw std::invalid_argument("malformed rational literal: " + text);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator: " + text);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

Rational pow_rational(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  if (q == 0 && e < 0) throw std::invalid_argument("0 to a negative power");
  Rational base = e < 0 ? Rational(q.get_den(), q.get_num()) : q;
  if (e < 0) base.canonicalize();
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  Rational acc(1);
  while (n > 0) {
    if (n & 1UL) acc *= base;
    base *= base;
    n >>= 1UL;
  }
  acc.canonicalize();
  return acc;
}

}  // namespace deltalab::exactcalc
