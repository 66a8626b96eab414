#include "deltalab/piecewise.hpp"

#include <algorithm>
#include <stdexcept>

namespace deltalab::exactcalc {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
}

PiecewisePolynomial::PiecewisePolynomial() : pieces_(1), smoothness_(kSmoothInf) {}

PiecewisePolynomial PiecewisePolynomial::global(Polynomial p) {
  PiecewisePolynomial r;
  r.pieces_[0] = std::move(p);
  return r;
}

PiecewisePolynomial PiecewisePolynomial::on_interval(Polynomial p, const Rational& lo,
                                                     const Rational& hi, int smoothness) {
  return from_pieces({lo, hi}, {Polynomial(), std::move(p), Polynomial()}, smoothness);
}

PiecewisePolynomial PiecewisePolynomial::from_pieces(std::vector<Rational> breakpoints,
                                                     std::vector<Polynomial> pieces,
                                                     int smoothness,
                                                     std::optional<Interval> domain) {
  if (pieces.size() != breakpoints.size() + 1)
    throw std::invalid_argument("piece count must be breakpoint count + 1");
  for (size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (!(breakpoints[i] < breakpoints[i + 1]))
      throw std::invalid_argument("breakpoints must be strictly increasing");
  PiecewisePolynomial r;
  r.breaks_ = std::move(breakpoints);
  r.pieces_ = std::move(pieces);
  r.smoothness_ = smoothness;
  r.domain_ = std::move(domain);
  r.relation();  // validates that coefficients share one lambda relation
  r.normalize();
  return r;
}

void PiecewisePolynomial::normalize() {
  if (breaks_.empty()) return;
  std::vector<Rational> nb;
  std::vector<Polynomial> np;
  np.push_back(pieces_[0]);
  for (size_t i = 0; i < breaks_.size(); ++i) {
    if (pieces_[i + 1] == np.back()) continue;  // drop the breakpoint
    nb.push_back(breaks_[i]);
    np.push_back(pieces_[i + 1]);
  }
  breaks_ = std::move(nb);
  pieces_ = std::move(np);
}

bool PiecewisePolynomial::is_zero() const {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

bool PiecewisePolynomial::compactly_supported() const {
  return pieces_.front().is_zero() && pieces_.back().is_zero();
}

Interval PiecewisePolynomial::support_hull() const {
  if (!compactly_supported())
    throw std::domain_error("function is not compactly supported");
  if (is_zero()) return Interval(Rational(0), Rational(0));
  size_t first = 0, last = 0;
  for (size_t i = 1; i + 1 < pieces_.size(); ++i) {
    if (pieces_[i].is_zero()) continue;
    if (first == 0) first = i;
    last = i;
  }
  return Interval(breaks_[first - 1], breaks_[last]);
}

Rational PiecewisePolynomial::support_radius() const {
  const Interval h = support_hull();
  Rational a = abs(h.lo), b = abs(h.hi);
  return a > b ? a : b;
}

std::optional<Rational> PiecewisePolynomial::relation() const {
  std::optional<Rational> rel;
  for (const auto& piece : pieces_) {
    for (const auto& c : piece.coefficients()) {
      if (!c.relation()) continue;
      if (!rel) {
        rel = c.relation();
      } else if (*rel != *c.relation()) {
        throw std::domain_error("mixed lambda relations inside one piecewise polynomial");
      }
    }
  }
  return rel;
}

int PiecewisePolynomial::piece_index_right(const Rational& x) const {
  return static_cast<int>(std::upper_bound(breaks_.begin(), breaks_.end(), x) - breaks_.begin());
}

int PiecewisePolynomial::piece_index_left(const Rational& x) const {
  return static_cast<int>(std::lower_bound(breaks_.begin(), breaks_.end(), x) - breaks_.begin());
}

void PiecewisePolynomial::require_in_domain(const Rational& x) const {
  if (domain_ && !domain_->contains(x))
    throw std::domain_error("evaluation outside known domain at x = " + to_string(x));
}

Scalar PiecewisePolynomial::evaluate(const Rational& x) const {
  require_in_domain(x);
  // At the right edge of a declared domain only the left piece is meaningful.
  if (domain_ && x == domain_->hi) return eval_left(x);
  return pieces_[piece_index_right(x)](x);
}

Scalar PiecewisePolynomial::eval_left(const Rational& x) const {
  require_in_domain(x);
  return pieces_[piece_index_left(x)](x);
}

Scalar PiecewisePolynomial::eval_right(const Rational& x) const {
  require_in_domain(x);
  return pieces_[piece_index_right(x)](x);
}

Scalar PiecewisePolynomial::derivative_at(const Rational& x, int order) const {
  require_in_domain(x);
  if (domain_ && x == domain_->hi) return pieces_[piece_index_left(x)].derivative_at(x, order);
  return pieces_[piece_index_right(x)].derivative_at(x, order);
}

Scalar PiecewisePolynomial::derivative_at_left(const Rational& x, int order) const {
  require_in_domain(x);
  return pieces_[piece_index_left(x)].derivative_at(x, order);
}

std::complex<double> PiecewisePolynomial::embed_eval(double x) const {
  // Doubles are rationals: evaluate exactly at x, then round once. Naive
  // Horner on embedded coefficients cancels catastrophically once pieces have
  // been scaled or translated, so floating point enters only at the very end.
  Rational rx(x);
  rx.canonicalize();
  return pieces_[static_cast<size_t>(piece_index_right(rx))](rx).embed();
}

namespace {

std::optional<Interval> merge_domains(const std::optional<Interval>& a,
                                      const std::optional<Interval>& b) {
  if (!a) return b;
  if (!b) return a;
  Rational lo = std::max(a->lo, b->lo);
  Rational hi = std::min(a->hi, b->hi);
  if (lo > hi) throw std::domain_error("operands have disjoint domains");
  return Interval(lo, hi);
}

int merge_smoothness(int a, int b) { return std::min(a, b); }

}  // namespace

std::pair<PiecewisePolynomial, PiecewisePolynomial> align(const PiecewisePolynomial& p,
                                                          const PiecewisePolynomial& q) {
  std::vector<Rational> u;
  std::merge(p.breakpoints().begin(), p.breakpoints().end(), q.breakpoints().begin(),
             q.breakpoints().end(), std::back_inserter(u));
  u.erase(std::unique(u.begin(), u.end()), u.end());

  auto refine = [&u](const PiecewisePolynomial& f) {
    std::vector<Polynomial> np;
    np.reserve(u.size() + 1);
    for (size_t j = 0; j < u.size(); ++j) {
      // region (u[j-1], u[j]) contains no breakpoint of f in its interior
      size_t idx = std::lower_bound(f.breakpoints().begin(), f.breakpoints().end(), u[j]) -
                   f.breakpoints().begin();
      np.push_back(f.pieces()[idx]);
    }
    size_t idx = std::upper_bound(f.breakpoints().begin(), f.breakpoints().end(),
                                  u.empty() ? Rational(0) : u.back()) -
                 f.breakpoints().begin();
    np.push_back(f.pieces()[idx]);
    return np;
  };

  PiecewisePolynomial a, b;
  a.pieces_ = refine(p);
  a.smoothness_ = p.smoothness_;
  a.domain_ = p.domain_;
  b.pieces_ = refine(q);
  b.smoothness_ = q.smoothness_;
  b.domain_ = q.domain_;
  a.breaks_ = u;
  b.breaks_ = std::move(u);
  return {std::move(a), std::move(b)};
}

PiecewisePolynomial PiecewisePolynomial::operator-() const {
  PiecewisePolynomial r(*this);
  for (auto& p : r.pieces_) p = -p;
  return r;
}

PiecewisePolynomial operator+(const PiecewisePolynomial& p, const PiecewisePolynomial& q) {
  auto [a, b] = align(p, q);
  for (size_t i = 0; i < a.pieces_.size(); ++i) a.pieces_[i] += b.pieces_[i];
  a.smoothness_ = merge_smoothness(p.smoothness_, q.smoothness_);
  a.domain_ = merge_domains(p.domain_, q.domain_);
  a.normalize();
  return a;
}

PiecewisePolynomial operator-(const PiecewisePolynomial& p, const PiecewisePolynomial& q) {
  return p + (-q);
}

PiecewisePolynomial operator*(const PiecewisePolynomial& p, const PiecewisePolynomial& q) {
  auto [a, b] = align(p, q);
  for (size_t i = 0; i < a.pieces_.size(); ++i) a.pieces_[i] = a.pieces_[i] * b.pieces_[i];
  a.smoothness_ = merge_smoothness(p.smoothness_, q.smoothness_);
  a.domain_ = merge_domains(p.domain_, q.domain_);
  a.normalize();
  return a;
}

PiecewisePolynomial operator*(const Scalar& c, const PiecewisePolynomial& p) {
  PiecewisePolynomial r(p);
  for (auto& piece : r.pieces_) piece = c * piece;
  r.normalize();
  return r;
}

PiecewisePolynomial PiecewisePolynomial::differentiate() const {
  if (smoothness_ < 1)
    throw std::domain_error(
        "differentiating a function with jump discontinuities: the classical piecewise "
        "derivative would miss delta terms; use the distributional identities instead");
  PiecewisePolynomial r(*this);
  for (auto& p : r.pieces_) p = p.derivative();
  if (smoothness_ != kSmoothInf) r.smoothness_ = smoothness_ - 1;
  r.normalize();
  return r;
}

PiecewisePolynomial PiecewisePolynomial::antiderivative(const Rational& anchor) const {
  require_in_domain(anchor);
  const size_t n = pieces_.size();
  std::vector<Polynomial> anti(n);
  for (size_t i = 0; i < n; ++i) anti[i] = pieces_[i].antiderivative();
  // Stitch constants so the result is continuous at every breakpoint.
  std::vector<Scalar> shift(n);
  for (size_t j = 0; j + 1 < n; ++j)
    shift[j + 1] = shift[j] + anti[j](breaks_[j]) - anti[j + 1](breaks_[j]);
  const int ia = piece_index_right(anchor);
  const Scalar at_anchor = anti[static_cast<size_t>(ia)](anchor) + shift[static_cast<size_t>(ia)];
  PiecewisePolynomial r(*this);
  for (size_t i = 0; i < n; ++i)
    r.pieces_[i] = anti[i] + Polynomial::constant(shift[i] - at_anchor);
  if (smoothness_ != kSmoothInf) r.smoothness_ = smoothness_ + 1;
  r.normalize();
  return r;
}

Scalar PiecewisePolynomial::integrate(const Rational& a, const Rational& b) const {
  if (a > b) throw std::invalid_argument("integration bounds out of order");
  if (domain_ && (a < domain_->lo || b > domain_->hi))
    throw std::domain_error("integration outside known domain");
  if (a == b) return Scalar();
  Scalar total;
  const int ia = piece_index_right(a);
  const int ib = piece_index_left(b);
  for (int i = ia; i <= ib; ++i) {
    if (pieces_[static_cast<size_t>(i)].is_zero()) continue;
    const Rational lo = i == 0 ? a : std::max(a, breaks_[static_cast<size_t>(i) - 1]);
    const Rational hi = i == static_cast<int>(breaks_.size()) ? b : std::min(b, breaks_[static_cast<size_t>(i)]);
    if (lo >= hi) continue;
    total += pieces_[static_cast<size_t>(i)].definite_integral(lo, hi);
  }
  return total;
}

Scalar PiecewisePolynomial::integrate_support() const {
  const Interval h = support_hull();
  return integrate(h.lo, h.hi);
}

PiecewisePolynomial PiecewisePolynomial::reflect() const {
  const size_t n = pieces_.size();
  PiecewisePolynomial r;
  r.breaks_.clear();
  r.breaks_.reserve(breaks_.size());
  for (auto it = breaks_.rbegin(); it != breaks_.rend(); ++it) r.breaks_.push_back(Rational(-*it));
  r.pieces_.clear();
  r.pieces_.reserve(n);
  for (size_t j = 0; j < n; ++j) r.pieces_.push_back(pieces_[n - 1 - j].compose_linear(Rational(0), Rational(-1)));
  r.smoothness_ = smoothness_;
  if (domain_) r.domain_ = Interval(Rational(-domain_->hi), Rational(-domain_->lo));
  r.normalize();
  return r;
}

PiecewisePolynomial PiecewisePolynomial::translate(const Rational& c) const {
  PiecewisePolynomial r(*this);
  for (auto& b : r.breaks_) b += c;
  for (auto& p : r.pieces_) p = p.compose_linear(Rational(-c), Rational(1));
  if (domain_) r.domain_ = Interval(Rational(domain_->lo + c), Rational(domain_->hi + c));
  return r;
}

PiecewisePolynomial PiecewisePolynomial::scale_net(const Rational& sigma) const {
  if (sigma <= 0) throw std::invalid_argument("scale parameter must be positive");
  Rational inv(sigma.get_den(), sigma.get_num());
  inv.canonicalize();
  PiecewisePolynomial r(*this);
  for (auto& b : r.breaks_) b *= sigma;
  for (auto& p : r.pieces_) p = Scalar(inv) * p.compose_linear(Rational(0), inv);
  if (domain_) r.domain_ = Interval(Rational(domain_->lo * sigma), Rational(domain_->hi * sigma));
  r.normalize();
  return r;
}

PiecewisePolynomial PiecewisePolynomial::restrict(const Interval& window) const {
  if (domain_ && (window.lo < domain_->lo || window.hi > domain_->hi))
    throw std::invalid_argument("window exceeds known domain");
  PiecewisePolynomial r;
  if (window.lo == window.hi) {
    r.domain_ = window;
    r.smoothness_ = smoothness_;
    return r;
  }
  std::vector<Rational> nb{window.lo};
  std::vector<Polynomial> np{Polynomial()};  // zero head outside the window
  size_t idx = static_cast<size_t>(piece_index_right(window.lo));
  np.push_back(pieces_[idx]);
  for (size_t i = idx; i < breaks_.size() && breaks_[i] < window.hi; ++i) {
    nb.push_back(breaks_[i]);
    np.push_back(pieces_[i + 1]);
  }
  nb.push_back(window.hi);
  np.push_back(Polynomial());  // zero tail
  r.breaks_ = std::move(nb);
  r.pieces_ = std::move(np);
  r.smoothness_ = smoothness_;
  r.domain_ = window;
  r.normalize();
  return r;
}

bool PiecewisePolynomial::smoothness_check(int k) const {
  for (size_t j = 0; j + 1 < pieces_.size(); ++j) {
    Polynomial left = pieces_[j], right = pieces_[j + 1];
    for (int d = 0; d <= k; ++d) {
      if (left(breaks_[j]) != right(breaks_[j])) return false;
      left = left.derivative();
      right = right.derivative();
    }
  }
  return true;
}

PiecewisePolynomial PiecewisePolynomial::recertified(int k) const {
  if (!smoothness_check(k))
    throw std::runtime_error("function is not C^" + std::to_string(k) + " at its breakpoints");
  return with_smoothness(k);
}

PiecewisePolynomial PiecewisePolynomial::with_smoothness(int k) const {
  PiecewisePolynomial r(*this);
  r.smoothness_ = k;
  return r;
}

bool operator==(const PiecewisePolynomial& p, const PiecewisePolynomial& q) {
  return p.breaks_ == q.breaks_ && p.pieces_ == q.pieces_;
}

bool equal_on(const PiecewisePolynomial& p, const PiecewisePolynomial& q, const Interval& window) {
  return p.restrict(window) == q.restrict(window);
}

std::string PiecewisePolynomial::str() const {
  std::string out = "{";
  for (size_t i = 0; i < pieces_.size(); ++i) {
    out += i == 0 ? "(-inf, " : "(" + to_string(breaks_[i - 1]) + ", ";
    out += i == breaks_.size() ? "inf)" : to_string(breaks_[i]) + ")";
    out += ": " + pieces_[i].str();
    if (i + 1 < pieces_.size()) out += "; ";
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Convolution.
//
// (p * q)(x) = Int p(y) q(x - y) dy with q compactly supported. On any x-region
// free of the candidate breakpoints {p-break + q-break} the integral is a sum,
// over (p-piece, q-piece) pairs, of a fixed bivariate antiderivative evaluated
// between bounds that are constants or x - c. Everything below is exact.
// ---------------------------------------------------------------------------

namespace {

// Bivariate polynomial in (x, y) stored as polynomials in x per power of y.
using Bivar = std::vector<Polynomial>;

Rational binomial(int n, int k) {
  Rational acc(1);
  for (int i = 1; i <= k; ++i) {
    acc *= Rational(n - k + i);
    acc /= Rational(i);
  }
  acc.canonicalize();
  return acc;
}

// P(y) * Q(x - y), then the antiderivative in y.
Bivar pair_antiderivative(const Polynomial& p, const Polynomial& q) {
  const int dq = q.degree();
  Bivar expanded(static_cast<size_t>(dq) + 1);  // Q(x - y) by power of y
  for (int d = 0; d <= dq; ++d) {
    const Scalar& qd = q.coefficient(d);
    if (qd.is_zero()) continue;
    for (int m = 0; m <= d; ++m) {
      const int ypow = d - m;
      Scalar coef = qd * Scalar(binomial(d, m));
      if (ypow % 2 == 1) coef = -coef;
      expanded[static_cast<size_t>(ypow)] += Polynomial::monomial(std::move(coef), m);
    }
  }
  const int dp = p.degree();
  Bivar product(static_cast<size_t>(dp + dq) + 1);
  for (int t = 0; t <= dp; ++t) {
    const Scalar& pt = p.coefficient(t);
    if (pt.is_zero()) continue;
    for (int e = 0; e <= dq; ++e) {
      if (expanded[static_cast<size_t>(e)].is_zero()) continue;
      product[static_cast<size_t>(e + t)] += pt * expanded[static_cast<size_t>(e)];
    }
  }
  Bivar anti(product.size() + 1);
  for (size_t e = 0; e < product.size(); ++e)
    anti[e + 1] = Scalar(rat(1, static_cast<long>(e) + 1)) * product[e];
  return anti;
}

// A(x, y) at y = bound(x), Horner over powers of y.
Polynomial eval_bivar(const Bivar& a, const Polynomial& bound) {
  Polynomial acc;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * bound + *it;
  return acc;
}

struct PPiece {
  std::optional<Rational> lo, hi;  // nullopt = unbounded
  const Polynomial* poly;
};

}  // namespace

PiecewisePolynomial convolve(const PiecewisePolynomial& p, const PiecewisePolynomial& q,
                             const Interval& window) {
  if (!q.compactly_supported())
    throw std::invalid_argument("convolution kernel must be compactly supported");
  PiecewisePolynomial out;
  if (q.is_zero() || p.is_zero()) {
    return PiecewisePolynomial::from_pieces({window.lo, window.hi},
                                            {Polynomial(), Polynomial(), Polynomial()},
                                            kSmoothInf, window);
  }
  const Interval qs = q.support_hull();
  if (p.domain() &&
      (window.lo - qs.hi < p.domain()->lo || window.hi - qs.lo > p.domain()->hi))
    throw std::invalid_argument("window exceeds known domain of the convolvee");

  // Candidate result breakpoints: pairwise sums, clipped to the window.
  std::vector<Rational> cuts{window.lo, window.hi};
  for (const auto& pb : p.breakpoints())
    for (const auto& qb : q.breakpoints()) {
      Rational s = pb + qb;
      if (window.lo < s && s < window.hi) cuts.push_back(std::move(s));
    }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<PPiece> ppieces;
  for (size_t i = 0; i < p.pieces().size(); ++i) {
    if (p.pieces()[i].is_zero()) continue;
    PPiece piece;
    if (i > 0) piece.lo = p.breakpoints()[i - 1];
    if (i < p.breakpoints().size()) piece.hi = p.breakpoints()[i];
    piece.poly = &p.pieces()[i];
    ppieces.push_back(piece);
  }

  struct QPiece {
    Rational lo, hi;
    std::vector<Bivar> anti;  // per p-piece
  };
  std::vector<QPiece> qpieces;
  for (size_t j = 1; j < q.pieces().size(); ++j) {
    if (q.pieces()[j].is_zero()) continue;
    QPiece qp{q.breakpoints()[j - 1], q.breakpoints()[j], {}};
    qp.anti.reserve(ppieces.size());
    for (const auto& pp : ppieces) qp.anti.push_back(pair_antiderivative(*pp.poly, q.pieces()[j]));
    qpieces.push_back(std::move(qp));
  }

  std::vector<Polynomial> result_pieces;
  result_pieces.reserve(cuts.size() + 1);
  result_pieces.emplace_back();  // zero head, outside the window
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    const Rational mid = (cuts[k] + cuts[k + 1]) / 2;
    Polynomial total;
    for (const auto& qp : qpieces) {
      // y runs over [x - qp.hi, x - qp.lo] within this q-piece
      for (size_t i = 0; i < ppieces.size(); ++i) {
        const auto& pp = ppieces[i];
        const bool lower_is_const = pp.lo && *pp.lo > mid - qp.hi;
        const bool upper_is_const = pp.hi && *pp.hi < mid - qp.lo;
        const Rational lo_val = lower_is_const ? *pp.lo : Rational(mid - qp.hi);
        const Rational hi_val = upper_is_const ? *pp.hi : Rational(mid - qp.lo);
        if (!(lo_val < hi_val)) continue;
        const Polynomial lower = lower_is_const
                                     ? Polynomial::constant(Scalar(*pp.lo))
                                     : Polynomial({Scalar(Rational(-qp.hi)), Scalar(Rational(1))});
        const Polynomial upper = upper_is_const
                                     ? Polynomial::constant(Scalar(*pp.hi))
                                     : Polynomial({Scalar(Rational(-qp.lo)), Scalar(Rational(1))});
        total += eval_bivar(qp.anti[i], upper);
        total -= eval_bivar(qp.anti[i], lower);
      }
    }
    result_pieces.push_back(std::move(total));
  }
  result_pieces.emplace_back();  // zero tail

  return PiecewisePolynomial::from_pieces(std::move(cuts), std::move(result_pieces),
                                          q.smoothness(), window);
}

}  // namespace deltalab::exactcalc
