#include "gtv/exactfield/interval.hpp"

#include <algorithm>
#include <array>

#include "gtv/error.hpp"

namespace gtv {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo) throw PreconditionError("interval with hi < lo");
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  std::array<Rational, 4> p{a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  auto [mn, mx] = std::minmax_element(p.begin(), p.end());
  return {*mn, *mx};
}

Interval Interval::reciprocal() const {
  if (contains_zero()) throw DivisionByZero("reciprocal of an interval containing zero");
  return {hi.inverse(), lo.inverse()};
}

std::string Interval::str() const { return "[" + lo.pretty() + ", " + hi.pretty() + "]"; }

namespace {

// Largest dyadic-bisection point r with r*r <= v (or smallest with r*r >= v
// when `upper`), located to within `width`.
Rational sqrt_bound(const Rational& v, const Rational& width, bool upper) {
  Rational lo(0);
  Rational hi = max(Rational(1), v);
  while (hi - lo > width) {
    Rational mid = (lo + hi) / Rational(2);
    if (mid * mid <= v) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (lo * lo == v) return lo;
  return upper ? hi : lo;
}

}  // namespace

Interval sqrt_interval(const Interval& x, const Rational& width) {
  if (x.lo.sign() < 0) throw PreconditionError("sqrt of an interval with negative part");
  if (width.sign() <= 0) throw PreconditionError("sqrt_interval width must be positive");
  const Rational half = width / Rational(2);
  return {sqrt_bound(x.lo, half, false), sqrt_bound(x.hi, half, true)};
}

}  // namespace gtv
