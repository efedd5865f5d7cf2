#pragma once

#include <string>

#include "gtv/exactfield/rational.hpp"

namespace gtv {

// Closed interval [lo, hi] with rational endpoints. All arithmetic is exact,
// so results always enclose the true value.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational l, Rational h);
  static Interval point(const Rational& v) { return Interval(v, v); }

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool intersects(const Interval& o) const { return !(o.hi < lo || hi < o.lo); }
  bool contains_zero() const { return contains(Rational(0)); }
  bool strictly_positive() const { return lo.sign() > 0; }
  bool strictly_negative() const { return hi.sign() < 0; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);
  friend bool operator==(const Interval& a, const Interval& b) = default;

  // Requires 0 outside the interval.
  Interval reciprocal() const;

  std::string str() const;
};

// Enclosure of sqrt over a nonnegative interval with each endpoint located to
// within `width` / 2.
Interval sqrt_interval(const Interval& x, const Rational& width);

}  // namespace gtv
