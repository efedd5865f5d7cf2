#pragma once

#include <vector>

#include "gtv/exactfield/interval.hpp"
#include "gtv/exactfield/polynomial.hpp"

namespace gtv {

// Sturm chain p, p', -rem(p, p'), ... for a squarefree p.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p);

  const std::vector<Polynomial>& chain() const { return chain_; }
  int sign_changes(const Rational& at) const;
  // Number of distinct real roots in the half-open interval (a, b].
  int count_roots(const Rational& a, const Rational& b) const;
  // Number of distinct real roots in (a, +inf).
  int count_roots_above(const Rational& a) const;

 private:
  std::vector<Polynomial> chain_;
};

// Cauchy bound: every real root satisfies |r| < bound.
Rational cauchy_root_bound(const Polynomial& p);

// Isolating interval for the largest real root of a squarefree nonconstant
// p, with width <= width. The endpoints are consecutive points of a decimal
// grid 10^k (the coarsest with 10^k <= width that still isolates the root),
// so the enclosure reads off correct decimal digits and calls with smaller
// width return nested intervals. Endpoints are never roots; a rational root
// lying on the grid comes back as a point interval.
Interval isolate_largest_real_root(const Polynomial& p, const Rational& width);

// Shrinks an isolating interval of a single root of p (endpoints not roots)
// to the requested width by bisection.
Interval refine_root(const Polynomial& p, const SturmSequence& sturm, Interval isolating,
                     const Rational& width);

// Decimal-grid cell of width <= width around the single root of p inside the
// isolating interval iv. Used by isolate_largest_real_root.
Interval decimal_cell(const Polynomial& p, const SturmSequence& sturm, Interval iv, const Rational& width);

}  // namespace gtv
