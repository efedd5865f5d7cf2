#include "gtv/exactfield/roots.hpp"

#include "gtv/error.hpp"

namespace gtv {

SturmSequence::SturmSequence(const Polynomial& p) {
  if (p.is_zero()) throw PreconditionError("Sturm sequence of the zero polynomial");
  chain_.push_back(p);
  Polynomial d = p.derivative();
  if (d.is_zero()) return;
  chain_.push_back(d);
  while (true) {
    Polynomial r = chain_[chain_.size() - 2] % chain_.back();
    if (r.is_zero()) break;
    chain_.push_back(-r);
  }
}

int SturmSequence::sign_changes(const Rational& at) const {
  int changes = 0;
  int prev = 0;
  for (const auto& q : chain_) {
    const int s = q.sign_at(at);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
  return sign_changes(a) - sign_changes(b);
}

int SturmSequence::count_roots_above(const Rational& a) const {
  // Sign at +inf is the sign of each leading coefficient.
  int changes = 0;
  int prev = 0;
  for (const auto& q : chain_) {
    const int s = q.leading().sign();
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return sign_changes(a) - changes;
}

Rational cauchy_root_bound(const Polynomial& p) {
  if (p.degree() < 1) throw PreconditionError("root bound of a constant polynomial");
  Rational m(0);
  const Rational lead = p.leading();
  for (int i = 0; i < p.degree(); ++i) m = max(m, (p.coeff(i) / lead).abs());
  return m + Rational(1);
}

namespace {

// Deterministic split point strictly inside (lo, hi) that is not a root.
Rational split_point(const Polynomial& p, const Rational& lo, const Rational& hi) {
  Rational mid = (lo + hi) / Rational(2);
  if (!p.eval(mid).is_zero()) return mid;
  // Walk toward hi through 3/4, 5/8, ...; finitely many roots, so this ends.
  Rational step = (hi - lo) / Rational(4);
  while (true) {
    Rational cand = mid + step;
    if (!p.eval(cand).is_zero()) return cand;
    step /= Rational(2);
  }
}

}  // namespace

Interval refine_root(const Polynomial& p, const SturmSequence& sturm, Interval iv,
                     const Rational& width) {
  if (width.sign() <= 0) throw PreconditionError("isolation width must be positive");
  while (iv.width() > width) {
    Rational mid = split_point(p, iv.lo, iv.hi);
    if (sturm.count_roots(mid, iv.hi) >= 1) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

namespace {

Rational largest_decade_at_most(const Rational& width) {
  Rational h(1);
  if (width >= h) {
    while (h * Rational(10) <= width) h *= Rational(10);
  } else {
    while (h > width) h /= Rational(10);
  }
  return h;
}

Rational floor_to_grid(const Rational& v, const Rational& h) {
  const Rational q = v / h;
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.raw().get_num_mpz_t(), q.raw().get_den_mpz_t());
  return Rational(mpq_class(f)) * h;
}

}  // namespace

Interval decimal_cell(const Polynomial& p, const SturmSequence& sturm, Interval iv, const Rational& width) {
  if (width.sign() <= 0) throw PreconditionError("isolation width must be positive");
  if (iv.width().is_zero()) return iv;
  Rational h = largest_decade_at_most(width);
  while (true) {
    iv = refine_root(p, sturm, iv, h / Rational(2));
    Rational a = floor_to_grid(iv.lo, h);
    Rational b = a + h;
    if (b < iv.hi) {
      if (p.eval(b).is_zero()) return Interval::point(b);
      if (sturm.count_roots(iv.lo, b) == 0) {
        a = b;
        b = a + h;
      }
    }
    if (!p.eval(a).is_zero() && !p.eval(b).is_zero() && sturm.count_roots(a, b) == 1) return Interval(a, b);
    h /= Rational(10);
  }
}

Interval isolate_largest_real_root(const Polynomial& p, const Rational& width) {
  if (p.degree() < 1) throw PreconditionError("root isolation needs a nonconstant polynomial");
  if (!is_squarefree(p)) throw PreconditionError("root isolation needs a squarefree polynomial");
  if (width.sign() <= 0) throw PreconditionError("isolation width must be positive");
  const SturmSequence sturm(p);
  Rational bound = cauchy_root_bound(p);
  if (sturm.count_roots(-bound, bound) == 0) throw PreconditionError("polynomial has no real root");
  Interval iv(-bound, bound);
  // hi starts beyond the Cauchy bound and only ever moves to split points,
  // so it is never a root.
  while (sturm.count_roots(iv.lo, iv.hi) > 1) {
    Rational mid = split_point(p, iv.lo, iv.hi);
    if (sturm.count_roots(mid, iv.hi) >= 1) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return decimal_cell(p, sturm, iv, width);
}

}  // namespace gtv
