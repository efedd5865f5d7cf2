#include "gtv/exactfield/tower.hpp"

#include "gtv/error.hpp"

namespace gtv {

TowerElement::TowerElement(NumberFieldElement even, NumberFieldElement odd)
    : even_(std::move(even)), odd_(std::move(odd)) {
  if (!even_.field()->same_as(*odd_.field())) throw FieldMismatch("tower parts belong to different fields");
}

TowerElement::TowerElement(NumberFieldElement even)
    : even_(std::move(even)), odd_(NumberFieldElement::zero(even_.field())) {}

TowerElement TowerElement::zero(const FieldPtr& field) { return TowerElement(NumberFieldElement::zero(field)); }

TowerElement TowerElement::one(const FieldPtr& field) { return TowerElement(NumberFieldElement::one(field)); }

TowerElement TowerElement::from_rational(const FieldPtr& field, const Rational& c) {
  return TowerElement(NumberFieldElement::from_rational(field, c));
}

TowerElement TowerElement::sqrt_generator(const FieldPtr& field) {
  return TowerElement(NumberFieldElement::zero(field), NumberFieldElement::one(field));
}

TowerElement& TowerElement::operator+=(const TowerElement& o) {
  even_ += o.even_;
  odd_ += o.odd_;
  return *this;
}

TowerElement& TowerElement::operator-=(const TowerElement& o) {
  even_ -= o.even_;
  odd_ -= o.odd_;
  return *this;
}

TowerElement& TowerElement::operator*=(const TowerElement& o) {
  const NumberFieldElement mu = NumberFieldElement::generator(field());
  NumberFieldElement e = even_ * o.even_ + mu * odd_ * o.odd_;
  NumberFieldElement d = even_ * o.odd_ + odd_ * o.even_;
  even_ = std::move(e);
  odd_ = std::move(d);
  return *this;
}

TowerElement operator*(TowerElement a, const Rational& c) {
  return TowerElement(a.even_ * c, a.odd_ * c);
}

TowerElement operator-(const TowerElement& a) { return TowerElement(-a.even_, -a.odd_); }

TowerElement TowerElement::conjugate() const { return TowerElement(even_, -odd_); }

NumberFieldElement TowerElement::norm() const {
  return even_ * even_ - NumberFieldElement::generator(field()) * odd_ * odd_;
}

TowerElement TowerElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero tower element");
  const NumberFieldElement n = norm();
  if (n.is_zero()) throw DivisionByZero("tower element has zero norm (the radicand is a square)");
  const NumberFieldElement ninv = n.inverse();
  return TowerElement(even_ * ninv, -odd_ * ninv);
}

Interval TowerElement::eval_interval(const Rational& width) const {
  if (width.sign() <= 0) throw PreconditionError("evaluation width must be positive");
  if (odd_.is_zero()) return even_.eval_interval(width);
  const NumberFieldElement mu = NumberFieldElement::generator(field());
  if (mu.sign() < 0) throw PreconditionError("tower embedding needs a nonnegative radicand");
  Rational w = width;
  while (true) {
    Interval root = sqrt_interval(mu.eval_interval(w), w);
    Interval out = even_.eval_interval(w) + odd_.eval_interval(w) * root;
    if (out.width() <= width) return out;
    w /= Rational(8);
  }
}

double TowerElement::approx() const { return eval_interval(Rational(1, 1000000000000L)).midpoint().to_double(); }

std::string TowerElement::str() const {
  if (odd_.is_zero()) return even_.str();
  std::string odd;
  if (odd_.is_one())
    odd = "s";
  else if ((-odd_).is_one())
    odd = "-s";
  else
    odd = "(" + odd_.str() + ")*s";
  if (even_.is_zero()) return odd;
  if (odd.front() == '-') return even_.str() + " - " + odd.substr(1);
  return even_.str() + " + " + odd;
}

TowerElement tower_arith(const TowerElement& a, const TowerElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
  }
  throw PreconditionError("unknown arithmetic operation");
}

}  // namespace gtv
