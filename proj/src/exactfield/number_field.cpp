#include "gtv/exactfield/number_field.hpp"

#include <sstream>

#include "gtv/error.hpp"

namespace gtv {

NumberField::NumberField(Polynomial modulus, Interval root_interval)
    : modulus_(std::move(modulus)), sturm_(modulus_), root_interval_(std::move(root_interval)) {}

FieldPtr NumberField::create(const Polynomial& modulus, bool assume_irreducible) {
  if (modulus.degree() < 1) throw PreconditionError("number field modulus must be nonconstant");
  if (modulus.leading() != Rational(1)) throw PreconditionError("number field modulus must be monic");
  if (modulus.degree() <= 3) {
    if (modulus.degree() > 1 && !rational_roots(modulus).empty()) {
      throw PreconditionError("modulus has a rational root, so it is reducible: " + modulus.str());
    }
  } else if (!assume_irreducible) {
    throw PreconditionError("irreducibility of a modulus of degree >= 4 must be asserted by the caller");
  }
  if (!is_squarefree(modulus)) throw PreconditionError("modulus is not squarefree");
  // Coarse isolation: one root, width at most 1.
  Interval iv = isolate_largest_real_root(modulus, Rational(1));
  return FieldPtr(new NumberField(modulus, std::move(iv)));
}

Interval NumberField::root_interval(const Rational& width) const {
  return decimal_cell(modulus_, sturm_, root_interval_, width);
}

Interval eval_interval(const Polynomial& p, const Interval& at) {
  if (p.is_zero()) return Interval::point(Rational(0));
  Interval acc = Interval::point(p.leading());
  for (int i = p.degree() - 1; i >= 0; --i) acc = acc * at + Interval::point(p.coeff(i));
  return acc;
}

NumberFieldElement::NumberFieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) throw PreconditionError("number field element without a field");
  if (static_cast<int>(coords_.size()) != field_->degree()) {
    throw PreconditionError("coordinate count must equal the field degree");
  }
}

NumberFieldElement NumberFieldElement::zero(FieldPtr field) {
  const auto n = static_cast<size_t>(field->degree());
  return NumberFieldElement(std::move(field), std::vector<Rational>(n));
}

NumberFieldElement NumberFieldElement::one(FieldPtr field) { return from_rational(std::move(field), Rational(1)); }

NumberFieldElement NumberFieldElement::from_rational(FieldPtr field, const Rational& c) {
  auto e = zero(std::move(field));
  e.coords_[0] = c;
  return e;
}

NumberFieldElement NumberFieldElement::generator(FieldPtr field) { return nf_reduce(Polynomial::x(), field); }

bool NumberFieldElement::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

bool NumberFieldElement::is_one() const { return is_rational() && coords_[0] == Rational(1); }

bool NumberFieldElement::is_rational() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (!coords_[i].is_zero()) return false;
  return true;
}

void NumberFieldElement::check_same_field(const NumberFieldElement& o) const {
  if (!field_->same_as(*o.field_)) throw FieldMismatch("operands belong to different number fields");
}

NumberFieldElement& NumberFieldElement::operator+=(const NumberFieldElement& o) {
  check_same_field(o);
  for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

NumberFieldElement& NumberFieldElement::operator-=(const NumberFieldElement& o) {
  check_same_field(o);
  for (size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

NumberFieldElement& NumberFieldElement::operator*=(const NumberFieldElement& o) {
  check_same_field(o);
  *this = nf_reduce(to_polynomial() * o.to_polynomial(), field_);
  return *this;
}

NumberFieldElement operator*(NumberFieldElement a, const Rational& c) {
  for (auto& x : a.coords_) x *= c;
  return a;
}

NumberFieldElement operator-(const NumberFieldElement& a) { return a * Rational(-1); }

bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) {
  a.check_same_field(b);
  return a.coords_ == b.coords_;
}

NumberFieldElement NumberFieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in a number field");
  const ExtendedGcd eg = extended_gcd(to_polynomial(), field_->modulus());
  if (eg.gcd.degree() != 0) throw VerificationError("element shares a factor with the modulus");
  return nf_reduce(eg.u, field_);
}

NumberFieldElement NumberFieldElement::pow(unsigned e) const {
  NumberFieldElement result = one(field_);
  NumberFieldElement base = *this;
  while (e) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

Interval NumberFieldElement::eval_interval(const Rational& width) const {
  if (width.sign() <= 0) throw PreconditionError("evaluation width must be positive");
  if (is_rational()) return Interval::point(coords_[0]);
  const Polynomial p = to_polynomial();
  Rational root_width = width;
  while (true) {
    Interval out = gtv::eval_interval(p, field_->root_interval(root_width));
    if (out.width() <= width) return out;
    root_width /= Rational(8);
  }
}

int NumberFieldElement::sign() const {
  if (is_zero()) return 0;
  Rational w(1);
  while (true) {
    Interval iv = eval_interval(w);
    if (iv.strictly_positive()) return 1;
    if (iv.strictly_negative()) return -1;
    w /= Rational(16);
  }
}

double NumberFieldElement::approx() const { return eval_interval(Rational(1, 1000000000000L)).midpoint().to_double(); }

std::string NumberFieldElement::str(const std::string& var) const { return to_polynomial().str(var); }

NumberFieldElement nf_reduce(const Polynomial& p, const FieldPtr& field) {
  Polynomial r = p % field->modulus();
  std::vector<Rational> cs = r.coeffs();
  cs.resize(static_cast<size_t>(field->degree()));
  return NumberFieldElement(field, std::move(cs));
}

NumberFieldElement nf_arith(const NumberFieldElement& a, const NumberFieldElement& b, ArithOp op) {
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

NumberFieldElement nf_inverse(const NumberFieldElement& a) { return a.inverse(); }

bool is_rational(const NumberFieldElement& a) { return a.is_rational(); }

Interval nf_eval_interval(const NumberFieldElement& a, const Rational& width) { return a.eval_interval(width); }

}  // namespace gtv
