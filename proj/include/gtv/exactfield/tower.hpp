#pragma once

#include <string>

#include "gtv/exactfield/number_field.hpp"

namespace gtv {

// even + odd * s over a NumberField K, where s^2 equals the generator of K
// (s is the positive square root of the designated root).
class TowerElement {
 public:
  TowerElement(NumberFieldElement even, NumberFieldElement odd);
  explicit TowerElement(NumberFieldElement even);

  static TowerElement zero(const FieldPtr& field);
  static TowerElement one(const FieldPtr& field);
  static TowerElement from_rational(const FieldPtr& field, const Rational& c);
  // The adjoined square root s.
  static TowerElement sqrt_generator(const FieldPtr& field);

  const NumberFieldElement& even() const { return even_; }
  const NumberFieldElement& odd() const { return odd_; }
  const FieldPtr& field() const { return even_.field(); }

  bool is_zero() const { return even_.is_zero() && odd_.is_zero(); }
  // True when the s-part vanishes, so the value lies in the base field.
  bool in_base_field() const { return odd_.is_zero(); }

  // (e0 - e1 s) / (e0^2 - mu e1^2); throws DivisionByZero when that norm
  // vanishes (possible when mu is a perfect square in K).
  TowerElement inverse() const;
  TowerElement conjugate() const;
  NumberFieldElement norm() const;

  Interval eval_interval(const Rational& width) const;
  double approx() const;

  TowerElement& operator+=(const TowerElement& o);
  TowerElement& operator-=(const TowerElement& o);
  TowerElement& operator*=(const TowerElement& o);

  friend TowerElement operator+(TowerElement a, const TowerElement& b) { return a += b; }
  friend TowerElement operator-(TowerElement a, const TowerElement& b) { return a -= b; }
  friend TowerElement operator*(TowerElement a, const TowerElement& b) { return a *= b; }
  friend TowerElement operator*(TowerElement a, const Rational& c);
  friend TowerElement operator/(const TowerElement& a, const TowerElement& b) { return a * b.inverse(); }
  friend TowerElement operator-(const TowerElement& a);
  friend bool operator==(const TowerElement& a, const TowerElement& b) {
    return a.even_ == b.even_ && a.odd_ == b.odd_;
  }

  std::string str() const;

 private:
  NumberFieldElement even_;
  NumberFieldElement odd_;
};

TowerElement tower_arith(const TowerElement& a, const TowerElement& b, ArithOp op);

}  // namespace gtv
