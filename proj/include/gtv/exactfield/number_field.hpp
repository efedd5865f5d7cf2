#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gtv/exactfield/interval.hpp"
#include "gtv/exactfield/polynomial.hpp"
#include "gtv/exactfield/roots.hpp"

namespace gtv {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Q[x]/(m) for a monic irreducible m, with one designated real embedding:
// x maps to the largest real root of m.
//
// Irreducibility is checked with the rational root theorem up to degree 3.
// For degree >= 4 the caller must assert it via `assume_irreducible`.
class NumberField {
 public:
  static FieldPtr create(const Polynomial& modulus, bool assume_irreducible = false);

  const Polynomial& modulus() const { return modulus_; }
  int degree() const { return modulus_.degree(); }
  const SturmSequence& sturm() const { return sturm_; }

  // Coarsest isolating interval found at construction.
  const Interval& root_interval() const { return root_interval_; }
  // Isolating interval of width <= width; nested for decreasing widths.
  Interval root_interval(const Rational& width) const;

  bool same_as(const NumberField& other) const { return this == &other || modulus_ == other.modulus_; }

 private:
  NumberField(Polynomial modulus, Interval root_interval);

  Polynomial modulus_;
  SturmSequence sturm_;
  Interval root_interval_;
};

// Element c0 + c1*x + ... + c_{n-1}*x^{n-1} of a NumberField.
class NumberFieldElement {
 public:
  NumberFieldElement(FieldPtr field, std::vector<Rational> coords);

  static NumberFieldElement zero(FieldPtr field);
  static NumberFieldElement one(FieldPtr field);
  static NumberFieldElement from_rational(FieldPtr field, const Rational& c);
  // The class of x, i.e. the designated root itself.
  static NumberFieldElement generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  Polynomial to_polynomial() const { return Polynomial(coords_); }

  bool is_zero() const;
  bool is_one() const;
  // True iff every coordinate of degree >= 1 vanishes.
  bool is_rational() const;
  // Constant coordinate; meaningful when is_rational().
  const Rational& constant_term() const { return coords_.front(); }

  NumberFieldElement inverse() const;
  NumberFieldElement pow(unsigned e) const;

  // Enclosure of the real value under the designated embedding, width <= width.
  Interval eval_interval(const Rational& width) const;
  // Exact sign under the designated embedding (refines until decided).
  int sign() const;
  double approx() const;

  NumberFieldElement& operator+=(const NumberFieldElement& o);
  NumberFieldElement& operator-=(const NumberFieldElement& o);
  NumberFieldElement& operator*=(const NumberFieldElement& o);

  friend NumberFieldElement operator+(NumberFieldElement a, const NumberFieldElement& b) { return a += b; }
  friend NumberFieldElement operator-(NumberFieldElement a, const NumberFieldElement& b) { return a -= b; }
  friend NumberFieldElement operator*(NumberFieldElement a, const NumberFieldElement& b) { return a *= b; }
  friend NumberFieldElement operator*(NumberFieldElement a, const Rational& c);
  friend NumberFieldElement operator*(const Rational& c, NumberFieldElement a) { return std::move(a) * c; }
  friend NumberFieldElement operator-(const NumberFieldElement& a);

  // Equality requires the same field (throws FieldMismatch otherwise).
  friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b);

  // e.g. "6mu^2 - 5mu + 1"
  std::string str(const std::string& var = "mu") const;

 private:
  void check_same_field(const NumberFieldElement& o) const;
  FieldPtr field_;
  std::vector<Rational> coords_;
};

// Canonical representative of p modulo the field's modulus.
NumberFieldElement nf_reduce(const Polynomial& p, const FieldPtr& field);

enum class ArithOp { add, sub, mul };
NumberFieldElement nf_arith(const NumberFieldElement& a, const NumberFieldElement& b, ArithOp op);
NumberFieldElement nf_inverse(const NumberFieldElement& a);
bool is_rational(const NumberFieldElement& a);
Interval nf_eval_interval(const NumberFieldElement& a, const Rational& width);

// Interval enclosure of a polynomial over an interval argument (Horner).
Interval eval_interval(const Polynomial& p, const Interval& at);

}  // namespace gtv
