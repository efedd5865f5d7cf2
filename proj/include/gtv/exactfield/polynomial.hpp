#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "gtv/exactfield/rational.hpp"

namespace gtv {

// Univariate polynomial over Q, coefficients lowest degree first. The zero
// polynomial has no coefficients; otherwise the leading coefficient is
// nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial x();
  static Polynomial monomial(const Rational& c, int degree);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  // Coefficient of x^i; zero beyond the degree.
  Rational coeff(int i) const;
  const Rational& leading() const;

  Polynomial monic() const;
  Polynomial derivative() const;
  Rational eval(const Rational& at) const;
  int sign_at(const Rational& at) const { return eval(at).sign(); }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  // Human-readable, highest degree first, e.g. "x^3 - 6x^2 + 5x - 1".
  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Quotient and remainder with deg(remainder) < deg(divisor).
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);
Polynomial operator%(const Polynomial& num, const Polynomial& den);
// Exact division; throws VerificationError when the remainder is nonzero.
Polynomial exact_div(const Polynomial& num, const Polynomial& den);

// Monic gcd (zero when both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

struct ExtendedGcd {
  Polynomial gcd;  // monic
  Polynomial u;    // u*a + v*b == gcd
  Polynomial v;
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

bool is_squarefree(const Polynomial& p);

// Distinct rational roots, ascending. Uses the rational root theorem on the
// integer-scaled polynomial.
std::vector<Rational> rational_roots(const Polynomial& p);

// Multiplicity of r as a root of p (0 when p(r) != 0). p must be nonzero.
int root_multiplicity(const Polynomial& p, const Rational& r);

}  // namespace gtv
