#include "gtv/exactfield/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "gtv/error.hpp"

namespace gtv {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::x() { return Polynomial({Rational(0), Rational(1)}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> cs(static_cast<size_t>(degree) + 1);
  cs.back() = c;
  return Polynomial(std::move(cs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<size_t>(i)];
}

const Rational& Polynomial::leading() const {
  if (is_zero()) throw PreconditionError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(d));
}

Rational Polynomial::eval(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

Polynomial operator-(const Polynomial& a) { return a * Rational(-1); }

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const bool unit = mag == Rational(1);
    if (i == 0 || !unit) os << mag.pretty();
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Rational> rem = num.coeffs();
  const int dd = den.degree();
  const int nd = num.degree();
  if (nd < dd) return {Polynomial(), num};
  std::vector<Rational> quot(static_cast<size_t>(nd - dd) + 1);
  const Rational inv_lead = den.leading().inverse();
  for (int k = nd - dd; k >= 0; --k) {
    Rational c = rem[static_cast<size_t>(k + dd)] * inv_lead;
    quot[static_cast<size_t>(k)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(k + j)] -= c * den.coeffs()[static_cast<size_t>(j)];
  }
  rem.resize(static_cast<size_t>(dd));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial operator%(const Polynomial& num, const Polynomial& den) { return divmod(num, den).second; }

Polynomial exact_div(const Polynomial& num, const Polynomial& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw VerificationError("inexact polynomial division");
  return q;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(1), s1;
  Polynomial t0, t1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Polynomial t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Rational inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

bool is_squarefree(const Polynomial& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() == 0;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  // Coefficients in this library are small; refuse pathologically large
  // constants rather than hang in trial division.
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 62) {
    throw PreconditionError("rational root search: coefficient too large for divisor enumeration");
  }
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw PreconditionError("rational roots of the zero polynomial");
  std::vector<Rational> roots;
  // Strip the factor x^k first so the constant term is nonzero.
  int low = 0;
  while (p.coeffs()[static_cast<size_t>(low)].is_zero()) ++low;
  if (low > 0) roots.emplace_back(0);
  if (p.degree() - low == 0) return roots;
  // Scale to integer coefficients.
  mpz_class lcm_den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> ints;
  for (size_t i = static_cast<size_t>(low); i < p.coeffs().size(); ++i) {
    mpq_class v = p.coeffs()[i].raw() * lcm_den;
    ints.push_back(v.get_num());
  }
  const auto nums = positive_divisors(ints.front());
  const auto dens = positive_divisors(ints.back());
  for (const auto& a : nums) {
    for (const auto& b : dens) {
      for (int s : {1, -1}) {
        Rational cand(mpq_class(a * s, b));
        if (p.eval(cand).is_zero() &&
            std::find(roots.begin(), roots.end(), cand) == roots.end()) {
          roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

int root_multiplicity(const Polynomial& p, const Rational& r) {
  if (p.is_zero()) throw PreconditionError("root multiplicity in the zero polynomial");
  const Polynomial lin({-r, Rational(1)});
  int m = 0;
  Polynomial cur = p;
  while (true) {
    auto [q, rem] = divmod(cur, lin);
    if (!rem.is_zero()) break;
    ++m;
    cur = std::move(q);
  }
  return m;
}

}  // namespace gtv
