#include "gtv/thurston.hpp"

#include <algorithm>

#include "gtv/error.hpp"

namespace gtv {

IntersectionMatrix::IntersectionMatrix(std::vector<std::vector<long>> entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_.front().empty()) throw PreconditionError("intersection matrix is empty");
  const std::size_t m = entries_.front().size();
  std::vector<bool> col_hit(m, false);
  for (const auto& row : entries_) {
    if (row.size() != m) throw PreconditionError("intersection matrix rows have different lengths");
    bool row_hit = false;
    for (std::size_t j = 0; j < m; ++j) {
      if (row[j] < 0) throw PreconditionError("intersection numbers must be nonnegative");
      if (row[j] > 0) {
        row_hit = true;
        col_hit[j] = true;
      }
    }
    if (!row_hit) throw PreconditionError("intersection matrix has an all-zero row");
  }
  if (std::find(col_hit.begin(), col_hit.end(), false) != col_hit.end())
    throw PreconditionError("intersection matrix has an all-zero column");
}

IntersectionMatrix IntersectionMatrix::from_json(const json& j) {
  const json& rows = j.is_object() ? j.at("matrix") : j;
  return IntersectionMatrix(rows.get<std::vector<std::vector<long>>>());
}

Matrix<Rational> IntersectionMatrix::as_rational() const {
  Matrix<Rational> out(rows(), cols(), Rational(0));
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) out(i, j) = Rational(entries_[i][j]);
  return out;
}

Matrix<Rational> IntersectionMatrix::gram() const {
  const auto n = as_rational();
  return n * n.transpose();
}

IntersectionMatrix staircase_intersection_matrix() {
  return IntersectionMatrix({{1, 1, 0}, {1, 1, 1}, {1, 0, 0}});
}

Polynomial characteristic_polynomial(const Matrix<Rational>& m) {
  if (m.rows() != m.cols()) throw PreconditionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Polynomial::constant(-m(i, j)) + (i == j ? Polynomial::x() : Polynomial());

  int sign = 1;
  Polynomial prev = Polynomial::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return Polynomial();
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      a[i][k] = Polynomial();
    }
    prev = a[k][k];
  }
  Polynomial det = a[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

PerronData gram_charpoly(const IntersectionMatrix& N, bool assume_irreducible) {
  PerronData P{N, N.gram(), {}, {}, {}, {}, nullptr, 0};
  P.charpoly = characteristic_polynomial(P.gram);
  P.rational_roots = gtv::rational_roots(P.charpoly);

  Polynomial residual = P.charpoly;
  for (const auto& r : P.rational_roots) {
    const Polynomial lin{-r, 1};
    for (int k = root_multiplicity(P.charpoly, r); k > 0; --k) residual = exact_div(residual, lin);
  }
  if (residual.degree() >= 1) residual = exact_div(residual, gcd(residual, residual.derivative()));
  P.residual = residual.monic();

  // Decide whether the residual carries a root above every rational root.
  bool residual_wins = false;
  if (P.residual.degree() >= 1) {
    const SturmSequence sturm(P.residual);
    if (P.rational_roots.empty()) {
      residual_wins = sturm.count_roots_above(-cauchy_root_bound(P.residual)) > 0;
    } else {
      residual_wins = sturm.count_roots_above(P.rational_roots.back()) > 0;
    }
  }
  if (residual_wins) {
    P.mu_factor = P.residual;
    P.field = NumberField::create(P.mu_factor, assume_irreducible);
    const Polynomial cofactor = exact_div(P.charpoly, P.mu_factor);
    P.mu_multiplicity = 1;
    Polynomial rest = cofactor;
    while (rest.degree() >= P.mu_factor.degree() && (rest % P.mu_factor).is_zero()) {
      rest = exact_div(rest, P.mu_factor);
      ++P.mu_multiplicity;
    }
  } else {
    if (P.rational_roots.empty()) throw VerificationError("characteristic polynomial has no real root");
    const Rational& top = P.rational_roots.back();
    P.mu_factor = Polynomial{-top, 1};
    P.field = NumberField::create(P.mu_factor);
    P.mu_multiplicity = root_multiplicity(P.charpoly, top);
  }
  return P;
}

namespace {

// Kernel vector of a square matrix over K with one-dimensional kernel, by
// reduced row echelon form.
std::vector<NumberFieldElement> kernel_line(Matrix<NumberFieldElement> a, const FieldPtr& K) {
  const std::size_t n = a.rows(), m = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t p = row;
    while (p < n && a(p, col).is_zero()) ++p;
    if (p == n) continue;
    for (std::size_t j = 0; j < m; ++j) std::swap(a(row, j), a(p, j));
    const NumberFieldElement inv = a(row, col).inverse();
    for (std::size_t j = 0; j < m; ++j) a(row, j) = a(row, j) * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const NumberFieldElement f = a(i, col);
      for (std::size_t j = 0; j < m; ++j) a(i, j) = a(i, j) - f * a(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  if (m - pivot_cols.size() != 1) {
    throw VerificationError("eigenspace at mu has dimension " + std::to_string(m - pivot_cols.size()) + ", expected 1");
  }
  std::size_t free_col = 0;
  for (std::size_t c = 0; c < m; ++c) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), c) == pivot_cols.end()) {
      free_col = c;
      break;
    }
  }
  std::vector<NumberFieldElement> v(m, NumberFieldElement::zero(K));
  v[free_col] = NumberFieldElement::one(K);
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -a(r, free_col);
  return v;
}

Matrix<NumberFieldElement> lift(const Matrix<Rational>& m, const FieldPtr& K) {
  return m.map([&](const Rational& r) { return NumberFieldElement::from_rational(K, r); });
}

}  // namespace

RectangleData perron_eigenvector(const PerronData& P) {
  if (P.mu_multiplicity != 1) throw VerificationError("mu is not a simple root of the characteristic polynomial");
  const FieldPtr& K = P.field;
  const auto mu = NumberFieldElement::generator(K);
  const auto G = lift(P.gram, K);
  auto shifted = G;
  for (std::size_t i = 0; i < G.rows(); ++i) shifted(i, i) = shifted(i, i) - mu;

  RectangleData R{kernel_line(shifted, K), {}, 0};
  while (R.V[R.normalized_on].is_zero()) ++R.normalized_on;
  const auto scale = R.V[R.normalized_on].inverse();
  for (auto& x : R.V) x = x * scale;

  const auto Nt = lift(P.N.as_rational().transpose(), K);
  R.W = Nt.apply(R.V);

  auto scaled = [&](std::vector<NumberFieldElement> v) {
    for (auto& x : v) x = x * mu;
    return v;
  };
  if (G.apply(R.V) != scaled(R.V)) throw VerificationError("NN^t V != mu V");
  const auto NtN = lift(P.N.as_rational().transpose() * P.N.as_rational(), K);
  if (NtN.apply(R.W) != scaled(R.W)) throw VerificationError("N^tN W != mu W");

  for (const auto& x : R.V)
    if (x.sign() <= 0) throw VerificationError("non-positive height " + x.str() + " in the eigenvector");
  for (const auto& x : R.W)
    if (x.sign() <= 0) throw VerificationError("non-positive width " + x.str() + " in the eigenvector");
  return R;
}

namespace {

Matrix<TowerElement> tower2(const TowerElement& a, const TowerElement& b, const TowerElement& c, const TowerElement& d) {
  Matrix<TowerElement> m(2, 2, a);
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

TowerElement det2(const Matrix<TowerElement>& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

Matrix<TowerElement> inverse2(const Matrix<TowerElement>& m) {
  const TowerElement inv = det2(m).inverse();
  return tower2(m(1, 1) * inv, -m(0, 1) * inv, -m(1, 0) * inv, m(0, 0) * inv);
}

}  // namespace

TwistPair twist_product(const PerronData& P) {
  const FieldPtr& K = P.field;
  const auto zero = TowerElement::zero(K), one = TowerElement::one(K), s = TowerElement::sqrt_generator(K);
  const TowerElement mu(NumberFieldElement::generator(K));

  auto H = tower2(one, s, zero, one);
  auto Vt = tower2(one, zero, -s, one);
  auto A = H * inverse2(Vt);
  TwistPair T{H, Vt, A, A(0, 0) + A(1, 1), det2(A)};

  const TowerElement two = TowerElement::from_rational(K, 2);
  if (!(T.trace == two + mu)) throw VerificationError("trace(A) = " + T.trace.str() + ", expected 2 + mu");
  if (!(T.det == one)) throw VerificationError("det(A) = " + T.det.str() + ", expected 1");
  const auto I = tower2(one, zero, zero, one);
  const auto scaled = A.map([&](const TowerElement& x) { return x * T.trace; });
  const auto ch = A * A - scaled + I;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (!ch(i, j).is_zero()) throw VerificationError("A^2 - tr(A) A + I is not zero");
  return T;
}

DilatationReport dilatation_check(const TwistPair& T, const Rational& width) {
  if (width.sign() <= 0) throw PreconditionError("width must be positive");
  DilatationReport D;
  D.trace = T.trace.eval_interval(width);
  if (!(D.trace.lo > Rational(2))) {
    throw PreconditionError("trace enclosure " + D.trace.str() + " does not lie above 2; refine the width");
  }
  D.pseudo_anosov = true;

  const Rational one(1), two(2);
  Rational w = width;
  for (;;) {
    const Interval tr = T.trace.eval_interval(w);
    const Interval disc = tr * tr - Interval::point(Rational(4));
    const Interval root = sqrt_interval(disc, w);
    Interval lambda = tr + root;
    lambda = Interval(lambda.lo / two, lambda.hi / two);
    const Interval sigma = sqrt_interval(lambda.reciprocal(), w);
    if (lambda.width() <= width && sigma.width() <= width && sigma.strictly_positive()) {
      D.lambda = lambda;
      D.sigma = sigma;
      break;
    }
    w /= Rational(16);
  }
  D.sqrt_mu = TowerElement::sqrt_generator(T.trace.field()).eval_interval(width);
  D.sigma_relation = (Interval::point(one) - D.sigma * D.sigma) * D.sigma.reciprocal();
  D.relation_consistent = D.sigma_relation.intersects(D.sqrt_mu);
  D.lambda_sigma_consistent = (D.lambda * D.sigma * D.sigma).contains(one);
  return D;
}

json to_json(const DilatationReport& d) {
  return json{{"trace_interval", to_json(d.trace)},
              {"pseudo_anosov", d.pseudo_anosov},
              {"lambda_interval", to_json(d.lambda)},
              {"sigma_interval", to_json(d.sigma)},
              {"sqrt_mu_interval", to_json(d.sqrt_mu)},
              {"sigma_relation_interval", to_json(d.sigma_relation)},
              {"relation_consistent", d.relation_consistent},
              {"lambda_sigma_consistent", d.lambda_sigma_consistent}};
}

json perron_json(const PerronData& P, const RectangleData& R, const DilatationReport& D, const Rational& width) {
  json V = json::array(), W = json::array();
  for (const auto& x : R.V) V.push_back(to_json(x)["coords"]);
  for (const auto& x : R.W) W.push_back(to_json(x)["coords"]);
  return json{{"charpoly", to_json(P.charpoly)},
              {"mu_interval", to_json(P.field->root_interval(width))},
              {"V", V},
              {"W", W},
              {"trace", "2+mu"},
              {"pseudo_anosov", D.pseudo_anosov},
              {"lambda_interval", to_json(D.lambda)}};
}

}  // namespace gtv
