#pragma once

#include <optional>
#include <vector>

#include "gtv/exactfield/json_io.hpp"
#include "gtv/exactfield/number_field.hpp"
#include "gtv/exactfield/tower.hpp"
#include "gtv/matrix.hpp"

namespace gtv {

// Intersection numbers i(alpha_j, alpha'_k) between the curves of two
// multicurves. Entries are nonnegative and every row and column is nonzero.
class IntersectionMatrix {
 public:
  explicit IntersectionMatrix(std::vector<std::vector<long>> entries);
  // Accepts {"matrix": [[...], ...]} or a bare array of rows.
  static IntersectionMatrix from_json(const json& j);

  std::size_t rows() const { return entries_.size(); }
  std::size_t cols() const { return entries_.front().size(); }
  long operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const std::vector<std::vector<long>>& entries() const { return entries_; }

  Matrix<Rational> as_rational() const;
  // N N^t
  Matrix<Rational> gram() const;

 private:
  std::vector<std::vector<long>> entries_;
};

// The 3x3 matrix printed for the genus-3 staircase example.
IntersectionMatrix staircase_intersection_matrix();

// det(xI - M) for a square rational matrix, by fraction-free (Bareiss)
// elimination over Q[x].
Polynomial characteristic_polynomial(const Matrix<Rational>& m);

struct PerronData {
  IntersectionMatrix N;
  Matrix<Rational> gram;
  Polynomial charpoly;
  // Distinct rational roots of charpoly (ascending).
  std::vector<Rational> rational_roots;
  // charpoly with its rational roots divided out, made squarefree.
  Polynomial residual;
  // Irreducible factor of charpoly carrying the largest real root.
  Polynomial mu_factor;
  FieldPtr field;
  // Multiplicity of the largest root as a root of charpoly.
  int mu_multiplicity = 0;
};

// `assume_irreducible` is forwarded to the field constructor when the
// residual factor has degree >= 4.
PerronData gram_charpoly(const IntersectionMatrix& N, bool assume_irreducible = false);

struct RectangleData {
  std::vector<NumberFieldElement> V;  // heights, NN^t V = mu V
  std::vector<NumberFieldElement> W;  // N^t V, so widths are mu^{-1/2} W
  // Index of the coordinate scaled to 1 (0 unless V's first entry is zero).
  std::size_t normalized_on = 0;
};

RectangleData perron_eigenvector(const PerronData& P);

struct TwistPair {
  Matrix<TowerElement> horizontal;  // [[1, s], [0, 1]]
  Matrix<TowerElement> vertical;    // [[1, 0], [-s, 1]]
  Matrix<TowerElement> product_A;   // horizontal * vertical^{-1}
  TowerElement trace;
  TowerElement det;
};

// Builds the twists and their product; throws VerificationError unless the
// trace is 2+mu, the determinant is 1 and A^2 - (2+mu)A + I vanishes.
TwistPair twist_product(const PerronData& P);

struct DilatationReport {
  Interval trace;          // enclosure of 2 + mu
  bool pseudo_anosov = false;
  Interval lambda;         // larger root of x^2 - trace x + 1
  Interval sigma;          // lambda^{-1/2}
  Interval sqrt_mu;        // s
  Interval sigma_relation; // (1 - sigma^2) / sigma
  bool relation_consistent = false;  // sigma_relation meets sqrt_mu
  bool lambda_sigma_consistent = false;  // lambda * sigma^2 contains 1
};

// Numeric checks of the dilatation relations. Intervals for lambda and sigma
// have width <= width. Throws PreconditionError when the trace enclosure at
// the chosen precision does not lie strictly above 2.
DilatationReport dilatation_check(const TwistPair& T, const Rational& width);

json to_json(const DilatationReport& d);
json perron_json(const PerronData& P, const RectangleData& R, const DilatationReport& D, const Rational& width);

}  // namespace gtv
