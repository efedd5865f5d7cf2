#pragma once

#include <array>
#include <string>

#include "gtv/exactfield/json_io.hpp"
#include "gtv/exactfield/tower.hpp"
#include "gtv/thurston.hpp"

namespace gtv {

struct DirectionVector {
  TowerElement x;
  TowerElement y;

  // Throws PreconditionError for the zero vector.
  DirectionVector(TowerElement x_, TowerElement y_);
  static DirectionVector rational(const FieldPtr& K, const Rational& x, const Rational& y);
};

// x1*y2 - x2*y1
TowerElement bracket(const DirectionVector& u, const DirectionVector& v);

// [a,c][b,d] / ([a,d][b,c]); PreconditionError when a denominator or
// numerator bracket vanishes.
TowerElement cross_ratio(const DirectionVector& a, const DirectionVector& b, const DirectionVector& c,
                         const DirectionVector& d);

struct PrimalityCertificate {
  std::array<DirectionVector, 4> vectors;
  TowerElement cross_ratio;
  NumberFieldElement value;  // cross ratio as an element of the base field
  bool rational = true;
  bool pass = false;
};

// Cross-ratio test on a fixed quadruple whose cross ratio must lie in the
// base field. Throws PreconditionError unless the four directions are
// pairwise distinct, and VerificationError when the s-part survives.
PrimalityCertificate certify_quadruple(const std::array<DirectionVector, 4>& q);

// Builds the quadruple from rectangle data. With at least two rectangles:
//   a = (1, 0), b = (0, 1), c = (-v2', v1 + v2), d = (-v1' - v2', 2 v1 + v2)
// where v'_i = w_i s / mu. With one rectangle (a torus) the last two are the
// closed directions (v1', v1) and (v1', 2 v1).
std::array<DirectionVector, 4> certificate_vectors(const RectangleData& R);
PrimalityCertificate primality_certificate(const RectangleData& R);

json to_json(const DirectionVector& v);
json to_json(const PrimalityCertificate& c);

}  // namespace gtv
