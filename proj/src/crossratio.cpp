#include "gtv/crossratio.hpp"

#include "gtv/error.hpp"

namespace gtv {

DirectionVector::DirectionVector(TowerElement x_, TowerElement y_) : x(std::move(x_)), y(std::move(y_)) {
  if (x.is_zero() && y.is_zero()) throw PreconditionError("direction vector is zero");
}

DirectionVector DirectionVector::rational(const FieldPtr& K, const Rational& x, const Rational& y) {
  return DirectionVector(TowerElement::from_rational(K, x), TowerElement::from_rational(K, y));
}

TowerElement bracket(const DirectionVector& u, const DirectionVector& v) { return u.x * v.y - u.y * v.x; }

TowerElement cross_ratio(const DirectionVector& a, const DirectionVector& b, const DirectionVector& c,
                         const DirectionVector& d) {
  const TowerElement ac = bracket(a, c), bd = bracket(b, d), ad = bracket(a, d), bc = bracket(b, c);
  if (ac.is_zero() || bd.is_zero() || ad.is_zero() || bc.is_zero()) {
    throw PreconditionError("cross ratio undefined: one of [a,c], [b,d], [a,d], [b,c] vanishes");
  }
  return (ac * bd) / (ad * bc);
}

PrimalityCertificate certify_quadruple(const std::array<DirectionVector, 4>& q) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (bracket(q[i], q[j]).is_zero())
        throw PreconditionError("directions " + std::to_string(i) + " and " + std::to_string(j) + " are parallel");
  TowerElement cr = cross_ratio(q[0], q[1], q[2], q[3]);
  if (!cr.in_base_field()) throw VerificationError("cross ratio has a nonzero s-part: " + cr.str());
  PrimalityCertificate out{q, cr, cr.even(), true, false};
  out.rational = is_rational(out.value);
  out.pass = !out.rational;
  return out;
}

std::array<DirectionVector, 4> certificate_vectors(const RectangleData& R) {
  if (R.V.empty() || R.W.empty()) throw PreconditionError("empty rectangle data");
  const FieldPtr& K = R.V.front().field();
  const TowerElement s = TowerElement::sqrt_generator(K);
  const TowerElement mu_inv(NumberFieldElement::generator(K).inverse());
  auto prime = [&](std::size_t i) { return TowerElement(R.W.at(i)) * s * mu_inv; };
  auto base = [&](std::size_t i) { return TowerElement(R.V.at(i)); };
  const DirectionVector a = DirectionVector::rational(K, 1, 0);
  const DirectionVector b = DirectionVector::rational(K, 0, 1);
  if (R.V.size() == 1 || R.W.size() == 1) {
    const TowerElement h = base(0), w = prime(0);
    return {a, b, DirectionVector(w, h), DirectionVector(w, h + h)};
  }
  const TowerElement v1 = base(0), v2 = base(1), p1 = prime(0), p2 = prime(1);
  return {a, b, DirectionVector(-p2, v1 + v2), DirectionVector(-p1 - p2, v1 + v1 + v2)};
}

PrimalityCertificate primality_certificate(const RectangleData& R) { return certify_quadruple(certificate_vectors(R)); }

json to_json(const DirectionVector& v) { return json::array({v.x.str(), v.y.str()}); }

json to_json(const PrimalityCertificate& c) {
  json vecs = json::array();
  for (const auto& v : c.vectors) vecs.push_back(to_json(v));
  json coords = json::array();
  for (const auto& r : c.value.coords()) coords.push_back(to_json(r));
  return json{{"vectors", vecs},
              {"cross_ratio_coords", coords},
              {"cross_ratio", c.value.str()},
              {"rational", c.rational},
              {"certificate", c.pass ? "PASS" : "FAIL"}};
}

}  // namespace gtv
