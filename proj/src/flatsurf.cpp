#include "gtv/flatsurf.hpp"

#include <algorithm>
#include <numeric>

#include "gtv/error.hpp"

namespace gtv {

namespace {

Side opposite(Side s) { return static_cast<Side>((static_cast<int>(s) + 2) % 4); }

}  // namespace

std::string side_name(Side s) {
  switch (s) {
    case Side::bottom: return "bottom";
    case Side::right: return "right";
    case Side::top: return "top";
    case Side::left: return "left";
  }
  return "?";
}

Side parse_side(const std::string& s) {
  if (s == "bottom") return Side::bottom;
  if (s == "right") return Side::right;
  if (s == "top") return Side::top;
  if (s == "left") return Side::left;
  throw PreconditionError("unknown side '" + s + "'");
}

SquareTiledSurface::SquareTiledSurface(int square_count, const std::vector<Gluing>& gluings)
    : n_(square_count),
      partner_(static_cast<std::size_t>(std::max(square_count, 0)) * 4, Slot{-1, Side::bottom}),
      how_(partner_.size(), Attachment::translation) {
  if (n_ <= 0) throw PreconditionError("a square-tiled surface needs at least one square");
  auto check = [&](const Slot& s) {
    if (s.square < 0 || s.square >= n_) throw PreconditionError("gluing refers to square " + std::to_string(s.square));
    if (partner_[index(s)].square >= 0) {
      throw PreconditionError("side " + side_name(s.side) + " of square " + std::to_string(s.square) + " is glued twice");
    }
  };
  for (const auto& g : gluings) {
    check(g.a);
    if (g.a == g.b) throw PreconditionError("a side cannot be glued to itself");
    check(g.b);
    if (g.how == Attachment::translation && g.b.side != opposite(g.a.side))
      throw PreconditionError("translation gluings pair opposite sides");
    if (g.how == Attachment::pi_rotation && g.b.side != g.a.side)
      throw PreconditionError("rotation gluings pair equal sides");
    partner_[index(g.a)] = g.b;
    partner_[index(g.b)] = g.a;
    how_[index(g.a)] = how_[index(g.b)] = g.how;
  }
  for (std::size_t i = 0; i < partner_.size(); ++i) {
    if (partner_[i].square < 0) {
      throw PreconditionError("side " + side_name(static_cast<Side>(i % 4)) + " of square " + std::to_string(i / 4) +
                              " is not glued");
    }
  }
}

SquareTiledSurface SquareTiledSurface::from_json(const json& j) {
  std::vector<Gluing> gl;
  for (const auto& row : j.at("gluing")) {
    auto slot = [](const json& s) { return Slot{s.at(0).get<int>(), parse_side(s.at(1).get<std::string>())}; };
    const std::string how = row.at(2).get<std::string>();
    Attachment a;
    if (how == "translation") a = Attachment::translation;
    else if (how == "pi_rotation") a = Attachment::pi_rotation;
    else throw PreconditionError("unknown attachment '" + how + "'");
    gl.push_back({slot(row.at(0)), slot(row.at(1)), a});
  }
  return SquareTiledSurface(j.at("squares").get<int>(), gl);
}

std::vector<Gluing> SquareTiledSurface::gluings() const {
  std::vector<Gluing> out;
  for (std::size_t i = 0; i < partner_.size(); ++i) {
    const Slot s{static_cast<int>(i / 4), static_cast<Side>(i % 4)};
    if (index(partner_[i]) > i) out.push_back({s, partner_[i], how_[i]});
  }
  return out;
}

json SquareTiledSurface::to_json() const {
  json rows = json::array();
  for (const auto& g : gluings()) {
    rows.push_back(json::array({json::array({g.a.square, side_name(g.a.side)}),
                                json::array({g.b.square, side_name(g.b.side)}),
                                g.how == Attachment::translation ? "translation" : "pi_rotation"}));
  }
  return json{{"squares", n_}, {"gluing", rows}};
}

bool SquareTiledSurface::connected() const {
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int sq = stack.back();
    stack.pop_back();
    for (int side = 0; side < 4; ++side) {
      const int nb = partner(Slot{sq, static_cast<Side>(side)}).square;
      if (!seen[nb]) {
        seen[nb] = true;
        ++count;
        stack.push_back(nb);
      }
    }
  }
  return count == n_;
}

std::vector<ConePoint> vertex_cycles(const SquareTiledSurface& S) {
  // Corner c sits between side c-1 (ending there) and side c. Crossing side
  // c-1 lands at the corner of the partner square that starts the partner side.
  const int n = S.square_count();
  std::vector<bool> seen(static_cast<std::size_t>(n) * 4, false);
  std::vector<ConePoint> out;
  for (int sq = 0; sq < n; ++sq) {
    for (int c = 0; c < 4; ++c) {
      if (seen[sq * 4 + c]) continue;
      ConePoint cp{0, {}};
      Corner cur{sq, c};
      while (!seen[cur.square * 4 + cur.corner]) {
        seen[cur.square * 4 + cur.corner] = true;
        cp.corners.push_back(cur);
        const Slot next = S.partner(Slot{cur.square, static_cast<Side>((cur.corner + 3) % 4)});
        cur = Corner{next.square, static_cast<int>(next.side)};
      }
      if (!(cur == cp.corners.front())) throw VerificationError("corner cycle does not close: inconsistent gluing");
      cp.corner_count = static_cast<int>(cp.corners.size());
      out.push_back(std::move(cp));
    }
  }
  return out;
}

int euler_characteristic(const SquareTiledSurface& S) {
  const int V = static_cast<int>(vertex_cycles(S).size());
  const int F = S.square_count();
  return V - 2 * F + F;
}

int genus(const SquareTiledSurface& S) {
  if (!S.connected()) throw PreconditionError("surface is not connected");
  const int chi = euler_characteristic(S);
  if ((2 - chi) % 2 != 0) throw VerificationError("odd Euler characteristic " + std::to_string(chi));
  return (2 - chi) / 2;
}

BisectorCurves bisector_curves(const SquareTiledSurface& S) {
  const int n = S.square_count();
  auto trace = [&](Side forward) {
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> comps;
    for (int start = 0; start < n; ++start) {
      if (owner[start] >= 0) continue;
      const int id = static_cast<int>(comps.size());
      comps.emplace_back();
      Slot exit{start, forward};
      for (int steps = 0;; ++steps) {
        if (steps > n) throw VerificationError("bisector trace does not close up");
        if (owner[exit.square] == id) {
          break;
        }
        if (owner[exit.square] >= 0) throw VerificationError("bisector trace merges into another component");
        owner[exit.square] = id;
        comps.back().push_back(exit.square);
        const Slot in = S.partner(exit);
        exit = Slot{in.square, opposite(in.side)};
      }
      if (exit.square != start) throw VerificationError("bisector trace does not return to its start");
    }
    return std::pair{comps, owner};
  };
  auto [h, h_owner] = trace(Side::right);
  auto [v, v_owner] = trace(Side::top);
  BisectorCurves out{h, v, std::vector<std::vector<long>>(h.size(), std::vector<long>(v.size(), 0))};
  for (int sq = 0; sq < n; ++sq) ++out.crossing[h_owner[sq]][v_owner[sq]];
  return out;
}

SquareTiledSurface build_staircase() {
  // Squares: 0 a, 1 e, 2 b, 3 f, 4 x, 5 y (named after their edge labels).
  using enum Side;
  constexpr Attachment T = Attachment::translation, R = Attachment::pi_rotation;
  return SquareTiledSurface(6, {
                                   {{0, right}, {1, left}, T},
                                   {{2, right}, {3, left}, T},
                                   {{0, left}, {1, right}, T},
                                   {{2, left}, {4, left}, R},
                                   {{4, right}, {3, right}, R},
                                   {{5, right}, {5, left}, T},
                                   {{1, bottom}, {2, top}, T},
                                   {{3, bottom}, {0, bottom}, R},
                                   {{1, top}, {2, bottom}, T},
                                   {{4, bottom}, {4, top}, T},
                                   {{3, top}, {5, top}, R},
                                   {{0, top}, {5, bottom}, T},
                               });
}

SquareTiledSurface unit_torus() {
  return SquareTiledSurface(1, {{{0, Side::right}, {0, Side::left}, Attachment::translation},
                                {{0, Side::top}, {0, Side::bottom}, Attachment::translation}});
}

SquareTiledSurface l_shaped_origami() {
  using enum Side;
  constexpr Attachment T = Attachment::translation;
  return SquareTiledSurface(3, {
                                   {{0, right}, {1, left}, T},
                                   {{1, right}, {0, left}, T},
                                   {{2, right}, {2, left}, T},
                                   {{0, top}, {2, bottom}, T},
                                   {{2, top}, {0, bottom}, T},
                                   {{1, top}, {1, bottom}, T},
                               });
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

ProngVerdict validate_prong_hypotheses(const SingularityData& d, ProngMode mode) {
  if (d.p <= 0 || d.q <= 0) throw PreconditionError("prong counts must be positive");
  if ((d.p + d.q) % 4 != 0) {
    throw PreconditionError("p + q = " + std::to_string(d.p + d.q) + " is not 4g for any genus g");
  }
  ProngVerdict v;
  v.genus = (d.p + d.q) / 4;
  if (d.p % 2 == 0) v.failures.push_back("p is even");
  if (d.q % 2 == 0) v.failures.push_back("q is even");
  if (mode == ProngMode::coprime_odd) {
    if (std::gcd(d.p, d.q) != 1) v.failures.push_back("p and q are not coprime");
  } else {
    if (d.p == d.q) v.failures.push_back("p equals q");
    if (!is_prime(d.p)) v.failures.push_back(std::to_string(d.p) + " is not prime");
    if (!is_prime(d.q)) v.failures.push_back(std::to_string(d.q) + " is not prime");
  }
  v.holds = v.failures.empty();
  return v;
}

SingularityData genus_decomposition(long g, DecompositionMode mode) {
  if (g < 2) throw PreconditionError("genus must be at least 2");
  if (mode == DecompositionMode::coprime) return {2 * g - 1, 2 * g + 1};
  const long total = 4 * g;
  for (long p = 3; 2 * p < total; p += 2) {
    if (is_prime(p) && is_prime(total - p)) return {p, total - p};
  }
  throw VerificationError("no pair of distinct odd primes sums to " + std::to_string(total));
}

CoverFeasibility cover_feasibility(long p, long q, long g, long d, CoverCase which) {
  if (p % 2 == 0 || q % 2 == 0) throw PreconditionError("p and q must be odd");
  if (p + q != 4 * g) throw PreconditionError("p + q must equal 4g");
  if (d <= 1) throw PreconditionError("cover degree must exceed 1");
  if (which == CoverCase::automatic) which = d % 2 ? CoverCase::separate_images : CoverCase::same_image;

  CoverFeasibility out{p, q, g, d, 0, {}, {}, false, {}, {}, {}, {}};
  const Rational two(2), D(d), G(g), P(p), Q(q);
  if (which == CoverCase::separate_images) {
    if (d % 2 == 0) throw PreconditionError("distinct images need an odd degree d");
    if (d < std::max(p, q)) throw PreconditionError("d < max(p, q)");
    out.case_number = 1;
    out.lhs = (Rational(2) - two * G) - (D - P) / two - (D - Q) / two - two;
    out.rhs = -D;
    out.identity_holds = out.lhs == out.rhs;
    out.chi_punctured = out.lhs / D;
    out.quotient_type = out.chi_punctured == Rational(-1) ? "twice punctured RP^2" : "unexpected";
    return out;
  }

  if (d % 2 != 0) throw PreconditionError("a common image needs an even degree d");
  if (d < p + q) throw PreconditionError("d < p+q");
  out.case_number = 2;
  for (long k = 0; k <= d; ++k) {
    const Rational K(k);
    KCandidate c{k, {}, {}, false, false, {}, {}, {}, {}};
    c.lhs = (Rational(2) - two * G) - (D - (P + Q)) / two - two - K * D / two;
    c.rhs = -(K + Rational(1)) * D / two;
    c.identity_holds = c.lhs == c.rhs;
    c.chi_punctured = c.lhs / D;
    c.chi_closed = c.chi_punctured + K + Rational(1);
    if (!c.identity_holds) {
      c.reason = "Euler characteristic identity fails";
    } else if (!c.chi_punctured.is_integer()) {
      c.reason = "non-integral Euler characteristic (k even)";
    } else if (c.chi_closed > Rational(2)) {
      c.reason = "closed quotient would have Euler characteristic above 2";
    } else if (c.chi_closed == Rational(2)) {
      c.admissible = true;
      c.quotient_type = "4 times punctured S^2";
    } else if (c.chi_closed == Rational(1)) {
      c.admissible = true;
      c.quotient_type = "twice punctured RP^2";
    } else {
      c.reason = "quotient Euler characteristic not positive";
    }
    if (c.admissible) out.admissible_k.push_back(k);
    out.candidates.push_back(std::move(c));
  }
  return out;
}

json to_json(const CoverFeasibility& c) {
  json j{{"p", c.p}, {"q", c.q}, {"g", c.g}, {"d", c.d}, {"case", c.case_number}};
  if (c.case_number == 1) {
    j["lhs"] = c.lhs.pretty();
    j["rhs"] = c.rhs.pretty();
    j["identity_holds"] = c.identity_holds;
    j["chi_punctured_quotient"] = c.chi_punctured.pretty();
    j["quotient_type"] = c.quotient_type;
  } else {
    json ks = json::array();
    for (const auto& k : c.candidates) {
      if (!k.admissible) continue;
      ks.push_back(json{{"k", k.k},
                        {"chi_punctured_quotient", k.chi_punctured.pretty()},
                        {"chi_closed_quotient", k.chi_closed.pretty()},
                        {"quotient_type", k.quotient_type}});
    }
    j["admissible"] = ks;
    j["admissible_k"] = c.admissible_k;
  }
  return j;
}

}  // namespace gtv
