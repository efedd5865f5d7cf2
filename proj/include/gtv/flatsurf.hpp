#pragma once

#include <array>
#include <string>
#include <vector>

#include "gtv/exactfield/json_io.hpp"
#include "gtv/exactfield/rational.hpp"

namespace gtv {

enum class Side { bottom = 0, right = 1, top = 2, left = 3 };
enum class Attachment { translation, pi_rotation };

struct Slot {
  int square;
  Side side;
  friend bool operator==(const Slot&, const Slot&) = default;
};

struct Gluing {
  Slot a;
  Slot b;
  Attachment how;
};

std::string side_name(Side s);
Side parse_side(const std::string& s);

// Unit squares with every side glued to another side, either by a translation
// (opposite sides) or by a rotation by pi (equal sides).
class SquareTiledSurface {
 public:
  SquareTiledSurface(int square_count, const std::vector<Gluing>& gluings);
  // {"squares": n, "gluing": [[[sq, "side"], [sq, "side"], "translation"|"pi_rotation"], ...]}
  static SquareTiledSurface from_json(const json& j);
  json to_json() const;

  int square_count() const { return n_; }
  const Slot& partner(const Slot& s) const { return partner_[index(s)]; }
  Attachment attachment(const Slot& s) const { return how_[index(s)]; }
  std::vector<Gluing> gluings() const;
  bool connected() const;

 private:
  static std::size_t index(const Slot& s) { return static_cast<std::size_t>(s.square) * 4 + static_cast<int>(s.side); }
  int n_;
  std::vector<Slot> partner_;
  std::vector<Attachment> how_;
};

// Square corners: 0 bottom-left, 1 bottom-right, 2 top-right, 3 top-left.
struct Corner {
  int square;
  int corner;
  friend bool operator==(const Corner&, const Corner&) = default;
};

struct ConePoint {
  int corner_count;  // cone angle is corner_count * pi / 2
  std::vector<Corner> corners;
  int angle_half_pi() const { return corner_count; }
  bool regular() const { return corner_count == 4; }
};

std::vector<ConePoint> vertex_cycles(const SquareTiledSurface& S);
int euler_characteristic(const SquareTiledSurface& S);
int genus(const SquareTiledSurface& S);

struct BisectorCurves {
  std::vector<std::vector<int>> horizontal;  // squares on each closed component
  std::vector<std::vector<int>> vertical;
  // crossing[j][k]: squares shared by horizontal j and vertical k.
  std::vector<std::vector<long>> crossing;
};

BisectorCurves bisector_curves(const SquareTiledSurface& S);

// Genus-3 surface of six squares with cone angles 5pi and 7pi.
SquareTiledSurface build_staircase();
SquareTiledSurface unit_torus();
// Three squares in an L: 0 | 1 on the bottom row, 2 above 0.
SquareTiledSurface l_shaped_origami();

struct SingularityData {
  long p;
  long q;
};

enum class ProngMode { coprime_odd, distinct_odd_primes };

struct ProngVerdict {
  bool holds = false;
  long genus = 0;  // (p + q) / 4
  std::vector<std::string> failures;
};

bool is_prime(long n);

// Throws PreconditionError when p + q is not divisible by 4.
ProngVerdict validate_prong_hypotheses(const SingularityData& d, ProngMode mode);

enum class DecompositionMode { primes, coprime };
SingularityData genus_decomposition(long g, DecompositionMode mode);

enum class CoverCase { automatic, separate_images, same_image };

struct KCandidate {
  long k;
  Rational lhs;  // term-by-term Euler characteristic of S minus the preimages
  Rational rhs;  // -(k+1)d/2
  bool identity_holds;
  bool admissible;
  Rational chi_punctured;  // Euler characteristic of the quotient minus its singular points
  Rational chi_closed;
  std::string quotient_type;
  std::string reason;
};

struct CoverFeasibility {
  long p, q, g, d;
  int case_number;  // 1: x, y have distinct images; 2: same image
  // Case 1 only: the identity chi(S - preimages) = -d and the quotient.
  Rational lhs;
  Rational rhs;
  bool identity_holds = false;
  Rational chi_punctured;
  std::string quotient_type;
  // Case 2 only: every k in [0, d] with its verdict.
  std::vector<KCandidate> candidates;
  std::vector<long> admissible_k;
};

CoverFeasibility cover_feasibility(long p, long q, long g, long d, CoverCase which = CoverCase::automatic);

json to_json(const CoverFeasibility& c);

}  // namespace gtv
