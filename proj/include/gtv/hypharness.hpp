#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "gtv/bassserre.hpp"
#include "gtv/error.hpp"
#include "gtv/exactfield/json_io.hpp"

namespace gtv {

using Permutation = std::vector<int>;
using VertexSet = std::vector<int>;  // sorted, no repeats

// Finite simple undirected graph with all-pairs BFS distances cached.
class FiniteGraph {
 public:
  FiniteGraph() = default;
  FiniteGraph(int n, const std::vector<std::pair<int, int>>& edges);

  int size() const { return static_cast<int>(adj_.size()); }
  const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  std::vector<std::pair<int, int>> edges() const;
  bool adjacent(int u, int v) const;
  bool connected() const;
  // -1 when unreachable.
  int distance(int u, int v) const { return dist_[static_cast<std::size_t>(u) * adj_.size() + static_cast<std::size_t>(v)]; }
  int set_distance(int x, const VertexSet& S) const;
  int set_distance(const VertexSet& S, const VertexSet& T) const;
  json to_json() const;

 protected:
  std::vector<std::vector<int>> adj_;
  std::vector<int> dist_;
};

class FiniteTree : public FiniteGraph {
 public:
  FiniteTree() = default;
  // Throws PreconditionError unless the edges form a tree on n >= 1 vertices.
  FiniteTree(int n, const std::vector<std::pair<int, int>>& edges);
  static FiniteTree path(int n);
  static FiniteTree star(int leaves);

  // Vertices of the geodesic from u to v, both ends included.
  std::vector<int> geodesic(int u, int v) const;
  bool is_subtree(const VertexSet& S) const;
  // Smallest subtree containing S.
  VertexSet hull(const VertexSet& S) const;
};

VertexSet make_set(std::vector<int> v);
bool is_automorphism(const FiniteGraph& X, const Permutation& f);
Permutation compose(const Permutation& f, const Permutation& g);  // f after g
Permutation power(const Permutation& f, long n);
long order(const Permutation& f);
VertexSet image(const Permutation& f, const VertexSet& S);
VertexSet orbit_closure(const Permutation& f, const VertexSet& S);
VertexSet fixed_set(const Permutation& f);

// Edge-midpoint subdivision; the automorphism is carried along. Original
// vertices keep their indices, the midpoint of edges()[e] becomes n + e.
struct Subdivision {
  FiniteTree tree;
  Permutation f;
};
Subdivision barycentric_subdivision(const FiniteTree& X, const Permutation& f);

// Unique closest vertex of the subtree A to x.
int nearest_projection(const FiniteTree& X, int x, const VertexSet& A);

// ---------------------------------------------------------------------------
// A tree with an automorphism f, drawn from a seeded generator. "hub" trees
// have f fixing a central path and rotating isomorphic branches; "inversion"
// trees are two copies of a rooted tree joined at their roots, with f
// swapping them (so f inverts the joining edge).
struct SymmetricTree {
  FiniteTree tree;
  Permutation f;
  std::string kind;
};

struct SymmetricTreeOptions {
  int max_spine = 6;
  int max_branch = 5;
  int max_copies = 3;
  double inversion_probability = 0.25;
};
SymmetricTree random_symmetric_tree(std::mt19937_64& rng, const SymmetricTreeOptions& opt = {});

// ---------------------------------------------------------------------------
// Tree versions of the three parts of the quasi-convex projection lemma.
struct Lemma34Report {
  int Q = 0;
  int gamma_length = 0;
  std::vector<int> gamma;
  // (1) deep points of gamma lie on every shortest A-B geodesic.
  int part1_points = 0;
  int part1_geodesics = 0;
  bool part1 = true;
  // (2) d(x, f x) <= 2Q along gamma.
  int part2_max_displacement = 0;
  bool part2 = true;
  // (3) f fixing x with d(x, A) >= Q fixes the window Q < d(y, A) < d(x, A)
  // of the geodesic from x to A under f, f^2, ..., f^N.
  int N = 1;
  int part3_base_points = 0;
  int part3_window_points = 0;
  bool part3 = true;
  bool pass() const { return part1 && part2 && part3; }
};
Lemma34Report lemma34_suite(const FiniteTree& X, const VertexSet& A, const VertexSet& B, const Permutation& f, int Q,
                            int N = 3);

// ---------------------------------------------------------------------------
// Ping-pong between two infinite cyclic subgroups G_A = <g_A>, G_B = <g_B>
// acting on the Bass-Serre tree, with G_A fixing the vertex A and G_B
// fixing B.
struct PingPongSetup {
  GraphOfGroups G;
  std::string name;
  GroupWord gen_a, gen_b;
  long order_a = 0, order_b = 0;  // 0 for infinite order
  TreeVertex A, B;
  int Q = 0;
  int L = 4;  // acylindricity length at displacement 0
  int L0() const { return L + 2 * Q; }
};
// <s> fixing v and <(ts)^n t (ts)^-n> fixing (ts)^n x, in G'.
PingPongSetup pingpong_setup_Gprime(int n);
// <a> fixing v and <b> fixing w, in G.
PingPongSetup pingpong_setup_G();

struct PingPongLetter {
  int side;    // 0: G_A, 1: G_B
  long power;  // nonzero modulo the generator's order
};

struct PingPongReport {
  int length = 0;
  int gamma = 0;
  int L0 = 0;
  long bound = 0;
  std::string base;  // "A" or "B"
  int distance = 0;
  bool holds = false;
};
// d(S, wS) >= |w| (|gamma| - 2 L0), where S = A unless w ends in a G_A
// letter, in which case S = B. Rejects non-alternating words and trivial
// letters. Throws OutOfBall if wS is farther than `radius` from A.
PingPongReport pingpong_bound(const PingPongSetup& P, const std::vector<PingPongLetter>& w, int radius = 256);

// ---------------------------------------------------------------------------
// Pairwise distance >= K, and no member within K of a shortest geodesic
// joining two other members.
struct KSeparation {
  bool pairwise = true;
  bool terminal = true;
  int min_pair_distance = -1;
  int min_geodesic_distance = -1;
  bool separated() const { return pairwise && terminal; }
};
KSeparation k_separated_check(const FiniteTree& X, const std::vector<VertexSet>& sets, int K);

// ---------------------------------------------------------------------------
struct DisplacementData {
  std::vector<int> displacement;       // d(x, g x) per vertex
  int min_disp = 0;
  int max_disp = 0;
  std::vector<VertexSet> levels;       // levels[L] = X(g, L), L = 0..max_disp
  VertexSet M;                         // X(g, min_disp)
  std::optional<long> order;           // when g has finite order
  VertexSet MM;                        // union of M(g^n), 0 < n < order
};
DisplacementData displacement_sets(const FiniteTree& X, const Permutation& g);
// Vertices of a Bass-Serre tree ball.
struct BallTree {
  FiniteTree tree;
  std::vector<TreeVertex> vertices;
  std::unordered_map<std::string, int> index;  // TreeVertex::key() -> vertex
  int index_of(const TreeVertex& v) const;       // -1 if outside
};
// All-pairs distances are cached, so the ball is capped at kBallTreeBudget
// vertices (BudgetExceeded beyond that).
inline constexpr std::size_t kBallTreeBudget = 20000;
BallTree ball_tree(const GraphOfGroups& G, const TreeVertex& center, int radius, const ExponentWindow& w = {});
// Restriction of g to the ball; throws OutOfBall if some image leaves it.
Permutation ball_permutation(const GraphOfGroups& G, const BallTree& ball, const NormalForm& g);
// For an element of a Bass-Serre group on a finite ball; the image may leave
// the ball, distances are computed in the whole tree. MM is filled when the
// order of g is at most `order_cap`.
DisplacementData displacement_sets(const GraphOfGroups& G, const BallTree& ball, const NormalForm& g,
                                   long order_cap = 64);

// Geodesic convexity of S in X.
bool is_convex(const FiniteTree& X, const VertexSet& S);

struct ConvexityVerdict {
  int L = 0;
  int min_disp = 0;
  std::size_t size = 0;
  bool convex = false;
};
// Throws PreconditionError when L < min_disp.
ConvexityVerdict sublevel_quasiconvex(const FiniteTree& X, const Permutation& g, int L);
ConvexityVerdict sublevel_quasiconvex(const GraphOfGroups& G, const BallTree& ball, const NormalForm& g, int L);

// ---------------------------------------------------------------------------
struct QuotientReport {
  FiniteGraph Y;
  std::vector<int> projection;  // vertex of X -> vertex of Y
  int max_orbit_diameter = 0;
  int C = 1;
  bool distance_nonincreasing = true;
  bool quasi_isometric = true;
  int worst_excess = 0;  // max of d_X(x, orbit y) - (C d_Y + C), <= 0 on success
  bool pass() const { return distance_nonincreasing && quasi_isometric; }
};
// Orbits of the group generated by `generators`. Throws PreconditionError if
// a generator is not an automorphism or `orbit_of` is not its orbit partition.
QuotientReport quotient_by_orbits(const FiniteGraph& X, const std::vector<int>& orbit_of,
                                  const std::vector<Permutation>& generators);
std::vector<int> orbit_partition(int n, const std::vector<Permutation>& generators);

// ---------------------------------------------------------------------------
// Seeded random-instance suites.
struct SuiteSummary {
  std::string name;
  int instances = 0;
  int passed = 0;
  std::vector<bool> verdicts;
  std::vector<json> failures;  // first few failing instances
  double seconds = 0;
  bool pass() const { return instances > 0 && passed == instances; }
};
SuiteSummary lemma34_property_suite(std::uint64_t seed, int count);
SuiteSummary pingpong_property_suite(std::uint64_t seed, int count, int max_length = 6);
// Every alternating word of length 1..max_length with letter powers in
// [-max_power, max_power] (nonzero modulo the generator order).
SuiteSummary pingpong_exhaustive(const PingPongSetup& P, int max_length, int max_power);
SuiteSummary convexity_property_suite(std::uint64_t seed, int count);
SuiteSummary quotient_property_suite(std::uint64_t seed, int count);

json to_json(const Lemma34Report& r);
json to_json(const PingPongReport& r);
json to_json(const KSeparation& r);
json to_json(const DisplacementData& d);
json to_json(const ConvexityVerdict& v);
json to_json(const QuotientReport& r);
json to_json(const SuiteSummary& s);

}  // namespace gtv
