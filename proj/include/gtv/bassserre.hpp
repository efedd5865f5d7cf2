#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gtv/exactfield/json_io.hpp"

namespace gtv {

// Finitely generated abelian group Z/n1 x ... x Z/nk, order 0 meaning Z.
struct AbelianGroupSpec {
  std::vector<long> orders;
  std::vector<std::string> names;
};

inline constexpr std::size_t kMaxFactors = 4;
using Exponents = std::array<long, kMaxFactors>;

// Vertex e and e+1 of the path share the direct factor spanned by
// left[k] (in vertex e) == right[k] (in vertex e+1).
struct EdgeSpec {
  std::vector<int> left;
  std::vector<int> right;
};

struct Syllable {
  int vertex;
  Exponents exps{};
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

using GroupWord = std::vector<Syllable>;

// Graph of abelian groups over a path 0 - 1 - ... - (n-1).
class GraphOfGroups {
 public:
  GraphOfGroups(std::vector<AbelianGroupSpec> vertices, std::vector<EdgeSpec> edges);
  // {"vertex_groups": [{"orders": [...], "names": [...]}, ...],
  //  "edges": [{"left": [...], "right": [...]}, ...]}
  static GraphOfGroups from_json(const json& j);
  json to_json() const;

  // A *_<a> (<a> x <b>) *_<b> B with A = <a>, B = <b> of order 2.
  static GraphOfGroups fixture_G();
  // A' *_<a> C *_<b> B with A' = <a> x <s>, C = <a> x <b> x <t>, B = <b>.
  static GraphOfGroups fixture_Gprime();

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const AbelianGroupSpec& group(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  std::size_t factor_count(int v) const { return group(v).orders.size(); }

  Exponents reduce_exps(int v, Exponents e) const;
  Exponents add(int v, const Exponents& x, const Exponents& y) const;
  Exponents negate(int v, const Exponents& x) const;
  bool is_trivial(int v, const Exponents& x) const;

  // Splits x in G_v as transversal * edge part for the edge toward `toward`;
  // the edge part is returned in the coordinates of G_toward.
  std::pair<Exponents, Exponents> split(int v, const Exponents& x, int toward) const;
  // True when factor f of G_v lies in the edge subgroup toward `toward`.
  bool edge_factor(int v, int f, int toward) const;

  // Single-syllable element named by a generator of G_v ("a", "t", ...).
  Syllable generator(int v, const std::string& name, long power = 1) const;
  // The generator `name` in the first vertex group that has it.
  Syllable generator(const std::string& name, long power = 1) const;

  std::string syllable_str(const Syllable& s) const;

 private:
  std::vector<AbelianGroupSpec> vertices_;
  std::vector<EdgeSpec> edges_;
};

// Serre normal form based at vertex 0: a closed walk 0 = i_0, ..., i_n = 0
// in the path with g_r in G_{i_r}. For r < n, g_r is the transversal
// representative of its coset of the edge subgroup toward i_{r+1}, taken by
// zeroing the edge-factor exponents and carrying the edge part rightward. No
// backtracking: if i_{r-1} = i_{r+1} then g_r != 1. The identity is the single
// trivial syllable at vertex 0.
struct NormalForm {
  std::vector<Syllable> syllables;

  bool is_identity() const;
  GroupWord word() const { return syllables; }
  // Byte string identifying the element; equal keys iff equal elements.
  std::string key() const;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// Vertex g G_j of the Bass-Serre tree, stored as the reduced walk from the
// base vertex G_0 to it: path vertices i_0 = 0, ..., i_n = j with transversal
// elements g_0 .. g_{n-1} and a trivial last syllable.
struct TreeVertex {
  std::vector<Syllable> path;

  int vertex_index() const { return path.back().vertex; }
  int depth() const { return static_cast<int>(path.size()) - 1; }
  std::string key() const;
  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
};

NormalForm reduce(const GraphOfGroups& G, const GroupWord& w);
NormalForm multiply(const GraphOfGroups& G, const NormalForm& x, const NormalForm& y);
NormalForm inverse(const GraphOfGroups& G, const NormalForm& x);
GroupWord inverse_word(const GraphOfGroups& G, const GroupWord& w);
NormalForm identity_element();
std::string to_string(const GraphOfGroups& G, const NormalForm& g);

TreeVertex base_vertex(const GraphOfGroups& G, int j);
// Coset (product of w) G_j.
TreeVertex vertex_of(const GraphOfGroups& G, const GroupWord& w, int j);
TreeVertex act(const GraphOfGroups& G, const NormalForm& g, const TreeVertex& v);
TreeVertex act(const GraphOfGroups& G, const GroupWord& g, const TreeVertex& v);
bool stabilizes(const GraphOfGroups& G, const NormalForm& g, const TreeVertex& v);
int tree_distance(const TreeVertex& u, const TreeVertex& v);
std::string to_string(const GraphOfGroups& G, const TreeVertex& v);

// Tree neighbours of v. Children along infinite factors are limited to
// exponents in [window_lo, window_hi]; finite factors use their full range.
struct ExponentWindow {
  long lo = 0;
  long hi = 1;
};
std::vector<TreeVertex> tree_neighbors(const GraphOfGroups& G, const TreeVertex& v, const ExponentWindow& w);
TreeVertex tree_parent(const TreeVertex& v);

// Vertices within `radius` of `center` reachable through windowed children,
// in breadth-first order. Throws BudgetExceeded beyond `budget` vertices.
std::vector<TreeVertex> tree_ball(const GraphOfGroups& G, const TreeVertex& center, int radius,
                                  const ExponentWindow& w, std::size_t budget = 200000);

// The ray x, t(v), ts(x), tst(v), ... of the G' fixture: n+1 vertices.
std::vector<TreeVertex> ray_vertices(const GraphOfGroups& G, int n);

// Word for the ray prefix t s t s ... of length k.
GroupWord ray_word(const GraphOfGroups& G, int k);

struct Theorem41Row {
  int n = 0;
  std::string ray_vertex;            // u_{2n} = (ts)^n x
  bool b_moves_ray_vertex = false;   // so stab(w) and stab(u_{2n}) meet trivially
  bool conjugate_fixes_ray_vertex = false;  // (ts)^n a (ts)^-n fixes u_{2n}
  bool commutator_alternating = false;      // both letters nontrivial
  bool commutator_trivial = false;          // [(ts)^n a (ts)^-n, b] reduces to 1
  int distance = 0;                          // d(w, u_{2n})
  bool distance_ok = false;                  // >= n and above the previous row
  bool pass() const {
    return b_moves_ray_vertex && conjugate_fixes_ray_vertex && commutator_alternating && commutator_trivial &&
           distance_ok;
  }
};

struct Theorem41Report {
  std::vector<Theorem41Row> rows;
  bool ray_steps_unit = true;  // consecutive ray vertices at distance 1
  bool base_distance_two = false;  // d(v, w) = 2
  bool pass = true;
  std::vector<std::string> failures;
};

Theorem41Report theorem41_verify(const GraphOfGroups& G, int n_max);

// Checks for the one-edge example: stab(v) = A, stab(w) = B meet trivially
// and [a, b] = 1.
struct FirstExampleReport {
  bool a_fixes_v = false, b_fixes_w = false;
  bool a_moves_w = false, b_moves_v = false;
  bool commutator_trivial = false;
  int distance_vw = 0;
  bool pass = false;
};
FirstExampleReport first_example_verify(const GraphOfGroups& G);

// Distinct elements of word length <= radius over the given generators
// (each generator and its inverse), deduplicated by normal form.
std::vector<NormalForm> cayley_ball(const GraphOfGroups& G, const std::vector<Syllable>& generators, int radius,
                                    std::size_t budget);
std::vector<Syllable> standard_generators(const GraphOfGroups& G);

struct AcylindricityOptions {
  ExponentWindow window{};
  std::size_t element_budget = 200000;
  std::size_t ball_budget = 200000;
  std::size_t max_pairs = 0;  // 0: every far pair
  std::uint64_t seed = 1;
  int edge_stabilizer_order = 2;
};

struct AcylindricityReport {
  int R = 0;
  int L = 0;       // 4R + 4
  long bound = 0;  // (2R + 1) K
  std::size_t elements = 0;
  std::size_t ball_vertices = 0;
  std::size_t far_pairs = 0;
  std::size_t pairs_checked = 0;
  long max_count = 0;
  std::string worst_pair;
  // Pairs (ts)^-k x, (ts)^k x on the translation axis of ts (G' only), which
  // the windowed ball does not contain.
  std::size_t axis_pairs = 0;
  long axis_max_count = 0;
  bool pass = false;
};

// Elements g of `elements` with d(u, gu) <= R and d(v, gv) <= R.
long mover_count(const GraphOfGroups& G, const std::vector<NormalForm>& elements, const TreeVertex& u,
                 const TreeVertex& v, int R);

AcylindricityReport acylindricity_check(const GraphOfGroups& G, int R, int ball_radius, int word_length,
                                        const AcylindricityOptions& opt = {});

json to_json(const Theorem41Report& r);
json to_json(const FirstExampleReport& r);
json to_json(const AcylindricityReport& r);

}  // namespace gtv
