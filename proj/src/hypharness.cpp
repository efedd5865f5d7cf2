#include "gtv/hypharness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <limits>
#include <numeric>
#include <set>

#include "gtv/error.hpp"

namespace gtv {

// ---------------------------------------------------------------------------
// Graphs and trees

FiniteGraph::FiniteGraph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw PreconditionError("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n), {});
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("loops are not allowed");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) throw PreconditionError("repeated edge");
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
  const std::size_t N = adj_.size();
  dist_.assign(N * N, -1);
  std::vector<int> queue(N);
  for (std::size_t s = 0; s < N; ++s) {
    int* d = dist_.data() + s * N;
    std::size_t head = 0, tail = 0;
    d[s] = 0;
    queue[tail++] = static_cast<int>(s);
    while (head < tail) {
      const int u = queue[head++];
      for (int w : adj_[static_cast<std::size_t>(u)])
        if (d[w] < 0) {
          d[w] = d[u] + 1;
          queue[tail++] = w;
        }
    }
  }
}

std::vector<std::pair<int, int>> FiniteGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool FiniteGraph::adjacent(int u, int v) const {
  const auto& a = neighbors(u);
  return std::binary_search(a.begin(), a.end(), v);
}

bool FiniteGraph::connected() const {
  if (adj_.empty()) return true;
  return std::none_of(dist_.begin(), dist_.begin() + static_cast<long>(adj_.size()), [](int d) { return d < 0; });
}

int FiniteGraph::set_distance(int x, const VertexSet& S) const {
  int best = -1;
  for (int s : S) {
    const int d = distance(x, s);
    if (d >= 0 && (best < 0 || d < best)) best = d;
  }
  return best;
}

int FiniteGraph::set_distance(const VertexSet& S, const VertexSet& T) const {
  int best = -1;
  for (int s : S) {
    const int d = set_distance(s, T);
    if (d >= 0 && (best < 0 || d < best)) best = d;
  }
  return best;
}

json FiniteGraph::to_json() const {
  json e = json::array();
  for (auto [u, v] : edges()) e.push_back({u, v});
  return json{{"vertices", size()}, {"edges", e}};
}

FiniteTree::FiniteTree(int n, const std::vector<std::pair<int, int>>& edges) : FiniteGraph(n, edges) {
  if (n < 1) throw PreconditionError("a tree has at least one vertex");
  if (static_cast<int>(edges.size()) != n - 1 || !connected()) throw PreconditionError("edges do not form a tree");
}

FiniteTree FiniteTree::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return FiniteTree(n, e);
}

FiniteTree FiniteTree::star(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return FiniteTree(leaves + 1, e);
}

std::vector<int> FiniteTree::geodesic(int u, int v) const {
  std::vector<int> out{u};
  int cur = u;
  while (cur != v) {
    const int d = distance(cur, v);
    for (int w : neighbors(cur))
      if (distance(w, v) == d - 1) {
        cur = w;
        break;
      }
    out.push_back(cur);
  }
  return out;
}

bool FiniteTree::is_subtree(const VertexSet& S) const {
  if (S.empty()) return false;
  std::vector<char> in(static_cast<std::size_t>(size()), 0);
  for (int s : S) {
    if (s < 0 || s >= size()) return false;
    in[static_cast<std::size_t>(s)] = 1;
  }
  std::vector<int> stack{S.front()};
  std::vector<char> seen(in.size(), 0);
  seen[static_cast<std::size_t>(S.front())] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : neighbors(u))
      if (in[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == S.size();
}

VertexSet FiniteTree::hull(const VertexSet& S) const {
  if (S.empty()) return {};
  const auto n = static_cast<std::size_t>(size());
  std::vector<char> keep(n, 1), in_s(n, 0);
  for (int s : S) in_s[static_cast<std::size_t>(s)] = 1;
  std::vector<int> deg(n);
  std::vector<int> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj_[v].size());
    if (deg[v] <= 1 && !in_s[v]) leaves.push_back(static_cast<int>(v));
  }
  while (!leaves.empty()) {
    const int u = leaves.back();
    leaves.pop_back();
    keep[static_cast<std::size_t>(u)] = 0;
    for (int w : neighbors(u)) {
      if (!keep[static_cast<std::size_t>(w)]) continue;
      if (--deg[static_cast<std::size_t>(w)] == 1 && !in_s[static_cast<std::size_t>(w)]) leaves.push_back(w);
    }
  }
  VertexSet out;
  for (std::size_t v = 0; v < n; ++v)
    if (keep[v]) out.push_back(static_cast<int>(v));
  return out;
}

VertexSet make_set(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool is_automorphism(const FiniteGraph& X, const Permutation& f) {
  const int n = X.size();
  if (static_cast<int>(f.size()) != n) return false;
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int v : f) {
    if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = 1;
  }
  for (auto [u, v] : X.edges())
    if (!X.adjacent(f[static_cast<std::size_t>(u)], f[static_cast<std::size_t>(v)])) return false;
  return true;
}

Permutation compose(const Permutation& f, const Permutation& g) {
  Permutation h(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) h[i] = f[static_cast<std::size_t>(g[i])];
  return h;
}

Permutation power(const Permutation& f, long n) {
  Permutation base = f;
  if (n < 0) {
    for (std::size_t i = 0; i < f.size(); ++i) base[static_cast<std::size_t>(f[i])] = static_cast<int>(i);
    n = -n;
  }
  Permutation out(f.size());
  std::iota(out.begin(), out.end(), 0);
  for (long k = 0; k < n; ++k) out = compose(base, out);
  return out;
}

long order(const Permutation& f) {
  long ord = 1;
  std::vector<char> seen(f.size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(f[j])) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

VertexSet image(const Permutation& f, const VertexSet& S) {
  std::vector<int> out;
  out.reserve(S.size());
  for (int s : S) out.push_back(f[static_cast<std::size_t>(s)]);
  return make_set(std::move(out));
}

VertexSet orbit_closure(const Permutation& f, const VertexSet& S) {
  VertexSet cur = make_set(S);
  for (;;) {
    std::vector<int> next = cur;
    for (int s : cur) next.push_back(f[static_cast<std::size_t>(s)]);
    VertexSet n = make_set(std::move(next));
    if (n == cur) return cur;
    cur = std::move(n);
  }
}

VertexSet fixed_set(const Permutation& f) {
  VertexSet out;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] == static_cast<int>(i)) out.push_back(static_cast<int>(i));
  return out;
}

Subdivision barycentric_subdivision(const FiniteTree& X, const Permutation& f) {
  if (!is_automorphism(X, f)) throw PreconditionError("map is not an automorphism of the tree");
  const auto E = X.edges();
  const int n = X.size();
  std::vector<std::pair<int, int>> edges;
  std::map<std::pair<int, int>, int> mid;
  for (std::size_t e = 0; e < E.size(); ++e) {
    const int m = n + static_cast<int>(e);
    mid[E[e]] = m;
    edges.emplace_back(E[e].first, m);
    edges.emplace_back(m, E[e].second);
  }
  Permutation g(f.begin(), f.end());
  g.resize(static_cast<std::size_t>(n) + E.size());
  for (std::size_t e = 0; e < E.size(); ++e) {
    int a = f[static_cast<std::size_t>(E[e].first)], b = f[static_cast<std::size_t>(E[e].second)];
    if (a > b) std::swap(a, b);
    g[static_cast<std::size_t>(n) + e] = mid.at({a, b});
  }
  return {FiniteTree(n + static_cast<int>(E.size()), edges), g};
}

int nearest_projection(const FiniteTree& X, int x, const VertexSet& A) {
  if (x < 0 || x >= X.size()) throw PreconditionError("vertex out of range");
  if (!X.is_subtree(A)) throw PreconditionError("projection target must be a nonempty connected subtree");
  int best = -1, bd = std::numeric_limits<int>::max(), ties = 0;
  for (int a : A) {
    const int d = X.distance(x, a);
    if (d < bd) {
      bd = d;
      best = a;
      ties = 1;
    } else if (d == bd) {
      ++ties;
    }
  }
  if (ties != 1) throw VerificationError("nearest point on a subtree is not unique");
  return best;
}

// ---------------------------------------------------------------------------
// Random symmetric trees

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Parent array of a random rooted tree on m vertices (vertex 0 is the root).
std::vector<int> random_rooted(std::mt19937_64& rng, int m) {
  std::vector<int> parent(static_cast<std::size_t>(m), -1);
  for (int i = 1; i < m; ++i) parent[static_cast<std::size_t>(i)] = uniform(rng, 0, i - 1);
  return parent;
}

}  // namespace

SymmetricTree random_symmetric_tree(std::mt19937_64& rng, const SymmetricTreeOptions& opt) {
  std::vector<std::pair<int, int>> edges;
  Permutation f;
  int n = 0;
  auto add_vertex = [&](int image) {
    f.push_back(image);
    return n++;
  };
  if (std::bernoulli_distribution(opt.inversion_probability)(rng)) {
    const int m = uniform(rng, 1, opt.max_branch + 2);
    const auto parent = random_rooted(rng, m);
    for (int c = 0; c < 2; ++c)
      for (int i = 0; i < m; ++i) {
        add_vertex((1 - c) * m + i);
        if (i > 0) edges.emplace_back(c * m + parent[static_cast<std::size_t>(i)], c * m + i);
      }
    edges.emplace_back(0, m);
    return {FiniteTree(n, edges), f, "inversion"};
  }
  const int spine = uniform(rng, 1, opt.max_spine);
  for (int i = 0; i < spine; ++i) {
    add_vertex(i);
    if (i > 0) edges.emplace_back(i - 1, i);
  }
  for (int i = 0; i < spine; ++i) {
    if (!std::bernoulli_distribution(0.6)(rng)) continue;
    const int k = uniform(rng, 1, opt.max_copies);
    const int m = uniform(rng, 1, opt.max_branch);
    const auto parent = random_rooted(rng, m);
    const int base = n;
    for (int c = 0; c < k; ++c)
      for (int j = 0; j < m; ++j) {
        add_vertex(base + ((c + 1) % k) * m + j);
        const int self = base + c * m + j;
        edges.emplace_back(j == 0 ? i : base + c * m + parent[static_cast<std::size_t>(j)], self);
      }
  }
  return {FiniteTree(n, edges), f, "hub"};
}

// ---------------------------------------------------------------------------
// Projection lemma

Lemma34Report lemma34_suite(const FiniteTree& X, const VertexSet& A, const VertexSet& B, const Permutation& f, int Q,
                            int N) {
  if (Q < 0 || N < 1) throw PreconditionError("Q must be nonnegative and N positive");
  if (!X.is_subtree(A) || !X.is_subtree(B)) throw PreconditionError("A and B must be nonempty subtrees");
  if (!is_automorphism(X, f)) throw PreconditionError("f is not an automorphism");
  if (image(f, A) != A || image(f, B) != B) throw PreconditionError("f must preserve A and B setwise");
  const int dAB = X.set_distance(A, B);
  if (dAB == 0) throw PreconditionError("A and B must be disjoint");

  Lemma34Report r;
  r.Q = Q;
  r.N = N;
  r.gamma_length = dAB;
  std::vector<std::vector<int>> geodesics;
  for (int a : A)
    for (int b : B)
      if (X.distance(a, b) == dAB) geodesics.push_back(X.geodesic(a, b));
  r.gamma = geodesics.front();
  r.part1_geodesics = static_cast<int>(geodesics.size());

  for (int x : r.gamma) {
    if (X.set_distance(x, A) > Q && X.set_distance(x, B) > Q) {
      ++r.part1_points;
      for (const auto& tau : geodesics)
        if (std::find(tau.begin(), tau.end(), x) == tau.end()) r.part1 = false;
    }
    const int disp = X.distance(x, f[static_cast<std::size_t>(x)]);
    r.part2_max_displacement = std::max(r.part2_max_displacement, disp);
    if (disp > 2 * Q) r.part2 = false;
  }

  std::vector<Permutation> powers;
  for (int i = 1; i <= N; ++i) powers.push_back(power(f, i));
  for (int x = 0; x < X.size(); ++x) {
    const int dx = X.set_distance(x, A);
    if (dx == 0 || dx < Q || f[static_cast<std::size_t>(x)] != x) continue;
    ++r.part3_base_points;
    for (int y : X.geodesic(x, nearest_projection(X, x, A))) {
      const int dy = X.set_distance(y, A);
      if (!(Q < dy && dy < dx)) continue;
      ++r.part3_window_points;
      for (const auto& p : powers)
        if (p[static_cast<std::size_t>(y)] != y) r.part3 = false;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Ping-pong

PingPongSetup pingpong_setup_Gprime(int n) {
  if (n < 0) throw PreconditionError("ray index must be nonnegative");
  GraphOfGroups G = GraphOfGroups::fixture_Gprime();
  const GroupWord fwd = ray_word(G, 2 * n);
  GroupWord conj = fwd;
  conj.push_back(G.generator("t"));
  for (const auto& s : inverse_word(G, fwd)) conj.push_back(s);
  PingPongSetup P{G, "Gprime", {G.generator("s")}, conj, 0, 0, base_vertex(G, 0),
                  act(G, fwd, base_vertex(G, 1)), 0, 4};
  P.name = "Gprime(n=" + std::to_string(n) + ")";
  if (!stabilizes(G, reduce(G, P.gen_a), P.A) || !stabilizes(G, reduce(G, P.gen_b), P.B))
    throw VerificationError("ping-pong generators do not fix their base vertices");
  return P;
}

PingPongSetup pingpong_setup_G() {
  GraphOfGroups G = GraphOfGroups::fixture_G();
  PingPongSetup P{G, "G", {G.generator(0, "a")}, {G.generator(2, "b")}, 2, 2, base_vertex(G, 0), base_vertex(G, 2),
                  0, 4};
  if (!stabilizes(G, reduce(G, P.gen_a), P.A) || !stabilizes(G, reduce(G, P.gen_b), P.B))
    throw VerificationError("ping-pong generators do not fix their base vertices");
  return P;
}

PingPongReport pingpong_bound(const PingPongSetup& P, const std::vector<PingPongLetter>& w, int radius) {
  GroupWord word;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& l = w[i];
    if (l.side != 0 && l.side != 1) throw PreconditionError("letter side must be 0 (G_A) or 1 (G_B)");
    const long ord = l.side == 0 ? P.order_a : P.order_b;
    const long p = ord == 0 ? l.power : ((l.power % ord) + ord) % ord;
    if (p == 0) throw PreconditionError("trivial letter: the word is not reduced");
    if (i > 0 && w[i - 1].side == l.side) throw PreconditionError("consecutive letters from one factor: not alternating");
    const GroupWord& g = l.side == 0 ? P.gen_a : P.gen_b;
    const GroupWord piece = l.power > 0 ? g : inverse_word(P.G, g);
    for (long k = 0; k < std::abs(l.power); ++k) word.insert(word.end(), piece.begin(), piece.end());
  }
  PingPongReport r;
  r.length = static_cast<int>(w.size());
  r.gamma = tree_distance(P.A, P.B);
  r.L0 = P.L0();
  r.bound = static_cast<long>(r.length) * (r.gamma - 2 * r.L0);
  const bool on_b = !w.empty() && w.back().side == 0;
  r.base = on_b ? "B" : "A";
  const TreeVertex& S = on_b ? P.B : P.A;
  const TreeVertex image = act(P.G, word, S);
  if (tree_distance(P.A, image) > radius)
    throw OutOfBall("w(" + r.base + ") lies outside the radius-" + std::to_string(radius) + " ball");
  r.distance = tree_distance(S, image);
  r.holds = r.distance >= r.bound;
  return r;
}

// ---------------------------------------------------------------------------
// K-separation

KSeparation k_separated_check(const FiniteTree& X, const std::vector<VertexSet>& sets, int K) {
  for (const auto& S : sets)
    if (S.empty()) throw PreconditionError("empty set in a K-separation check");
  KSeparation r;
  const std::size_t m = sets.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const int d = X.set_distance(sets[i], sets[j]);
      if (r.min_pair_distance < 0 || d < r.min_pair_distance) r.min_pair_distance = d;
      if (d < K) r.pairwise = false;
    }
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = j + 1; k < m; ++k) {
      const int d = X.set_distance(sets[j], sets[k]);
      for (int a : sets[j])
        for (int b : sets[k]) {
          if (X.distance(a, b) != d) continue;
          const VertexSet g = make_set(X.geodesic(a, b));
          for (std::size_t i = 0; i < m; ++i) {
            if (i == j || i == k) continue;
            const int e = X.set_distance(sets[i], g);
            if (r.min_geodesic_distance < 0 || e < r.min_geodesic_distance) r.min_geodesic_distance = e;
            if (e < K) r.terminal = false;
          }
        }
    }
  return r;
}

// ---------------------------------------------------------------------------
// Displacement sets

namespace {

void fill_levels(DisplacementData& D) {
  D.min_disp = *std::min_element(D.displacement.begin(), D.displacement.end());
  D.max_disp = *std::max_element(D.displacement.begin(), D.displacement.end());
  D.levels.assign(static_cast<std::size_t>(D.max_disp) + 1, {});
  for (std::size_t x = 0; x < D.displacement.size(); ++x)
    for (int L = D.displacement[x]; L <= D.max_disp; ++L) D.levels[static_cast<std::size_t>(L)].push_back(static_cast<int>(x));
  D.M = D.levels[static_cast<std::size_t>(D.min_disp)];
}

VertexSet minimal_set(const std::vector<int>& disp) {
  const int m = *std::min_element(disp.begin(), disp.end());
  VertexSet out;
  for (std::size_t x = 0; x < disp.size(); ++x)
    if (disp[x] == m) out.push_back(static_cast<int>(x));
  return out;
}

std::vector<int> perm_displacement(const FiniteTree& X, const Permutation& g) {
  std::vector<int> d(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) d[x] = X.distance(static_cast<int>(x), g[x]);
  return d;
}

std::vector<int> ball_displacement(const GraphOfGroups& G, const BallTree& ball, const NormalForm& g) {
  std::vector<int> d;
  d.reserve(ball.vertices.size());
  for (const auto& v : ball.vertices) d.push_back(tree_distance(v, act(G, g, v)));
  return d;
}

}  // namespace

DisplacementData displacement_sets(const FiniteTree& X, const Permutation& g) {
  if (!is_automorphism(X, g)) throw PreconditionError("map is not an automorphism of the tree");
  DisplacementData D;
  D.displacement = perm_displacement(X, g);
  fill_levels(D);
  D.order = order(g);
  std::vector<int> mm;
  Permutation gn = g;
  for (long n = 1; n < *D.order; ++n, gn = compose(g, gn))
    for (int x : minimal_set(perm_displacement(X, gn))) mm.push_back(x);
  D.MM = make_set(std::move(mm));
  return D;
}

int BallTree::index_of(const TreeVertex& v) const {
  auto it = index.find(v.key());
  return it == index.end() ? -1 : it->second;
}

BallTree ball_tree(const GraphOfGroups& G, const TreeVertex& center, int radius, const ExponentWindow& w) {
  BallTree B;
  B.vertices = tree_ball(G, center, radius, w, kBallTreeBudget);
  for (std::size_t i = 0; i < B.vertices.size(); ++i) B.index.emplace(B.vertices[i].key(), static_cast<int>(i));
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < B.vertices.size(); ++i) {
    if (B.vertices[i].depth() == 0) continue;
    const int p = B.index_of(tree_parent(B.vertices[i]));
    if (p >= 0) edges.emplace_back(p, static_cast<int>(i));
  }
  B.tree = FiniteTree(static_cast<int>(B.vertices.size()), edges);
  return B;
}

Permutation ball_permutation(const GraphOfGroups& G, const BallTree& ball, const NormalForm& g) {
  Permutation f;
  f.reserve(ball.vertices.size());
  for (const auto& v : ball.vertices) {
    const int j = ball.index_of(act(G, g, v));
    if (j < 0) throw OutOfBall("element moves " + to_string(G, v) + " outside the ball");
    f.push_back(j);
  }
  return f;
}

DisplacementData displacement_sets(const GraphOfGroups& G, const BallTree& ball, const NormalForm& g, long order_cap) {
  DisplacementData D;
  D.displacement = ball_displacement(G, ball, g);
  fill_levels(D);
  NormalForm gn = g;
  std::vector<NormalForm> powers;
  for (long n = 1; n <= order_cap; ++n, gn = multiply(G, gn, g)) {
    if (gn.is_identity()) {
      D.order = n;
      break;
    }
    powers.push_back(gn);
  }
  if (D.order) {
    std::vector<int> mm;
    for (const auto& p : powers)
      for (int x : minimal_set(ball_displacement(G, ball, p))) mm.push_back(x);
    D.MM = make_set(std::move(mm));
  }
  return D;
}

bool is_convex(const FiniteTree& X, const VertexSet& S) {
  std::vector<char> in(static_cast<std::size_t>(X.size()), 0);
  for (int s : S) in[static_cast<std::size_t>(s)] = 1;
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = i + 1; j < S.size(); ++j)
      for (int v : X.geodesic(S[i], S[j]))
        if (!in[static_cast<std::size_t>(v)]) return false;
  return true;
}

namespace {

ConvexityVerdict sublevel_verdict(const FiniteTree& X, const std::vector<int>& disp, int L) {
  ConvexityVerdict v;
  v.L = L;
  v.min_disp = *std::min_element(disp.begin(), disp.end());
  if (L < v.min_disp) throw PreconditionError("level below the minimal displacement");
  VertexSet S;
  for (std::size_t x = 0; x < disp.size(); ++x)
    if (disp[x] <= L) S.push_back(static_cast<int>(x));
  v.size = S.size();
  v.convex = is_convex(X, S);
  return v;
}

}  // namespace

ConvexityVerdict sublevel_quasiconvex(const FiniteTree& X, const Permutation& g, int L) {
  if (!is_automorphism(X, g)) throw PreconditionError("map is not an automorphism of the tree");
  return sublevel_verdict(X, perm_displacement(X, g), L);
}

ConvexityVerdict sublevel_quasiconvex(const GraphOfGroups& G, const BallTree& ball, const NormalForm& g, int L) {
  return sublevel_verdict(ball.tree, ball_displacement(G, ball, g), L);
}

// ---------------------------------------------------------------------------
// Quotients

std::vector<int> orbit_partition(int n, const std::vector<Permutation>& generators) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != n) throw PreconditionError("generator has the wrong size");
    for (int x = 0; x < n; ++x) {
      const int a = find(x), b = find(g[static_cast<std::size_t>(x)]);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::vector<int> label(static_cast<std::size_t>(n), -1), out(static_cast<std::size_t>(n));
  int next = 0;
  for (int x = 0; x < n; ++x) {
    const int r = find(x);
    if (label[static_cast<std::size_t>(r)] < 0) label[static_cast<std::size_t>(r)] = next++;
    out[static_cast<std::size_t>(x)] = label[static_cast<std::size_t>(r)];
  }
  return out;
}

QuotientReport quotient_by_orbits(const FiniteGraph& X, const std::vector<int>& orbit_of,
                                  const std::vector<Permutation>& generators) {
  const int n = X.size();
  if (!X.connected()) throw PreconditionError("graph must be connected");
  if (static_cast<int>(orbit_of.size()) != n) throw PreconditionError("partition has the wrong size");
  for (const auto& g : generators)
    if (!is_automorphism(X, g)) throw PreconditionError("generator is not a graph automorphism");
  const std::vector<int> canon = orbit_partition(n, generators);
  std::map<int, int> fwd, bwd;
  for (int x = 0; x < n; ++x) {
    const auto [it1, new1] = fwd.emplace(orbit_of[static_cast<std::size_t>(x)], canon[static_cast<std::size_t>(x)]);
    const auto [it2, new2] = bwd.emplace(canon[static_cast<std::size_t>(x)], orbit_of[static_cast<std::size_t>(x)]);
    if (it1->second != canon[static_cast<std::size_t>(x)] || it2->second != orbit_of[static_cast<std::size_t>(x)])
      throw PreconditionError("partition is not the orbit partition of the given action");
  }

  QuotientReport r;
  r.projection = canon;
  const int k = *std::max_element(canon.begin(), canon.end()) + 1;
  std::vector<VertexSet> orbits(static_cast<std::size_t>(k));
  for (int x = 0; x < n; ++x) orbits[static_cast<std::size_t>(canon[static_cast<std::size_t>(x)])].push_back(x);
  std::set<std::pair<int, int>> yedges;
  for (auto [u, v] : X.edges()) {
    const int a = canon[static_cast<std::size_t>(u)], b = canon[static_cast<std::size_t>(v)];
    if (a != b) yedges.insert({std::min(a, b), std::max(a, b)});
  }
  r.Y = FiniteGraph(k, std::vector<std::pair<int, int>>(yedges.begin(), yedges.end()));
  for (const auto& O : orbits)
    for (int a : O)
      for (int b : O) r.max_orbit_diameter = std::max(r.max_orbit_diameter, X.distance(a, b));
  r.C = 1 + r.max_orbit_diameter;
  r.worst_excess = std::numeric_limits<int>::min();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int dy = r.Y.distance(canon[static_cast<std::size_t>(x)], canon[static_cast<std::size_t>(y)]);
      if (dy > X.distance(x, y)) r.distance_nonincreasing = false;
      const int excess = X.set_distance(x, orbits[static_cast<std::size_t>(canon[static_cast<std::size_t>(y)])]) -
                         (r.C * dy + r.C);
      r.worst_excess = std::max(r.worst_excess, excess);
      if (excess > 0) r.quasi_isometric = false;
    }
  return r;
}

// ---------------------------------------------------------------------------
// Random suites

namespace {

using Clock = std::chrono::steady_clock;

struct SuiteRun {
  SuiteSummary s;
  Clock::time_point start = Clock::now();
  void record(bool ok, const std::function<json()>& detail) {
    ++s.instances;
    s.verdicts.push_back(ok);
    if (ok)
      ++s.passed;
    else if (s.failures.size() < 5)
      s.failures.push_back(detail());
  }
  SuiteSummary finish() {
    s.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return s;
  }
};

json instance_json(const SymmetricTree& T) {
  return json{{"kind", T.kind}, {"tree", T.tree.to_json()}, {"f", T.f}};
}

}  // namespace

SuiteSummary lemma34_property_suite(std::uint64_t seed, int count) {
  SuiteRun run;
  run.s.name = "lemma34";
  std::mt19937_64 rng(seed);
  SymmetricTreeOptions opt;
  opt.inversion_probability = 0;
  while (run.s.instances < count) {
    const SymmetricTree T = random_symmetric_tree(rng, opt);
    const int n = T.tree.size();
    bool done = false;
    for (int attempt = 0; attempt < 20 && !done; ++attempt) {
      auto grow = [&](int x) {
        std::vector<int> seedset{x};
        if (std::bernoulli_distribution(0.5)(rng)) {
          const auto& nb = T.tree.neighbors(x);
          if (!nb.empty()) seedset.push_back(nb[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(nb.size()) - 1))]);
        }
        return T.tree.hull(orbit_closure(T.f, make_set(seedset)));
      };
      const VertexSet A = grow(uniform(rng, 0, n - 1));
      const VertexSet B = grow(uniform(rng, 0, n - 1));
      if (T.tree.set_distance(A, B) == 0) continue;
      const int Q = uniform(rng, 0, 2), N = uniform(rng, 1, 4);
      done = true;
      try {
        const Lemma34Report r = lemma34_suite(T.tree, A, B, T.f, Q, N);
        run.record(r.pass(), [&] { return json{{"instance", instance_json(T)}, {"A", A}, {"B", B}, {"report", to_json(r)}}; });
      } catch (const Error& e) {
        run.record(false, [&] { return json{{"instance", instance_json(T)}, {"error", e.what()}}; });
      }
    }
  }
  return run.finish();
}

SuiteSummary pingpong_property_suite(std::uint64_t seed, int count, int max_length) {
  SuiteRun run;
  run.s.name = "pingpong";
  std::mt19937_64 rng(seed);
  std::vector<PingPongSetup> setups{pingpong_setup_G()};
  for (int n = 4; n <= 6; ++n) setups.push_back(pingpong_setup_Gprime(n));
  for (int i = 0; i < count; ++i) {
    const PingPongSetup& P = setups[static_cast<std::size_t>(i % 2 == 1 ? 0 : uniform(rng, 1, 3))];
    const int len = uniform(rng, 1, max_length);
    int side = uniform(rng, 0, 1);
    std::vector<PingPongLetter> w;
    for (int k = 0; k < len; ++k, side = 1 - side) {
      long p = 1;
      if ((side == 0 ? P.order_a : P.order_b) == 0) {
        p = uniform(rng, 1, 3);
        if (std::bernoulli_distribution(0.5)(rng)) p = -p;
      }
      w.push_back({side, p});
    }
    auto word_json = [&] {
      json j = json::array();
      for (const auto& l : w) j.push_back({l.side == 0 ? "A" : "B", l.power});
      return j;
    };
    try {
      const PingPongReport r = pingpong_bound(P, w);
      run.record(r.holds, [&] { return json{{"setup", P.name}, {"word", word_json()}, {"report", to_json(r)}}; });
    } catch (const Error& e) {
      run.record(false, [&] { return json{{"setup", P.name}, {"word", word_json()}, {"error", e.what()}}; });
    }
  }
  return run.finish();
}

SuiteSummary pingpong_exhaustive(const PingPongSetup& P, int max_length, int max_power) {
  SuiteRun run;
  run.s.name = "pingpong-exhaustive " + P.name;
  auto powers = [&](int side) {
    const long ord = side == 0 ? P.order_a : P.order_b;
    std::vector<long> out;
    if (ord == 0) {
      for (long p = 1; p <= max_power; ++p) out.insert(out.end(), {p, -p});
    } else {
      for (long p = 1; p < ord && p <= max_power; ++p) out.push_back(p);
    }
    return out;
  };
  const std::vector<long> pw[2] = {powers(0), powers(1)};
  std::vector<PingPongLetter> w;
  std::function<void(int)> extend = [&](int side) {
    for (long p : pw[side]) {
      w.push_back({side, p});
      try {
        const PingPongReport r = pingpong_bound(P, w);
        run.record(r.holds, [&] { return to_json(r); });
      } catch (const Error& e) {
        run.record(false, [&] { return json{{"error", e.what()}}; });
      }
      if (static_cast<int>(w.size()) < max_length) extend(1 - side);
      w.pop_back();
    }
  };
  extend(0);
  extend(1);
  return run.finish();
}

SuiteSummary convexity_property_suite(std::uint64_t seed, int count) {
  SuiteRun run;
  run.s.name = "sublevel-convexity";
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    const SymmetricTree T = random_symmetric_tree(rng);
    json detail{{"instance", instance_json(T)}};
    bool ok = true;
    try {
      const long ord = order(T.f);
      const long e = uniform(rng, 1, static_cast<int>(std::max(1L, ord)));
      const Permutation g = power(T.f, e);
      const DisplacementData D = displacement_sets(T.tree, g);
      const int L = uniform(rng, D.min_disp, D.max_disp);
      const ConvexityVerdict v = sublevel_quasiconvex(T.tree, g, L);
      detail["power"] = e;
      detail["verdict"] = to_json(v);
      ok = v.convex && is_convex(T.tree, D.M);
      // Finite-order automorphisms fix a vertex once edges are subdivided.
      const Subdivision S = barycentric_subdivision(T.tree, g);
      const VertexSet F = fixed_set(S.f);
      detail["subdivided_fixed"] = F.size();
      ok = ok && !F.empty() && is_convex(S.tree, F);
    } catch (const Error& ex) {
      ok = false;
      detail["error"] = ex.what();
    }
    run.record(ok, [&] { return detail; });
  }
  return run.finish();
}

SuiteSummary quotient_property_suite(std::uint64_t seed, int count) {
  SuiteRun run;
  run.s.name = "quotient-qi";
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    FiniteGraph X;
    std::vector<Permutation> gens;
    json detail;
    if (i % 2 == 0) {
      const SymmetricTree T = random_symmetric_tree(rng);
      X = T.tree;
      gens = {T.f};
      detail = instance_json(T);
    } else {
      // Circulant graph on Z/n acted on by a rotation and possibly x -> -x.
      const int n = uniform(rng, 3, 12);
      std::set<std::pair<int, int>> es;
      std::vector<int> steps{1};
      for (int s = 2; s <= n / 2; ++s)
        if (std::bernoulli_distribution(0.3)(rng)) steps.push_back(s);
      for (int x = 0; x < n; ++x)
        for (int s : steps) {
          const int y = (x + s) % n;
          es.insert({std::min(x, y), std::max(x, y)});
        }
      X = FiniteGraph(n, std::vector<std::pair<int, int>>(es.begin(), es.end()));
      const int r = uniform(rng, 1, n - 1);
      Permutation rot(static_cast<std::size_t>(n)), refl(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) {
        rot[static_cast<std::size_t>(x)] = (x + r) % n;
        refl[static_cast<std::size_t>(x)] = (n - x) % n;
      }
      gens = {rot};
      if (std::bernoulli_distribution(0.3)(rng)) gens.push_back(refl);
      detail = json{{"circulant", n}, {"steps", steps}, {"rotation", r}, {"generators", gens.size()}};
    }
    try {
      const QuotientReport q = quotient_by_orbits(X, orbit_partition(X.size(), gens), gens);
      run.record(q.pass(), [&] { return json{{"instance", detail}, {"report", to_json(q)}}; });
    } catch (const Error& ex) {
      run.record(false, [&] { return json{{"instance", detail}, {"error", ex.what()}}; });
    }
  }
  return run.finish();
}

// ---------------------------------------------------------------------------
// JSON

json to_json(const Lemma34Report& r) {
  return json{{"Q", r.Q},
              {"N", r.N},
              {"gamma_length", r.gamma_length},
              {"gamma", r.gamma},
              {"part1", {{"points", r.part1_points}, {"geodesics", r.part1_geodesics}, {"holds", r.part1}}},
              {"part2", {{"max_displacement", r.part2_max_displacement}, {"bound", 2 * r.Q}, {"holds", r.part2}}},
              {"part3",
               {{"base_points", r.part3_base_points}, {"window_points", r.part3_window_points}, {"holds", r.part3}}},
              {"pass", r.pass()}};
}

json to_json(const PingPongReport& r) {
  return json{{"length", r.length}, {"gamma", r.gamma},       {"L0", r.L0},        {"bound", r.bound},
              {"base", r.base},     {"distance", r.distance}, {"holds", r.holds}};
}

json to_json(const KSeparation& r) {
  return json{{"pairwise", r.pairwise},
              {"terminal", r.terminal},
              {"min_pair_distance", r.min_pair_distance},
              {"min_geodesic_distance", r.min_geodesic_distance},
              {"separated", r.separated()}};
}

json to_json(const DisplacementData& d) {
  json j{{"min_disp", d.min_disp}, {"max_disp", d.max_disp}, {"levels", d.levels}, {"M", d.M}};
  if (d.order) {
    j["order"] = *d.order;
    j["MM"] = d.MM;
  }
  return j;
}

json to_json(const ConvexityVerdict& v) {
  return json{{"L", v.L}, {"min_disp", v.min_disp}, {"size", v.size}, {"convex", v.convex}};
}

json to_json(const QuotientReport& r) {
  return json{{"Y", r.Y.to_json()},
              {"max_orbit_diameter", r.max_orbit_diameter},
              {"C", r.C},
              {"distance_nonincreasing", r.distance_nonincreasing},
              {"quasi_isometric", r.quasi_isometric},
              {"worst_excess", r.worst_excess},
              {"pass", r.pass()}};
}

json to_json(const SuiteSummary& s) {
  return json{{"name", s.name},         {"instances", s.instances}, {"passed", s.passed},
              {"verdicts", s.verdicts}, {"failures", s.failures},   {"seconds", s.seconds},
              {"pass", s.pass()}};
}

}  // namespace gtv
