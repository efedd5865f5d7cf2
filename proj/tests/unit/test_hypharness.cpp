#include <doctest.h>

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "gtv/error.hpp"
#include "gtv/hypharness.hpp"

using namespace gtv;

namespace {

FiniteTree random_tree(std::mt19937_64& rng, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(std::uniform_int_distribution<int>(0, i - 1)(rng), i);
  // Relabel so vertex 0 is not always the root.
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [u, v] : edges) u = perm[u], v = perm[v];
  return FiniteTree(n, edges);
}

// Floyd-Warshall on the edge list.
std::vector<std::vector<int>> floyd(const FiniteGraph& X) {
  const int n = X.size();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : X.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x == inf) x = -1;
  return d;
}

VertexSet brute_hull(const FiniteTree& X, const VertexSet& S) {
  VertexSet out;
  for (int v = 0; v < X.size(); ++v) {
    bool on = false;
    for (int a : S)
      for (int b : S) on = on || X.distance(a, v) + X.distance(v, b) == X.distance(a, b);
    if (on) out.push_back(v);
  }
  return out;
}

bool brute_connected(const FiniteGraph& X, const VertexSet& S) {
  if (S.empty()) return false;
  std::set<int> in(S.begin(), S.end()), seen{S.front()};
  std::deque<int> q{S.front()};
  while (!q.empty()) {
    const int v = q.front();
    q.pop_front();
    for (int u : X.neighbors(v))
      if (in.count(u) && seen.insert(u).second) q.push_back(u);
  }
  return seen.size() == in.size();
}

VertexSet random_subset(std::mt19937_64& rng, int n, int k) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  v.resize(static_cast<std::size_t>(std::min(n, k)));
  return make_set(v);
}

Permutation cycle_rotation(int n, int step) {
  Permutation p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[i] = (i + step) % n;
  return p;
}

FiniteGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return FiniteGraph(n, e);
}

}  // namespace

TEST_CASE("graph construction and distances") {
  CHECK_THROWS_AS(FiniteTree(3, {{0, 1}, {1, 2}, {2, 0}}), PreconditionError);
  CHECK_THROWS_AS(FiniteTree(4, {{0, 1}, {2, 3}}), PreconditionError);
  CHECK_THROWS_AS(FiniteGraph(2, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(FiniteGraph(2, {{0, 5}}), PreconditionError);
  CHECK_FALSE(FiniteGraph(4, {{0, 1}, {2, 3}}).connected());
  CHECK(FiniteGraph(4, {{0, 1}, {2, 3}}).distance(0, 3) == -1);

  std::mt19937_64 rng(1);
  for (int t = 0; t < 30; ++t) {
    const auto X = random_tree(rng, 2 + t);
    const auto d = floyd(X);
    for (int i = 0; i < X.size(); ++i)
      for (int j = 0; j < X.size(); ++j) REQUIRE(X.distance(i, j) == d[i][j]);
    const auto g = X.geodesic(0, X.size() - 1);
    CHECK(static_cast<int>(g.size()) == X.distance(0, X.size() - 1) + 1);
    for (std::size_t i = 0; i + 1 < g.size(); ++i) CHECK(X.adjacent(g[i], g[i + 1]));
  }
  const auto C6 = cycle_graph(6);
  const auto d6 = floyd(C6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(C6.distance(i, j) == d6[i][j]);
  CHECK(C6.set_distance(0, make_set({2, 3})) == 2);
  CHECK(C6.set_distance(make_set({0, 1}), make_set({3, 4})) == 2);
}

TEST_CASE("hull, subtrees and nearest projection") {
  const auto P = FiniteTree::path(4);
  CHECK(nearest_projection(P, 3, make_set({0, 1})) == 1);
  CHECK(nearest_projection(P, 1, make_set({0, 1})) == 1);
  const auto S = FiniteTree::star(3);
  CHECK(nearest_projection(S, 2, make_set({1})) == 1);
  CHECK(nearest_projection(S, 3, make_set({1})) == 1);
  CHECK_THROWS_AS(nearest_projection(P, 3, make_set({0, 2})), PreconditionError);
  CHECK_THROWS_AS(nearest_projection(P, 3, VertexSet{}), PreconditionError);

  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const auto X = random_tree(rng, 3 + t % 25);
    const auto seeds = random_subset(rng, X.size(), 1 + t % 4);
    const auto H = X.hull(seeds);
    REQUIRE(H == brute_hull(X, seeds));
    CHECK(X.is_subtree(H));
    const auto R = random_subset(rng, X.size(), 1 + t % 5);
    CHECK(X.is_subtree(R) == brute_connected(X, R));
    for (int x = 0; x < X.size(); ++x) {
      const int p = nearest_projection(X, x, H);
      int best = 1 << 20, count = 0;
      for (int a : H) best = std::min(best, X.distance(x, a));
      for (int a : H) count += X.distance(x, a) == best;
      CHECK(count == 1);
      CHECK(X.distance(x, p) == best);
      CHECK(std::binary_search(H.begin(), H.end(), p));
    }
  }
}

TEST_CASE("permutation helpers against direct iteration") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + t % 12;
    Permutation f(static_cast<std::size_t>(n));
    std::iota(f.begin(), f.end(), 0);
    std::shuffle(f.begin(), f.end(), rng);
    long k = 1;
    Permutation g = f;
    Permutation id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    while (g != id) g = compose(f, g), ++k;
    CHECK(order(f) == k);
    CHECK(power(f, k) == id);
    CHECK(power(f, -1) == power(f, k - 1));
    CHECK(compose(f, power(f, -1)) == id);
    VertexSet fixed;
    for (int i = 0; i < n; ++i)
      if (f[i] == i) fixed.push_back(i);
    CHECK(fixed_set(f) == fixed);
    const VertexSet seed{0};
    std::set<int> orbit;
    for (int i = 0, x = 0; i < k; ++i, x = f[x]) orbit.insert(x);
    CHECK(orbit_closure(f, seed) == VertexSet(orbit.begin(), orbit.end()));
    CHECK(image(f, seed) == VertexSet{f[0]});
  }
  const auto P = FiniteTree::path(4);
  CHECK(is_automorphism(P, {3, 2, 1, 0}));
  CHECK_FALSE(is_automorphism(P, {1, 0, 2, 3}));
  CHECK_FALSE(is_automorphism(P, {0, 0, 1, 2}));
}

TEST_CASE("random symmetric trees and barycentric subdivision") {
  std::mt19937_64 rng(4);
  int inversions = 0;
  for (int t = 0; t < 200; ++t) {
    const auto T = random_symmetric_tree(rng);
    REQUIRE(is_automorphism(T.tree, T.f));
    if (T.kind == "inversion") {
      ++inversions;
      CHECK(fixed_set(T.f).empty());
    }
    const auto sub = barycentric_subdivision(T.tree, T.f);
    CHECK(sub.tree.size() == T.tree.size() + static_cast<int>(T.tree.edges().size()));
    REQUIRE(is_automorphism(sub.tree, sub.f));
    for (int v = 0; v < T.tree.size(); ++v) CHECK(sub.f[v] == T.f[v]);
    const auto fixed = fixed_set(sub.f);
    CHECK_FALSE(fixed.empty());
    CHECK(sub.tree.is_subtree(fixed));
    for (long n = 2; n < order(sub.f); ++n) CHECK_FALSE(fixed_set(power(sub.f, n)).empty());
  }
  CHECK(inversions > 10);
}

TEST_CASE("projection lemma on finite trees") {
  SUBCASE("identity") {
    const auto X = FiniteTree::path(7);
    Permutation id(7);
    std::iota(id.begin(), id.end(), 0);
    const auto r = lemma34_suite(X, make_set({0, 1}), make_set({5, 6}), id, 0);
    CHECK(r.pass());
    CHECK(r.part2_max_displacement == 0);
    CHECK(r.gamma_length == 4);
  }
  SUBCASE("preconditions") {
    const auto X = FiniteTree::path(5);
    const Permutation flip{4, 3, 2, 1, 0};
    CHECK_THROWS_AS(lemma34_suite(X, make_set({0}), make_set({4}), flip, 0), PreconditionError);
    Permutation id{0, 1, 2, 3, 4};
    CHECK_THROWS_AS(lemma34_suite(X, make_set({0, 1}), make_set({1, 2}), id, 0), PreconditionError);
    CHECK_THROWS_AS(lemma34_suite(X, make_set({0, 2}), make_set({4}), id, 0), PreconditionError);
    CHECK_THROWS_AS(lemma34_suite(X, make_set({0}), make_set({4}), {1, 0, 2, 3, 4}, 0), PreconditionError);
  }
  SUBCASE("bridge displacement recomputed") {
    std::mt19937_64 rng(5);
    int tested = 0;
    for (int t = 0; t < 300 && tested < 60; ++t) {
      const auto T = random_symmetric_tree(rng);
      if (T.kind != "hub") continue;
      const int n = T.tree.size();
      const auto A = T.tree.hull(orbit_closure(T.f, VertexSet{std::uniform_int_distribution<int>(0, n - 1)(rng)}));
      const auto B = T.tree.hull(orbit_closure(T.f, VertexSet{std::uniform_int_distribution<int>(0, n - 1)(rng)}));
      VertexSet common;
      std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(common));
      if (!common.empty()) continue;
      ++tested;
      int a = -1, b = -1, best = 1 << 20;
      for (int x : A)
        for (int y : B)
          if (T.tree.distance(x, y) < best) best = T.tree.distance(x, y), a = x, b = y;
      int disp = 0;
      for (int x : T.tree.geodesic(a, b)) disp = std::max(disp, T.tree.distance(x, T.f[x]));
      for (int Q = 0; Q <= 2; ++Q) {
        const auto r = lemma34_suite(T.tree, A, B, T.f, Q);
        CHECK(r.pass());
        CHECK(r.gamma_length == best);
        CHECK(r.part2_max_displacement == disp);
        CHECK(r.part2_max_displacement <= 2 * Q);
      }
    }
    CHECK(tested >= 20);
  }
}

TEST_CASE("ping-pong bounds") {
  const auto P = pingpong_setup_Gprime(5);
  CHECK(P.L0() == 4);
  const auto one = pingpong_bound(P, {{0, 1}});
  CHECK(one.length == 1);
  CHECK(one.bound == one.gamma - 2 * one.L0);
  CHECK(one.holds);
  const std::vector<PingPongLetter> w4{{0, 1}, {1, -2}, {0, 3}, {1, 1}};
  const auto r = pingpong_bound(P, w4);
  CHECK(r.holds);
  CHECK(r.base == "A");
  CHECK(r.bound == 4L * (r.gamma - 2 * r.L0));
  CHECK(r.gamma == tree_distance(P.A, P.B));

  GroupWord word;
  for (auto it = w4.begin(); it != w4.end(); ++it) {
    const GroupWord& g = it->side == 0 ? P.gen_a : P.gen_b;
    for (long k = 0; k < std::abs(it->power); ++k) {
      const GroupWord piece = it->power > 0 ? g : inverse_word(P.G, g);
      word.insert(word.end(), piece.begin(), piece.end());
    }
  }
  CHECK(r.distance == tree_distance(P.A, act(P.G, word, P.A)));

  const auto tail_a = pingpong_bound(P, {{1, 1}, {0, 1}});
  CHECK(tail_a.base == "B");

  CHECK_THROWS_AS(pingpong_bound(P, {{0, 1}, {0, 2}}), PreconditionError);
  CHECK_THROWS_AS(pingpong_bound(P, {{0, 0}}), PreconditionError);
  CHECK(pingpong_bound(P, {}).distance == 0);
  CHECK_THROWS_AS(pingpong_bound(P, w4, 5), OutOfBall);

  const auto Q = pingpong_setup_G();
  CHECK(Q.order_a == 2);
  const auto g4 = pingpong_bound(Q, {{0, 1}, {1, 1}, {0, 1}, {1, 1}});
  CHECK(g4.holds);
  CHECK(g4.bound < 0);
  CHECK_THROWS_AS(pingpong_bound(Q, {{0, 2}}), PreconditionError);

  const auto ex = pingpong_exhaustive(pingpong_setup_Gprime(4), 4, 2);
  CHECK(ex.pass());
  CHECK(ex.instances > 100);
}

TEST_CASE("K-separation") {
  const auto S = FiniteTree::star(3);
  const auto three = k_separated_check(S, {make_set({1}), make_set({2}), make_set({3})}, 1);
  CHECK(three.separated());
  CHECK(three.min_pair_distance == 2);
  CHECK_FALSE(k_separated_check(S, {make_set({0, 1}), make_set({0, 2})}, 1).pairwise);
  const auto P = FiniteTree::path(5);
  const auto line = k_separated_check(P, {make_set({0}), make_set({2}), make_set({4})}, 1);
  CHECK(line.pairwise);
  CHECK_FALSE(line.terminal);
  CHECK_FALSE(line.separated());
  CHECK(line.min_geodesic_distance == 0);
}

TEST_CASE("displacement sets on finite trees") {
  SUBCASE("identity") {
    const auto X = FiniteTree::path(5);
    const auto d = displacement_sets(X, {0, 1, 2, 3, 4});
    CHECK(d.min_disp == 0);
    CHECK(d.M.size() == 5);
    CHECK(d.order == 1);
  }
  SUBCASE("star rotation of order 2") {
    const auto X = FiniteTree::star(4);
    const Permutation f{0, 2, 1, 3, 4};
    const auto v = sublevel_quasiconvex(X, f, 0);
    CHECK(v.convex);
    CHECK(v.size == 3);
    CHECK_THROWS_AS(sublevel_quasiconvex(X, {0, 2, 1, 4, 3}, -1), PreconditionError);
    const auto d = displacement_sets(X, f);
    CHECK(d.M == make_set({0, 3, 4}));
    CHECK(d.order == 2);
    CHECK(d.MM == d.M);
  }
  SUBCASE("levels against direct computation") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 80; ++t) {
      const auto T = random_symmetric_tree(rng);
      const auto d = displacement_sets(T.tree, T.f);
      int mn = 1 << 20;
      for (int x = 0; x < T.tree.size(); ++x) {
        CHECK(d.displacement[x] == T.tree.distance(x, T.f[x]));
        mn = std::min(mn, d.displacement[x]);
      }
      CHECK(d.min_disp == mn);
      for (int L = 0; L < static_cast<int>(d.levels.size()); ++L) {
        VertexSet expect;
        for (int x = 0; x < T.tree.size(); ++x)
          if (d.displacement[x] <= L) expect.push_back(x);
        CHECK(d.levels[L] == expect);
        CHECK(is_convex(T.tree, d.levels[L]));
      }
      CHECK(d.M == d.levels[d.min_disp]);
      CHECK(d.order == order(T.f));
    }
  }
}

TEST_CASE("displacement sets on the Bass-Serre ball") {
  const auto G = GraphOfGroups::fixture_Gprime();
  CHECK_THROWS_AS(ball_tree(G, base_vertex(G, 0), 8, ExponentWindow{-3, 3}), BudgetExceeded);
  const auto ball = ball_tree(G, base_vertex(G, 0), 6, ExponentWindow{0, 1});
  const auto ts = reduce(G, {G.generator("t"), G.generator("s")});
  const auto d = displacement_sets(G, ball, ts);
  CHECK(d.min_disp == 2);
  CHECK_FALSE(d.order.has_value());
  for (int x = 0; x < ball.tree.size(); ++x)
    CHECK(d.displacement[x] == tree_distance(ball.vertices[x], act(G, ts, ball.vertices[x])));
  const auto ray = ray_vertices(G, 4);
  CHECK(std::binary_search(d.M.begin(), d.M.end(), ball.index_of(ray[0])));
  CHECK(std::binary_search(d.M.begin(), d.M.end(), ball.index_of(ray[2])));
  for (int L = d.min_disp; L < static_cast<int>(d.levels.size()); ++L) CHECK(is_convex(ball.tree, d.levels[L]));
  CHECK_THROWS_AS(ball_permutation(G, ball, ts), OutOfBall);
  CHECK_THROWS_AS(sublevel_quasiconvex(G, ball, ts, 1), PreconditionError);
  CHECK(sublevel_quasiconvex(G, ball, ts, 2).convex);

  const auto a = reduce(G, {G.generator("a")});
  const auto pa = ball_permutation(G, ball, a);
  CHECK(is_automorphism(ball.tree, pa));
  const auto da = displacement_sets(G, ball, a);
  CHECK(da.min_disp == 0);
  CHECK(da.order == 2);
  CHECK(sublevel_quasiconvex(G, ball, a, 0).convex);
  CHECK(ball.index_of(base_vertex(G, 0)) >= 0);
}

TEST_CASE("orbit quotients") {
  SUBCASE("trivial group keeps distances") {
    const auto X = FiniteTree::path(5);
    const auto r = quotient_by_orbits(X, orbit_partition(5, {}), {});
    CHECK(r.Y.size() == 5);
    CHECK(r.pass());
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) CHECK(r.Y.distance(r.projection[i], r.projection[j]) == X.distance(i, j));
  }
  SUBCASE("leaf swap on a two-leaf star") {
    const auto X = FiniteTree::star(2);
    const Permutation f{0, 2, 1};
    const auto r = quotient_by_orbits(X, orbit_partition(3, {f}), {f});
    CHECK(r.Y.size() == 2);
    CHECK(r.Y.edges().size() == 1);
    CHECK(r.C == 3);
    CHECK(r.pass());
  }
  SUBCASE("antipodal map of a hexagon") {
    const auto X = cycle_graph(6);
    const auto f = cycle_rotation(6, 3);
    const auto r = quotient_by_orbits(X, orbit_partition(6, {f}), {f});
    CHECK(r.Y.size() == 3);
    CHECK(r.Y.edges().size() == 3);
    CHECK(r.C == 4);
    CHECK(r.pass());
  }
  SUBCASE("invalid input") {
    const auto X = FiniteTree::path(3);
    CHECK_THROWS_AS(quotient_by_orbits(X, {0, 1, 2}, {{1, 0, 2}}), PreconditionError);
    CHECK_THROWS_AS(quotient_by_orbits(X, {0, 0, 1}, {{2, 1, 0}}), PreconditionError);
  }
  SUBCASE("inequalities recomputed on random instances") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
      const auto T = random_symmetric_tree(rng);
      const auto orbit = orbit_partition(T.tree.size(), {T.f});
      const auto r = quotient_by_orbits(T.tree, orbit, {T.f});
      CHECK(r.pass());
      std::map<int, VertexSet> members;
      for (int x = 0; x < T.tree.size(); ++x) members[r.projection[x]].push_back(x);
      int diam = 0;
      for (const auto& [id, m] : members)
        for (int x : m)
          for (int y : m) diam = std::max(diam, T.tree.distance(x, y));
      CHECK(r.max_orbit_diameter == diam);
      CHECK(r.C == diam + 1);
      for (int x = 0; x < T.tree.size(); ++x)
        for (int y = 0; y < T.tree.size(); ++y) {
          const int dy = r.Y.distance(r.projection[x], r.projection[y]);
          CHECK(dy <= T.tree.distance(x, y));
          CHECK(T.tree.set_distance(x, members[r.projection[y]]) <= r.C * dy + r.C);
        }
    }
  }
}

TEST_CASE("seeded property suites") {
  const auto a = lemma34_property_suite(11, 200);
  const auto b = pingpong_property_suite(11, 200);
  const auto c = convexity_property_suite(11, 200);
  const auto d = quotient_property_suite(11, 200);
  for (const auto* s : {&a, &b, &c, &d}) {
    INFO(s->name);
    CHECK(s->instances == 200);
    CHECK(s->pass());
    CHECK(s->verdicts.size() == 200);
  }
  const auto again = lemma34_property_suite(11, 200);
  CHECK(again.verdicts == a.verdicts);
  CHECK(to_json(a).at("instances") == 200);
}

TEST_CASE("json reports") {
  const auto X = FiniteTree::path(3);
  CHECK(X.to_json().at("vertices") == 3);
  CHECK(to_json(k_separated_check(X, {make_set({0}), make_set({2})}, 1)).contains("pairwise"));
  CHECK(to_json(displacement_sets(X, {2, 1, 0})).contains("min_disp"));
  CHECK(to_json(pingpong_bound(pingpong_setup_G(), {{0, 1}})).contains("bound"));
}
