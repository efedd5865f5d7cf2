#include <doctest.h>

#include <deque>
#include <random>
#include <unordered_map>

#include "../oracles/normal_form_oracle.hpp"
#include "gtv/bassserre.hpp"
#include "gtv/error.hpp"

using namespace gtv;

namespace {

// Breadth-first distances inside an enumerated ball, using only neighbour
// lists; independent of the syllable-prefix formula in tree_distance.
std::unordered_map<std::string, int> bfs_distances(const GraphOfGroups& G, const std::vector<TreeVertex>& ball,
                                                   const TreeVertex& from) {
  std::unordered_map<std::string, const TreeVertex*> in_ball;
  for (const auto& v : ball) in_ball.emplace(v.key(), &v);
  std::unordered_map<std::string, int> dist{{from.key(), 0}};
  std::deque<TreeVertex> queue{from};
  while (!queue.empty()) {
    const TreeVertex cur = queue.front();
    queue.pop_front();
    const int d = dist.at(cur.key());
    std::vector<TreeVertex> nbs = tree_neighbors(G, cur, ExponentWindow{0, 1});
    if (cur.depth() > 0) nbs.push_back(tree_parent(cur));
    for (auto& nb : nbs) {
      const auto k = nb.key();
      if (!in_ball.count(k) || dist.count(k)) continue;
      dist.emplace(k, d + 1);
      queue.push_back(nb);
    }
  }
  return dist;
}

NormalForm element(const GraphOfGroups& G, const GroupWord& w) { return reduce(G, w); }

GroupWord random_word(const GraphOfGroups& G, std::mt19937_64& rng, int max_len) {
  const auto letters = oracle::generator_letters(G, 2);
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  GroupWord w;
  for (int i = len(rng); i > 0; --i) w.push_back(letters[pick(rng)]);
  return w;
}

}  // namespace

TEST_CASE("graph of groups validation and json") {
  CHECK_THROWS_AS(GraphOfGroups({{{1}, {"a"}}}, {}), PreconditionError);
  CHECK_THROWS_AS(GraphOfGroups({{{2}, {"a"}}, {{3}, {"b"}}}, {{{0}, {0}}}), PreconditionError);
  CHECK_THROWS_AS(GraphOfGroups({{{2}, {"a"}}, {{2}, {"b"}}}, {}), PreconditionError);
  CHECK_THROWS_AS(GraphOfGroups({{{2, 0}, {"a"}}}, {}), PreconditionError);
  const auto G = GraphOfGroups::fixture_Gprime();
  const auto H = GraphOfGroups::from_json(G.to_json());
  CHECK(H.to_json() == G.to_json());
  CHECK_THROWS_AS(G.generator("z"), PreconditionError);
  CHECK_THROWS_AS(reduce(G, {Syllable{5, {}}}), PreconditionError);
}

TEST_CASE("reduction examples") {
  const auto G = GraphOfGroups::fixture_Gprime();
  CHECK(element(G, {G.generator("a"), G.generator("a")}).is_identity());
  const Syllable a = G.generator(0, "a"), b = G.generator(2, "b");
  CHECK(element(G, {a, b, G.generator(0, "a", -1), G.generator(2, "b", -1)}).is_identity());
  const auto sts = element(G, {G.generator("s"), G.generator("t"), G.generator("s")});
  REQUIRE(sts.syllables.size() == 3);
  CHECK(sts.syllables[0].vertex == 0);
  CHECK(sts.syllables[1].vertex == 1);
  CHECK(sts.syllables[2].vertex == 0);
  CHECK(element(G, {G.generator(0, "a")}) == element(G, {G.generator(1, "a")}));
  CHECK(element(G, {G.generator(2, "b")}) == element(G, {G.generator(1, "b")}));
  CHECK(identity_element().is_identity());
  CHECK(element(G, {}).is_identity());

  const auto x = element(G, {G.generator("s", 2), G.generator("t", -1), b});
  CHECK(multiply(G, x, inverse(G, x)).is_identity());
  CHECK(multiply(G, inverse(G, x), x).is_identity());
}

TEST_CASE("distances against breadth-first search") {
  const auto G = GraphOfGroups::fixture_Gprime();
  const TreeVertex v = base_vertex(G, 0), x = base_vertex(G, 1), w = base_vertex(G, 2);
  CHECK(tree_distance(v, w) == 2);
  CHECK(tree_distance(v, v) == 0);
  CHECK(tree_distance(v, x) == 1);
  const auto ball = tree_ball(G, v, 9, ExponentWindow{0, 1});
  const TreeVertex u6 = ray_vertices(G, 6).back();
  const auto from_w = bfs_distances(G, ball, w);
  REQUIRE(from_w.count(u6.key()));
  CHECK(from_w.at(u6.key()) == 7);
  CHECK(tree_distance(w, u6) == 7);

  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  for (int t = 0; t < 6; ++t) {
    const TreeVertex& src = ball[pick(rng)];
    const auto dist = bfs_distances(G, ball, src);
    for (const auto& u : ball) {
      const auto it = dist.find(u.key());
      REQUIRE(it != dist.end());
      CHECK(tree_distance(src, u) == it->second);
    }
  }
}

TEST_CASE("action examples and stabilizers") {
  const auto G = GraphOfGroups::fixture_Gprime();
  const TreeVertex v = base_vertex(G, 0), w = base_vertex(G, 2);
  CHECK(act(G, identity_element(), v) == v);
  CHECK(stabilizes(G, element(G, {G.generator("a")}), v));
  CHECK_FALSE(stabilizes(G, element(G, {G.generator("t")}), v));
  const auto ray = ray_vertices(G, 20);
  CHECK_FALSE(stabilizes(G, element(G, {G.generator(2, "b")}), ray[1]));
  for (int n = 1; n <= 10; ++n) {
    GroupWord conj = ray_word(G, 2 * n);
    conj.push_back(G.generator("a"));
    const auto back = inverse_word(G, ray_word(G, 2 * n));
    conj.insert(conj.end(), back.begin(), back.end());
    CHECK(stabilizes(G, element(G, conj), ray[2 * n]));
  }
  for (const auto& u : ray) {
    CHECK(stabilizes(G, element(G, {G.generator("a")}), u));
    CHECK(stabilizes(G, identity_element(), u));
  }
  CHECK(stabilizes(G, identity_element(), w));
}

TEST_CASE("ray vertices") {
  const auto G = GraphOfGroups::fixture_Gprime();
  const TreeVertex v = base_vertex(G, 0), x = base_vertex(G, 1);
  const auto r0 = ray_vertices(G, 0);
  REQUIRE(r0.size() == 1);
  CHECK(r0[0] == x);
  const auto r2 = ray_vertices(G, 2);
  REQUIRE(r2.size() == 3);
  CHECK(r2[1] == act(G, GroupWord{G.generator("t")}, v));
  CHECK(r2[2] == act(G, GroupWord{G.generator("t"), G.generator("s")}, x));
  const auto r10 = ray_vertices(G, 10);
  for (std::size_t i = 0; i + 1 < r10.size(); ++i) CHECK(tree_distance(r10[i], r10[i + 1]) == 1);
  for (std::size_t i = 0; i < r10.size(); ++i) CHECK(tree_distance(r10[0], r10[i]) == static_cast<int>(i));
  CHECK_THROWS_AS(ray_vertices(GraphOfGroups::fixture_G(), 2), PreconditionError);
  CHECK_THROWS_AS(ray_vertices(G, -1), PreconditionError);
}

TEST_CASE("edge stabilizers along the ray are {1, a}") {
  const auto G = GraphOfGroups::fixture_Gprime();
  const auto elements = cayley_ball(G, standard_generators(G), 4, 200000);
  const auto ray = ray_vertices(G, 10);
  const auto a = element(G, {G.generator("a")});
  for (std::size_t i = 0; i + 1 < ray.size(); ++i) {
    std::vector<NormalForm> fixers;
    for (const auto& g : elements)
      if (stabilizes(G, g, ray[i]) && stabilizes(G, g, ray[i + 1])) fixers.push_back(g);
    CHECK(fixers.size() == 2);
    bool has_one = false, has_a = false;
    for (const auto& g : fixers) {
      has_one = has_one || g.is_identity();
      has_a = has_a || g == a;
    }
    CHECK(has_one);
    CHECK(has_a);
  }
}

TEST_CASE("common stabilizer of the base vertices") {
  for (const bool gprime : {true, false}) {
    const auto G = gprime ? GraphOfGroups::fixture_Gprime() : GraphOfGroups::fixture_G();
    const TreeVertex v = base_vertex(G, 0), w = base_vertex(G, 2);
    for (const auto& g : cayley_ball(G, standard_generators(G), 4, 200000))
      if (stabilizes(G, g, v) && stabilizes(G, g, w)) CHECK(g.is_identity());
  }
}

TEST_CASE("the action is isometric") {
  const auto G = GraphOfGroups::fixture_Gprime();
  const auto ball = tree_ball(G, base_vertex(G, 0), 6, ExponentWindow{-1, 1});
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  for (int t = 0; t < 200; ++t) {
    const auto g = reduce(G, random_word(G, rng, 6));
    const auto& u = ball[pick(rng)];
    const auto& v = ball[pick(rng)];
    REQUIRE(tree_distance(act(G, g, u), act(G, g, v)) == tree_distance(u, v));
  }
}

TEST_CASE("action is compatible with multiplication") {
  const auto G = GraphOfGroups::fixture_Gprime();
  const auto ball = tree_ball(G, base_vertex(G, 0), 5, ExponentWindow{0, 1});
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  for (int t = 0; t < 200; ++t) {
    const auto g = reduce(G, random_word(G, rng, 4));
    const auto h = reduce(G, random_word(G, rng, 4));
    const auto& u = ball[pick(rng)];
    REQUIRE(act(G, multiply(G, g, h), u) == act(G, g, act(G, h, u)));
  }
}

TEST_CASE("ray stabilizers and commutator witness on G'") {
  const auto G = GraphOfGroups::fixture_Gprime();
  const auto rep = theorem41_verify(G, 10);
  CHECK(rep.pass);
  CHECK(rep.base_distance_two);
  CHECK(rep.ray_steps_unit);
  REQUIRE(rep.rows.size() == 10);
  int prev = -1;
  for (const auto& row : rep.rows) {
    CHECK(row.pass());
    CHECK(row.distance >= row.n);
    CHECK(row.distance > prev);
    prev = row.distance;
  }
  const auto empty = theorem41_verify(G, 0);
  CHECK(empty.rows.empty());
  CHECK(empty.pass);
  CHECK(to_json(rep).at("rows").size() == 10);
}

TEST_CASE("first example on G") {
  const auto G = GraphOfGroups::fixture_G();
  const auto rep = first_example_verify(G);
  CHECK(rep.pass);
  CHECK(rep.distance_vw == 2);
  CHECK(rep.commutator_trivial);
  CHECK(tree_ball(G, base_vertex(G, 1), 10, ExponentWindow{0, 1}).size() == 5);
}

TEST_CASE("cayley ball and mover counts") {
  const auto G = GraphOfGroups::fixture_G();
  CHECK(cayley_ball(G, standard_generators(G), 6, 1000).size() == 4);
  const auto Gp = GraphOfGroups::fixture_Gprime();
  CHECK_THROWS_AS(cayley_ball(Gp, standard_generators(Gp), 8, 100), BudgetExceeded);
  const auto elements = cayley_ball(Gp, standard_generators(Gp), 3, 200000);
  const TreeVertex v = base_vertex(Gp, 0);
  long fixers = 0;
  for (const auto& g : elements) fixers += stabilizes(Gp, g, v) ? 1 : 0;
  CHECK(mover_count(Gp, elements, v, v, 0) == fixers);
  const auto ray = ray_vertices(Gp, 8);
  CHECK(mover_count(Gp, elements, ray[0], ray[8], 0) == 2);
}

TEST_CASE("acylindricity on a small ball") {
  const auto G = GraphOfGroups::fixture_Gprime();
  for (int R : {0, 1}) {
    const auto rep = acylindricity_check(G, R, 5, 4);
    CHECK(rep.L == 4 * R + 4);
    CHECK(rep.bound == (2 * R + 1) * 2);
    CHECK(rep.far_pairs > 0);
    CHECK(rep.max_count <= rep.bound);
    CHECK(rep.axis_max_count <= rep.bound);
    CHECK(rep.pass);
  }
  CHECK_THROWS_AS(acylindricity_check(G, -1, 5, 4), PreconditionError);
}

TEST_CASE("normal forms agree with the action and the group model") {
  for (const bool gprime : {false, true}) {
    const auto G = gprime ? GraphOfGroups::fixture_Gprime() : GraphOfGroups::fixture_G();
    const int len = gprime ? 3 : 4;
    const auto rep = oracle::normal_form_oracle(G, gprime, len, 2, 10);
    INFO(rep.first_discrepancy);
    CHECK(rep.action_discrepancies == 0);
    CHECK(rep.model_discrepancies == 0);
    CHECK(rep.elements > 1);
  }
}

TEST_CASE("the oracle detects a broken normal form") {
  const auto G = GraphOfGroups::fixture_Gprime();
  const GroupWord s = {G.generator("s")}, st = {G.generator("s"), G.generator("t")};
  const auto ball = tree_ball(G, base_vertex(G, 0), 4, ExponentWindow{0, 1});
  CHECK_FALSE(oracle::same_action(G, s, st, ball));
  CHECK(oracle::model_key(s, true) != oracle::model_key(st, true));
  CHECK(oracle::model_key({G.generator(1, "b")}, true) == oracle::model_key({G.generator(2, "b")}, true));
  CHECK(oracle::model_key({G.generator("a"), G.generator("a")}, true) == oracle::model_key({}, true));
}
