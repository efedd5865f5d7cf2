#include "gtv/bassserre.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "gtv/error.hpp"
#include "gtv/kernels/bitset_ops.hpp"

namespace gtv {

namespace {

long mod_order(long x, long n) {
  if (n == 0) return x;
  long r = x % n;
  return r < 0 ? r + n : r;
}

}  // namespace

GraphOfGroups::GraphOfGroups(std::vector<AbelianGroupSpec> vertices, std::vector<EdgeSpec> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) throw PreconditionError("graph of groups needs a vertex");
  if (edges_.size() + 1 != vertices_.size()) throw PreconditionError("a path with n vertices has n-1 edges");
  for (const auto& g : vertices_) {
    if (g.orders.size() != g.names.size()) throw PreconditionError("factor orders and names differ in length");
    if (g.orders.size() > kMaxFactors) throw PreconditionError("too many cyclic factors in a vertex group");
    for (long o : g.orders)
      if (o != 0 && o < 2) throw PreconditionError("factor orders are 0 (infinite) or at least 2");
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& E = edges_[e];
    if (E.left.size() != E.right.size()) throw PreconditionError("edge factor lists differ in length");
    for (std::size_t k = 0; k < E.left.size(); ++k) {
      const auto& L = vertices_[e].orders;
      const auto& R = vertices_[e + 1].orders;
      if (E.left[k] < 0 || E.left[k] >= static_cast<int>(L.size()) || E.right[k] < 0 ||
          E.right[k] >= static_cast<int>(R.size()))
        throw PreconditionError("edge factor index out of range");
      if (L[E.left[k]] != R[E.right[k]]) throw PreconditionError("identified edge factors have different orders");
    }
  }
}

GraphOfGroups GraphOfGroups::from_json(const json& j) {
  std::vector<AbelianGroupSpec> vs;
  for (const auto& g : j.at("vertex_groups")) {
    AbelianGroupSpec s{g.at("orders").get<std::vector<long>>(), {}};
    if (g.contains("names")) {
      s.names = g.at("names").get<std::vector<std::string>>();
    } else {
      for (std::size_t k = 0; k < s.orders.size(); ++k) s.names.push_back("g" + std::to_string(k));
    }
    vs.push_back(std::move(s));
  }
  std::vector<EdgeSpec> es;
  for (const auto& e : j.at("edges")) es.push_back({e.at("left").get<std::vector<int>>(), e.at("right").get<std::vector<int>>()});
  return GraphOfGroups(std::move(vs), std::move(es));
}

json GraphOfGroups::to_json() const {
  json vs = json::array(), es = json::array();
  for (const auto& g : vertices_) vs.push_back(json{{"orders", g.orders}, {"names", g.names}});
  for (const auto& e : edges_) es.push_back(json{{"left", e.left}, {"right", e.right}});
  return json{{"vertex_groups", vs}, {"edges", es}};
}

GraphOfGroups GraphOfGroups::fixture_G() {
  return GraphOfGroups({{{2}, {"a"}}, {{2, 2}, {"a", "b"}}, {{2}, {"b"}}}, {{{0}, {0}}, {{1}, {0}}});
}

GraphOfGroups GraphOfGroups::fixture_Gprime() {
  return GraphOfGroups({{{2, 0}, {"a", "s"}}, {{2, 2, 0}, {"a", "b", "t"}}, {{2}, {"b"}}}, {{{0}, {0}}, {{1}, {0}}});
}

Exponents GraphOfGroups::reduce_exps(int v, Exponents e) const {
  const auto& o = group(v).orders;
  for (std::size_t k = 0; k < kMaxFactors; ++k) e[k] = k < o.size() ? mod_order(e[k], o[k]) : 0;
  return e;
}

Exponents GraphOfGroups::add(int v, const Exponents& x, const Exponents& y) const {
  Exponents z{};
  for (std::size_t k = 0; k < kMaxFactors; ++k) z[k] = x[k] + y[k];
  return reduce_exps(v, z);
}

Exponents GraphOfGroups::negate(int v, const Exponents& x) const {
  Exponents z{};
  for (std::size_t k = 0; k < kMaxFactors; ++k) z[k] = -x[k];
  return reduce_exps(v, z);
}

bool GraphOfGroups::is_trivial(int, const Exponents& x) const {
  return std::all_of(x.begin(), x.end(), [](long e) { return e == 0; });
}

bool GraphOfGroups::edge_factor(int v, int f, int toward) const {
  if (toward == v + 1) {
    const auto& l = edges_[static_cast<std::size_t>(v)].left;
    return std::find(l.begin(), l.end(), f) != l.end();
  }
  if (toward == v - 1) {
    const auto& r = edges_[static_cast<std::size_t>(toward)].right;
    return std::find(r.begin(), r.end(), f) != r.end();
  }
  throw PreconditionError("vertices are not adjacent");
}

std::pair<Exponents, Exponents> GraphOfGroups::split(int v, const Exponents& x, int toward) const {
  Exponents t = x, h{};
  const bool up = toward == v + 1;
  if (!up && toward != v - 1) throw PreconditionError("vertices are not adjacent");
  const EdgeSpec& E = edges_[static_cast<std::size_t>(up ? v : toward)];
  const auto& mine = up ? E.left : E.right;
  const auto& theirs = up ? E.right : E.left;
  for (std::size_t k = 0; k < mine.size(); ++k) {
    h[static_cast<std::size_t>(theirs[k])] = x[static_cast<std::size_t>(mine[k])];
    t[static_cast<std::size_t>(mine[k])] = 0;
  }
  return {t, reduce_exps(toward, h)};
}

Syllable GraphOfGroups::generator(int v, const std::string& name, long power) const {
  const auto& names = group(v).names;
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw PreconditionError("vertex group " + std::to_string(v) + " has no generator " + name);
  Syllable s{v, {}};
  s.exps[static_cast<std::size_t>(it - names.begin())] = power;
  s.exps = reduce_exps(v, s.exps);
  return s;
}

Syllable GraphOfGroups::generator(const std::string& name, long power) const {
  for (int v = 0; v < vertex_count(); ++v) {
    const auto& names = group(v).names;
    if (std::find(names.begin(), names.end(), name) != names.end()) return generator(v, name, power);
  }
  throw PreconditionError("no vertex group has a generator named " + name);
}

std::string GraphOfGroups::syllable_str(const Syllable& s) const {
  const auto& g = group(s.vertex);
  std::string out;
  for (std::size_t k = 0; k < g.orders.size(); ++k) {
    if (s.exps[k] == 0) continue;
    if (!out.empty()) out += " ";
    out += g.names[k];
    if (s.exps[k] != 1) out += "^" + std::to_string(s.exps[k]);
  }
  return out.empty() ? "1" : out;
}

namespace {

// Right multiplication on a partial normal form held as a stack of syllables.
class Walker {
 public:
  explicit Walker(const GraphOfGroups& G) : G_(G) { st_.push_back(Syllable{0, {}}); }

  void multiply(const Syllable& s) {
    if (s.vertex < 0 || s.vertex >= G_.vertex_count()) throw PreconditionError("syllable vertex out of range");
    walk_to(s.vertex);
    st_.back().exps = G_.add(s.vertex, st_.back().exps, G_.reduce_exps(s.vertex, s.exps));
  }

  void walk_to(int target) {
    while (st_.back().vertex != target) step(st_.back().vertex < target ? st_.back().vertex + 1 : st_.back().vertex - 1);
  }

  std::vector<Syllable> take() { return std::move(st_); }

 private:
  void step(int j) {
    Syllable& top = st_.back();
    auto [t, h] = G_.split(top.vertex, top.exps, j);
    top.exps = t;
    if (st_.size() >= 2 && st_[st_.size() - 2].vertex == j && G_.is_trivial(top.vertex, t)) {
      st_.pop_back();
      st_.back().exps = G_.add(j, st_.back().exps, h);
    } else {
      st_.push_back(Syllable{j, h});
    }
  }

  const GraphOfGroups& G_;
  std::vector<Syllable> st_;
};

void append_key(std::string& out, const std::vector<Syllable>& s) {
  out.reserve(out.size() + s.size() * (1 + kMaxFactors * sizeof(long)));
  for (const auto& x : s) {
    out.push_back(static_cast<char>(x.vertex));
    out.append(reinterpret_cast<const char*>(x.exps.data()), kMaxFactors * sizeof(long));
  }
}

}  // namespace

bool NormalForm::is_identity() const {
  return syllables.size() == 1 && syllables[0].vertex == 0 &&
         std::all_of(syllables[0].exps.begin(), syllables[0].exps.end(), [](long e) { return e == 0; });
}

std::string NormalForm::key() const {
  std::string k;
  append_key(k, syllables);
  return k;
}

std::string TreeVertex::key() const {
  std::string k;
  append_key(k, path);
  return k;
}

NormalForm reduce(const GraphOfGroups& G, const GroupWord& w) {
  Walker walker(G);
  for (const auto& s : w) walker.multiply(s);
  walker.walk_to(0);
  return NormalForm{walker.take()};
}

NormalForm identity_element() { return NormalForm{{Syllable{0, {}}}}; }

NormalForm multiply(const GraphOfGroups& G, const NormalForm& x, const NormalForm& y) {
  GroupWord w = x.syllables;
  w.insert(w.end(), y.syllables.begin(), y.syllables.end());
  return reduce(G, w);
}

GroupWord inverse_word(const GraphOfGroups& G, const GroupWord& w) {
  GroupWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(Syllable{it->vertex, G.negate(it->vertex, it->exps)});
  return out;
}

NormalForm inverse(const GraphOfGroups& G, const NormalForm& x) { return reduce(G, inverse_word(G, x.syllables)); }

std::string to_string(const GraphOfGroups& G, const NormalForm& g) {
  if (g.is_identity()) return "1";
  std::string out;
  for (const auto& s : g.syllables) {
    if (std::all_of(s.exps.begin(), s.exps.end(), [](long e) { return e == 0; })) continue;
    if (!out.empty()) out += " . ";
    out += G.syllable_str(s);
  }
  return out.empty() ? "1" : out;
}

TreeVertex vertex_of(const GraphOfGroups& G, const GroupWord& w, int j) {
  if (j < 0 || j >= G.vertex_count()) throw PreconditionError("vertex index out of range");
  Walker walker(G);
  for (const auto& s : w) walker.multiply(s);
  walker.walk_to(j);
  TreeVertex v{walker.take()};
  v.path.back().exps = Exponents{};
  return v;
}

TreeVertex base_vertex(const GraphOfGroups& G, int j) { return vertex_of(G, {}, j); }

TreeVertex act(const GraphOfGroups& G, const GroupWord& g, const TreeVertex& v) {
  GroupWord w = g;
  w.insert(w.end(), v.path.begin(), v.path.end());
  return vertex_of(G, w, v.vertex_index());
}

TreeVertex act(const GraphOfGroups& G, const NormalForm& g, const TreeVertex& v) { return act(G, g.syllables, v); }

bool stabilizes(const GraphOfGroups& G, const NormalForm& g, const TreeVertex& v) { return act(G, g, v) == v; }

int tree_distance(const TreeVertex& u, const TreeVertex& v) {
  const int nu = u.depth(), nv = v.depth();
  int c = 0;
  while (c < std::min(nu, nv) && u.path[c] == v.path[c] && u.path[c + 1].vertex == v.path[c + 1].vertex) ++c;
  return nu + nv - 2 * c;
}

std::string to_string(const GraphOfGroups& G, const TreeVertex& v) {
  std::string out;
  for (int r = 0; r < v.depth(); ++r) {
    const auto& s = v.path[static_cast<std::size_t>(r)];
    if (std::any_of(s.exps.begin(), s.exps.end(), [](long e) { return e != 0; })) {
      if (!out.empty()) out += " ";
      out += G.syllable_str(s);
    }
  }
  return (out.empty() ? std::string("1") : out) + " G" + std::to_string(v.vertex_index());
}

TreeVertex tree_parent(const TreeVertex& v) {
  if (v.depth() == 0) throw PreconditionError("the base vertex has no parent");
  TreeVertex p{std::vector<Syllable>(v.path.begin(), v.path.end() - 1)};
  p.path.back().exps = Exponents{};
  return p;
}

namespace {

// All transversal elements of G_v toward `toward` within the window.
std::vector<Exponents> transversal(const GraphOfGroups& G, int v, int toward, const ExponentWindow& w) {
  std::vector<Exponents> out{Exponents{}};
  const auto& orders = G.group(v).orders;
  for (std::size_t f = 0; f < orders.size(); ++f) {
    if (G.edge_factor(v, static_cast<int>(f), toward)) continue;
    const long lo = orders[f] == 0 ? w.lo : 0, hi = orders[f] == 0 ? w.hi : orders[f] - 1;
    std::vector<Exponents> next;
    for (const auto& e : out)
      for (long k = lo; k <= hi; ++k) {
        Exponents x = e;
        x[f] = k;
        next.push_back(x);
      }
    out.swap(next);
  }
  return out;
}

}  // namespace

std::vector<TreeVertex> tree_neighbors(const GraphOfGroups& G, const TreeVertex& v, const ExponentWindow& w) {
  std::vector<TreeVertex> out;
  if (v.depth() > 0) out.push_back(tree_parent(v));
  const int j = v.vertex_index();
  const int prev = v.depth() > 0 ? v.path[v.path.size() - 2].vertex : -1;
  for (int k : {j - 1, j + 1}) {
    if (k < 0 || k >= G.vertex_count()) continue;
    for (const auto& c : transversal(G, j, k, w)) {
      if (k == prev && G.is_trivial(j, c)) continue;
      TreeVertex child = v;
      child.path.back().exps = c;
      child.path.push_back(Syllable{k, {}});
      out.push_back(std::move(child));
    }
  }
  return out;
}

std::vector<TreeVertex> tree_ball(const GraphOfGroups& G, const TreeVertex& center, int radius,
                                  const ExponentWindow& w, std::size_t budget) {
  std::vector<TreeVertex> out{center};
  std::unordered_map<std::string, int> dist{{center.key(), 0}};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    const int d = dist[out[idx].key()];
    if (d == radius) continue;
    for (auto& nb : tree_neighbors(G, out[idx], w)) {
      auto key = nb.key();
      if (dist.count(key)) continue;
      dist.emplace(std::move(key), d + 1);
      out.push_back(std::move(nb));
      if (out.size() > budget) throw BudgetExceeded("tree ball exceeds " + std::to_string(budget) + " vertices");
      queue.push_back(out.size() - 1);
    }
  }
  return out;
}

GroupWord ray_word(const GraphOfGroups& G, int k) {
  GroupWord w;
  const Syllable t = G.generator("t"), s = G.generator("s");
  for (int i = 0; i < k; ++i) w.push_back(i % 2 == 0 ? t : s);
  return w;
}

std::vector<TreeVertex> ray_vertices(const GraphOfGroups& G, int n) {
  if (n < 0) throw PreconditionError("ray length must be nonnegative");
  if (G.vertex_count() != 3 || G.factor_count(0) != 2 || G.factor_count(1) != 3)
    throw PreconditionError("the ray is defined for the G' fixture");
  std::vector<TreeVertex> out;
  const TreeVertex v = base_vertex(G, 0), x = base_vertex(G, 1);
  for (int k = 0; k <= n; ++k) out.push_back(act(G, ray_word(G, k), k % 2 ? v : x));
  return out;
}

Theorem41Report theorem41_verify(const GraphOfGroups& G, int n_max) {
  if (n_max < 0) throw PreconditionError("n_max must be nonnegative");
  Theorem41Report rep;
  const TreeVertex v = base_vertex(G, 0), w = base_vertex(G, 2);
  rep.base_distance_two = tree_distance(v, w) == 2;
  if (!rep.base_distance_two) rep.failures.push_back("d(v, w) != 2");
  if (n_max == 0) {
    rep.pass = rep.failures.empty();
    return rep;
  }
  const auto ray = ray_vertices(G, 2 * n_max);
  for (std::size_t k = 0; k + 1 < ray.size(); ++k) {
    if (tree_distance(ray[k], ray[k + 1]) != 1) {
      rep.ray_steps_unit = false;
      rep.failures.push_back("ray step " + std::to_string(k) + " is not an edge");
    }
  }
  const NormalForm b = reduce(G, {G.generator(2, "b")});
  const Syllable a = G.generator(0, "a");
  int prev_distance = -1;
  for (int n = 1; n <= n_max; ++n) {
    Theorem41Row row;
    row.n = n;
    const TreeVertex& u = ray[static_cast<std::size_t>(2 * n)];
    row.ray_vertex = to_string(G, u);
    row.b_moves_ray_vertex = !stabilizes(G, b, u);

    const GroupWord conj_prefix = ray_word(G, 2 * n);
    GroupWord x_word = conj_prefix;
    x_word.push_back(a);
    const GroupWord back = inverse_word(G, conj_prefix);
    x_word.insert(x_word.end(), back.begin(), back.end());
    const NormalForm x = reduce(G, x_word);
    row.conjugate_fixes_ray_vertex = stabilizes(G, x, u);
    row.commutator_alternating = !x.is_identity() && !b.is_identity();

    GroupWord comm = x_word;
    comm.insert(comm.end(), b.syllables.begin(), b.syllables.end());
    const GroupWord xi = inverse_word(G, x_word), bi = inverse_word(G, b.syllables);
    comm.insert(comm.end(), xi.begin(), xi.end());
    comm.insert(comm.end(), bi.begin(), bi.end());
    row.commutator_trivial = reduce(G, comm).is_identity();

    row.distance = tree_distance(w, u);
    row.distance_ok = row.distance >= n && row.distance > prev_distance;
    prev_distance = row.distance;
    if (!row.pass()) rep.failures.push_back("n = " + std::to_string(n));
    rep.rows.push_back(row);
  }
  rep.pass = rep.failures.empty();
  return rep;
}

FirstExampleReport first_example_verify(const GraphOfGroups& G) {
  FirstExampleReport r;
  const TreeVertex v = base_vertex(G, 0), w = base_vertex(G, G.vertex_count() - 1);
  const NormalForm a = reduce(G, {G.generator(0, "a")});
  const NormalForm b = reduce(G, {G.generator(G.vertex_count() - 1, "b")});
  r.a_fixes_v = stabilizes(G, a, v);
  r.b_fixes_w = stabilizes(G, b, w);
  r.a_moves_w = !stabilizes(G, a, w);
  r.b_moves_v = !stabilizes(G, b, v);
  GroupWord comm{a.syllables.begin(), a.syllables.end()};
  comm.insert(comm.end(), b.syllables.begin(), b.syllables.end());
  const auto ai = inverse_word(G, a.syllables), bi = inverse_word(G, b.syllables);
  comm.insert(comm.end(), ai.begin(), ai.end());
  comm.insert(comm.end(), bi.begin(), bi.end());
  r.commutator_trivial = reduce(G, comm).is_identity();
  r.distance_vw = tree_distance(v, w);
  r.pass = r.a_fixes_v && r.b_fixes_w && r.a_moves_w && r.b_moves_v && r.commutator_trivial && r.distance_vw == 2;
  return r;
}

std::vector<Syllable> standard_generators(const GraphOfGroups& G) {
  std::vector<Syllable> gens;
  std::unordered_set<std::string> seen;
  for (int v = 0; v < G.vertex_count(); ++v) {
    const auto& g = G.group(v);
    for (std::size_t f = 0; f < g.orders.size(); ++f) {
      if (!seen.insert(g.names[f]).second) continue;
      gens.push_back(G.generator(v, g.names[f]));
    }
  }
  return gens;
}

std::vector<NormalForm> cayley_ball(const GraphOfGroups& G, const std::vector<Syllable>& generators, int radius,
                                    std::size_t budget) {
  std::vector<Syllable> steps;
  for (const auto& g : generators) {
    steps.push_back(g);
    Syllable inv{g.vertex, G.negate(g.vertex, g.exps)};
    if (!(inv == g)) steps.push_back(inv);
  }
  std::vector<NormalForm> out{identity_element()};
  std::unordered_set<std::string> seen{out[0].key()};
  std::size_t frontier_begin = 0;
  for (int r = 0; r < radius; ++r) {
    const std::size_t frontier_end = out.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const auto& s : steps) {
        GroupWord w = out[i].syllables;
        w.push_back(s);
        NormalForm g = reduce(G, w);
        if (!seen.insert(g.key()).second) continue;
        out.push_back(std::move(g));
        if (out.size() > budget) throw BudgetExceeded("element enumeration exceeds " + std::to_string(budget));
      }
    }
    frontier_begin = frontier_end;
  }
  return out;
}

AcylindricityReport acylindricity_check(const GraphOfGroups& G, int R, int ball_radius, int word_length,
                                        const AcylindricityOptions& opt) {
  if (R < 0 || ball_radius < 0 || word_length < 0) throw PreconditionError("budgets must be nonnegative");
  AcylindricityReport rep;
  rep.R = R;
  rep.L = 4 * R + 4;
  rep.bound = (2L * R + 1) * opt.edge_stabilizer_order;

  const auto elements = cayley_ball(G, standard_generators(G), word_length, opt.element_budget);
  const TreeVertex center = base_vertex(G, std::min(1, G.vertex_count() - 1));
  const auto ball = tree_ball(G, center, ball_radius, opt.window, opt.ball_budget);
  rep.elements = elements.size();
  rep.ball_vertices = ball.size();

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < ball.size(); ++i)
    for (std::size_t j = i + 1; j < ball.size(); ++j)
      if (tree_distance(ball[i], ball[j]) >= rep.L) pairs.emplace_back(i, j);
  rep.far_pairs = pairs.size();
  if (opt.max_pairs > 0 && pairs.size() > opt.max_pairs) {
    std::mt19937_64 rng(opt.seed);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(opt.max_pairs);
  }
  rep.pairs_checked = pairs.size();

  // Only vertices that occur in a checked pair need mover bitsets.
  std::vector<int> slot(ball.size(), -1);
  std::vector<std::size_t> used;
  for (const auto& [i, j] : pairs)
    for (std::size_t k : {i, j})
      if (slot[k] < 0) {
        slot[k] = static_cast<int>(used.size());
        used.push_back(k);
      }
  const std::size_t words = (elements.size() + 63) / 64;
  std::vector<std::uint64_t> bits(used.size() * words, 0);
  for (std::size_t u = 0; u < used.size(); ++u) {
    const TreeVertex& x = ball[used[u]];
    for (std::size_t e = 0; e < elements.size(); ++e) {
      if (tree_distance(x, act(G, elements[e], x)) <= R) bits[u * words + e / 64] |= std::uint64_t{1} << (e % 64);
    }
  }
  rep.max_count = 0;
  for (const auto& [i, j] : pairs) {
    const std::span<const std::uint64_t> bi(bits.data() + static_cast<std::size_t>(slot[i]) * words, words);
    const std::span<const std::uint64_t> bj(bits.data() + static_cast<std::size_t>(slot[j]) * words, words);
    const long c = static_cast<long>(kernels::and_popcount(bi, bj));
    if (c > rep.max_count) {
      rep.max_count = c;
      rep.worst_pair = to_string(G, ball[i]) + " | " + to_string(G, ball[j]);
    }
  }
  const auto& names0 = G.group(0).names;
  if (G.vertex_count() == 3 && std::find(names0.begin(), names0.end(), "s") != names0.end()) {
    const TreeVertex x = base_vertex(G, 1);
    const Syllable t = G.generator("t"), s = G.generator("s");
    const int k0 = (rep.L + 3) / 4;
    for (int k = k0; k < k0 + 2; ++k) {
      GroupWord fwd, bwd;
      for (int i = 0; i < k; ++i) {
        fwd.push_back(t);
        fwd.push_back(s);
      }
      bwd = inverse_word(G, fwd);
      const TreeVertex u = act(G, bwd, x), v = act(G, fwd, x);
      ++rep.axis_pairs;
      rep.axis_max_count = std::max(rep.axis_max_count, mover_count(G, elements, u, v, R));
    }
  }
  rep.pass = rep.max_count <= rep.bound && rep.axis_max_count <= rep.bound;
  return rep;
}

long mover_count(const GraphOfGroups& G, const std::vector<NormalForm>& elements, const TreeVertex& u,
                 const TreeVertex& v, int R) {
  long c = 0;
  for (const auto& g : elements)
    if (tree_distance(u, act(G, g, u)) <= R && tree_distance(v, act(G, g, v)) <= R) ++c;
  return c;
}

json to_json(const Theorem41Report& r) {
  json rows = json::array();
  for (const auto& x : r.rows) {
    rows.push_back(json{{"n", x.n},
                        {"ray_vertex", x.ray_vertex},
                        {"b_moves_ray_vertex", x.b_moves_ray_vertex},
                        {"conjugate_fixes_ray_vertex", x.conjugate_fixes_ray_vertex},
                        {"commutator_alternating", x.commutator_alternating},
                        {"commutator_trivial", x.commutator_trivial},
                        {"distance", x.distance},
                        {"pass", x.pass()}});
  }
  return json{{"rows", rows},
              {"ray_steps_unit", r.ray_steps_unit},
              {"base_distance_two", r.base_distance_two},
              {"pass", r.pass},
              {"failures", r.failures}};
}

json to_json(const FirstExampleReport& r) {
  return json{{"a_fixes_v", r.a_fixes_v},   {"b_fixes_w", r.b_fixes_w},
              {"a_moves_w", r.a_moves_w},   {"b_moves_v", r.b_moves_v},
              {"commutator_trivial", r.commutator_trivial}, {"distance_vw", r.distance_vw},
              {"pass", r.pass}};
}

json to_json(const AcylindricityReport& r) {
  return json{{"R", r.R},
              {"L", r.L},
              {"bound", r.bound},
              {"elements", r.elements},
              {"ball_vertices", r.ball_vertices},
              {"far_pairs", r.far_pairs},
              {"pairs_checked", r.pairs_checked},
              {"max_count", r.max_count},
              {"worst_pair", r.worst_pair},
              {"axis_pairs", r.axis_pairs},
              {"axis_max_count", r.axis_max_count},
              {"pass", r.pass}};
}

}  // namespace gtv
