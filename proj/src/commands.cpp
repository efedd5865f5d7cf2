#include "gtv/commands.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "gtv/bassserre.hpp"
#include "gtv/crossratio.hpp"
#include "gtv/error.hpp"
#include "gtv/flatsurf.hpp"
#include "gtv/hypharness.hpp"

namespace gtv {

Rational parse_decimal(const std::string& text) {
  std::string s = text;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    try {
      std::size_t used = 0;
      exponent = std::stol(s.substr(e + 1), &used);
      if (used != s.size() - e - 1) throw PreconditionError("");
    } catch (const std::exception&) {
      throw PreconditionError("malformed number: " + text);
    }
    s = s.substr(0, e);
  }
  Rational value;
  if (auto dot = s.find('.'); dot != std::string::npos) {
    const std::string frac = s.substr(dot + 1);
    const std::string whole = s.substr(0, dot);
    value = Rational::parse((whole.empty() || whole == "-" || whole == "+" ? whole + "0" : whole) + frac) /
            Rational::parse("1" + std::string(frac.size(), '0'));
    if (!whole.empty() && whole.front() == '-' && value.sign() > 0) value = -value;
  } else {
    value = Rational::parse(s);
  }
  const Rational ten(10);
  for (long k = 0; k < std::abs(exponent); ++k) value = exponent > 0 ? value * ten : value / ten;
  return value;
}

LongRange parse_range(const std::string& text) {
  try {
    if (auto p = text.find(".."); p != std::string::npos) {
      LongRange r{std::stol(text.substr(0, p)), std::stol(text.substr(p + 2))};
      if (r.lo > r.hi) throw PreconditionError("empty range " + text);
      return r;
    }
    const long v = std::stol(text);
    return {v, v};
  } catch (const PreconditionError&) {
    throw;
  } catch (const std::exception&) {
    throw PreconditionError("malformed range: " + text);
  }
}

IntersectionMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw PreconditionError(path + ": " + e.what());
  }
  if (j.is_object() && j.contains("squares")) {
    const auto B = bisector_curves(SquareTiledSurface::from_json(j));
    return IntersectionMatrix(B.crossing);
  }
  return IntersectionMatrix::from_json(j);
}

// ---------------------------------------------------------------------------

namespace {

std::string angle_str(int half_pi) {
  if (half_pi % 2 == 0) return std::to_string(half_pi / 2) + "pi";
  return std::to_string(half_pi) + "pi/2";
}

NumberFieldElement nf(const FieldPtr& K, std::vector<long> c) {
  std::vector<Rational> r;
  for (long x : c) r.emplace_back(x);
  return nf_reduce(Polynomial(r), K);
}

json strings(const std::vector<NumberFieldElement>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

}  // namespace

std::vector<VerificationReport> cmd_example63(const Example63Options& opt) {
  std::vector<VerificationReport> out;
  const bool standard = !opt.matrix || opt.matrix->entries() == staircase_intersection_matrix().entries();
  const IntersectionMatrix N = opt.matrix ? *opt.matrix : staircase_intersection_matrix();

  if (standard) {
    out.push_back(run_check("example63.surface", "genus-3 staircase with two cone points", [&](VerificationReport& r) {
      const auto S = build_staircase();
      const auto cones = vertex_cycles(S);
      std::vector<int> singular;
      std::size_t regular = 0;
      for (const auto& c : cones) {
        if (c.regular())
          ++regular;
        else
          singular.push_back(c.corner_count);
      }
      std::sort(singular.begin(), singular.end());
      const auto B = bisector_curves(S);
      json angles = json::array();
      for (int c : singular) angles.push_back(angle_str(c));
      r.values = {{"squares", S.square_count()},
                  {"genus", genus(S)},
                  {"cone_angles", angles},
                  {"regular_vertices", regular},
                  {"horizontal_components", B.horizontal.size()},
                  {"vertical_components", B.vertical.size()},
                  {"crossing_matrix", B.crossing}};
      return genus(S) == 3 && singular == std::vector<int>{10, 14} && B.horizontal.size() == 3 &&
             B.vertical.size() == 3 && B.crossing == N.entries();
    }));
  }

  std::optional<PerronData> P;
  out.push_back(run_check("example63.charpoly", "characteristic polynomial of N N^t", [&](VerificationReport& r) {
    P = gram_charpoly(N);
    const Interval mu = P->field->root_interval(opt.width);
    r.values = {{"matrix", N.entries()},
                {"charpoly", P->charpoly.str()},
                {"mu_minimal_polynomial", P->mu_factor.str()},
                {"mu_multiplicity", P->mu_multiplicity}};
    r.intervals = {{"mu", to_json(mu)}, {"mu_decimal", {mu.lo.to_double(), mu.hi.to_double()}}};
    if (!standard) return true;
    return P->charpoly == Polynomial{-1, 5, -6, 1} && mu.width() <= opt.width;
  }));
  if (!P) return out;

  std::optional<RectangleData> R;
  out.push_back(run_check("example63.eigenvectors", "Perron-Frobenius heights V and widths W", [&](VerificationReport& r) {
    R = perron_eigenvector(*P);
    r.values = {{"V", strings(R->V)}, {"W", strings(R->W)}, {"eigen_equations", "verified exactly"}};
    if (!standard) return true;
    const FieldPtr& K = P->field;
    const std::vector<NumberFieldElement> V{nf(K, {1}), nf(K, {1, -5, 1}), nf(K, {-4, 11, -2})};
    const std::vector<NumberFieldElement> W{nf(K, {-2, 6, -1}), nf(K, {2, -5, 1}), nf(K, {1, -5, 1})};
    return R->V == V && R->W == W;
  }));

  std::optional<TwistPair> T;
  out.push_back(run_check("example63.twist", "product of the two multitwists", [&](VerificationReport& r) {
    T = twist_product(*P);
    json A = json::array();
    for (std::size_t i = 0; i < 2; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < 2; ++j) row.push_back(T->product_A(i, j).str());
      A.push_back(row);
    }
    r.values = {{"A", A}, {"trace", T->trace.str()}, {"det", T->det.str()}, {"cayley_hamilton", "A^2 - tr A + I = 0"}};
    const FieldPtr& K = P->field;
    return T->trace == TowerElement(nf(K, {2, 1})) && T->det == TowerElement::one(K);
  }));
  if (!T) return out;

  out.push_back(run_check("example63.dilatation", "pseudo-Anosov dilatation and sigma relations", [&](VerificationReport& r) {
    const DilatationReport D = dilatation_check(*T, opt.width);
    r.values = {{"pseudo_anosov", D.pseudo_anosov},
                {"relation_consistent", D.relation_consistent},
                {"lambda_sigma_consistent", D.lambda_sigma_consistent}};
    r.intervals = to_json(D);
    r.intervals["lambda_decimal"] = {D.lambda.lo.to_double(), D.lambda.hi.to_double()};
    return D.pseudo_anosov && D.relation_consistent && D.lambda_sigma_consistent;
  }));

  if (R) {
    out.push_back(run_check("example63.primality", "irrational cross ratio of four saddle directions",
                            [&](VerificationReport& r) {
                              const PrimalityCertificate C = primality_certificate(*R);
                              r.values = to_json(C);
                              if (standard) {
                                const auto inv = nf(P->field, {10, -17, 3});
                                r.values["times_3mu2_minus_17mu_plus_10"] = (C.value * inv).str();
                                if (!(C.value * inv).is_one()) return false;
                              }
                              return C.pass;
                            }));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

GraphOfGroups load_fixture(const std::string& name) {
  if (name == "G") return GraphOfGroups::fixture_G();
  if (name == "Gprime") return GraphOfGroups::fixture_Gprime();
  std::ifstream in(name);
  if (!in) throw PreconditionError("unknown fixture '" + name + "' (expected G, Gprime or a JSON file)");
  json j;
  in >> j;
  return GraphOfGroups::from_json(j);
}

bool is_gprime(const GraphOfGroups& G) { return G.to_json() == GraphOfGroups::fixture_Gprime().to_json(); }
bool is_g(const GraphOfGroups& G) { return G.to_json() == GraphOfGroups::fixture_G().to_json(); }

VerificationReport suite_report(const std::string& name, const std::string& anchor, const SuiteSummary& s) {
  VerificationReport r = run_check(name, anchor, [&](VerificationReport& rep) {
    rep.values = {{"instances", s.instances}, {"passed", s.passed}, {"failures", s.failures}};
    return s.pass();
  });
  r.runtime_s = s.seconds;
  return r;
}

}  // namespace

std::vector<VerificationReport> cmd_tree(const TreeOptions& opt) {
  std::vector<VerificationReport> out;
  std::string stem = opt.fixture;
  if (auto slash = stem.find_last_of('/'); slash != std::string::npos) stem = stem.substr(slash + 1);
  if (auto dot = stem.find('.'); dot != std::string::npos) stem = stem.substr(0, dot);
  const std::string pre = "tree." + stem + ".";
  if (opt.n_max < 0 || opt.ball_radius < 0 || opt.word_length < 0 || opt.instances < 0) {
    out.push_back(run_check(pre + "options", "budgets", [](VerificationReport&) -> bool {
      throw PreconditionError("budgets must be nonnegative");
    }));
    return out;
  }
  std::optional<GraphOfGroups> Gopt;
  out.push_back(run_check(pre + "fixture", "graph of groups over a path", [&](VerificationReport& r) {
    Gopt = load_fixture(opt.fixture);
    r.values = Gopt->to_json();
    return true;
  }));
  if (!Gopt) return out;
  const GraphOfGroups& G = *Gopt;
  const bool gp = is_gprime(G), g1 = is_g(G);

  if (gp) {
    out.push_back(run_check(pre + "ray", "trivial stabilizer intersections along the ray, non-free witness",
                            [&](VerificationReport& r) {
                              const Theorem41Report T = theorem41_verify(G, opt.n_max);
                              r.values = to_json(T);
                              return T.pass;
                            }));
  }
  if (g1) {
    out.push_back(run_check(pre + "first_example", "stab(v) and stab(w) meet trivially yet commute",
                            [&](VerificationReport& r) {
                              const FirstExampleReport F = first_example_verify(G);
                              r.values = to_json(F);
                              return F.pass;
                            }));
  }

  for (int R : opt.R) {
    out.push_back(run_check(pre + "acylindricity.R" + std::to_string(R),
                            "at most (2R+1)K elements move two far points by at most R", [&](VerificationReport& r) {
                              AcylindricityOptions o;
                              o.seed = opt.seed;
                              const AcylindricityReport A = acylindricity_check(G, R, opt.ball_radius, opt.word_length, o);
                              r.values = to_json(A);
                              return A.pass;
                            }));
  }

  if (gp || g1) {
    out.push_back(run_check(pre + "pingpong", "ping-pong lower bound on d(S, wS)", [&](VerificationReport& r) {
      std::vector<PingPongSetup> setups;
      if (gp)
        for (int n = 4; n <= 5; ++n) setups.push_back(pingpong_setup_Gprime(n));
      else
        setups.push_back(pingpong_setup_G());
      bool ok = true;
      json rows = json::array();
      for (const auto& P : setups) {
        const SuiteSummary s = pingpong_exhaustive(P, opt.word_length, 2);
        rows.push_back({{"setup", P.name}, {"gamma", tree_distance(P.A, P.B)}, {"L0", P.L0()}, {"words", s.instances},
                        {"passed", s.passed}, {"failures", s.failures}});
        ok = ok && s.pass();
      }
      r.values["setups"] = rows;
      return ok;
    }));

    out.push_back(run_check(pre + "lemma34", "projection lemma on the tree ball with f = a", [&](VerificationReport& r) {
      const BallTree ball = ball_tree(G, base_vertex(G, 1), std::min(opt.ball_radius, 6));
      const Permutation fa = ball_permutation(G, ball, reduce(G, {G.generator("a")}));
      const Permutation fb = ball_permutation(G, ball, reduce(G, {G.generator("b")}));
      const VertexSet A{ball.index_of(base_vertex(G, 0))};
      const VertexSet B = fixed_set(fb);
      r.values["ball_vertices"] = ball.vertices.size();
      r.values["fix_b_size"] = B.size();
      const Lemma34Report L = lemma34_suite(ball.tree, A, B, fa, 0);
      r.values["report"] = to_json(L);
      return L.pass() && ball.tree.is_subtree(B);
    }));

    out.push_back(run_check(pre + "displacement", "displacement sets and sublevel convexity", [&](VerificationReport& r) {
      const BallTree ball = ball_tree(G, base_vertex(G, 1), std::min(opt.ball_radius, 6));
      std::vector<std::pair<std::string, GroupWord>> elems{{"a", {G.generator("a")}}, {"b", {G.generator("b")}}};
      if (gp) {
        elems.push_back({"ts", {G.generator("t"), G.generator("s")}});
        elems.push_back({"s", {G.generator("s")}});
      } else {
        elems.push_back({"ab", {G.generator("a"), G.generator("b")}});
      }
      bool ok = true;
      for (const auto& [name, w] : elems) {
        const NormalForm g = reduce(G, w);
        const DisplacementData D = displacement_sets(G, ball, g);
        bool convex = true;
        for (int L = D.min_disp; L <= D.max_disp; ++L) convex = convex && sublevel_quasiconvex(G, ball, g, L).convex;
        json row{{"min_disp", D.min_disp}, {"M_size", D.M.size()}, {"all_levels_convex", convex}};
        if (D.order) {
          row["order"] = *D.order;
          row["MM_size"] = D.MM.size();
        }
        r.values[name] = row;
        ok = ok && convex;
        if (D.order) ok = ok && D.min_disp == 0;
      }
      return ok;
    }));
  }

  if (opt.instances > 0) {
    out.push_back(suite_report(pre + "suite.lemma34", "projection lemma on random symmetric trees",
                               lemma34_property_suite(opt.seed, opt.instances)));
    out.push_back(suite_report(pre + "suite.pingpong", "ping-pong bound on random reduced words",
                               pingpong_property_suite(opt.seed, opt.instances, opt.word_length)));
    out.push_back(suite_report(pre + "suite.convexity", "sublevel sets of tree automorphisms are subtrees",
                               convexity_property_suite(opt.seed, opt.instances)));
    out.push_back(suite_report(pre + "suite.quotient", "orbit quotient graph is quasi-isometric",
                               quotient_property_suite(opt.seed, opt.instances)));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<VerificationReport> cmd_arith(const ArithOptions& opt) {
  std::vector<VerificationReport> out;
  out.push_back(run_check("arith.prongs", "p, q distinct odd primes with p + q = 4g", [&](VerificationReport& r) {
    const ProngVerdict v = validate_prong_hypotheses({opt.p, opt.q}, ProngMode::distinct_odd_primes);
    r.values = {{"p", opt.p}, {"q", opt.q}, {"genus", v.genus}, {"failures", v.failures}};
    return v.holds && v.genus == opt.g;
  }));
  for (long d = opt.d.lo; d <= opt.d.hi; ++d) {
    out.push_back(run_check("arith.cover.d" + std::to_string(d), "Euler characteristic of a putative quotient",
                            [&](VerificationReport& r) {
                              const CoverFeasibility c = cover_feasibility(opt.p, opt.q, opt.g, d);
                              r.values = to_json(c);
                              if (c.case_number == 1) return c.identity_holds;
                              return !c.admissible_k.empty() &&
                                     std::all_of(c.admissible_k.begin(), c.admissible_k.end(),
                                                 [](long k) { return k == 1 || k == 3; });
                            }));
  }
  return out;
}

std::vector<VerificationReport> cmd_goldbach(LongRange genus) {
  std::vector<VerificationReport> out;
  for (long g = genus.lo; g <= genus.hi; ++g) {
    out.push_back(run_check("goldbach.g" + std::to_string(g), "4g as a sum of two distinct odd primes",
                            [&](VerificationReport& r) {
                              const SingularityData s = genus_decomposition(g, DecompositionMode::primes);
                              r.values = {{"g", g}, {"p", s.p}, {"q", s.q}};
                              return s.p != s.q && s.p % 2 == 1 && s.q % 2 == 1 && is_prime(s.p) && is_prime(s.q) &&
                                     s.p + s.q == 4 * g;
                            }));
  }
  return out;
}

std::vector<VerificationReport> cmd_verify_all(const VerifyAllOptions& opt) {
  std::vector<VerificationReport> out;
  auto append = [&](std::vector<VerificationReport> v) { out.insert(out.end(), v.begin(), v.end()); };
  append(cmd_example63({opt.width, std::nullopt}));
  TreeOptions t;
  t.seed = opt.seed;
  t.R = {0, 1, 2};
  append(cmd_tree(t));
  TreeOptions tg = t;
  tg.fixture = "G";
  tg.R = {0};
  tg.instances = 0;
  append(cmd_tree(tg));
  append(cmd_arith({5, 7, 3, {12, 40}}));
  append(cmd_goldbach({2, 50}));
  return out;
}

}  // namespace gtv
