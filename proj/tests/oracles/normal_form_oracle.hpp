#pragma once

// Brute-force checks of the amalgam normal form used by the unit tests and
// the acceptance binary.
//
// Two independent notions of equality are compared against reduce():
//   * action on a finite ball of the Bass-Serre tree, summarised by a pair of
//     64-bit fingerprints of the image keys and confirmed exactly whenever
//     two different normal forms produce equal fingerprints;
//   * a hand-written model of the group itself. Both fixtures have B equal to
//     its edge group, so G is Z/2 x Z/2 and G' is Z/2 x (Z * (Z/2 x Z)), with
//     the central Z/2 generated by a.

#include <chrono>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gtv/bassserre.hpp"

namespace gtv::oracle {

// Every nontrivial single-generator power g^e with e in [-bound, bound],
// reduced and deduplicated per vertex group.
inline std::vector<Syllable> generator_letters(const GraphOfGroups& G, long bound) {
  std::vector<Syllable> out;
  for (int v = 0; v < G.vertex_count(); ++v) {
    std::vector<Exponents> seen;
    for (std::size_t f = 0; f < G.factor_count(v); ++f)
      for (long e = -bound; e <= bound; ++e) {
        Exponents x{};
        x[f] = e;
        x = G.reduce_exps(v, x);
        if (G.is_trivial(v, x)) continue;
        bool dup = false;
        for (const auto& y : seen) dup = dup || y == x;
        if (dup) continue;
        seen.push_back(x);
        out.push_back(Syllable{v, x});
      }
  }
  return out;
}

inline std::vector<GroupWord> all_words(const std::vector<Syllable>& letters, int max_len) {
  std::vector<GroupWord> out{{}};
  std::size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (const auto& l : letters) {
        GroupWord w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

// Group model key. `gprime` selects the G' fixture, otherwise G.
inline std::string model_key(const GroupWord& w, bool gprime) {
  long a = 0;
  if (!gprime) {
    long b = 0;
    for (const auto& s : w) {
      if (s.vertex == 0) a += s.exps[0];
      if (s.vertex == 1) a += s.exps[0], b += s.exps[1];
      if (s.vertex == 2) b += s.exps[0];
    }
    return std::to_string(((a % 2) + 2) % 2) + "," + std::to_string(((b % 2) + 2) % 2);
  }
  // Free product <s> * (<b> x <t>): factor 0 holds s^k, factor 1 holds (b^i, t^j).
  struct Piece {
    int factor;
    long x, y;
  };
  std::vector<Piece> stack;
  auto push = [&](Piece p) {
    if (!stack.empty() && stack.back().factor == p.factor) {
      Piece& top = stack.back();
      top.x += p.x;
      top.y += p.y;
      if (top.factor == 1) top.x = ((top.x % 2) + 2) % 2;
      if (top.x == 0 && top.y == 0) stack.pop_back();
      return;
    }
    if (p.factor == 1) p.x = ((p.x % 2) + 2) % 2;
    if (p.x != 0 || p.y != 0) stack.push_back(p);
  };
  for (const auto& s : w) {
    if (s.vertex == 0) {
      a += s.exps[0];
      push({0, s.exps[1], 0});
    } else if (s.vertex == 1) {
      a += s.exps[0];
      push({1, s.exps[1], s.exps[2]});
    } else {
      push({1, s.exps[0], 0});
    }
  }
  std::string k = std::to_string(((a % 2) + 2) % 2);
  for (const auto& p : stack) k += "|" + std::to_string(p.factor) + ":" + std::to_string(p.x) + "," + std::to_string(p.y);
  return k;
}

struct Fingerprint {
  std::uint64_t h1 = 0, h2 = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

struct FingerprintHash {
  std::size_t operator()(const Fingerprint& f) const { return static_cast<std::size_t>(f.h1 ^ (f.h2 * 0x9e3779b97f4a7c15ull)); }
};

inline void mix(std::uint64_t& h, std::uint64_t mult, const std::string& s) {
  for (unsigned char c : s) h = (h ^ c) * mult;
  h = (h ^ 0xff) * mult;
}

inline Fingerprint action_fingerprint(const GraphOfGroups& G, const GroupWord& w, const std::vector<TreeVertex>& ball) {
  Fingerprint f{1469598103934665603ull, 0x84222325cbf29ce4ull};
  for (const auto& v : ball) {
    const std::string k = act(G, w, v).key();
    mix(f.h1, 1099511628211ull, k);
    mix(f.h2, 0x100000001b3ull * 31 + 2, k);
  }
  return f;
}

inline bool same_action(const GraphOfGroups& G, const GroupWord& u, const GroupWord& w, const std::vector<TreeVertex>& ball) {
  for (const auto& v : ball)
    if (!(act(G, u, v) == act(G, w, v))) return false;
  return true;
}

struct NormalFormOracleReport {
  std::size_t letters = 0;
  std::size_t words = 0;
  std::size_t ball_vertices = 0;
  std::size_t elements = 0;              // distinct normal forms
  std::size_t action_discrepancies = 0;  // reduce-equality != action-equality
  std::size_t model_discrepancies = 0;   // reduce-equality != model equality
  std::size_t fingerprint_collisions = 0;
  std::string first_discrepancy;
  double seconds = 0;
  bool pass() const { return action_discrepancies == 0 && model_discrepancies == 0; }
};

inline NormalFormOracleReport normal_form_oracle(const GraphOfGroups& G, bool gprime, int max_len, long bound,
                                                 int ball_radius) {
  const auto t0 = std::chrono::steady_clock::now();
  NormalFormOracleReport r;
  const auto letters = generator_letters(G, bound);
  const auto words = all_words(letters, max_len);
  const auto ball = tree_ball(G, base_vertex(G, 0), ball_radius, ExponentWindow{0, 1});
  r.letters = letters.size();
  r.words = words.size();
  r.ball_vertices = ball.size();

  struct ClassInfo {
    std::size_t first;
    Fingerprint fp;
    std::string model;
  };
  std::unordered_map<std::string, ClassInfo> by_nf;
  std::unordered_map<std::string, std::string> nf_of_model;
  std::unordered_map<Fingerprint, std::size_t, FingerprintHash> word_of_fp;
  auto note = [&](const std::string& what, std::size_t i) {
    if (r.first_discrepancy.empty()) r.first_discrepancy = what + " at word #" + std::to_string(i);
  };

  for (std::size_t i = 0; i < words.size(); ++i) {
    const NormalForm nf = reduce(G, words[i]);
    const std::string key = nf.key();
    const Fingerprint fp = action_fingerprint(G, words[i], ball);
    const std::string model = model_key(words[i], gprime);
    auto [it, fresh] = by_nf.try_emplace(key, ClassInfo{i, fp, model});
    if (!fresh) {
      if (!(it->second.fp == fp)) {
        ++r.action_discrepancies;
        note("equal normal forms act differently", i);
      }
      if (it->second.model != model) {
        ++r.model_discrepancies;
        note("equal normal forms are different group elements", i);
      }
      continue;
    }
    auto [mt, mfresh] = nf_of_model.try_emplace(model, key);
    if (!mfresh && mt->second != key) {
      ++r.model_discrepancies;
      note("one group element has two normal forms", i);
    }
    auto [ft, ffresh] = word_of_fp.try_emplace(fp, i);
    if (!ffresh) {
      if (same_action(G, words[ft->second], words[i], ball)) {
        ++r.action_discrepancies;
        note("different normal forms act identically", i);
      } else {
        ++r.fingerprint_collisions;
      }
    }
  }
  r.elements = by_nf.size();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace gtv::oracle
