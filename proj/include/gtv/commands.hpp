#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gtv/exactfield/rational.hpp"
#include "gtv/report.hpp"
#include "gtv/thurston.hpp"

namespace gtv {

// "1e-12", "0.001", "3/4" or "7" as an exact rational.
Rational parse_decimal(const std::string& text);

// Inclusive range "a..b" or a single value "a".
struct LongRange {
  long lo = 0;
  long hi = 0;
};
LongRange parse_range(const std::string& text);

// Intersection matrix from a JSON file: {"matrix": ...}, a bare array, or a
// square-tiled surface, whose bisector crossing matrix is used.
IntersectionMatrix load_matrix(const std::string& path);

struct Example63Options {
  Rational width{1, 1000000};
  std::optional<IntersectionMatrix> matrix;  // default: the staircase matrix
};
std::vector<VerificationReport> cmd_example63(const Example63Options& opt);

struct TreeOptions {
  std::string fixture = "Gprime";  // "G", "Gprime", or a JSON file path
  int n_max = 10;
  std::vector<int> R{1};
  int ball_radius = 8;
  int word_length = 6;
  std::uint64_t seed = 1;
  int instances = 200;
};
std::vector<VerificationReport> cmd_tree(const TreeOptions& opt);

struct ArithOptions {
  long p = 5, q = 7, g = 3;
  LongRange d{12, 20};
};
std::vector<VerificationReport> cmd_arith(const ArithOptions& opt);
std::vector<VerificationReport> cmd_goldbach(LongRange genus);

struct VerifyAllOptions {
  Rational width{1, 1000000};
  std::uint64_t seed = 1;
};
std::vector<VerificationReport> cmd_verify_all(const VerifyAllOptions& opt);

}  // namespace gtv
