#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gtv/commands.hpp"
#include "gtv/error.hpp"

namespace {

struct Flags {
  bool json = false;
  std::uint64_t seed = 1;
  std::string width = "1e-6";
  int n_max = 10;
  std::vector<int> R;
  int ball_radius = 8;
  int word_length = 6;
  int instances = 200;
  std::string fixture = "Gprime";
  std::string matrix;
  std::string genus;
  long p = 5, q = 7;
  std::string d = "12..20";
};

std::vector<gtv::VerificationReport> run(const std::string& target, const Flags& f) {
  using namespace gtv;
  const Rational width = parse_decimal(f.width);
  if (width.sign() <= 0) throw PreconditionError("--width must be positive");
  if (target == "all") return cmd_verify_all({width, f.seed});
  if (target == "example63") {
    Example63Options o{width, std::nullopt};
    if (!f.matrix.empty()) o.matrix = load_matrix(f.matrix);
    return cmd_example63(o);
  }
  if (target == "tree") {
    TreeOptions o;
    o.fixture = f.fixture;
    o.n_max = f.n_max;
    if (!f.R.empty()) o.R = f.R;
    o.ball_radius = f.ball_radius;
    o.word_length = f.word_length;
    o.seed = f.seed;
    o.instances = f.instances;
    return cmd_tree(o);
  }
  if (target == "arith") {
    const LongRange g = parse_range(f.genus.empty() ? "3" : f.genus);
    if (g.lo != g.hi) throw PreconditionError("arith takes a single genus");
    return cmd_arith({f.p, f.q, g.lo, parse_range(f.d)});
  }
  if (target == "goldbach") return cmd_goldbach(parse_range(f.genus.empty() ? "2..50" : f.genus));
  throw PreconditionError("unknown target '" + target + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of tree actions, Thurston constructions and cover arithmetic"};
  app.require_subcommand(1);
  Flags f;
  app.add_flag("--json", f.json, "Print reports as JSON");
  app.add_option("--seed", f.seed, "Seed for random instances")->capture_default_str();
  app.add_option("--width", f.width, "Target width of numeric intervals, e.g. 1e-12")->capture_default_str();
  app.add_option("--n-max", f.n_max, "Largest ray index n for the tree checks")->capture_default_str();
  app.add_option("--R", f.R, "Displacement bounds R for acylindricity (repeatable)");
  app.add_option("--ball-radius", f.ball_radius, "Radius of the enumerated tree ball")->capture_default_str();
  app.add_option("--word-length", f.word_length, "Word length of enumerated group elements")->capture_default_str();
  app.add_option("--instances", f.instances, "Random instances per property suite")->capture_default_str();
  app.add_option("--fixture", f.fixture, "Graph of groups: G, Gprime, or a JSON file")->capture_default_str();
  app.add_option("--matrix", f.matrix, "Intersection matrix JSON (matrix, array or square-tiled surface)");
  app.add_option("--genus", f.genus, "Genus g, or a range a..b for goldbach");
  app.add_option("--p", f.p, "Prong count p")->capture_default_str();
  app.add_option("--q", f.q, "Prong count q")->capture_default_str();
  app.add_option("--d", f.d, "Cover degree range a..b")->capture_default_str();

  std::string target;
  auto* verify = app.add_subcommand("verify", "Run a named check list");
  verify->add_option("target", target, "all | example63 | tree | arith | goldbach")
      ->required()
      ->check(CLI::IsMember({"all", "example63", "tree", "arith", "goldbach"}));
  for (const char* name : {"example63", "tree", "arith", "goldbach"})
    app.add_subcommand(name, std::string("Shorthand for 'verify ") + name + "'");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  for (auto* sub : app.get_subcommands())
    if (sub->get_name() != "verify") target = sub->get_name();

  std::vector<gtv::VerificationReport> reports;
  try {
    reports = run(target, f);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const int code = gtv::exit_code(reports);
  int pass = 0, fail = 0, error = 0;
  for (const auto& r : reports) {
    if (r.verdict == gtv::Verdict::pass) ++pass;
    else if (r.verdict == gtv::Verdict::fail) ++fail;
    else ++error;
  }
  if (f.json) {
    std::cout << gtv::json{{"target", target},
                           {"reports", gtv::to_json(reports)},
                           {"summary", {{"pass", pass}, {"fail", fail}, {"error", error}, {"exit_code", code}}}}
                     .dump(2)
              << "\n";
  } else {
    for (const auto& r : reports) std::cout << gtv::render_line(r) << "\n";
    std::cout << reports.size() << (reports.size() == 1 ? " check: " : " checks: ") << pass << " PASS, " << fail << " FAIL, " << error << " ERROR\n";
  }
  return code;
}
