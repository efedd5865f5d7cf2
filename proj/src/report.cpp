#include "gtv/report.hpp"

#include <chrono>
#include <cstdio>

#include "gtv/error.hpp"

namespace gtv {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "PASS";
    case Verdict::fail:
      return "FAIL";
    case Verdict::error:
      return "ERROR";
  }
  return "ERROR";
}

VerificationReport run_check(std::string name, std::string anchor,
                             const std::function<bool(VerificationReport&)>& body) {
  VerificationReport r;
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.verdict = body(r) ? Verdict::pass : Verdict::fail;
  } catch (const VerificationError& e) {
    r.verdict = Verdict::fail;
    r.values["failure"] = e.what();
  } catch (const std::exception& e) {
    r.verdict = Verdict::error;
    r.values["error"] = e.what();
  }
  r.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

int exit_code(const std::vector<VerificationReport>& reports) {
  int code = 0;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::error) return 2;
    if (r.verdict == Verdict::fail) code = 1;
  }
  return code;
}

json to_json(const VerificationReport& r) {
  return json{{"name", r.name},
              {"anchor", r.anchor},
              {"verdict", verdict_name(r.verdict)},
              {"values", r.values},
              {"intervals", r.intervals},
              {"runtime_s", r.runtime_s}};
}

json to_json(const std::vector<VerificationReport>& rs) {
  json a = json::array();
  for (const auto& r : rs) a.push_back(to_json(r));
  return a;
}

std::string render_line(const VerificationReport& r, std::size_t max_values) {
  char t[32];
  std::snprintf(t, sizeof t, "%.3fs", r.runtime_s);
  std::string v = r.values.dump();
  if (v.size() > max_values) v = v.substr(0, max_values) + "...";
  std::string verdict = verdict_name(r.verdict);
  verdict.resize(5, ' ');
  return verdict + " " + r.name + "  [" + r.anchor + "]  " + t + "  " + v;
}

}  // namespace gtv
