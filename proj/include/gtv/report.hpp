#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gtv/exactfield/json_io.hpp"

namespace gtv {

enum class Verdict { pass, fail, error };
std::string verdict_name(Verdict v);

struct VerificationReport {
  std::string name;
  std::string anchor;  // which statement the check instantiates
  Verdict verdict = Verdict::error;
  json values = json::object();
  json intervals = json::object();
  double runtime_s = 0;
};

// Runs `body`, which fills values/intervals and returns the verdict. A
// VerificationError becomes FAIL; any other exception becomes ERROR. Either
// way the message lands in values["failure"] or values["error"].
VerificationReport run_check(std::string name, std::string anchor,
                             const std::function<bool(VerificationReport&)>& body);

// 0 when everything passed, 2 when any check errored, 1 otherwise.
int exit_code(const std::vector<VerificationReport>& reports);

json to_json(const VerificationReport& r);
json to_json(const std::vector<VerificationReport>& rs);
// One line: verdict, name, anchor, runtime, and a compact value summary.
std::string render_line(const VerificationReport& r, std::size_t max_values = 160);

}  // namespace gtv
