#pragma once

// Batch verification suites over the identity catalog of the engine, with
// machine-readable reports. The CLI `verify`/`deform-verify` subcommands and
// the acceptance harness are thin wrappers over these.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rank2/canonical.hpp"
#include "rank2/deform.hpp"
#include "rank2/json_io.hpp"

namespace rank2 {

struct CaseResult {
  std::string id;
  std::string params;
  bool pass = false;
  std::string detail;  // on failure: the exact differing term
};

struct VerificationReport {
  std::string suite;
  std::vector<CaseResult> cases;
  long long wall_time_ms = 0;
  int passed() const {
    int n = 0;
    for (const auto& c : cases) n += c.pass;
    return n;
  }
  int failed() const { return int(cases.size()) - passed(); }
  nlohmann::ordered_json to_json() const;
};

struct VerifyOptions {
  std::optional<int> b;
  std::optional<int> c;
  int nmax = 5;
  int pmax = 5;
  int mmax = 4;
  int count = 200;
  unsigned long long seed = 20231212;
  int window_cap = 0;  // 0: default
};

using SuiteFn = std::function<VerificationReport(const VerifyOptions&)>;

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
VerificationReport run_suite(const std::string& name, const VerifyOptions& opts);

// Exact integer rank (fraction-free Gaussian elimination).
std::size_t bareiss_rank(std::vector<std::vector<Int>> m);

// First differing term of two expansions, for FAIL details.
std::string diff_detail(const ZPoly& a, const ZPoly& b);

}  // namespace rank2
