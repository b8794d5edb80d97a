// Acceptance harness: nine exactness criteria over the whole engine, one
// pass/fail line each. All comparisons are exact (integer arithmetic);
// criteria with a stated wall-clock budget enforce it.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "rank2/verify.hpp"

using namespace rank2;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass, long long ms, long long budget_ms,
            const std::string& detail) {
  bool in_budget = budget_ms <= 0 || ms < budget_ms;
  bool ok = pass && in_budget;
  if (!ok) ++failures;
  std::printf("[%s] criterion %d: %s (%lld ms%s)\n", ok ? "PASS" : "FAIL", index,
              name.c_str(), ms,
              budget_ms > 0 ? (std::string(" / budget ") + std::to_string(budget_ms) + " ms")
                                  .c_str()
                            : "");
  if (!pass && !detail.empty()) std::printf("        %s\n", detail.c_str());
  if (pass && !in_budget) std::printf("        over budget\n");
}

struct SuiteOutcome {
  bool pass = true;
  std::string detail;
};

SuiteOutcome run(const std::string& suite, const VerifyOptions& o) {
  VerificationReport r = run_suite(suite, o);
  SuiteOutcome out;
  for (const auto& c : r.cases) {
    if (!c.pass) {
      out.pass = false;
      out.detail += suite + "/" + c.id + " [" + c.params + "] " + c.detail + "; ";
    }
  }
  return out;
}

ZPoly from_list(std::initializer_list<std::tuple<int, int, long>> ts) {
  std::vector<ZPoly::Term> v;
  for (auto [g1, g2, c] : ts) v.push_back({Exp{g1, g2}, Int(c)});
  return ZPoly::from_terms(std::move(v));
}

// exchange recursion with no periodicity shortcut
std::map<long long, ZPoly> raw_recursion(CartanParams p, long long lo, long long hi) {
  std::map<long long, ZPoly> vars;
  vars.emplace(1, ZPoly::monomial(Exp{1, 0}, Int(1)));
  vars.emplace(2, ZPoly::monomial(Exp{0, 1}, Int(1)));
  const ZPoly one = ZPoly::constant(Int(1));
  auto power = [&](long long k) { return (unsigned long)((k % 2 != 0) ? p.b : p.c); };
  for (long long k = 2; k < hi; ++k)
    vars.emplace(k + 1, ZPoly::exact_div(vars.at(k).pow(power(k)) + one, vars.at(k - 1)));
  for (long long k = 1; k > lo; --k)
    vars.emplace(k - 1, ZPoly::exact_div(vars.at(k).pow(power(k)) + one, vars.at(k + 1)));
  return vars;
}

SuiteOutcome criterion1() {
  SuiteOutcome out;
  auto expect = [&](CartanParams p, long long m, const ZPoly& want,
                    const std::map<long long, ZPoly>& vars) {
    if (!(vars.at(m) == want)) {
      out.pass = false;
      out.detail += "y_" + std::to_string(m) + " (b=" + std::to_string(p.b) +
                    ",c=" + std::to_string(p.c) + ") " + diff_detail(vars.at(m), want) + "; ";
    }
  };

  {
    CartanParams p(1, 1);
    auto vars = raw_recursion(p, -2, 12);
    expect(p, 3, from_list({{-1, 1, 1}, {-1, 0, 1}}), vars);
    expect(p, 4, from_list({{0, -1, 1}, {-1, 0, 1}, {-1, -1, 1}}), vars);
    expect(p, 5, from_list({{1, -1, 1}, {0, -1, 1}}), vars);
    for (long long m = -2; m <= 7; ++m)
      if (!(vars.at(m) == vars.at(m + 5))) out.pass = false;
  }
  {
    CartanParams p(1, 2);
    auto vars = raw_recursion(p, -2, 12);
    expect(p, 3, from_list({{-1, 2, 1}, {-1, 0, 1}}), vars);
    expect(p, 4, from_list({{0, -1, 1}, {-1, 1, 1}, {-1, -1, 1}}), vars);
    expect(p, 5, from_list({{1, -2, 1}, {0, -2, 2}, {-1, -2, 1}, {-1, 0, 1}}), vars);
    expect(p, 6, from_list({{1, -1, 1}, {0, -1, 1}}), vars);
    for (long long m = -2; m <= 6; ++m)
      if (!(vars.at(m) == vars.at(m + 6))) out.pass = false;
  }
  {
    CartanParams p(1, 3);
    auto vars = raw_recursion(p, -2, 12);
    expect(p, 3, from_list({{-1, 3, 1}, {-1, 0, 1}}), vars);
    expect(p, 4, from_list({{0, -1, 1}, {-1, 2, 1}, {-1, -1, 1}}), vars);
    expect(p, 5,
           from_list({{1, -3, 1},
                      {0, -3, 3},
                      {-1, -3, 3},
                      {-2, -3, 1},
                      {-2, 3, 1},
                      {-1, 0, 3},
                      {-2, 0, 2}}),
           vars);
    expect(p, 6, from_list({{1, -2, 1}, {0, -2, 2}, {-1, -2, 1}, {-1, 1, 1}}), vars);
    expect(p, 7, from_list({{2, -3, 1}, {1, -3, 3}, {0, -3, 3}, {-1, -3, 1}, {-1, 0, 1}}),
           vars);
    expect(p, 8, from_list({{1, -1, 1}, {0, -1, 1}}), vars);
    for (long long m = -2; m <= 4; ++m)
      if (!(vars.at(m) == vars.at(m + 8))) out.pass = false;
  }
  if (!out.pass && out.detail.empty()) out.detail = "finite-type periodicity violated";
  return out;
}

}  // namespace

int main() {
  VerifyOptions o;

  auto timed = [&](int idx, const std::string& name, long long budget,
                   const std::function<SuiteOutcome()>& fn) {
    auto t0 = Clock::now();
    SuiteOutcome r = fn();
    long long ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    report(idx, name, r.pass, ms, budget, r.detail);
  };

  timed(1, "finite-type Laurent tables and periodicity y_{m+h+2} = y_m", 1000,
        [&] { return criterion1(); });

  timed(2, "Laurent phenomenon stress, 7 algebras x chart bases [-3,3]", 60000,
        [&] { return run("laurent", o); });

  timed(3, "Newton polygons: Newt(y_m) = Delta(alpha(m)), Newt(z_n) = Delta(n delta), monic",
        0, [&] { return run("newton", o); });

  timed(4, "straightening suite: finite residues + affine grids, double expansion", 120000,
        [&] {
          SuiteOutcome a = run("straightening-finite", o);
          SuiteOutcome b = run("straightening-affine", o);
          return SuiteOutcome{a.pass && b.pass, a.detail + b.detail};
        });

  timed(5, "deformed lemma relations over Z[q1,q2] and both specializations", 0, [&] {
    SuiteOutcome a = run("lemma", o);
    SuiteOutcome b = run("specialize", o);
    return SuiteOutcome{a.pass && b.pass, a.detail + b.detail};
  });

  timed(6, "canonical-basis round trip, 200 random decompositions per algebra", 60000,
        [&] { return run("roundtrip", o); });

  timed(7, "positivity: generators certified, non-local element window-positive yet rejected",
        0, [&] { return run("positivity", o); });

  timed(8, "exact integer rank: cluster-monomial and standard-monomial independence", 30000,
        [&] { return run("independence", o); });

  timed(9, "sigma symmetry of denominator vectors and z_n chart independence", 0,
        [&] { return run("sigma", o); });

  if (failures == 0)
    std::printf("acceptance: all 9 criteria PASS\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
