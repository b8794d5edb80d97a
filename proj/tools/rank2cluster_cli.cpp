// Command-line surface of the rank-2 cluster algebra engine. Everything goes
// through the shared-library C API; exit codes make the tool usable as a CI
// regression oracle: 0 success/PASS, 1 NOT_POSITIVE or FAIL, 2 usage error.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rank2/capi.h"

namespace {

struct Handle {
  r2c_algebra* a = nullptr;
  ~Handle() { r2c_algebra_free(a); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { r2c_string_free(s); }
};

int report_error(r2c_status st, const r2c_algebra* a) {
  std::cerr << "error: " << r2c_status_name(st);
  if (a && *r2c_last_error(a)) std::cerr << ": " << r2c_last_error(a);
  std::cerr << "\n";
  return 2;
}

int print_or_fail(r2c_status st, const r2c_algebra* a, const OwnedString& out) {
  if (st != R2C_OK) return report_error(st, a);
  std::cout << out.s << "\n";
  return 0;
}

std::string pretty(const char* json_text) {
  return nlohmann::json::parse(json_text).dump(2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact rank-2 cluster algebra engine: cluster variables, canonical bases, positivity"};
  app.require_subcommand(1);

  int b = 1, c = 1;
  long long base = 1, m = 1, n = 1, height = 10;
  std::string expr, format = "text", suite = "all";
  bool svg = false;
  int nmax = 5, pmax = 5, mmax = 4, count = 200;

  auto add_bc = [&](CLI::App* cmd) {
    cmd->add_option("--b", b, "Cartan parameter b")->required();
    cmd->add_option("--c", c, "Cartan parameter c")->required();
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* gen = app.add_subcommand("gen", "expand a cluster variable y_m in a chart");
  add_bc(gen);
  gen->add_option("--m", m, "cluster variable index")->required();
  gen->add_option("--base", base, "chart base index");
  add_format(gen);

  auto* ee = app.add_subcommand("expr-expand", "expand a generator expression in a chart");
  add_bc(ee);
  ee->add_option("--base", base, "chart base index");
  ee->add_option("--expr", expr, "expression, e.g. \"y0*y3 - y1*y2\"")->required();
  add_format(ee);

  auto* zc = app.add_subcommand("z", "expand the affine element z_n in a chart");
  add_bc(zc);
  zc->add_option("--n", n, "Chebyshev index")->required();
  zc->add_option("--base", base, "chart base index");
  add_format(zc);

  auto* rc = app.add_subcommand("roots", "positive real roots up to a height bound");
  add_bc(rc);
  rc->add_option("--height", height, "height bound")->required();
  add_format(rc);

  std::string real_label;
  long long imaginary_label = 0;
  auto* nw = app.add_subcommand("newton", "Newton polygon of an expression or basis label");
  add_bc(nw);
  nw->add_option("--base", base, "chart base index");
  auto* nw_expr = nw->add_option("--expr", expr, "expression");
  auto* nw_real = nw->add_option("--real", real_label, "basis label a1,a2");
  auto* nw_imag = nw->add_option("--imaginary", imaginary_label, "basis label n (for n*delta)");
  nw_expr->excludes(nw_real)->excludes(nw_imag);
  nw_real->excludes(nw_imag);
  nw->add_flag("--svg", svg, "emit an SVG document instead of JSON");
  add_format(nw);

  auto* dc = app.add_subcommand("decompose", "decompose into the canonical basis (bc <= 4)");
  add_bc(dc);
  dc->add_option("--base", base, "chart base index");
  dc->add_option("--expr", expr, "expression")->required();
  add_format(dc);

  auto* pos = app.add_subcommand("positivity", "decide positivity with certificate/witness");
  add_bc(pos);
  pos->add_option("--base", base, "chart base index");
  pos->add_option("--expr", expr, "expression")->required();
  add_format(pos);

  auto* vf = app.add_subcommand("verify", "run a verification suite");
  vf->add_option("--suite", suite, "suite name (see README)")->required();
  vf->add_option("--b", b, "restrict to Cartan parameter b");
  vf->add_option("--c", c, "restrict to Cartan parameter c");
  vf->add_option("--nmax", nmax, "grid bound n");
  vf->add_option("--pmax", pmax, "grid bound p");
  vf->add_option("--mmax", mmax, "grid bound |m|");
  vf->add_option("--count", count, "randomized case count");
  add_format(vf);

  auto* dg = app.add_subcommand("deform-gen", "expand Y_m of the deformed algebra");
  dg->add_option("--m", m, "index")->required();
  dg->add_option("--base", base, "chart base index");
  add_format(dg);

  auto* dv = app.add_subcommand("deform-verify", "verify the deformed product relations");
  dv->add_option("--suite", suite, "suite name (lemma or specialize)")->required();
  dv->add_option("--nmax", nmax, "grid bound n");
  dv->add_option("--pmax", pmax, "grid bound p");
  dv->add_option("--mmax", mmax, "grid bound |m|");
  add_format(dv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  bool as_text = format == "text";

  auto run_verify = [&](bool restrict_bc) -> int {
    nlohmann::json opts;
    if (restrict_bc) {
      opts["b"] = b;
      opts["c"] = c;
    }
    opts["nmax"] = nmax;
    opts["pmax"] = pmax;
    opts["mmax"] = mmax;
    opts["count"] = count;
    OwnedString out;
    int failed = 0;
    r2c_status st = r2c_verify(suite.c_str(), opts.dump().c_str(), &out.s, &failed);
    if (st != R2C_OK) return report_error(st, nullptr);
    if (as_text) {
      auto j = nlohmann::json::parse(out.s);
      for (const auto& cse : j["cases"]) {
        if (cse["status"] == "FAIL")
          std::cout << "FAIL " << cse["id"].get<std::string>() << " ["
                    << cse["params"].get<std::string>() << "] "
                    << cse["detail"].get<std::string>() << "\n";
      }
      std::cout << (failed == 0 ? "PASS" : "FAIL") << " suite=" << suite << " cases="
                << j["cases"].size() << " failed=" << failed << " wall_ms="
                << j["wall_time_ms"] << "\n";
    } else {
      std::cout << out.s << "\n";
    }
    return failed == 0 ? 0 : 1;
  };

  if (vf->parsed()) return run_verify(vf->count("--b") && vf->count("--c"));
  if (dv->parsed()) {
    if (suite != "lemma" && suite != "specialize") {
      std::cerr << "error: deform-verify supports the suites \"lemma\" and \"specialize\"\n";
      return 2;
    }
    return run_verify(false);
  }

  if (dg->parsed()) {
    OwnedString out;
    r2c_status st = r2c_deform_gen(base, m, 0, as_text, &out.s);
    return print_or_fail(st, nullptr, out);
  }

  Handle h;
  h.a = r2c_algebra_new(b, c, 0);
  if (!h.a) {
    std::cerr << "error: INVALID_ARGUMENT: b and c must be positive\n";
    return 2;
  }

  if (gen->parsed()) {
    OwnedString out;
    return print_or_fail(r2c_gen(h.a, base, m, as_text, &out.s), h.a, out);
  }
  if (ee->parsed()) {
    OwnedString out;
    return print_or_fail(r2c_expand(h.a, base, expr.c_str(), as_text, &out.s), h.a, out);
  }
  if (zc->parsed()) {
    OwnedString out;
    return print_or_fail(r2c_zn(h.a, base, n, as_text, &out.s), h.a, out);
  }
  if (rc->parsed()) {
    OwnedString out;
    r2c_status st = r2c_roots(h.a, height, &out.s);
    if (st != R2C_OK) return report_error(st, h.a);
    std::cout << (as_text ? pretty(out.s) : std::string(out.s)) << "\n";
    return 0;
  }
  if (nw->parsed()) {
    OwnedString out;
    r2c_status st;
    if (nw_real->count()) {
      long long a1 = 0, a2 = 0;
      if (std::sscanf(real_label.c_str(), "%lld,%lld", &a1, &a2) != 2) {
        std::cerr << "error: INVALID_ARGUMENT: --real expects \"a1,a2\"\n";
        return 2;
      }
      st = r2c_newton_label(h.a, base, 0, a1, a2, svg ? 1 : 0, &out.s);
    } else if (nw_imag->count()) {
      st = r2c_newton_label(h.a, base, 1, imaginary_label, 0, svg ? 1 : 0, &out.s);
    } else if (nw_expr->count()) {
      st = r2c_newton(h.a, base, expr.c_str(), svg ? 1 : 0, &out.s);
    } else {
      std::cerr << "error: INVALID_ARGUMENT: newton needs --expr, --real or --imaginary\n";
      return 2;
    }
    if (st != R2C_OK) return report_error(st, h.a);
    if (svg)
      std::cout << out.s;
    else
      std::cout << (as_text ? pretty(out.s) : std::string(out.s)) << "\n";
    return 0;
  }
  if (dc->parsed()) {
    OwnedString out;
    r2c_status st = r2c_decompose(h.a, base, expr.c_str(), &out.s);
    if (st != R2C_OK) return report_error(st, h.a);
    std::cout << (as_text ? pretty(out.s) : std::string(out.s)) << "\n";
    return 0;
  }
  if (pos->parsed()) {
    OwnedString out;
    int positive = 0;
    r2c_status st = r2c_positivity(h.a, base, expr.c_str(), &positive, &out.s);
    if (st != R2C_OK) return report_error(st, h.a);
    if (as_text) {
      auto j = nlohmann::json::parse(out.s);
      std::cout << j["verdict"].get<std::string>() << "\n" << j.dump(2) << "\n";
    } else {
      std::cout << out.s << "\n";
    }
    return positive ? 0 : 1;
  }
  return 2;
}
