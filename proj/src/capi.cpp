#include "rank2/capi.h"

#include <cstring>
#include <new>
#include <string>

#include "rank2/verify.hpp"

using namespace rank2;

struct r2c_algebra {
  CartanParams params;
  int window_cap;
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

r2c_status map_errc(Errc e) {
  switch (e) {
    case Errc::inexact: return R2C_ERR_INEXACT;
    case Errc::zero_poly: return R2C_ERR_ZERO_POLY;
    case Errc::ring_mismatch: return R2C_ERR_RING_MISMATCH;
    case Errc::not_affine: return R2C_ERR_NOT_AFFINE;
    case Errc::window_exceeded: return R2C_ERR_WINDOW_EXCEEDED;
    case Errc::not_pointed: return R2C_ERR_NOT_POINTED;
    case Errc::invalid_label: return R2C_ERR_INVALID_LABEL;
    case Errc::not_forbidden: return R2C_ERR_NOT_FORBIDDEN;
    case Errc::unsupported: return R2C_ERR_UNSUPPORTED;
    case Errc::unsupported_index: return R2C_ERR_UNSUPPORTED_INDEX;
    case Errc::not_in_algebra: return R2C_ERR_NOT_IN_ALGEBRA;
    case Errc::parse_error: return R2C_ERR_PARSE;
    case Errc::invalid_argument: return R2C_ERR_INVALID_ARGUMENT;
  }
  return R2C_ERR_INTERNAL;
}

template <class Fn>
r2c_status guarded(r2c_algebra* a, Fn&& fn) {
  try {
    if (a) a->last_error.clear();
    return fn();
  } catch (const AlgebraError& e) {
    if (a) a->last_error = e.what();
    return map_errc(e.code());
  } catch (const std::exception& e) {
    if (a) a->last_error = e.what();
    return R2C_ERR_INTERNAL;
  }
}

int chart_cap(const r2c_algebra* a) {
  return a->window_cap > 0 ? a->window_cap : default_window_cap();
}

}  // namespace

extern "C" {

const char* r2c_status_name(r2c_status s) {
  switch (s) {
    case R2C_OK: return "OK";
    case R2C_ERR_INEXACT: return "INEXACT";
    case R2C_ERR_ZERO_POLY: return "ZERO_POLY";
    case R2C_ERR_RING_MISMATCH: return "RING_MISMATCH";
    case R2C_ERR_NOT_AFFINE: return "NOT_AFFINE";
    case R2C_ERR_WINDOW_EXCEEDED: return "WINDOW_EXCEEDED";
    case R2C_ERR_NOT_POINTED: return "NOT_POINTED";
    case R2C_ERR_INVALID_LABEL: return "INVALID_LABEL";
    case R2C_ERR_NOT_FORBIDDEN: return "NOT_FORBIDDEN";
    case R2C_ERR_UNSUPPORTED: return "UNSUPPORTED";
    case R2C_ERR_UNSUPPORTED_INDEX: return "UNSUPPORTED_INDEX";
    case R2C_ERR_NOT_IN_ALGEBRA: return "NOT_IN_ALGEBRA";
    case R2C_ERR_PARSE: return "PARSE_ERROR";
    case R2C_ERR_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    case R2C_ERR_INTERNAL: return "INTERNAL";
  }
  return "UNKNOWN";
}

r2c_algebra* r2c_algebra_new(int b, int c, int window_cap) {
  if (b < 1 || c < 1 || window_cap < 0) return nullptr;
  return new (std::nothrow) r2c_algebra{CartanParams(b, c), window_cap, {}};
}

void r2c_algebra_free(r2c_algebra* a) { delete a; }

const char* r2c_last_error(const r2c_algebra* a) { return a ? a->last_error.c_str() : ""; }

void r2c_string_free(char* s) { std::free(s); }

r2c_status r2c_gen(r2c_algebra* a, long long base, long long m, int as_text, char** out) {
  if (!a || !out) return R2C_ERR_INVALID_ARGUMENT;
  return guarded(a, [&] {
    ClusterChart chart(a->params, base, chart_cap(a));
    const ZPoly& v = chart.variable(m);
    std::string s = as_text ? poly_to_text(v, "y" + std::to_string(base),
                                           "y" + std::to_string(base + 1))
                            : poly_to_json(v).dump();
    *out = dup_string(s);
    return R2C_OK;
  });
}

r2c_status r2c_expand(r2c_algebra* a, long long base, const char* expr, int as_text,
                      char** out) {
  if (!a || !out || !expr) return R2C_ERR_INVALID_ARGUMENT;
  return guarded(a, [&] {
    ClusterChart chart(a->params, base, chart_cap(a));
    ZPoly v = expand(chart, GeneratorExpr::parse(expr));
    std::string s = as_text ? poly_to_text(v, "y" + std::to_string(base),
                                           "y" + std::to_string(base + 1))
                            : poly_to_json(v).dump();
    *out = dup_string(s);
    return R2C_OK;
  });
}

r2c_status r2c_zn(r2c_algebra* a, long long base, long long n, int as_text, char** out) {
  if (!a || !out) return R2C_ERR_INVALID_ARGUMENT;
  return guarded(a, [&] {
    if (n < 1) fail(Errc::invalid_argument, "z index must be positive");
    ClusterChart chart(a->params, base, chart_cap(a));
    ZPoly v = chart.z_n(n);
    std::string s = as_text ? poly_to_text(v, "y" + std::to_string(base),
                                           "y" + std::to_string(base + 1))
                            : poly_to_json(v).dump();
    *out = dup_string(s);
    return R2C_OK;
  });
}

r2c_status r2c_roots(r2c_algebra* a, long long height_bound, char** out) {
  if (!a || !out) return R2C_ERR_INVALID_ARGUMENT;
  return guarded(a, [&] {
    if (height_bound < 1) fail(Errc::invalid_argument, "height bound must be positive");
    auto roots = positive_real_roots(a->params, Int((long)height_bound));
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : roots) j.push_back(rootvec_to_json(r));
    *out = dup_string(j.dump());
    return R2C_OK;
  });
}

r2c_status r2c_denominator_vector(r2c_algebra* a, long long m, long long* a1, long long* a2) {
  if (!a || !a1 || !a2) return R2C_ERR_INVALID_ARGUMENT;
  return guarded(a, [&] {
    RootVec r = denominator_vector(m, a->params);
    if (!r.a1.fits_slong_p() || !r.a2.fits_slong_p())
      fail(Errc::invalid_argument, "denominator vector exceeds the C integer range");
    *a1 = r.a1.get_si();
    *a2 = r.a2.get_si();
    return R2C_OK;
  });
}

r2c_status r2c_newton(r2c_algebra* a, long long base, const char* expr, int as_svg,
                      char** out) {
  if (!a || !out || !expr) return R2C_ERR_INVALID_ARGUMENT;
  return guarded(a, [&] {
    ClusterChart chart(a->params, base, chart_cap(a));
    ZPoly v = expand(chart, GeneratorExpr::parse(expr));
    LatticePolygon poly = newton_polygon(v);
    *out = dup_string(as_svg ? polygon_to_svg(poly) : polygon_to_json(poly).dump());
    return R2C_OK;
  });
}

r2c_status r2c_newton_label(r2c_algebra* a, long long base, int kind, long long a1,
                            long long a2, int as_svg, char** out) {
  if (!a || !out) return R2C_ERR_INVALID_ARGUMENT;
  return guarded(a, [&] {
    ClusterChart chart(a->params, base, chart_cap(a));
    BasisLabel label = kind == 0
                           ? BasisLabel::real(RootVec{long(a1), long(a2)}, a->params)
                           : BasisLabel::imaginary(a1, a->params);
    LatticePolygon poly = newton_polygon(basis_element(chart, label));
    *out = dup_string(as_svg ? polygon_to_svg(poly) : polygon_to_json(poly).dump());
    return R2C_OK;
  });
}

r2c_status r2c_decompose(r2c_algebra* a, long long base, const char* expr, char** out) {
  if (!a || !out || !expr) return R2C_ERR_INVALID_ARGUMENT;
  return guarded(a, [&] {
    ClusterChart chart(a->params, base, chart_cap(a));
    Decomposition d = decompose(chart, expand(chart, GeneratorExpr::parse(expr)));
    *out = dup_string(decomposition_to_json(d).dump());
    return R2C_OK;
  });
}

r2c_status r2c_positivity(r2c_algebra* a, long long base, const char* expr, int* positive,
                          char** out) {
  if (!a || !out || !positive || !expr) return R2C_ERR_INVALID_ARGUMENT;
  return guarded(a, [&] {
    ClusterChart chart(a->params, base, chart_cap(a));
    PositivityResult r = is_positive(chart, expand(chart, GeneratorExpr::parse(expr)));
    *positive = r.positive ? 1 : 0;
    nlohmann::ordered_json j;
    j["verdict"] = r.positive ? "POSITIVE" : "NOT_POSITIVE";
    j["certificate"] = decomposition_to_json(r.certificate);
    if (r.negative_label) {
      nlohmann::ordered_json w;
      if (r.negative_label->kind == BasisLabel::Kind::imaginary)
        w["label"] = {{"imaginary", r.negative_label->n}};
      else
        w["label"] = {{"real", rootvec_to_json(r.negative_label->alpha)}};
      w["coeff"] = r.certificate.terms.at(*r.negative_label).get_str();
      if (r.negative_chart) {
        w["chart_base"] = *r.negative_chart;
        w["exponent"] = {r.negative_exponent->g1, r.negative_exponent->g2};
      }
      j["witness"] = std::move(w);
    }
    *out = dup_string(j.dump());
    return R2C_OK;
  });
}

r2c_status r2c_deform_gen(long long base, long long m, int window_cap, int as_text,
                          char** out) {
  if (!out) return R2C_ERR_INVALID_ARGUMENT;
  return guarded(nullptr, [&] {
    DeformChart chart(base, window_cap > 0 ? window_cap : default_window_cap());
    const QLaurent& v = chart.Y(m);
    std::string s = as_text ? poly_to_text(v, "Y" + std::to_string(base),
                                           "Y" + std::to_string(base + 1))
                            : poly_to_json(v).dump();
    *out = dup_string(s);
    return R2C_OK;
  });
}

r2c_status r2c_deform_zn(long long base, long long n, int window_cap, int as_text,
                         char** out) {
  if (!out) return R2C_ERR_INVALID_ARGUMENT;
  return guarded(nullptr, [&] {
    if (n < 1) fail(Errc::invalid_argument, "Z index must be positive");
    DeformChart chart(base, window_cap > 0 ? window_cap : default_window_cap());
    QLaurent v = chart.Z_n(n);
    std::string s = as_text ? poly_to_text(v, "Y" + std::to_string(base),
                                           "Y" + std::to_string(base + 1))
                            : poly_to_json(v).dump();
    *out = dup_string(s);
    return R2C_OK;
  });
}

r2c_status r2c_verify(const char* suite, const char* options_json, char** report,
                      int* failed) {
  if (!suite || !report || !failed) return R2C_ERR_INVALID_ARGUMENT;
  return guarded(nullptr, [&] {
    VerifyOptions opts;
    if (options_json && *options_json) {
      auto j = nlohmann::json::parse(options_json, nullptr, false);
      if (j.is_discarded()) fail(Errc::parse_error, "options_json is not valid JSON");
      if (j.contains("b")) opts.b = j["b"].get<int>();
      if (j.contains("c")) opts.c = j["c"].get<int>();
      if (j.contains("nmax")) opts.nmax = j["nmax"].get<int>();
      if (j.contains("pmax")) opts.pmax = j["pmax"].get<int>();
      if (j.contains("mmax")) opts.mmax = j["mmax"].get<int>();
      if (j.contains("count")) opts.count = j["count"].get<int>();
      if (j.contains("seed")) opts.seed = j["seed"].get<unsigned long long>();
    }
    VerificationReport r = run_suite(suite, opts);
    *failed = r.failed();
    *report = dup_string(r.to_json().dump());
    return R2C_OK;
  });
}

}  // extern "C"
