#include "rank2/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace rank2 {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Int int_field(const json& j) {
  try {
    if (j.is_number_integer()) return Int((long)j.get<long long>());
    return Int(j.get<std::string>());
  } catch (const std::exception&) {
    fail(Errc::parse_error, "expected a decimal integer, got " + j.dump());
  }
}

ordered_json qpoly_to_json(const QPoly& c) {
  ordered_json terms = ordered_json::array();
  for (const auto& t : c.terms()) {
    terms.push_back({{"qexp", {t.e.g1, t.e.g2}}, {"c", t.c.get_str()}});
  }
  return {{"qterms", std::move(terms)}};
}

QPoly qpoly_from_json(const json& j) {
  std::vector<ZPoly::Term> ts;
  for (const auto& t : j.at("qterms")) {
    Exp e{t.at("qexp").at(0).get<int>(), t.at("qexp").at(1).get<int>()};
    if (e.g1 < 0 || e.g2 < 0) fail(Errc::parse_error, "negative q exponent");
    ts.push_back({e, int_field(t.at("c"))});
  }
  return QPoly::from_terms(std::move(ts));
}

void check_ring(const json& j, const char* want) {
  std::string ring = j.at("ring").get<std::string>();
  if (ring != want)
    fail(Errc::ring_mismatch, "expected ring \"" + std::string(want) + "\", got \"" + ring + "\"");
}

}  // namespace

ordered_json poly_to_json(const ZPoly& a) {
  ordered_json terms = ordered_json::array();
  for (const auto& t : a.terms()) {
    terms.push_back({{"exp", {t.e.g1, t.e.g2}}, {"coeff", t.c.get_str()}});
  }
  return {{"ring", "int"}, {"terms", std::move(terms)}};
}

ordered_json poly_to_json(const QLaurent& a) {
  ordered_json terms = ordered_json::array();
  for (const auto& t : a.terms()) {
    terms.push_back({{"exp", {t.e.g1, t.e.g2}}, {"coeff", qpoly_to_json(t.c)}});
  }
  return {{"ring", "qpoly"}, {"terms", std::move(terms)}};
}

ZPoly zpoly_from_json(const json& j) {
  check_ring(j, "int");
  std::vector<ZPoly::Term> ts;
  for (const auto& t : j.at("terms")) {
    Exp e{t.at("exp").at(0).get<int>(), t.at("exp").at(1).get<int>()};
    ts.push_back({e, int_field(t.at("coeff"))});
  }
  return ZPoly::from_terms(std::move(ts));
}

QLaurent qlaurent_from_json(const json& j) {
  check_ring(j, "qpoly");
  std::vector<QLaurent::Term> ts;
  for (const auto& t : j.at("terms")) {
    Exp e{t.at("exp").at(0).get<int>(), t.at("exp").at(1).get<int>()};
    ts.push_back({e, qpoly_from_json(t.at("coeff"))});
  }
  return QLaurent::from_terms(std::move(ts));
}

ordered_json polygon_to_json(const LatticePolygon& p) {
  ordered_json vs = ordered_json::array();
  for (const Exp& v : p.vertices) vs.push_back({v.g1, v.g2});
  return {{"vertices", std::move(vs)}};
}

LatticePolygon polygon_from_json(const json& j) {
  std::vector<Exp> vs;
  for (const auto& v : j.at("vertices")) vs.push_back(Exp{v.at(0).get<int>(), v.at(1).get<int>()});
  return convex_hull(std::move(vs));
}

ordered_json rootvec_to_json(const RootVec& r) {
  ordered_json out = ordered_json::array();
  for (const Int* v : {&r.a1, &r.a2}) {
    if (v->fits_slong_p())
      out.push_back((long long)v->get_si());
    else
      out.push_back(v->get_str());
  }
  return out;
}

ordered_json decomposition_to_json(const Decomposition& d) {
  ordered_json terms = ordered_json::array();
  for (const auto& [label, c] : d.terms) {
    ordered_json l;
    if (label.kind == BasisLabel::Kind::real)
      l = {{"real", rootvec_to_json(label.alpha)}};
    else
      l = {{"imaginary", label.n}};
    terms.push_back({{"label", std::move(l)}, {"coeff", c.get_str()}});
  }
  return {{"terms", std::move(terms)}};
}

// --- text rendering ----------------------------------------------------------

namespace {

std::string monomial_text(Exp e, const std::string& v1, const std::string& v2) {
  std::string s;
  auto piece = [&](const std::string& name, int g) {
    if (g == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (g != 1) s += "^" + std::to_string(g);
  };
  piece(v1, e.g1);
  piece(v2, e.g2);
  return s;
}

// coefficient rendering: (text, needs_parens_when_multiplied, is_negative)
struct CoeffText {
  std::string text;
  bool composite = false;
  bool negative = false;
  bool is_one = false;
};

CoeffText coeff_text(const Int& c) {
  CoeffText t;
  t.negative = sgn(c) < 0;
  Int a = t.negative ? Int(-c) : c;
  t.text = a.get_str();
  t.is_one = a == 1;
  return t;
}

CoeffText coeff_text(const QPoly& c) {
  CoeffText t;
  if (c.size() == 1) {
    const auto& qt = c.terms().front();
    CoeffText inner = coeff_text(qt.c);
    t.negative = inner.negative;
    std::string mono = monomial_text(qt.e, "q1", "q2");
    if (mono.empty()) {
      t.text = inner.text;
      t.is_one = inner.is_one;
    } else {
      t.text = inner.is_one ? mono : inner.text + "*" + mono;
    }
    return t;
  }
  // multi-term q polynomial: render recursively in lex-descending order
  std::string s;
  std::vector<QPoly::Term> ts(c.terms().begin(), c.terms().end());
  std::reverse(ts.begin(), ts.end());
  for (const auto& qt : ts) {
    CoeffText inner = coeff_text(qt.c);
    std::string mono = monomial_text(qt.e, "q1", "q2");
    std::string piece = mono.empty() ? inner.text
                        : inner.is_one ? mono
                                       : inner.text + "*" + mono;
    if (s.empty())
      s = (inner.negative ? "-" : "") + piece;
    else
      s += (inner.negative ? " - " : " + ") + piece;
  }
  t.text = s;
  t.composite = true;
  return t;
}

template <class Ring>
std::string poly_text_impl(const Laurent<Ring>& a, const std::string& v1,
                           const std::string& v2) {
  if (a.is_zero()) return "0";
  Exp mn = a.support_min();
  Exp shift{std::max(0, -mn.g1), std::max(0, -mn.g2)};
  Laurent<Ring> num = a.shifted(shift);

  std::vector<typename Laurent<Ring>::Term> ts(num.terms().begin(), num.terms().end());
  std::reverse(ts.begin(), ts.end());  // lex-descending reads naturally
  std::string s;
  for (const auto& t : ts) {
    CoeffText ct = coeff_text(t.c);
    std::string mono = monomial_text(t.e, v1, v2);
    std::string body;
    if (mono.empty())
      body = ct.composite ? "(" + ct.text + ")" : ct.text;
    else if (ct.is_one && !ct.composite)
      body = mono;
    else if (ct.composite)
      body = "(" + ct.text + ")*" + mono;
    else
      body = ct.text + "*" + mono;
    if (s.empty())
      s = (ct.negative && !ct.composite ? "-" : "") + body;
    else
      s += (ct.negative && !ct.composite ? " - " : " + ") + body;
  }

  std::string den = monomial_text(shift, v1, v2);
  if (den.empty()) return s;
  bool multi_num = ts.size() > 1;
  bool multi_den = shift.g1 != 0 && shift.g2 != 0;
  std::string left = multi_num ? "(" + s + ")" : s;
  std::string right = multi_den ? "(" + den + ")" : den;
  return left + " / " + right;
}

}  // namespace

std::string poly_to_text(const ZPoly& a, const std::string& v1, const std::string& v2) {
  return poly_text_impl(a, v1, v2);
}

std::string poly_to_text(const QLaurent& a, const std::string& v1, const std::string& v2) {
  return poly_text_impl(a, v1, v2);
}

std::string polygon_to_svg(const LatticePolygon& p) {
  int lo1 = 0, hi1 = 0, lo2 = 0, hi2 = 0;
  for (const Exp& v : p.vertices) {
    lo1 = std::min(lo1, v.g1);
    hi1 = std::max(hi1, v.g1);
    lo2 = std::min(lo2, v.g2);
    hi2 = std::max(hi2, v.g2);
  }
  lo1 -= 1, lo2 -= 1, hi1 += 1, hi2 += 1;
  const int scale = 24;
  auto X = [&](int g1) { return (g1 - lo1) * scale; };
  auto Y = [&](int g2) { return (hi2 - g2) * scale; };  // flip: g2 grows upward
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << X(hi1) + scale
      << "\" height=\"" << Y(lo2) + scale << "\" viewBox=\"" << -scale / 2 << " "
      << -scale / 2 << " " << X(hi1) + scale << " " << Y(lo2) + scale << "\">\n";
  svg << "  <line x1=\"" << X(lo1) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(hi1)
      << "\" y2=\"" << Y(0) << "\" stroke=\"#999\"/>\n";
  svg << "  <line x1=\"" << X(0) << "\" y1=\"" << Y(lo2) << "\" x2=\"" << X(0)
      << "\" y2=\"" << Y(hi2) << "\" stroke=\"#999\"/>\n";
  for (int g1 = lo1; g1 <= hi1; ++g1)
    for (int g2 = lo2; g2 <= hi2; ++g2)
      svg << "  <circle cx=\"" << X(g1) << "\" cy=\"" << Y(g2)
          << "\" r=\"1.5\" fill=\"#bbb\"/>\n";
  if (p.vertices.size() == 1) {
    svg << "  <circle cx=\"" << X(p.vertices[0].g1) << "\" cy=\"" << Y(p.vertices[0].g2)
        << "\" r=\"4\" fill=\"black\"/>\n";
  } else {
    svg << (p.vertices.size() == 2 ? "  <polyline" : "  <polygon") << " points=\"";
    for (const Exp& v : p.vertices) svg << X(v.g1) << "," << Y(v.g2) << " ";
    svg << "\" fill=\"rgba(100,100,220,0.3)\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (const Exp& v : p.vertices)
      svg << "  <circle cx=\"" << X(v.g1) << "\" cy=\"" << Y(v.g2)
          << "\" r=\"3\" fill=\"black\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace rank2
