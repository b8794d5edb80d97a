#include <doctest.h>

#include <random>

#include "rank2/canonical.hpp"
#include "rank2/polygon.hpp"

using namespace rank2;

namespace {

ZPoly from_list(std::initializer_list<std::tuple<int, int, long>> ts) {
  std::vector<ZPoly::Term> v;
  for (auto [g1, g2, c] : ts) v.push_back({Exp{g1, g2}, Int(c)});
  return ZPoly::from_terms(std::move(v));
}

GenFactor yf(long long m) { return GenFactor{GenFactor::Kind::var, m}; }
GenFactor zf(long long n) { return GenFactor{GenFactor::Kind::zel, n}; }

}  // namespace

TEST_CASE("Chebyshev polynomials, T_0 = 1 normalization") {
  CHECK(chebyshev_T(0) == std::vector<Int>{Int(1)});
  CHECK(chebyshev_T(1) == std::vector<Int>{Int(0), Int(1)});
  CHECK(chebyshev_T(2) == std::vector<Int>{Int(-2), Int(0), Int(1)});
  CHECK(chebyshev_T(3) == std::vector<Int>{Int(0), Int(-3), Int(0), Int(1)});
  for (unsigned long n = 1; n <= 10; ++n) {
    auto T = chebyshev_T(n);
    Int at2(0);
    for (std::size_t i = T.size(); i-- > 0;) at2 = at2 * 2 + T[i];
    CHECK(at2 == 2);
  }
}

TEST_CASE("the element z in both affine types") {
  ClusterChart c22(CartanParams(2, 2), 1);
  CHECK(c22.z_element() == from_list({{1, -1, 1}, {-1, 1, 1}, {-1, -1, 1}}));

  ClusterChart c14(CartanParams(1, 4), 1);
  // ((y1+1)^2 + y2^4) / (y1 y2^2)
  CHECK(c14.z_element() ==
        from_list({{1, -2, 1}, {0, -2, 2}, {-1, -2, 1}, {-1, 2, 1}}));

  // z expressed through y2..y5 equals z
  CHECK(expand(c22, GeneratorExpr::parse("y2*y5 - y3*y4")) == c22.z_element());

  // (4,1) delegates to (1,4) with shifted indices
  ClusterChart c41(CartanParams(4, 1), 1);
  CHECK(expand(c41, GeneratorExpr::parse("y1^2*y4 - (y2 + 2)*y3^2")) == c41.z_element());
  CHECK(denominator_vector_of(c41.z_element()) == delta(CartanParams(4, 1)));

  ClusterChart a2(CartanParams(1, 1), 1);
  CHECK_THROWS_AS((void)a2.z_element(), AlgebraError);
}

TEST_CASE("z_n via the Chebyshev recurrence") {
  ClusterChart c22(CartanParams(2, 2), 1);
  CHECK(c22.z_n(1) == c22.z_element());
  CHECK(c22.z_n(2) ==
        from_list({{2, -2, 1}, {-2, 2, 1}, {0, -2, 2}, {-2, 0, 2}, {-2, -2, 1}}));
  CHECK(c22.z_n(2) == c22.z_element() * c22.z_element() - ZPoly::constant(Int(2)));
  for (long long n = 1; n <= 6; ++n) {
    LatticePolygon np = newton_polygon(c22.z_n(n));
    int k = int(n);
    CHECK(np == convex_hull({Exp{k, -k}, Exp{-k, k}, Exp{-k, -k}}));
  }
}

TEST_CASE("basis elements by label") {
  CartanParams p(2, 2);
  ClusterChart chart(p, 1);
  CHECK(basis_element(chart, BasisLabel::real(RootVec{-1, 0}, p)) == chart.variable(1));
  CHECK(basis_element(chart, BasisLabel::real(RootVec{3, 2}, p)) == chart.variable(5));
  CHECK(basis_element(chart, BasisLabel::imaginary(1, p)) == chart.z_element());
  CHECK(basis_element(chart, BasisLabel::real(RootVec{0, 0}, p)) ==
        ZPoly::constant(Int(1)));

  CHECK_THROWS_AS((void)BasisLabel::real(RootVec{2, 2}, p), AlgebraError);
  CHECK_THROWS_AS((void)BasisLabel::imaginary(1, CartanParams(1, 1)), AlgebraError);
  CHECK_THROWS_AS((void)BasisLabel::imaginary(0, p), AlgebraError);

  // labels are chart-relative: y5 in the chart at base 3 is x[(1,0)]
  ClusterChart chart3(p, 3);
  CHECK(basis_element(chart3, BasisLabel::real(RootVec{1, 0}, p)) == chart3.variable(5));
}

TEST_CASE("straightening relations") {
  CartanParams b2(1, 2);
  ClusterChart cb2(b2, 1);
  GeneratorExpr r = straighten_pair(yf(1), yf(4), b2);
  CHECK(expand(cb2, r) == cb2.variable(0) + cb2.variable(2));
  CHECK(r.to_string() == "y0 + y2");

  CartanParams p22(2, 2);
  ClusterChart c22(p22, 1);
  GeneratorExpr r2 = straighten_pair(yf(1), yf(4), p22);
  CHECK(expand(c22, r2) == c22.variable(1) * c22.variable(4));
  CHECK(expand(c22, r2) == c22.variable(2) * c22.variable(3) + c22.z_n(1));
  // both sides expand to ((y2^2+1)^2 + y1^2) / (y1 y2)
  ZPoly common = ZPoly::exact_div(
      from_list({{0, 2, 1}, {0, 0, 1}}).pow(2) + from_list({{2, 0, 1}}),
      from_list({{1, 1, 1}}));
  CHECK(expand(c22, r2) == common);

  GeneratorExpr r3 = straighten_pair(zf(1), zf(1), p22);
  CHECK(expand(c22, r3) == ZPoly::constant(Int(2)) + c22.z_n(2));

  CHECK_THROWS_AS((void)straighten_pair(yf(1), yf(2), p22), AlgebraError);
  CHECK_THROWS_AS((void)straighten_pair(yf(1), yf(4), CartanParams(2, 3)), AlgebraError);
  CHECK_THROWS_AS((void)straighten_pair(zf(1), yf(1), CartanParams(1, 1)), AlgebraError);
}

TEST_CASE("straighten_fully reaches a normal form without changing the element") {
  CartanParams p(2, 2);
  ClusterChart chart(p, 1);
  GeneratorExpr e = GeneratorExpr::parse("y0*y2*y4 + z2*y1^2 - 3*z1*z2");
  GeneratorExpr nf = straighten_fully(e, p);
  CHECK(expand(chart, nf) == expand(chart, e));
  for (const auto& [mono, c] : nf.terms()) {
    long long zcount = 0;
    std::vector<long long> ys;
    for (const auto& [f, k] : mono) {
      if (f.kind == GenFactor::Kind::zel)
        zcount += k;
      else
        ys.push_back(f.index);
    }
    bool cluster_monomial = zcount == 0 && ys.size() <= 2 &&
                            (ys.size() < 2 || ys[1] - ys[0] == 1);
    bool single_z = zcount == 1 && ys.empty();
    bool constant = zcount == 0 && ys.empty();
    CHECK((cluster_monomial || single_z || constant));
  }

  // finite type: cyclic gaps straighten too
  CartanParams a2(1, 1);
  ClusterChart ca2(a2, 1);
  GeneratorExpr f = GeneratorExpr::parse("y0*y2*y4");
  CHECK(expand(ca2, straighten_fully(f, a2)) == expand(ca2, f));
}

TEST_CASE("decomposition examples") {
  CartanParams a2(1, 1);
  ClusterChart ca2(a2, 1);
  Decomposition d = decompose(ca2, expand(ca2, GeneratorExpr::parse("y1*y3")));
  REQUIRE(d.terms.size() == 2);
  CHECK(d.terms.at(BasisLabel::real(RootVec{0, -1}, a2)) == 1);
  CHECK(d.terms.at(BasisLabel::real(RootVec{0, 0}, a2)) == 1);

  CartanParams p22(2, 2);
  ClusterChart c22(p22, 1);
  Decomposition d2 = decompose(c22, expand(c22, GeneratorExpr::parse("y1*y4")));
  REQUIRE(d2.terms.size() == 2);
  CHECK(d2.terms.at(BasisLabel::real(RootVec{1, -1}, p22)) == 1);  // y2*y3
  CHECK(d2.terms.at(BasisLabel::imaginary(1, p22)) == 1);

  Decomposition d3 =
      decompose(c22, expand(c22, GeneratorExpr::parse("y0*y1+y2*y3+y3*y4-z1")));
  CHECK(d3.terms.at(BasisLabel::imaginary(1, p22)) == -1);

  // something that is not in the algebra
  ZPoly not_member = from_list({{-1, 0, 1}, {0, -1, 1}});
  CHECK_THROWS_AS((void)decompose(ca2, not_member), AlgebraError);
}

TEST_CASE("positivity decisions") {
  CartanParams p22(2, 2);
  ClusterChart chart(p22, 1);
  auto r1 = is_positive(chart, expand(chart, GeneratorExpr::parse("y1 + y2")));
  CHECK(r1.positive);
  for (long long m = -4; m <= 8; ++m) {
    auto r = is_positive(chart, chart.variable(m));
    CHECK(r.positive);
    CHECK(r.certificate.terms.size() == 1);
  }
  auto r2 = is_positive(chart, expand(chart, GeneratorExpr::parse("y0*y1+y2*y3+y3*y4-z1")));
  CHECK(!r2.positive);
  REQUIRE(r2.negative_label.has_value());
  CHECK(r2.negative_label->kind == BasisLabel::Kind::imaginary);
  CHECK(r2.negative_label->n == 1);
  REQUIRE(r2.negative_chart.has_value());

  // zero is not a positive element
  auto r3 = is_positive(chart, ZPoly());
  CHECK(!r3.positive);
}

TEST_CASE("positivity window check is necessary but not sufficient") {
  CartanParams p22(2, 2);
  GeneratorExpr sum;
  for (long long m = 0; m <= 5; ++m)
    sum += GeneratorExpr::variable(m) * GeneratorExpr::variable(m + 1);
  sum -= GeneratorExpr::z(1);
  WindowReport w = positivity_window_check(sum, p22, 1, 3);
  CHECK(w.all_positive());
  ClusterChart chart(p22, 1);
  CHECK(!is_positive(chart, expand(chart, sum)).positive);

  WindowReport w2 = positivity_window_check(GeneratorExpr::parse("y1 - y2"), p22, 1, 1);
  CHECK(!w2.all_positive());
  REQUIRE(w2.charts.size() == 1);
  CHECK(w2.charts[0].negative_exponent.has_value());
}

TEST_CASE("decompose is a left inverse of basis expansion") {
  std::mt19937_64 rng(77);
  for (CartanParams p : {CartanParams(1, 2), CartanParams(2, 2), CartanParams(1, 4)}) {
    ClusterChart chart(p, 1);
    std::uniform_int_distribution<long> da(-5, 5);
    std::uniform_int_distribution<int> dc(-5, 5);
    for (int iter = 0; iter < 25; ++iter) {
      Decomposition d;
      for (int i = 0; i < 4; ++i) {
        RootVec alpha{da(rng), da(rng)};
        if (is_positive_imaginary(alpha, p)) continue;
        int c = dc(rng);
        if (c == 0) continue;
        auto [it, fresh] = d.terms.try_emplace(BasisLabel::real(alpha, p), Int(c));
        if (!fresh) it->second += c;
      }
      if (p.bc() == 4) d.terms.try_emplace(BasisLabel::imaginary(2, p), Int(3));
      std::erase_if(d.terms, [](const auto& kv) { return sgn(kv.second) == 0; });
      ZPoly v;
      for (const auto& [l, c] : d.terms) v += basis_element(chart, l).scaled(c);
      CHECK(decompose(chart, v) == d);
    }
  }
}

TEST_CASE("(4,1) canonical machinery through the index shift") {
  CartanParams p(4, 1);
  ClusterChart chart(p, 1);
  RootVec d = delta(p);
  for (long long n = 1; n <= 3; ++n) {
    ZPoly zn = chart.z_n(n);
    CHECK(is_monic(zn));
    CHECK(newton_polygon(zn) == delta_triangle(d.scaled(Int(long(n))), p));
    auto r = is_positive(chart, zn);
    CHECK(r.positive);
    CHECK(r.certificate.terms.begin()->first == BasisLabel::imaginary(n, p));
  }
  for (long long m = -3; m <= 5; ++m) CHECK(is_positive(chart, chart.variable(m)).positive);
}

TEST_CASE("decomposition labels are chart-relative") {
  CartanParams p(2, 2);
  ClusterChart chart2(p, 2);
  // z has denominator vector delta in every chart
  Decomposition d = decompose(chart2, chart2.z_element());
  REQUIRE(d.terms.size() == 1);
  CHECK(d.terms.begin()->first == BasisLabel::imaginary(1, p));
  // y5 in the chart at base 2 decomposes onto x[(2,1)]
  Decomposition d5 = decompose(chart2, chart2.variable(5));
  REQUIRE(d5.terms.size() == 1);
  CHECK(d5.terms.begin()->first == BasisLabel::real(RootVec{2, 1}, p));
}

TEST_CASE("locate_real_label canonicalizes boundary labels") {
  CartanParams p(2, 2);
  ClusterChart chart(p, 1);
  // pure powers sit on cone boundaries; the located label is canonical
  MonomialLabel l = locate_real_label(chart, RootVec{6, 4});  // (3,2)*2 = alpha(5)*2
  CHECK(chart.monomial(l) == chart.variable(5).pow(2));
}
