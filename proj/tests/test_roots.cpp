#include <doctest.h>

#include <random>
#include <set>

#include "rank2/roots.hpp"

using namespace rank2;

namespace {

// brute-force Weyl orbit of the simple roots, with a generous search box
std::vector<RootVec> orbit_roots(CartanParams p, long box, long height_bound) {
  std::set<std::pair<long, long>> seen;
  std::vector<RootVec> frontier{RootVec{1, 0}, RootVec{0, 1}};
  seen.insert({1, 0});
  seen.insert({0, 1});
  while (!frontier.empty()) {
    std::vector<RootVec> next;
    for (const RootVec& r : frontier) {
      for (int i : {1, 2}) {
        RootVec s = reflect(i, r, p);
        if (abs(s.a1) > box || abs(s.a2) > box) continue;
        auto key = std::pair<long, long>(s.a1.get_si(), s.a2.get_si());
        if (seen.insert(key).second) next.push_back(s);
      }
    }
    frontier = std::move(next);
  }
  std::vector<RootVec> out;
  for (auto [a, b] : seen)
    if (a >= 0 && b >= 0 && a + b <= height_bound) out.push_back(RootVec{a, b});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("Coxeter numbers from the table") {
  CHECK(coxeter_number(CartanParams(1, 1)) == 3);
  CHECK(coxeter_number(CartanParams(1, 2)) == 4);
  CHECK(coxeter_number(CartanParams(2, 1)) == 4);
  CHECK(coxeter_number(CartanParams(1, 3)) == 6);
  CHECK(!coxeter_number(CartanParams(2, 2)).has_value());
  CHECK(!coxeter_number(CartanParams(2, 3)).has_value());
}

TEST_CASE("simple reflections") {
  CartanParams p(2, 2);
  CHECK(reflect(1, RootVec{1, 0}, p) == RootVec{-1, 0});
  CHECK(reflect(1, RootVec{0, 1}, p) == RootVec{2, 1});
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-30, 30);
  for (int i = 0; i < 50; ++i) {
    RootVec a{d(rng), d(rng)};
    CHECK(reflect(2, reflect(2, a, p), p) == a);
  }
  CHECK_THROWS_AS((void)reflect(3, RootVec{1, 0}, p), AlgebraError);
}

TEST_CASE("invariant form") {
  CHECK(norm(RootVec{1, 0}, CartanParams(1, 3)) == 3);
  CHECK(norm(RootVec{1, 1}, CartanParams(2, 2)) == 0);
  CHECK(norm(RootVec{1, 2}, CartanParams(1, 4)) == 0);
}

TEST_CASE("positive imaginary roots") {
  CHECK(is_positive_imaginary(RootVec{1, 1}, CartanParams(2, 2)));
  CHECK(!is_positive_imaginary(RootVec{-1, 5}, CartanParams(2, 2)));
  CHECK(!is_positive_imaginary(RootVec{0, 3}, CartanParams(2, 2)));
  CHECK(!is_positive_imaginary(RootVec{1, 1}, CartanParams(1, 1)));
  // bc > 4: the open cone
  CHECK(is_positive_imaginary(RootVec{1, 2}, CartanParams(2, 3)));
  CHECK(!is_positive_imaginary(RootVec{1, 3}, CartanParams(2, 3)));
}

TEST_CASE("delta") {
  CHECK(delta(CartanParams(2, 2)) == RootVec{1, 1});
  CHECK(delta(CartanParams(1, 4)) == RootVec{1, 2});
  CHECK(delta(CartanParams(4, 1)) == RootVec{2, 1});
  CHECK_THROWS_AS((void)delta(CartanParams(1, 1)), AlgebraError);
  for (CartanParams p : {CartanParams(2, 2), CartanParams(1, 4), CartanParams(4, 1)})
    CHECK(norm(delta(p), p) == 0);
}

TEST_CASE("denominator vectors") {
  CHECK(denominator_vector(5, CartanParams(2, 2)) == RootVec{3, 2});
  CHECK(denominator_vector(1, CartanParams(1, 1)) == RootVec{-1, 0});
  CHECK(denominator_vector(4, CartanParams(1, 4)) == RootVec{1, 1});

  // the closed forms for the affine types
  CartanParams p22(2, 2);
  for (long m = 2; m <= 12; ++m)
    CHECK(denominator_vector(m, p22) == RootVec{m - 2, m - 3});
  for (long m = -8; m <= 1; ++m)
    CHECK(denominator_vector(m, p22) == RootVec{-m, 1 - m});
  CartanParams p14(1, 4);
  for (long m = 2; m <= 12; ++m) {
    RootVec a = denominator_vector(m, p14);
    int r = (m % 2 != 0) ? 1 : 2;
    CHECK(a.scaled(Int(r)) == RootVec{m - 2, 2 * (m - 3)});
  }

  // finite-type periodicity reduction
  CartanParams p11(1, 1);
  for (long m = -7; m <= 12; ++m)
    CHECK(denominator_vector(m, p11) == denominator_vector(m + 5, p11));
}

TEST_CASE("positive real roots against the orbit oracle") {
  CHECK(positive_real_roots(CartanParams(1, 1), Int(10)) ==
        std::vector<RootVec>{{0, 1}, {1, 0}, {1, 1}});
  CHECK(positive_real_roots(CartanParams(1, 2), Int(10)) ==
        std::vector<RootVec>{{0, 1}, {1, 0}, {1, 1}, {1, 2}});
  CHECK(positive_real_roots(CartanParams(2, 2), Int(4)) ==
        std::vector<RootVec>{{0, 1}, {1, 0}, {1, 2}, {2, 1}});

  for (CartanParams p : {CartanParams(1, 3), CartanParams(2, 2), CartanParams(1, 4),
                         CartanParams(4, 1), CartanParams(2, 3), CartanParams(1, 5)}) {
    long bound = 9;
    auto got = positive_real_roots(p, Int(bound));
    auto want = orbit_roots(p, 40 * bound, bound);
    CHECK(got == want);
  }
}

TEST_CASE("Delta triangles") {
  CartanParams p(2, 2);
  LatticePolygon t = delta_triangle(RootVec{3, 2}, p);
  CHECK(t.vertices == std::vector<Exp>{{-3, -2}, {1, -2}, {-3, 4}});
  // degenerate: alpha on an axis
  CHECK(delta_triangle(RootVec{0, 1}, p).vertices == std::vector<Exp>{{0, -1}, {2, -1}});
  CHECK(delta_triangle(RootVec{0, 0}, p).vertices == std::vector<Exp>{{0, 0}});
}
