#pragma once

// The rank-2 root system of the Cartan matrix A(b,c): reflections, the
// invariant form, real/imaginary roots, Coxeter number, denominator vectors.

#include <optional>
#include <vector>

#include "rank2/laurent.hpp"
#include "rank2/polygon.hpp"

namespace rank2 {

enum class AlgebraType { finite, affine, indefinite };

struct CartanParams {
  int b = 1;
  int c = 1;
  CartanParams() = default;
  CartanParams(int b_, int c_) : b(b_), c(c_) {
    if (b < 1 || c < 1) fail(Errc::invalid_argument, "b and c must be positive");
  }
  long long bc() const { return (long long)b * c; }
  AlgebraType type() const {
    return bc() <= 3 ? AlgebraType::finite
                     : (bc() == 4 ? AlgebraType::affine : AlgebraType::indefinite);
  }
  friend bool operator==(const CartanParams&, const CartanParams&) = default;
};

// Element a1*alpha1 + a2*alpha2 of the root lattice Q, in the simple-root
// basis. Exact integers: denominator vectors grow exponentially with the
// index in indefinite type.
struct RootVec {
  Int a1 = 0;
  Int a2 = 0;
  RootVec() = default;
  RootVec(Int x, Int y) : a1(std::move(x)), a2(std::move(y)) {}
  RootVec(long x, long y) : a1(x), a2(y) {}
  Int height() const { return a1 + a2; }
  friend bool operator==(const RootVec&, const RootVec&) = default;
  friend bool operator<(const RootVec& x, const RootVec& y) {
    return x.a1 != y.a1 ? x.a1 < y.a1 : x.a2 < y.a2;
  }
  RootVec operator+(const RootVec& o) const { return {a1 + o.a1, a2 + o.a2}; }
  RootVec operator-(const RootVec& o) const { return {a1 - o.a1, a2 - o.a2}; }
  RootVec operator-() const { return {-a1, -a2}; }
  RootVec scaled(const Int& k) const { return {k * a1, k * a2}; }
};

// nullopt encodes the infinite Coxeter number (bc >= 4).
std::optional<int> coxeter_number(CartanParams p);

// Simple reflections s1, s2 acting on Q.
RootVec reflect(int i, const RootVec& alpha, CartanParams p);

// W-invariant form: (alpha, alpha) = c a1^2 - bc a1 a2 + b a2^2.
Int norm(const RootVec& alpha, CartanParams p);

bool is_positive_imaginary(const RootVec& alpha, CartanParams p);

// Minimal positive imaginary root of an affine type.
RootVec delta(CartanParams p);

// Denominator vector alpha(m) of the cluster variable y_m relative to the
// chart (y_base, y_{base+1}); base 1 gives the standard x[alpha] labeling.
// Finite type reduces m modulo h+2 first.
RootVec denominator_vector(long long m, CartanParams p, long long base = 1);

// All positive real roots with a1+a2 <= height_bound, sorted lex,
// deduplicated. Finite type ignores slack in the bound beyond the h roots.
std::vector<RootVec> positive_real_roots(CartanParams p, const Int& height_bound);

// The triangle Delta(alpha) with vertices -alpha, -alpha + b*a2*alpha1,
// -alpha + c*a1*alpha2 (degenerates allowed). Requires coordinates in int
// range, which the desk-scale callers guarantee.
LatticePolygon delta_triangle(const RootVec& alpha, CartanParams p);

}  // namespace rank2
