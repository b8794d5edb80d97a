#pragma once

// Exact lattice-polygon geometry: Newton polygons of Laurent polynomials,
// convex hulls, and Minkowski sums via edge-normal multiset merging.

#include <vector>

#include "rank2/laurent.hpp"

namespace rank2 {

// Canonical form: strict convex hull vertices (no three collinear), ordered
// counterclockwise starting from the lex(g1,g2)-smallest vertex. A single
// point and a segment are valid degenerate cases.
struct LatticePolygon {
  std::vector<Exp> vertices;
  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;
};

LatticePolygon convex_hull(std::vector<Exp> points);

LatticePolygon minkowski_sum(const LatticePolygon& p, const LatticePolygon& q);

// Does the polygon (as a convex set) contain the point?
bool polygon_contains(const LatticePolygon& p, Exp x);

template <class Ring>
LatticePolygon newton_polygon(const Laurent<Ring>& a) {
  if (a.is_zero()) fail(Errc::zero_poly, "Newton polygon of the zero polynomial");
  std::vector<Exp> pts;
  pts.reserve(a.size());
  for (const auto& t : a.terms()) pts.push_back(t.e);
  return convex_hull(std::move(pts));
}

// Monic: every vertex of the Newton polygon carries coefficient exactly 1.
template <class Ring>
bool is_monic(const Laurent<Ring>& a) {
  LatticePolygon np = newton_polygon(a);
  for (const Exp& v : np.vertices) {
    const auto* c = a.coeff_at(v);
    if (!c || !Ring::is_one(*c)) return false;
  }
  return true;
}

}  // namespace rank2
