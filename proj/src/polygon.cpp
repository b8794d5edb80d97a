#include "rank2/polygon.hpp"

#include <algorithm>

namespace rank2 {

namespace {

long long cross(Exp o, Exp a, Exp b) {
  return (long long)(a.g1 - o.g1) * (b.g2 - o.g2) -
         (long long)(a.g2 - o.g2) * (b.g1 - o.g1);
}

long long cross_vec(Exp a, Exp b) { return (long long)a.g1 * b.g2 - (long long)a.g2 * b.g1; }

// Edge vectors of the canonical CCW traversal. For a segment this yields the
// pair of opposite vectors, matching V(Pi) for the degenerate case.
std::vector<Exp> edge_vectors(const LatticePolygon& p) {
  std::vector<Exp> es;
  std::size_t n = p.vertices.size();
  if (n < 2) return es;
  if (n == 2) {
    Exp d = p.vertices[1] - p.vertices[0];
    es.push_back(d);
    es.push_back(Exp{-d.g1, -d.g2});
    return es;
  }
  for (std::size_t i = 0; i < n; ++i) es.push_back(p.vertices[(i + 1) % n] - p.vertices[i]);
  return es;
}

// Angular order of edge directions along a CCW walk that starts at the
// lex-smallest vertex: angles live in (-90deg, 270deg].
int half_of(Exp d) { return (d.g1 > 0 || (d.g1 == 0 && d.g2 > 0)) ? 0 : 1; }

bool edge_before(Exp a, Exp b) {
  int ha = half_of(a), hb = half_of(b);
  if (ha != hb) return ha < hb;
  return cross_vec(a, b) > 0;
}

bool edge_parallel(Exp a, Exp b) { return half_of(a) == half_of(b) && cross_vec(a, b) == 0; }

}  // namespace

LatticePolygon convex_hull(std::vector<Exp> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::size_t n = points.size();
  if (n <= 2) return LatticePolygon{std::move(points)};

  // monotone chain, strict turns only, so collinear interior points drop out
  std::vector<Exp> lower, upper;
  for (const Exp& p : points) {
    while (lower.size() >= 2 && cross(lower[lower.size() - 2], lower.back(), p) <= 0)
      lower.pop_back();
    lower.push_back(p);
  }
  for (auto it = points.rbegin(); it != points.rend(); ++it) {
    while (upper.size() >= 2 && cross(upper[upper.size() - 2], upper.back(), *it) <= 0)
      upper.pop_back();
    upper.push_back(*it);
  }
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  if (lower.size() == 2 && lower[1] < lower[0]) std::swap(lower[0], lower[1]);
  return LatticePolygon{std::move(lower)};
}

LatticePolygon minkowski_sum(const LatticePolygon& p, const LatticePolygon& q) {
  if (p.vertices.empty() || q.vertices.empty())
    fail(Errc::invalid_argument, "Minkowski sum of an empty polygon");

  // anchor: lex-smallest vertices add under Minkowski summation
  Exp anchor = p.vertices.front() + q.vertices.front();

  std::vector<Exp> ep = edge_vectors(p), eq = edge_vectors(q);
  std::vector<Exp> merged;
  std::size_t i = 0, j = 0;
  while (i < ep.size() || j < eq.size()) {
    if (j == eq.size() || (i < ep.size() && edge_before(ep[i], eq[j]))) {
      merged.push_back(ep[i++]);
    } else if (i == ep.size() || edge_before(eq[j], ep[i])) {
      merged.push_back(eq[j++]);
    } else {
      // positively proportional edges merge into their sum
      merged.push_back(ep[i] + eq[j]);
      ++i, ++j;
    }
  }
  // collapse any remaining parallel neighbours (a merged pair adjacent to a
  // same-direction edge cannot occur from two convex inputs, but a segment
  // plus parallel segment produces exactly that)
  std::vector<Exp> edges;
  for (const Exp& e : merged) {
    if (!edges.empty() && edge_parallel(edges.back(), e)) {
      edges.back() = edges.back() + e;
    } else {
      edges.push_back(e);
    }
  }

  std::vector<Exp> vs;
  Exp cur = anchor;
  vs.push_back(cur);
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    cur = cur + edges[k];
    vs.push_back(cur);
  }
  if (vs.size() == 2 && vs[1] < vs[0]) std::swap(vs[0], vs[1]);
  return LatticePolygon{std::move(vs)};
}

bool polygon_contains(const LatticePolygon& p, Exp x) {
  std::size_t n = p.vertices.size();
  if (n == 0) return false;
  if (n == 1) return p.vertices[0] == x;
  if (n == 2) {
    Exp a = p.vertices[0], b = p.vertices[1];
    if (cross(a, b, x) != 0) return false;
    return std::min(a.g1, b.g1) <= x.g1 && x.g1 <= std::max(a.g1, b.g1) &&
           std::min(a.g2, b.g2) <= x.g2 && x.g2 <= std::max(a.g2, b.g2);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(p.vertices[i], p.vertices[(i + 1) % n], x) < 0) return false;
  }
  return true;
}

}  // namespace rank2
