#pragma once

// Cluster charts: exact Laurent expansions of the cluster variables y_m in a
// chosen cluster (y_base, y_{base+1}), with per-chart memoization. Exponent
// coordinates of a chart expansion always refer to the pair
// (y_base, y_{base+1}).

#include <map>
#include <utility>

#include "rank2/roots.hpp"

namespace rank2 {

int default_window_cap();  // CLUSTER_WINDOW_CAP environment override, else 64

// y_m^p * y_{m+1}^q with the fixed canonical-form rule: (m,0,0) == (0,0,0),
// (m,0,q) == (m+1,q,0), and finite type reduces m mod h+2 into [0, h+1].
struct MonomialLabel {
  long long m = 0;
  long long p = 0;
  long long q = 0;
  MonomialLabel() = default;
  MonomialLabel(long long m_, long long p_, long long q_) : m(m_), p(p_), q(q_) {
    if (p < 0 || q < 0) fail(Errc::invalid_argument, "cluster monomial exponents must be >= 0");
  }
  MonomialLabel canonical(CartanParams params) const;
  friend bool operator==(const MonomialLabel&, const MonomialLabel&) = default;
  friend auto operator<=>(const MonomialLabel&, const MonomialLabel&) = default;
};

class ClusterChart {
 public:
  ClusterChart(CartanParams params, long long base, int window_cap = default_window_cap())
      : params_(params), base_(base), cap_(window_cap) {}

  CartanParams params() const { return params_; }
  long long base() const { return base_; }
  int window_cap() const { return cap_; }

  // Exact expansion of y_m in the chart variables.
  const ZPoly& variable(long long m) const;

  ZPoly monomial(const MonomialLabel& label) const;

  // The affine element z = T_1, memoized (defined in canonical.cpp).
  const ZPoly& z_element() const;
  ZPoly z_n(long long n) const;

 private:
  CartanParams params_;
  long long base_;
  int cap_;
  mutable std::map<long long, ZPoly> memo_;
  mutable std::map<long long, ZPoly> z_memo_;

  long long reduce_index(long long m) const;
  friend const ZPoly& chart_z_element(const ClusterChart&);
  friend ZPoly chart_z_n(const ClusterChart&, long long);
};

// -alpha for the unique componentwise-minimal support exponent (which must
// carry coefficient 1); NOT_POINTED otherwise.
RootVec denominator_vector_of(const ZPoly& a);

// Piecewise-linear action of sigma_p on Q (tropicalized exchange relations).
RootVec sigma_on_lattice(long long p, const RootVec& alpha, CartanParams params);

// Nonnegative form (c1,c2) with c1*g1 + c2*g2 < 0 on the Newton polygon of
// every nontrivial cluster monomial in y_m, y_{m+1} (expanded in chart base
// 1). Defined for m >= 3 and m <= 0; UNSUPPORTED_INDEX for m in {1,2}.
std::pair<Int, Int> separating_form(long long m, CartanParams params);

}  // namespace rank2
