#pragma once

// The two-parameter deformation of A(2,2) over Z[q1,q2]:
// Y_{m-1} Y_{m+1} = Y_m^2 + q_<m> Y_m + 1, the element
// Z = Y_0 Y_3 - (Y_1+q_1)(Y_2+q_2), its Chebyshev powers, the product
// relations of the deformed algebra, and the two affine specializations.

#include <map>
#include <string>

#include "rank2/chart.hpp"

namespace rank2 {

// q1, q2 as coefficient polynomials.
QPoly q_param(int i);

class DeformChart {
 public:
  explicit DeformChart(long long base, int window_cap = default_window_cap())
      : base_(base), cap_(window_cap) {}

  long long base() const { return base_; }

  // Exact expansion of Y_m in (Y_base, Y_{base+1}) over Z[q1,q2].
  const QLaurent& Y(long long m) const;

  // Z expressed in the four consecutive variables starting at the base.
  const QLaurent& Z() const;

  // Z_n = T_n(Z); Z_0 = 1, Z_{-n} = 0.
  QLaurent Z_n(long long n) const;

 private:
  long long base_;
  int cap_;
  mutable std::map<long long, QLaurent> memo_;
  mutable std::map<long long, QLaurent> z_memo_;
};

struct LemmaReport {
  bool zz_ok = true;
  bool zy_ok = true;
  bool yy_ok = true;
  std::string detail;  // first differing term on mismatch
  bool ok() const { return zz_ok && zy_ok && yy_ok; }
};

// Expands both sides of the ZZ (indices n,p), ZY (n,m) and YY (m,n) relations
// and reports exact equality. Mismatch signals an implementation bug.
LemmaReport verify_lemma_relations(long long n, long long p, long long m,
                                   const DeformChart& chart);

// Right-hand sides of the deformed relations (used by the checks above and by
// the specialization suite).
QLaurent lemma_zz_rhs(long long n, long long p, const DeformChart& chart);
QLaurent lemma_zy_rhs(long long n, long long m, const DeformChart& chart);
QLaurent lemma_yy_rhs(long long m, long long n, const DeformChart& chart);

// Y_m = y_m, q1 = q2 = 0.
ZPoly specialize_22(const QLaurent& a);

// Y_m = y_m^<m>, q1 = 2, q2 = 0: chart exponents (e1,e2) of (Y1,Y2) become
// (e1, 2 e2) of (y1,y2).
ZPoly specialize_14(const QLaurent& a);

}  // namespace rank2
