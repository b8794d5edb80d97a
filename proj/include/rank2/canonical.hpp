#pragma once

// Canonical basis B for bc <= 4: Chebyshev elements z_n, basis elements
// x[alpha], straightening relations, greedy decomposition into B, and the
// positivity decision procedure (sound and complete for bc <= 4).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rank2/expr.hpp"

namespace rank2 {

// Chebyshev polynomials of the first kind in the normalization T_0 = 1,
// T_n(t + 1/t) = t^n + t^-n. Coefficients from constant term upward.
std::vector<Int> chebyshev_T(unsigned long n);

// Tag of a canonical-basis element: a lattice point alpha outside the
// positive imaginary cone (cluster monomial x[alpha]), or n*delta (z_n).
struct BasisLabel {
  enum class Kind { real, imaginary };
  Kind kind = Kind::real;
  RootVec alpha;      // for real labels
  long long n = 0;    // for imaginary labels (alpha = n * delta)

  static BasisLabel real(RootVec a, CartanParams params);
  static BasisLabel imaginary(long long n, CartanParams params);

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
  friend bool operator<(const BasisLabel& x, const BasisLabel& y) {
    if (x.kind != y.kind) return x.kind < y.kind;
    if (x.kind == Kind::real) return x.alpha < y.alpha;
    return x.n < y.n;
  }
};

struct Decomposition {
  std::map<BasisLabel, Int> terms;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// x[alpha] resp. z_n expanded in the chart. REAL labels inside the imaginary
// cone are rejected at construction (INVALID_LABEL); IMAGINARY labels require
// bc = 4 (NOT_AFFINE).
ZPoly basis_element(const ClusterChart& chart, const BasisLabel& label);

// The (p,q,m) presentation of a real label relative to the chart:
// alpha = p*alpha(m) + q*alpha(m+1) with p,q >= 0.
MonomialLabel locate_real_label(const ClusterChart& chart, const RootVec& alpha);

// Right-hand side of the straightening relation for a forbidden product.
// Factors: (kind=var, index=m) for y_m, (kind=zel, index=n) for z_n.
// NOT_FORBIDDEN when the pair is already a cluster-monomial factor pair;
// UNSUPPORTED for bc > 4.
GeneratorExpr straighten_pair(const GenFactor& a, const GenFactor& b, CartanParams params);

// Repeated straightening to a linear combination of cluster monomials and
// z_n's (the normal form of the spanning argument).
GeneratorExpr straighten_fully(const GeneratorExpr& e, CartanParams params);

// Greedy minimal-exponent elimination; the result is verified by re-expansion
// before returning. NOT_IN_ALGEBRA if the iteration cap is exceeded.
Decomposition decompose(const ClusterChart& chart, const ZPoly& a);

struct PositivityResult {
  bool positive = false;
  Decomposition certificate;                   // full decomposition either way
  std::optional<BasisLabel> negative_label;    // witness when not positive
  // chart base where a Laurent coefficient is negative, when found
  std::optional<long long> negative_chart;
  std::optional<Exp> negative_exponent;
};

PositivityResult is_positive(const ClusterChart& chart, const ZPoly& a);

struct WindowReport {
  struct Entry {
    long long base = 0;
    bool all_positive = false;
    std::optional<Exp> negative_exponent;
  };
  std::vector<Entry> charts;
  bool all_positive() const {
    for (const auto& e : charts)
      if (!e.all_positive) return false;
    return true;
  }
};

// Necessary-only diagnostic: positivity of the Laurent expansion on each
// chart base in [m_lo, m_hi]. Window positivity does not imply positivity.
WindowReport positivity_window_check(const GeneratorExpr& e, CartanParams params,
                                     long long m_lo, long long m_hi,
                                     int window_cap = default_window_cap());

// Substitute Laurent expansions for the two chart variables of `a` (chart
// change); exact division clears the negative powers.
ZPoly substitute_chart(const ZPoly& a, const ZPoly& x, const ZPoly& y);

}  // namespace rank2
