#pragma once

// Generator expressions: integer-linear combinations of products of cluster
// variables y_k and affine elements z_n. The single user-facing input
// language for all algebra operations; grammar (CLI `--expr`):
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' nonneg-integer]
//   atom   := integer | 'y'<int> | 'z'[<posint>] | '(' expr ')'
//
// 'y-3' is y_{-3} (the sign binds to the index when it directly follows 'y');
// bare 'z' means z_1.

#include <map>
#include <string>
#include <vector>

#include "rank2/chart.hpp"

namespace rank2 {

struct GenFactor {
  enum class Kind { var, zel };  // y_m, or z_n
  Kind kind = Kind::var;
  long long index = 0;
  friend bool operator==(const GenFactor&, const GenFactor&) = default;
  friend auto operator<=>(const GenFactor&, const GenFactor&) = default;
};

// Product of generators with positive exponents, sorted by factor.
using GenMonomial = std::vector<std::pair<GenFactor, long long>>;

class GeneratorExpr {
 public:
  GeneratorExpr() = default;

  static GeneratorExpr constant(Int c);
  static GeneratorExpr variable(long long m, long long exponent = 1);
  static GeneratorExpr z(long long n, long long exponent = 1);
  static GeneratorExpr parse(const std::string& text);

  bool is_zero() const { return terms_.empty(); }
  const std::map<GenMonomial, Int>& terms() const { return terms_; }

  GeneratorExpr operator+(const GeneratorExpr& o) const;
  GeneratorExpr operator-(const GeneratorExpr& o) const;
  GeneratorExpr operator*(const GeneratorExpr& o) const;
  GeneratorExpr operator-() const;
  GeneratorExpr& operator+=(const GeneratorExpr& o) { return *this = *this + o; }
  GeneratorExpr& operator-=(const GeneratorExpr& o) { return *this = *this - o; }
  GeneratorExpr& operator*=(const GeneratorExpr& o) { return *this = *this * o; }
  GeneratorExpr pow(unsigned long e) const;
  GeneratorExpr scaled(const Int& c) const;

  // sigma_p: y_m -> y_{2p-m}, z_n fixed, scalars fixed.
  GeneratorExpr sigma(long long p) const;

  std::string to_string() const;

  void add_term(GenMonomial mono, Int coeff);

 private:
  std::map<GenMonomial, Int> terms_;
};

// Exact Laurent expansion in the chart (composition of cluster_variable, z_n
// and ring arithmetic); defined in canonical.cpp.
ZPoly expand(const ClusterChart& chart, const GeneratorExpr& e);

}  // namespace rank2
