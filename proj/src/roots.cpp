#include "rank2/roots.hpp"

#include <algorithm>
#include <map>

namespace rank2 {

namespace {

// <m>: 1 for odd m, 2 for even m.
int rem2(long long m) { return (m % 2 != 0) ? 1 : 2; }

int to_int(const Int& v, const char* what) {
  if (!v.fits_sint_p()) fail(Errc::invalid_argument, std::string(what) + " exceeds int range");
  return int(v.get_si());
}

}  // namespace

std::optional<int> coxeter_number(CartanParams p) {
  switch (p.bc()) {
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return std::nullopt;
  }
}

RootVec reflect(int i, const RootVec& alpha, CartanParams p) {
  if (i == 1) return {-alpha.a1 + p.b * alpha.a2, alpha.a2};
  if (i == 2) return {alpha.a1, p.c * alpha.a1 - alpha.a2};
  fail(Errc::invalid_argument, "reflection index must be 1 or 2");
}

Int norm(const RootVec& alpha, CartanParams p) {
  return p.c * alpha.a1 * alpha.a1 - Int((long)p.bc()) * alpha.a1 * alpha.a2 +
         p.b * alpha.a2 * alpha.a2;
}

bool is_positive_imaginary(const RootVec& alpha, CartanParams p) {
  // bc > 4: the boundary rays are irrational, so norm == 0 forces alpha == 0
  // and the non-strict test below is equivalent to the strict one.
  return sgn(alpha.a1) > 0 && sgn(alpha.a2) > 0 && sgn(norm(alpha, p)) <= 0;
}

RootVec delta(CartanParams p) {
  if (p.bc() != 4) fail(Errc::not_affine, "delta is defined only for bc = 4");
  if (p.b == 2) return {1, 1};
  if (p.b == 1) return {1, 2};
  return {2, 1};  // (b,c) = (4,1), index-shift mirror of (1,4)
}

RootVec denominator_vector(long long m, CartanParams p, long long base) {
  if (auto h = coxeter_number(p)) {
    long long period = *h + 2;
    long long r = (m - (base - 1)) % period;
    if (r < 0) r += period;
    m = base - 1 + r;  // representative in [base-1, base+h]
  }
  // Seeds around the chart: alpha(base)=-alpha1, alpha(base+1)=-alpha2,
  // alpha(base+2)=alpha1, alpha(base-1)=alpha2. The recurrence
  // alpha(k+1) + alpha(k-1) = (b or c) alpha(k) holds when centered at
  // k outside {base, base+1}.
  if (m == base) return {-1, 0};
  if (m == base + 1) return {0, -1};
  auto coef = [&](long long k) { return rem2(k) == 1 ? p.b : p.c; };
  if (m > base + 1) {
    RootVec prev{0, -1}, cur{1, 0};  // alpha(base+1), alpha(base+2)
    for (long long k = base + 2; k < m; ++k) {
      RootVec next = cur.scaled(coef(k)) - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  RootVec next{-1, 0}, cur{0, 1};  // alpha(base), alpha(base-1)
  for (long long k = base - 1; k > m; --k) {
    RootVec prevv = cur.scaled(coef(k)) - next;
    next = std::move(cur);
    cur = std::move(prevv);
  }
  return cur;
}

std::vector<RootVec> positive_real_roots(CartanParams p, const Int& height_bound) {
  std::vector<RootVec> out;
  auto add = [&](const RootVec& r) {
    if (sgn(r.a1) >= 0 && sgn(r.a2) >= 0 && r.height() <= height_bound) out.push_back(r);
  };
  if (auto h = coxeter_number(p)) {
    // alpha(m) for m in [3, h+2] runs over all h positive real roots
    for (long long m = 3; m <= *h + 2; ++m) add(denominator_vector(m, p));
  } else {
    // the chains alpha(m), m >= 3 and m <= 0, exhaust the positive real
    // roots; heights are monotone within each index parity, so two
    // consecutive misses end a chain
    for (int dir = 0; dir < 2; ++dir) {
      int over = 0;
      for (long long k = 0; over < 2; ++k) {
        RootVec r = denominator_vector(dir == 0 ? 3 + k : -k, p);
        if (r.height() > height_bound) {
          ++over;
        } else {
          over = 0;
          add(r);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LatticePolygon delta_triangle(const RootVec& alpha, CartanParams p) {
  if (sgn(alpha.a1) < 0 || sgn(alpha.a2) < 0)
    fail(Errc::invalid_argument, "Delta(alpha) requires alpha in the positive quadrant");
  Int v1x = -alpha.a1, v1y = -alpha.a2;
  std::vector<Exp> pts;
  auto push = [&](const Int& x, const Int& y) {
    pts.push_back(Exp{to_int(x, "Delta vertex"), to_int(y, "Delta vertex")});
  };
  push(v1x, v1y);
  push(v1x + p.b * alpha.a2, v1y);
  push(v1x, v1y + p.c * alpha.a1);
  return convex_hull(std::move(pts));
}

}  // namespace rank2
