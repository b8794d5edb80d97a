#include "rank2/chart.hpp"

#include <cstdlib>

namespace rank2 {

namespace {

int rem2(long long m) { return (m % 2 != 0) ? 1 : 2; }

long long reduce_mod(long long m, long long period, long long lo) {
  long long r = (m - lo) % period;
  if (r < 0) r += period;
  return lo + r;
}

}  // namespace

int default_window_cap() {
  static int cap = [] {
    if (const char* env = std::getenv("CLUSTER_WINDOW_CAP")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end && *end == '\0' && v > 0 && v < 1'000'000) return int(v);
    }
    return 64;
  }();
  return cap;
}

MonomialLabel MonomialLabel::canonical(CartanParams params) const {
  MonomialLabel l = *this;
  if (l.p == 0 && l.q == 0) return MonomialLabel{0, 0, 0};
  if (l.p == 0) {
    l.m += 1;
    l.p = l.q;
    l.q = 0;
  }
  if (auto h = coxeter_number(params)) l.m = reduce_mod(l.m, *h + 2, 0);
  return l;
}

long long ClusterChart::reduce_index(long long m) const {
  if (auto h = coxeter_number(params_))
    return reduce_mod(m, *h + 2, base_);  // representative in [base, base+h+1]
  return m;
}

const ZPoly& ClusterChart::variable(long long m) const {
  m = reduce_index(m);
  if (auto it = memo_.find(m); it != memo_.end()) return it->second;
  if (m > base_ + cap_ || m < base_ - cap_)
    fail(Errc::window_exceeded,
         "cluster index " + std::to_string(m) + " outside window cap " + std::to_string(cap_) +
             " around base " + std::to_string(base_));

  if (memo_.empty()) {
    memo_.emplace(base_, ZPoly::monomial(Exp{1, 0}, Int(1)));
    memo_.emplace(base_ + 1, ZPoly::monomial(Exp{0, 1}, Int(1)));
  }
  // exchange step: y_{k-1} y_{k+1} = y_k^b + 1 (k odd) or y_k^c + 1 (k even);
  // the Laurent phenomenon guarantees every division here is exact
  auto power = [&](long long k) {
    return (unsigned long)(rem2(k) == 1 ? params_.b : params_.c);
  };
  const ZPoly one = ZPoly::constant(Int(1));
  long long hi = memo_.rbegin()->first;
  while (hi < m) {
    const ZPoly& mid = memo_.at(hi);
    const ZPoly& prev = memo_.at(hi - 1);
    ZPoly num = mid.pow(power(hi)) + one;
    memo_.emplace(hi + 1, ZPoly::exact_div(num, prev));
    ++hi;
  }
  long long lo = memo_.begin()->first;
  while (lo > m) {
    const ZPoly& mid = memo_.at(lo);
    const ZPoly& next = memo_.at(lo + 1);
    ZPoly num = mid.pow(power(lo)) + one;
    memo_.emplace(lo - 1, ZPoly::exact_div(num, next));
    --lo;
  }
  return memo_.at(m);
}

ZPoly ClusterChart::monomial(const MonomialLabel& label) const {
  MonomialLabel l = label.canonical(params_);
  ZPoly r = ZPoly::constant(Int(1));
  if (l.p > 0) r *= variable(l.m).pow((unsigned long)l.p);
  if (l.q > 0) r *= variable(l.m + 1).pow((unsigned long)l.q);
  return r;
}

RootVec denominator_vector_of(const ZPoly& a) {
  if (a.is_zero()) fail(Errc::not_pointed, "zero polynomial has no denominator vector");
  auto mins = a.minimal_exponents();
  if (mins.size() != 1)
    fail(Errc::not_pointed, "no unique componentwise-minimal support exponent");
  const Int* c = a.coeff_at(mins[0]);
  if (!c || *c != 1) fail(Errc::not_pointed, "minimal support exponent has coefficient != 1");
  return RootVec{Int(-mins[0].g1), Int(-mins[0].g2)};
}

namespace {

RootVec sigma1(const RootVec& a, CartanParams p) {
  Int m = sgn(a.a1) > 0 ? a.a1 : Int(0);
  return {a.a1, p.c * m - a.a2};
}

RootVec sigma2(const RootVec& a, CartanParams p) {
  Int m = sgn(a.a2) > 0 ? a.a2 : Int(0);
  return {p.b * m - a.a1, a.a2};
}

}  // namespace

RootVec sigma_on_lattice(long long p, const RootVec& alpha, CartanParams params) {
  // sigma_p = (sigma_2 sigma_1) o sigma_{p-1} and sigma_p = (sigma_1 sigma_2)
  // o sigma_{p+1}, reducing any p to the generators sigma_1, sigma_2.
  if (p == 1) return sigma1(alpha, params);
  if (p == 2) return sigma2(alpha, params);
  if (p > 2) return sigma2(sigma1(sigma_on_lattice(p - 1, alpha, params), params), params);
  return sigma1(sigma2(sigma_on_lattice(p + 1, alpha, params), params), params);
}

std::pair<Int, Int> separating_form(long long m, CartanParams params) {
  if (auto h = coxeter_number(params)) m = reduce_mod(m, *h + 2, 0);
  if (m == 1 || m == 2)
    fail(Errc::unsupported_index, "no separating form for the initial charts m in {1,2}");
  if (m == 0) {
    // chart {y_0, y_1}: every qualifying monomial has g2 <= -p < 0
    return {Int(0), Int(1)};
  }
  auto a = [&](long long k) { return denominator_vector(k, params); };
  Int c1 = a(m + 2).a2 + a(m + 1).a2;
  Int c2 = a(m - 1).a1 + a(m).a1;
  return {c1, c2};
}

}  // namespace rank2
