#include "rank2/deform.hpp"

#include <algorithm>

namespace rank2 {

namespace {

int rem2(long long m) { return (m % 2 != 0) ? 1 : 2; }

QLaurent ql_const(Int c) { return QLaurent::constant(QPoly::constant(std::move(c))); }

QLaurent ql_scaled(const QLaurent& a, const QPoly& c) { return a.scaled(c); }

std::string first_difference(const QLaurent& a, const QLaurent& b);

}  // namespace

QPoly q_param(int i) {
  if (i != 1 && i != 2) fail(Errc::invalid_argument, "q index must be 1 or 2");
  return QPoly::monomial(i == 1 ? Exp{1, 0} : Exp{0, 1}, Int(1));
}

const QLaurent& DeformChart::Y(long long m) const {
  if (auto it = memo_.find(m); it != memo_.end()) return it->second;
  if (m > base_ + cap_ || m < base_ - cap_)
    fail(Errc::window_exceeded, "deformed index " + std::to_string(m) +
                                    " outside window cap " + std::to_string(cap_));
  if (memo_.empty()) {
    memo_.emplace(base_, QLaurent::monomial(Exp{1, 0}, QPolyRing::one()));
    memo_.emplace(base_ + 1, QLaurent::monomial(Exp{0, 1}, QPolyRing::one()));
  }
  // Y_{k-1} Y_{k+1} = Y_k^2 + q_<k> Y_k + 1; exact over Z[q1,q2]
  auto numerator = [&](const QLaurent& yk, long long k) {
    return yk * yk + ql_scaled(yk, q_param(rem2(k))) + ql_const(Int(1));
  };
  long long hi = memo_.rbegin()->first;
  while (hi < m) {
    QLaurent num = numerator(memo_.at(hi), hi);
    memo_.emplace(hi + 1, QLaurent::exact_div(num, memo_.at(hi - 1)));
    ++hi;
  }
  long long lo = memo_.begin()->first;
  while (lo > m) {
    QLaurent num = numerator(memo_.at(lo), lo);
    memo_.emplace(lo - 1, QLaurent::exact_div(num, memo_.at(lo + 1)));
    --lo;
  }
  return memo_.at(m);
}

const QLaurent& DeformChart::Z() const {
  if (auto it = z_memo_.find(1); it != z_memo_.end()) return it->second;
  long long a = base_;
  QLaurent z = Y(a) * Y(a + 3) -
               (Y(a + 1) + QLaurent::constant(q_param(rem2(a + 1)))) *
                   (Y(a + 2) + QLaurent::constant(q_param(rem2(a + 2))));
  return z_memo_.emplace(1, std::move(z)).first->second;
}

QLaurent DeformChart::Z_n(long long n) const {
  if (n <= 0) return n == 0 ? ql_const(Int(1)) : QLaurent();
  if (auto it = z_memo_.find(n); it != z_memo_.end()) return it->second;
  const QLaurent& z = Z();
  if (n == 1) return z;
  if (z_memo_.find(2) == z_memo_.end()) z_memo_.emplace(2, z * z - ql_const(Int(2)));
  long long k = z_memo_.rbegin()->first;
  while (k < n) {
    z_memo_.emplace(k + 1, z * z_memo_.at(k) - z_memo_.at(k - 1));
    ++k;
  }
  return z_memo_.at(n);
}

QLaurent lemma_zz_rhs(long long n, long long p, const DeformChart& chart) {
  if (n > p) std::swap(n, p);
  if (p > n) return chart.Z_n(p - n) + chart.Z_n(p + n);
  return ql_const(Int(2)) + chart.Z_n(2 * n);
}

QLaurent lemma_zy_rhs(long long n, long long m, const DeformChart& chart) {
  QLaurent r = chart.Y(m - n) + chart.Y(m + n);
  for (long long k = 1; k <= n; ++k) {
    QPoly coeff = q_param(rem2(m + k)).scaled(Int(long(k)));
    r += ql_scaled(chart.Z_n(n - k), coeff);
  }
  return r;
}

QLaurent lemma_yy_rhs(long long m, long long n, const DeformChart& chart) {
  QLaurent r = chart.Y(m + n / 2) * chart.Y(m + (n + 1) / 2);
  for (long long k = 1; k <= n - 1; ++k) {
    QPoly coeff = q_param(rem2(m + k)).scaled(Int(long(std::min(k, n - k))));
    r += ql_scaled(chart.Y(m + n - k), coeff);
  }
  for (long long k = 1; n - 1 - k >= 0; ++k) {
    // c_{2p} = p(p+1)(2p+1)/6 q1 q2, c_{2p-1} = (p-1)p(p+1)/6 (q1^2+q2^2) + p
    QPoly ck;
    if (k % 2 == 0) {
      long long pp = k / 2;
      Int num = Int(long(pp)) * long(pp + 1) * long(2 * pp + 1);
      Int div;
      mpz_tdiv_q_ui(div.get_mpz_t(), num.get_mpz_t(), 6);
      if (div * 6 != num) fail(Errc::invalid_argument, "c_2p divisibility violated");
      ck = QPoly::monomial(Exp{1, 1}, div);
    } else {
      long long pp = (k + 1) / 2;
      Int num = Int(long(pp - 1)) * long(pp) * long(pp + 1);
      Int div;
      mpz_tdiv_q_ui(div.get_mpz_t(), num.get_mpz_t(), 6);
      if (div * 6 != num) fail(Errc::invalid_argument, "c_{2p-1} divisibility violated");
      ck = QPoly::monomial(Exp{2, 0}, div) + QPoly::monomial(Exp{0, 2}, div) +
           QPoly::constant(Int(long(pp)));
    }
    r += ql_scaled(chart.Z_n(n - 1 - k), ck);
  }
  return r;
}

LemmaReport verify_lemma_relations(long long n, long long p, long long m,
                                   const DeformChart& chart) {
  if (n < 1 || p < n) fail(Errc::invalid_argument, "ZZ requires p >= n >= 1");
  LemmaReport rep;
  QLaurent zz_lhs = chart.Z_n(n) * chart.Z_n(p);
  QLaurent zz_rhs = lemma_zz_rhs(n, p, chart);
  if (!(zz_lhs == zz_rhs)) {
    rep.zz_ok = false;
    rep.detail = "ZZ: " + first_difference(zz_lhs, zz_rhs);
  }
  QLaurent zy_lhs = chart.Z_n(n) * chart.Y(m);
  QLaurent zy_rhs = lemma_zy_rhs(n, m, chart);
  if (!(zy_lhs == zy_rhs)) {
    rep.zy_ok = false;
    rep.detail += (rep.detail.empty() ? "" : "; ") + ("ZY: " + first_difference(zy_lhs, zy_rhs));
  }
  QLaurent yy_lhs = chart.Y(m) * chart.Y(m + n);
  QLaurent yy_rhs = lemma_yy_rhs(m, n, chart);
  if (!(yy_lhs == yy_rhs)) {
    rep.yy_ok = false;
    rep.detail += (rep.detail.empty() ? "" : "; ") + ("YY: " + first_difference(yy_lhs, yy_rhs));
  }
  return rep;
}

ZPoly specialize_22(const QLaurent& a) {
  std::vector<ZPoly::Term> ts;
  for (const auto& t : a.terms()) {
    if (const Int* c = t.c.coeff_at(Exp{0, 0})) ts.push_back({t.e, *c});
  }
  return ZPoly::from_terms(std::move(ts));
}

ZPoly specialize_14(const QLaurent& a) {
  std::vector<ZPoly::Term> ts;
  for (const auto& t : a.terms()) {
    Int val(0);
    for (const auto& qt : t.c.terms()) {
      if (qt.e.g2 != 0) continue;  // q2 = 0
      val += qt.c * int_pow(Int(2), (unsigned long)qt.e.g1);
    }
    if (sgn(val) != 0) ts.push_back({Exp{t.e.g1, 2 * t.e.g2}, std::move(val)});
  }
  return ZPoly::from_terms(std::move(ts));
}

namespace {

std::string first_difference(const QLaurent& a, const QLaurent& b) {
  QLaurent d = a - b;
  if (d.is_zero()) return "equal";
  const auto& t = d.terms().front();
  std::string qs;
  for (const auto& qt : t.c.terms()) {
    if (!qs.empty()) qs += " + ";
    qs += qt.c.get_str() + "*q1^" + std::to_string(qt.e.g1) + "*q2^" + std::to_string(qt.e.g2);
  }
  return "differs by (" + qs + ")*Y1^" + std::to_string(t.e.g1) + "*Y2^" +
         std::to_string(t.e.g2) + " (and possibly more terms)";
}

}  // namespace

}  // namespace rank2
