#include "rank2/canonical.hpp"

#include <algorithm>

namespace rank2 {

namespace {

int rem2(long long m) { return (m % 2 != 0) ? 1 : 2; }

long long to_ll(const Int& v, const char* what) {
  if (!v.fits_slong_p()) fail(Errc::invalid_argument, std::string(what) + " out of range");
  return v.get_si();
}

GeneratorExpr shift_vars(const GeneratorExpr& e, long long d) {
  GeneratorExpr r;
  for (const auto& [mono, c] : e.terms()) {
    GenMonomial img;
    for (const auto& [f, k] : mono) {
      GenFactor g = f;
      if (g.kind == GenFactor::Kind::var) g.index += d;
      img.emplace_back(g, k);
    }
    std::sort(img.begin(), img.end());
    r.add_term(std::move(img), c);
  }
  return r;
}

}  // namespace

std::vector<Int> chebyshev_T(unsigned long n) {
  // T_0 = 1; for n >= 1 the three-term recurrence seeded with P_0 = 2,
  // P_1 = t reproduces T_n(t + 1/t) = t^n + t^-n.
  if (n == 0) return {Int(1)};
  std::vector<Int> prev{Int(2)};
  std::vector<Int> cur{Int(0), Int(1)};
  for (unsigned long k = 1; k < n; ++k) {
    std::vector<Int> next(cur.size() + 1, Int(0));
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// --- z elements --------------------------------------------------------------

const ZPoly& chart_z_element(const ClusterChart& chart) {
  auto& memo = chart.z_memo_;
  if (auto it = memo.find(1); it != memo.end()) return it->second;
  CartanParams p = chart.params();
  if (p.bc() != 4) fail(Errc::not_affine, "z is defined only in affine type (bc = 4)");
  long long base = chart.base();
  ZPoly z;
  if (p.b == 2) {
    // z = y_a y_{a+3} - y_{a+1} y_{a+2}, any anchor
    long long a = base;
    z = chart.variable(a) * chart.variable(a + 3) -
        chart.variable(a + 1) * chart.variable(a + 2);
  } else {
    // z = y_a^2 y_{a+3} - (y_{a+1} + 2) y_{a+2}^2, anchored on the side whose
    // exchange relation is quadratic: a even for (1,4), a odd for (4,1)
    long long a = base;
    if ((p.b == 1 && rem2(a) != 2) || (p.b == 4 && rem2(a) != 1)) a -= 1;
    const ZPoly two = ZPoly::constant(Int(2));
    z = chart.variable(a).pow(2) * chart.variable(a + 3) -
        (chart.variable(a + 1) + two) * chart.variable(a + 2).pow(2);
  }
  return memo.emplace(1, std::move(z)).first->second;
}

ZPoly chart_z_n(const ClusterChart& chart, long long n) {
  if (n <= 0) {
    if (n == 0) return ZPoly::constant(Int(1));  // z_0 = 1
    return ZPoly();                              // z_{-n} = 0
  }
  auto& memo = chart.z_memo_;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  const ZPoly& z = chart_z_element(chart);
  if (n == 1) return z;
  if (memo.find(2) == memo.end()) memo.emplace(2, z * z - ZPoly::constant(Int(2)));
  long long k = memo.rbegin()->first;
  while (k < n) {
    ZPoly next = z * memo.at(k) - memo.at(k - 1);
    memo.emplace(k + 1, std::move(next));
    ++k;
  }
  return memo.at(n);
}

const ZPoly& ClusterChart::z_element() const { return chart_z_element(*this); }
ZPoly ClusterChart::z_n(long long n) const { return chart_z_n(*this, n); }

// --- expansion ---------------------------------------------------------------

ZPoly expand(const ClusterChart& chart, const GeneratorExpr& e) {
  ZPoly acc;
  for (const auto& [mono, c] : e.terms()) {
    ZPoly prod = ZPoly::constant(Int(1));
    for (const auto& [f, k] : mono) {
      const ZPoly& g = (f.kind == GenFactor::Kind::var) ? chart.variable(f.index)
                                                        : chart.z_n(f.index);
      if (f.kind == GenFactor::Kind::zel && g.is_zero())
        fail(Errc::invalid_argument, "z index must be positive");
      prod *= g.pow((unsigned long)k);
    }
    acc += prod.scaled(c);
  }
  return acc;
}

// --- basis labels ------------------------------------------------------------

BasisLabel BasisLabel::real(RootVec a, CartanParams params) {
  if (is_positive_imaginary(a, params))
    fail(Errc::invalid_label, "REAL label inside the positive imaginary cone");
  BasisLabel l;
  l.kind = Kind::real;
  l.alpha = std::move(a);
  return l;
}

BasisLabel BasisLabel::imaginary(long long n, CartanParams params) {
  if (params.bc() != 4) fail(Errc::not_affine, "IMAGINARY labels require bc = 4");
  if (n < 1) fail(Errc::invalid_label, "IMAGINARY label index must be positive");
  BasisLabel l;
  l.kind = Kind::imaginary;
  l.n = n;
  return l;
}

MonomialLabel locate_real_label(const ClusterChart& chart, const RootVec& alpha) {
  CartanParams params = chart.params();
  if (is_positive_imaginary(alpha, params))
    fail(Errc::invalid_label, "label inside the positive imaginary cone");
  if (sgn(alpha.a1) == 0 && sgn(alpha.a2) == 0) return MonomialLabel{0, 0, 0};

  long long base = chart.base();
  long long lo = base - chart.window_cap(), hi = base + chart.window_cap();
  if (auto h = coxeter_number(params)) {
    lo = base;
    hi = base + *h + 1;  // one period of cones covers the whole plane
  }
  for (long long m = lo; m <= hi; ++m) {
    RootVec u = denominator_vector(m, params, base);
    RootVec v = denominator_vector(m + 1, params, base);
    // det [u v] = 1, so the cone membership test is a unimodular solve
    Int p = v.a2 * alpha.a1 - v.a1 * alpha.a2;
    Int q = u.a1 * alpha.a2 - u.a2 * alpha.a1;
    if (sgn(p) >= 0 && sgn(q) >= 0) {
      return MonomialLabel{m, to_ll(p, "cluster monomial exponent"),
                           to_ll(q, "cluster monomial exponent")}
          .canonical(params);
    }
  }
  fail(Errc::invalid_label, "no cluster cone contains the label within the window");
}

ZPoly basis_element(const ClusterChart& chart, const BasisLabel& label) {
  if (label.kind == BasisLabel::Kind::imaginary) {
    if (chart.params().bc() != 4) fail(Errc::not_affine, "IMAGINARY labels require bc = 4");
    return chart.z_n(label.n);
  }
  return chart.monomial(locate_real_label(chart, label.alpha));
}

// --- straightening -----------------------------------------------------------

namespace {

GeneratorExpr zz_relation(long long n, long long p) {
  if (n > p) std::swap(n, p);
  if (p > n) {
    GeneratorExpr r = GeneratorExpr::z(p + n);
    r += (p - n == 0) ? GeneratorExpr::constant(Int(1)) : GeneratorExpr::z(p - n);
    return r;
  }
  return GeneratorExpr::constant(Int(2)) + GeneratorExpr::z(2 * n);
}

GeneratorExpr z_or_const(long long k, Int coeff) {
  // coeff * z_k with the conventions z_0 = 1, z_{<0} = 0
  if (k < 0 || sgn(coeff) == 0) return GeneratorExpr();
  if (k == 0) return GeneratorExpr::constant(std::move(coeff));
  return GeneratorExpr::z(k).scaled(coeff);
}

GeneratorExpr zy_22(long long n, long long m) {
  return GeneratorExpr::variable(m - n) + GeneratorExpr::variable(m + n);
}

GeneratorExpr zy_14(long long n, long long m) {
  if (rem2(m) == 2) return GeneratorExpr::variable(m - 2 * n) + GeneratorExpr::variable(m + 2 * n);
  GeneratorExpr r = GeneratorExpr::variable(m - n, rem2(m - n)) +
                    GeneratorExpr::variable(m + n, rem2(m + n));
  for (long long k = 1; n - 2 * k >= 0; ++k) r += z_or_const(n - 2 * k, Int(long(4 * k)));
  return r;
}

GeneratorExpr yy_22(long long m, long long n) {
  long long fl = m + n / 2, cl = m + (n + 1) / 2;
  GeneratorExpr r = (fl == cl) ? GeneratorExpr::variable(fl, 2)
                               : GeneratorExpr::variable(fl) * GeneratorExpr::variable(cl);
  for (long long k = 1; n - 2 * k >= 0; ++k) r += z_or_const(n - 2 * k, Int(long(k)));
  return r;
}

// y_m y_{m+2n} for m even (n >= 0)
GeneratorExpr yy_14_00(long long m, long long n) {
  GeneratorExpr r = GeneratorExpr::variable(m + n, rem2(m + n));
  for (long long k = 1; n + 1 - 2 * k >= 0; ++k) r += z_or_const(n + 1 - 2 * k, Int(long(2 * k - 1)));
  return r;
}

// y_m y_{m+s*n} for m even, n odd, s = +1 or -1
GeneratorExpr yy_14_01(long long m, long long n, int s) {
  GeneratorExpr r;
  for (long long k = 1; 2 * k < n; ++k)
    r += GeneratorExpr::variable(m + s * 4 * k).scaled(Int(long(std::min(4 * k, n - 2 * k))));
  if (n % 3 == 0) {
    r += GeneratorExpr::variable(m + s * (2 * n / 3), 3);
  } else {
    long long fl = (2 * n) / 3, cl = (2 * n + 2) / 3;  // floor, ceil of 2n/3
    long long lo = s > 0 ? m + fl : m - cl;
    r += GeneratorExpr::variable(lo) * GeneratorExpr::variable(lo + 1);
  }
  return r;
}

// y_m y_{m+2n} for m odd (n >= 0)
GeneratorExpr yy_14_11(long long m, long long n) {
  GeneratorExpr r = GeneratorExpr::variable(m + n, 2 * rem2(m + n));
  for (long long k = 1; k <= n - 1; ++k)
    r += GeneratorExpr::variable(m + 2 * k).scaled(Int(long(4 * std::min(k, n - k))));
  for (long long k = 1; 2 * n - 2 * k >= 0; ++k) {
    Int c(long(2 * k * k * k + k));  // divisible by 3 identically
    Int q;
    mpz_divexact_ui(q.get_mpz_t(), c.get_mpz_t(), 3);
    r += z_or_const(2 * n - 2 * k, q);
  }
  return r;
}

GeneratorExpr yy_relation(long long m, long long n, CartanParams params) {
  // callers guarantee n >= 2 (and, in finite type, n <= (h+2)/2)
  if (auto h = coxeter_number(params)) {
    if (n == 2) {
      // exchange relation y_m y_{m+2} = y_{m+1}^{b or c} + 1
      int e = rem2(m + 1) == 1 ? params.b : params.c;
      return GeneratorExpr::variable(m + 1, e) + GeneratorExpr::constant(Int(1));
    }
    long long bc = params.bc();
    if (bc == 2 && n == 3) {
      bool odd = params.b == 1 ? (rem2(m) == 1) : (rem2(m) == 2);  // (2,1) mirrors (1,2)
      return odd ? GeneratorExpr::variable(m - 1) + GeneratorExpr::variable(m + 1)
                 : GeneratorExpr::variable(m + 2) + GeneratorExpr::variable(m + 4);
    }
    if (bc == 3 && n == 3) {
      bool odd = params.b == 1 ? (rem2(m) == 1) : (rem2(m) == 2);
      return odd ? GeneratorExpr::variable(m - 1) + GeneratorExpr::variable(m + 1, 2)
                 : GeneratorExpr::variable(m + 2, 2) + GeneratorExpr::variable(m + 4);
    }
    if (bc == 3 && n == 4) {
      bool odd = params.b == 1 ? (rem2(m) == 1) : (rem2(m) == 2);
      GeneratorExpr r = GeneratorExpr::variable(m - 2) + GeneratorExpr::variable(m + 2);
      if (odd) r += GeneratorExpr::constant(Int(3));
      return r;
    }
    fail(Errc::invalid_argument, "no finite-type straightening relation for this gap");
  }
  if (params.bc() != 4) fail(Errc::unsupported, "straightening requires bc <= 4");
  if (params.b == 2) {
    if (n == 2) return GeneratorExpr::variable(m + 1, 2) + GeneratorExpr::constant(Int(1));
    return yy_22(m, n);
  }
  if (params.b == 4) return shift_vars(yy_relation(m - 1, n, CartanParams(1, 4)), 1);
  // (1,4)
  if (rem2(m) == 2) {
    if (n % 2 == 0) return yy_14_00(m, n / 2);
    return yy_14_01(m, n, +1);
  }
  if (n % 2 == 0) return yy_14_11(m, n / 2);
  return yy_14_01(m + n, n, -1);
}

}  // namespace

GeneratorExpr straighten_pair(const GenFactor& a, const GenFactor& b, CartanParams params) {
  if (params.bc() > 4) fail(Errc::unsupported, "straightening requires bc <= 4");
  bool az = a.kind == GenFactor::Kind::zel, bz = b.kind == GenFactor::Kind::zel;
  if (az || bz) {
    if (params.bc() != 4) fail(Errc::not_affine, "z elements require bc = 4");
    if (az && bz) return zz_relation(a.index, b.index);
    long long n = az ? a.index : b.index;
    long long m = az ? b.index : a.index;
    if (params.b == 2) return zy_22(n, m);
    if (params.b == 1) return zy_14(n, m);
    return shift_vars(zy_14(n, m - 1), 1);  // (4,1) via the index-shift of (1,4)
  }
  long long m = std::min(a.index, b.index);
  long long n = std::max(a.index, b.index) - m;
  if (auto h = coxeter_number(params)) {
    long long period = *h + 2;
    n %= period;
    if (n > period - n) {  // shorter way around the cycle
      m = m + n;
      n = period - n;
    }
  }
  if (n <= 1) fail(Errc::not_forbidden, "adjacent cluster variables form a cluster monomial");
  return yy_relation(m, n, params);
}

GeneratorExpr straighten_fully(const GeneratorExpr& e, CartanParams params) {
  if (params.bc() > 4) fail(Errc::unsupported, "straightening requires bc <= 4");
  auto h = coxeter_number(params);
  long long period = h ? *h + 2 : 0;

  auto reduce_mono = [&](const GenMonomial& mono) {
    if (!h) return mono;
    GenMonomial r;
    for (auto [f, k] : mono) {
      if (f.kind == GenFactor::Kind::var) {
        f.index %= period;
        if (f.index < 0) f.index += period;
      }
      r.emplace_back(f, k);
    }
    std::sort(r.begin(), r.end());
    GenMonomial merged;
    for (const auto& t : r) {
      if (!merged.empty() && merged.back().first == t.first)
        merged.back().second += t.second;
      else
        merged.push_back(t);
    }
    return merged;
  };

  // a factor pair to rewrite, or nullopt when mono is already basis-shaped
  auto find_forbidden = [&](const GenMonomial& mono) -> std::optional<std::pair<GenFactor, GenFactor>> {
    std::vector<GenFactor> zs, ys;
    for (const auto& [f, k] : mono) {
      auto& bucket = f.kind == GenFactor::Kind::zel ? zs : ys;
      for (long long i = 0; i < k && i < 2; ++i) bucket.push_back(f);
    }
    if (zs.size() >= 2) return std::make_pair(zs[0], zs[1]);
    if (zs.size() == 1 && !ys.empty()) return std::make_pair(zs[0], ys[0]);
    if (ys.size() >= 2) {
      if (h) {
        // indices are cyclic: any pair at cyclic distance >= 2 is forbidden
        for (std::size_t i = 0; i < ys.size(); ++i) {
          for (std::size_t j = i + 1; j < ys.size(); ++j) {
            long long gap = std::llabs(ys[j].index - ys[i].index) % period;
            if (std::min(gap, period - gap) >= 2) return std::make_pair(ys[i], ys[j]);
          }
        }
      } else {
        // rewriting the extreme pair (min, max index) drives the multi-degree down
        auto [lo, hi] = std::minmax_element(
            ys.begin(), ys.end(),
            [](const GenFactor& x, const GenFactor& y) { return x.index < y.index; });
        if (hi->index - lo->index >= 2) return std::make_pair(*lo, *hi);
      }
    }
    return std::nullopt;
  };

  GeneratorExpr work;
  for (const auto& [mono, c] : e.terms()) work.add_term(reduce_mono(mono), c);

  for (std::size_t guard = 0; guard < 2'000'000; ++guard) {
    std::optional<GenMonomial> target;
    std::optional<std::pair<GenFactor, GenFactor>> pair;
    for (const auto& [mono, c] : work.terms()) {
      if (auto f = find_forbidden(mono)) {
        target = mono;
        pair = f;
        break;
      }
    }
    if (!target) return work;

    Int coeff = work.terms().at(*target);
    // divide the two factors out of the monomial
    GenMonomial rest;
    bool took_a = false, took_b = false;
    for (auto [f, k] : *target) {
      if (!took_a && f == pair->first) {
        --k;
        took_a = true;
      }
      if (!took_b && f == pair->second && k > 0) {
        --k;
        took_b = true;
      }
      if (k > 0) rest.emplace_back(f, k);
    }
    GeneratorExpr replacement = straighten_pair(pair->first, pair->second, params);
    GeneratorExpr restExpr;
    restExpr.add_term(rest, Int(1));
    GeneratorExpr contribution = (restExpr * replacement).scaled(coeff);

    GeneratorExpr removed;
    removed.add_term(*target, coeff);
    work -= removed;
    for (const auto& [mono, c] : contribution.terms()) work.add_term(reduce_mono(mono), c);
  }
  fail(Errc::not_in_algebra, "straightening did not terminate");
}

// --- decomposition and positivity ---------------------------------------------

namespace {

BasisLabel label_of_minimal(const ClusterChart& chart, const RootVec& alpha) {
  CartanParams params = chart.params();
  if (is_positive_imaginary(alpha, params)) {
    if (params.bc() != 4)
      fail(Errc::not_in_algebra, "minimal exponent inside the imaginary cone");
    RootVec d = delta(params);
    Int n, r;
    mpz_tdiv_qr(n.get_mpz_t(), r.get_mpz_t(), alpha.a1.get_mpz_t(), d.a1.get_mpz_t());
    if (sgn(r) != 0 || !(d.scaled(n) == alpha))
      fail(Errc::not_in_algebra, "imaginary minimal exponent is not a multiple of delta");
    return BasisLabel::imaginary(to_ll(n, "z index"), params);
  }
  return BasisLabel::real(alpha, params);
}

}  // namespace

Decomposition decompose(const ClusterChart& chart, const ZPoly& a) {
  if (chart.params().bc() > 4) fail(Errc::unsupported, "decomposition requires bc <= 4");
  Decomposition d;
  ZPoly r = a;
  std::size_t cap = 10 * a.size() + 100;
  while (!r.is_zero()) {
    if (cap-- == 0) fail(Errc::not_in_algebra, "decomposition iteration cap exceeded");
    Exp gamma = r.minimal_exponents().front();  // lex-smallest minimal exponent
    RootVec alpha{Int(-gamma.g1), Int(-gamma.g2)};
    BasisLabel label = label_of_minimal(chart, alpha);
    Int coeff = *r.coeff_at(gamma);
    r -= basis_element(chart, label).scaled(coeff);
    auto [it, inserted] = d.terms.try_emplace(label, coeff);
    if (!inserted) {
      it->second += coeff;
      if (sgn(it->second) == 0) d.terms.erase(it);
    }
  }
  // certify: the decomposition re-expands to the input exactly
  ZPoly check;
  for (const auto& [label, c] : d.terms) check += basis_element(chart, label).scaled(c);
  if (!(check == a)) fail(Errc::not_in_algebra, "decomposition failed re-expansion check");
  return d;
}

// Re-express a chart-A Laurent polynomial through chart B by substituting the
// chart-B expansions of A's variables (exact division clears the negative
// powers; Laurentness of algebra elements keeps it exact).
ZPoly substitute_chart(const ZPoly& a, const ZPoly& x, const ZPoly& y) {
  if (a.is_zero()) return a;
  Exp mn = a.support_min();
  // rows of fixed g2, Horner in both variables
  ZPoly result;
  int g2 = a.support_max().g2;
  ZPoly row;
  auto flush_to = [&](int target) {
    while (g2 > target) {
      result = result * y;
      --g2;
    }
  };
  std::vector<ZPoly::Term> ts(a.terms().begin(), a.terms().end());
  std::sort(ts.begin(), ts.end(), [](const auto& s, const auto& t) {
    return s.e.g2 != t.e.g2 ? s.e.g2 > t.e.g2 : s.e.g1 > t.e.g1;
  });
  std::size_t i = 0;
  while (i < ts.size()) {
    int row_g2 = ts[i].e.g2;
    flush_to(row_g2);
    // Horner in x over this row (exponents shifted by the global minimum)
    ZPoly rowval;
    int g1 = ts[i].e.g1;
    for (; i < ts.size() && ts[i].e.g2 == row_g2; ++i) {
      while (g1 > ts[i].e.g1) {
        rowval = rowval * x;
        --g1;
      }
      rowval += ZPoly::constant(ts[i].c);
    }
    while (g1 > mn.g1) {
      rowval = rowval * x;
      --g1;
    }
    result += rowval;
  }
  flush_to(mn.g2);
  // multiply by x^mn.g1 y^mn.g2 (dividing when negative)
  auto apply = [&](ZPoly v, const ZPoly& var, int e) {
    if (e > 0) return v * var.pow((unsigned long)e);
    if (e < 0) return ZPoly::exact_div(v, var.pow((unsigned long)(-e)));
    return v;
  };
  result = apply(std::move(result), x, mn.g1);
  result = apply(std::move(result), y, mn.g2);
  return result;
}

PositivityResult is_positive(const ClusterChart& chart, const ZPoly& a) {
  PositivityResult res;
  res.certificate = decompose(chart, a);
  if (res.certificate.terms.empty()) return res;  // zero is not positive
  res.positive = true;
  for (const auto& [label, c] : res.certificate.terms) {
    if (sgn(c) < 0) {
      res.positive = false;
      res.negative_label = label;
      break;
    }
  }
  if (!res.positive) {
    // best-effort Laurent witness: scan nearby charts for a negative coefficient
    for (long long off = -4; off <= 4; ++off) {
      long long base = chart.base() + off;
      ClusterChart other(chart.params(), base, chart.window_cap());
      ZPoly there = off == 0 ? a
                             : substitute_chart(a, other.variable(chart.base()),
                                                other.variable(chart.base() + 1));
      for (const auto& t : there.terms()) {
        if (sgn(t.c) < 0) {
          res.negative_chart = base;
          res.negative_exponent = t.e;
          break;
        }
      }
      if (res.negative_chart) break;
    }
  }
  return res;
}

WindowReport positivity_window_check(const GeneratorExpr& e, CartanParams params,
                                     long long m_lo, long long m_hi, int window_cap) {
  WindowReport rep;
  for (long long base = m_lo; base <= m_hi; ++base) {
    ClusterChart chart(params, base, window_cap);
    ZPoly v = expand(chart, e);
    WindowReport::Entry entry;
    entry.base = base;
    entry.all_positive = !v.is_zero();
    for (const auto& t : v.terms()) {
      if (sgn(t.c) <= 0) {
        entry.all_positive = false;
        entry.negative_exponent = t.e;
        break;
      }
    }
    rep.charts.push_back(entry);
  }
  return rep;
}

}  // namespace rank2
