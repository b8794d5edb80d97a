// Kronecker substitution: pack a bivariate polynomial with nonnegative
// integer coefficients into one big integer (base 2^F, fields laid out on the
// product support grid), so that polynomial multiplication and exact division
// become single GMP operations. Sound only when no field overflows; field
// widths are sized from coefficient bit counts, and division results are
// re-verified by the caller before being trusted.

#include <cstring>
#include <vector>

#include "rank2/laurent.hpp"

namespace rank2 {

namespace {

using Term = ZPoly::Term;

struct Box {
  int min1, min2, w1, w2;  // widths are inclusive spans
};

Box box_of(const std::vector<Term>& ts) {
  Box b{ts.front().e.g1, ts.front().e.g2, 0, 0};
  int max1 = b.min1, max2 = b.min2;
  for (const auto& t : ts) {
    b.min1 = std::min(b.min1, t.e.g1);
    b.min2 = std::min(b.min2, t.e.g2);
    max1 = std::max(max1, t.e.g1);
    max2 = std::max(max2, t.e.g2);
  }
  b.w1 = max1 - b.min1;
  b.w2 = max2 - b.min2;
  return b;
}

std::size_t max_coeff_bits(const std::vector<Term>& ts) {
  std::size_t m = 1;
  for (const auto& t : ts) m = std::max(m, mpz_sizeinbase(t.c.get_mpz_t(), 2));
  return m;
}

std::size_t ceil_log2(std::size_t n) {
  std::size_t b = 0;
  while ((std::size_t{1} << b) < n) ++b;
  return b;
}

constexpr std::size_t kMaxTotalLimbs = std::size_t{1} << 26;  // 512 MiB cap

// Fields are limb-aligned (F a multiple of 64), so packing is limb copies.
bool pack(const std::vector<Term>& ts, const Box& grid, std::size_t limbs_per_field,
          long stride, mpz_class& out) {
  if (mp_bits_per_limb != 64) return false;
  long nfields = 0;
  for (const auto& t : ts) {
    long idx = (t.e.g1 - grid.min1) + long(t.e.g2 - grid.min2) * stride;
    nfields = std::max(nfields, idx + 1);
  }
  std::size_t total = std::size_t(nfields) * limbs_per_field;
  if (total > kMaxTotalLimbs) return false;
  std::vector<mp_limb_t> buf(total, 0);
  for (const auto& t : ts) {
    long idx = (t.e.g1 - grid.min1) + long(t.e.g2 - grid.min2) * stride;
    std::size_t count = 0;
    mpz_export(buf.data() + std::size_t(idx) * limbs_per_field, &count, -1,
               sizeof(mp_limb_t), 0, 0, t.c.get_mpz_t());
  }
  mpz_import(out.get_mpz_t(), buf.size(), -1, sizeof(mp_limb_t), 0, 0, buf.data());
  return true;
}

std::vector<mp_limb_t> export_limbs(const mpz_class& z, std::size_t want) {
  std::vector<mp_limb_t> buf(want + 1, 0);
  std::size_t count = 0;
  if (sgn(z) != 0) mpz_export(buf.data(), &count, -1, sizeof(mp_limb_t), 0, 0, z.get_mpz_t());
  return buf;
}

Int field_value(const std::vector<mp_limb_t>& buf, std::size_t idx, std::size_t L) {
  const mp_limb_t* p = buf.data() + idx * L;
  std::size_t n = L;
  while (n > 0 && p[n - 1] == 0) --n;
  Int v;
  if (n) mpz_import(v.get_mpz_t(), n, -1, sizeof(mp_limb_t), 0, 0, p);
  return v;
}

}  // namespace

bool kronecker_mul(const std::vector<Term>& a, const std::vector<Term>& b,
                   std::vector<Term>& out) {
  if (mp_bits_per_limb != 64 || a.empty() || b.empty()) return false;
  Box ba = box_of(a), bb = box_of(b);
  long s1 = long(ba.w1) + bb.w1 + 1;
  long s2 = long(ba.w2) + bb.w2 + 1;
  std::size_t fbits = max_coeff_bits(a) + max_coeff_bits(b) +
                      ceil_log2(std::min(a.size(), b.size())) + 2;
  std::size_t L = (fbits + 63) / 64;
  if (std::size_t(s1) * std::size_t(s2) * L > kMaxTotalLimbs) return false;

  mpz_class pa, pb;
  Box grid_a{ba.min1, ba.min2, 0, 0};
  Box grid_b{bb.min1, bb.min2, 0, 0};
  if (!pack(a, grid_a, L, s1, pa) || !pack(b, grid_b, L, s1, pb)) return false;
  mpz_class prod = pa * pb;

  std::size_t nfields = std::size_t(s1) * std::size_t(s2);
  auto buf = export_limbs(prod, nfields * L);
  out.clear();
  // walk fields in grid order: g2-major rows of ascending g1 is not lex order
  // on (g1,g2), so collect per row and sort once at the end
  for (std::size_t idx = 0; idx < nfields; ++idx) {
    Int v = field_value(buf, idx, L);
    if (sgn(v) == 0) continue;
    Exp e{int(long(idx) % s1) + ba.min1 + bb.min1, int(long(idx) / s1) + ba.min2 + bb.min2};
    out.push_back(Term{e, std::move(v)});
  }
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.e < y.e; });
  return true;
}

bool kronecker_divexact(const std::vector<Term>& a, const std::vector<Term>& b,
                        std::vector<Term>& out) {
  if (mp_bits_per_limb != 64 || a.empty() || b.empty()) return false;
  Box ba = box_of(a), bb = box_of(b);
  int qw1 = ba.w1 - bb.w1, qw2 = ba.w2 - bb.w2;
  if (qw1 < 0 || qw2 < 0) return false;
  std::size_t fbits = max_coeff_bits(a) + 2;
  if (max_coeff_bits(b) > fbits) return false;
  std::size_t L = (fbits + 63) / 64;
  long s1 = long(ba.w1) + 1;
  long s2 = long(ba.w2) + 1;
  if (std::size_t(s1) * std::size_t(s2) * L > kMaxTotalLimbs) return false;

  mpz_class pa, pb;
  Box grid_a{ba.min1, ba.min2, 0, 0};
  Box grid_b{bb.min1, bb.min2, 0, 0};
  if (!pack(a, grid_a, L, s1, pa) || !pack(b, grid_b, L, s1, pb)) return false;

  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), pa.get_mpz_t(), pb.get_mpz_t());
  if (sgn(r) != 0 || sgn(q) < 0) return false;

  std::size_t nfields = std::size_t(qw1 + 1) + std::size_t(qw2) * std::size_t(s1) + 1;
  std::size_t declared = mpz_size(q.get_mpz_t());
  if (declared > nfields * L) return false;
  auto buf = export_limbs(q, nfields * L);

  // Balanced decode: quotient coefficients may in principle be negative, in
  // which case fields carry borrows. |coeff| < 2^(F-1) is assumed and the
  // caller verifies q*b == a, so a wrong decode is caught, never returned.
  const int qmin1 = ba.min1 - bb.min1, qmin2 = ba.min2 - bb.min2;
  Int carry = 0;
  Int half;
  mpz_ui_pow_ui(half.get_mpz_t(), 2, unsigned(L * 64 - 1));
  Int full = half * 2;
  out.clear();
  for (std::size_t idx = 0; idx < nfields; ++idx) {
    Int v = field_value(buf, idx, L) + carry;
    carry = 0;
    if (v >= half) {
      v -= full;
      carry = 1;
    }
    if (sgn(v) == 0) continue;
    long g1off = long(idx) % s1;
    long g2off = long(idx) / s1;
    if (g1off > qw1 || g2off > qw2) return false;  // support outside quotient box
    Exp e{int(g1off) + qmin1, int(g2off) + qmin2};
    out.push_back(Term{e, std::move(v)});
  }
  if (sgn(carry) != 0) return false;
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.e < y.e; });
  return true;
}

}  // namespace rank2
