#pragma once

// Sparse bivariate Laurent polynomials over an exact coefficient ring.
// The one arithmetic kernel of the project: the integer ring instance carries
// cluster-variable expansions, and the same template instantiated with
// integer polynomials in (q1,q2) as coefficients carries the deformed algebra.
//
// Representation invariant: terms sorted by lex(g1,g2) ascending, no zero
// coefficients. Every operation returns values in this canonical form, so
// equality is plain term-list equality and serialization is deterministic.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "rank2/error.hpp"

namespace rank2 {

using Int = mpz_class;

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Exponent of a Laurent monomial y1^g1 y2^g2 (lattice point gamma in Q).
struct Exp {
  int g1 = 0;
  int g2 = 0;
  friend bool operator==(const Exp&, const Exp&) = default;
  friend auto operator<=>(const Exp& a, const Exp& b) = default;  // lex(g1,g2)
  Exp operator+(const Exp& o) const { return {g1 + o.g1, g2 + o.g2}; }
  Exp operator-(const Exp& o) const { return {g1 - o.g1, g2 - o.g2}; }
};

// Coefficient ring of plain integers.
struct ZRing {
  using Coeff = Int;
  static const char* name() { return "int"; }
  static Coeff zero() { return Int(0); }
  static Coeff one() { return Int(1); }
  static bool is_zero(const Coeff& c) { return sgn(c) == 0; }
  static bool is_one(const Coeff& c) { return c == 1; }
  static void add_assign(Coeff& a, const Coeff& b) { a += b; }
  static void sub_assign(Coeff& a, const Coeff& b) { a -= b; }
  static Coeff mul(const Coeff& a, const Coeff& b) { return a * b; }
  static void addmul(Coeff& acc, const Coeff& a, const Coeff& b) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  static void submul(Coeff& acc, const Coeff& a, const Coeff& b) {
    mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  static Coeff neg(const Coeff& a) { return -a; }
  // Exact division; returns false when b does not divide a.
  static bool exact_div(Coeff& q, const Coeff& a, const Coeff& b) {
    if (sgn(b) == 0) return false;
    Int r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return sgn(r) == 0;
  }
};

template <class Ring>
class Laurent {
 public:
  using Coeff = typename Ring::Coeff;
  struct Term {
    Exp e;
    Coeff c;
    friend bool operator==(const Term& a, const Term& b) { return a.e == b.e && a.c == b.c; }
  };

  Laurent() = default;

  static Laurent zero() { return Laurent(); }
  static Laurent constant(Coeff c) { return monomial(Exp{0, 0}, std::move(c)); }
  static Laurent monomial(Exp e, Coeff c) {
    Laurent r;
    if (!Ring::is_zero(c)) r.terms_.push_back(Term{e, std::move(c)});
    return r;
  }
  // From arbitrary (exponent, coefficient) pairs; merges and canonicalizes.
  static Laurent from_terms(std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return a.e < b.e; });
    Laurent r;
    for (auto& t : ts) {
      if (!r.terms_.empty() && r.terms_.back().e == t.e)
        Ring::add_assign(r.terms_.back().c, t.c);
      else
        r.terms_.push_back(std::move(t));
    }
    r.strip_zeros();
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  const Coeff* coeff_at(Exp e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exp& x) { return t.e < x; });
    if (it == terms_.end() || !(it->e == e)) return nullptr;
    return &it->c;
  }

  // Componentwise support bounds; polynomial must be nonzero.
  Exp support_min() const {
    Exp m{terms_.front().e.g1, terms_.front().e.g2};
    for (const auto& t : terms_) {
      m.g1 = std::min(m.g1, t.e.g1);
      m.g2 = std::min(m.g2, t.e.g2);
    }
    return m;
  }
  Exp support_max() const {
    Exp m{terms_.front().e.g1, terms_.front().e.g2};
    for (const auto& t : terms_) {
      m.g1 = std::max(m.g1, t.e.g1);
      m.g2 = std::max(m.g2, t.e.g2);
    }
    return m;
  }

  // Exponents minimal in the product partial order on the support.
  std::vector<Exp> minimal_exponents() const {
    std::vector<Exp> mins;
    for (const auto& t : terms_) {
      bool dominated = false;
      for (const auto& s : terms_) {
        if (&s != &t && s.e.g1 <= t.e.g1 && s.e.g2 <= t.e.g2) {
          dominated = true;
          break;
        }
      }
      if (!dominated) mins.push_back(t.e);
    }
    return mins;  // already lex-sorted (subsequence of sorted terms)
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.c = Ring::neg(t.c);
    return r;
  }

  Laurent operator+(const Laurent& o) const { return merged(o, /*subtract=*/false); }
  Laurent operator-(const Laurent& o) const { return merged(o, /*subtract=*/true); }
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }

  Laurent operator*(const Laurent& o) const;
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  Laurent shifted(Exp d) const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.e = t.e + d;
    return r;
  }

  Laurent scaled(const Coeff& c) const {
    if (Ring::is_zero(c)) return Laurent();
    Laurent r = *this;
    for (auto& t : r.terms_) t.c = Ring::mul(t.c, c);
    return r;
  }

  Laurent pow(unsigned long e) const {
    Laurent r = constant(Ring::one());
    Laurent base = *this;
    while (e) {
      if (e & 1) r *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return r;
  }

  // Exact division: returns q with q*b == a, or nullopt when no Laurent
  // quotient over the coefficient ring exists. Every returned quotient has
  // been verified by re-multiplication.
  static std::optional<Laurent> try_exact_div(const Laurent& a, const Laurent& b);

  static Laurent exact_div(const Laurent& a, const Laurent& b) {
    auto q = try_exact_div(a, b);
    if (!q) fail(Errc::inexact, "no exact Laurent quotient");
    return std::move(*q);
  }

  bool all_coeffs_nonneg() const
    requires std::is_same_v<Ring, ZRing>
  {
    for (const auto& t : terms_) {
      if (sgn(t.c) < 0) return false;
    }
    return true;
  }

 private:
  std::vector<Term> terms_;

  void strip_zeros() {
    std::erase_if(terms_, [](const Term& t) { return Ring::is_zero(t.c); });
  }

  Laurent merged(const Laurent& o, bool subtract) const {
    Laurent r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto ia = terms_.begin(), ib = o.terms_.begin();
    while (ia != terms_.end() || ib != o.terms_.end()) {
      if (ib == o.terms_.end() || (ia != terms_.end() && ia->e < ib->e)) {
        r.terms_.push_back(*ia++);
      } else if (ia == terms_.end() || ib->e < ia->e) {
        Term t = *ib++;
        if (subtract) t.c = Ring::neg(t.c);
        r.terms_.push_back(std::move(t));
      } else {
        Term t = *ia++;
        if (subtract)
          Ring::sub_assign(t.c, ib->c);
        else
          Ring::add_assign(t.c, ib->c);
        ++ib;
        if (!Ring::is_zero(t.c)) r.terms_.push_back(std::move(t));
        continue;
      }
    }
    r.strip_zeros();
    return r;
  }

  static std::optional<Laurent> generic_exact_div(const Laurent& a, const Laurent& b);
};

using ZPoly = Laurent<ZRing>;

// Kronecker-substitution kernels for the integer instance (src/kronecker.cpp).
// Only sound for all-nonnegative inputs; the division result is re-verified by
// the caller before use.
bool kronecker_mul(const std::vector<ZPoly::Term>& a, const std::vector<ZPoly::Term>& b,
                   std::vector<ZPoly::Term>& out);
bool kronecker_divexact(const std::vector<ZPoly::Term>& a, const std::vector<ZPoly::Term>& b,
                        std::vector<ZPoly::Term>& out);

namespace detail {

template <class Ring>
bool use_kronecker(const Laurent<Ring>&, const Laurent<Ring>&) {
  return false;
}

inline bool use_kronecker(const ZPoly& a, const ZPoly& b) {
  return a.size() * b.size() >= (std::size_t{1} << 15) && a.all_coeffs_nonneg() &&
         b.all_coeffs_nonneg();
}

}  // namespace detail

template <class Ring>
Laurent<Ring> Laurent<Ring>::operator*(const Laurent& o) const {
  if (is_zero() || o.is_zero()) return Laurent();
  if constexpr (std::is_same_v<Ring, ZRing>) {
    if (detail::use_kronecker(*this, o)) {
      std::vector<Term> out;
      if (kronecker_mul(terms_, o.terms_, out)) {
        Laurent r;
        r.terms_ = std::move(out);
        return r;
      }
    }
  }
  std::map<Exp, Coeff> acc;
  for (const auto& ta : terms_) {
    for (const auto& tb : o.terms_) {
      auto [it, inserted] = acc.try_emplace(ta.e + tb.e, Ring::zero());
      Ring::addmul(it->second, ta.c, tb.c);
    }
  }
  Laurent r;
  r.terms_.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (!Ring::is_zero(c)) r.terms_.push_back(Term{e, std::move(c)});
  }
  return r;
}

// Long division in the Laurent ring, eliminating the lex-greatest term of the
// remainder at each step. The quotient's support box is pinned in advance
// (support bounds of a Minkowski difference), which both bounds the loop and
// rejects non-Laurent quotients early.
template <class Ring>
std::optional<Laurent<Ring>> Laurent<Ring>::generic_exact_div(const Laurent& a,
                                                              const Laurent& b) {
  if (a.is_zero()) return Laurent();
  Exp qmin = a.support_min() - b.support_min();
  Exp qmax = a.support_max() - b.support_max();
  if (qmin.g1 > qmax.g1 || qmin.g2 > qmax.g2) return std::nullopt;

  const Term& blead = b.terms_.back();
  Laurent q;
  Laurent r = a;
  std::size_t guard =
      std::size_t(qmax.g1 - qmin.g1 + 1) * std::size_t(qmax.g2 - qmin.g2 + 1) + 1;
  std::vector<Term> qterms;  // collected in descending lex order
  while (!r.is_zero()) {
    if (guard-- == 0) return std::nullopt;
    const Term& rlead = r.terms_.back();
    Exp e = rlead.e - blead.e;
    if (e.g1 < qmin.g1 || e.g1 > qmax.g1 || e.g2 < qmin.g2 || e.g2 > qmax.g2)
      return std::nullopt;
    Coeff c = Ring::zero();
    if (!Ring::exact_div(c, rlead.c, blead.c)) return std::nullopt;
    Laurent piece = monomial(e, c);
    r -= piece * b;
    qterms.push_back(Term{e, std::move(c)});
  }
  std::reverse(qterms.begin(), qterms.end());
  q.terms_ = std::move(qterms);
  return q;
}

template <class Ring>
std::optional<Laurent<Ring>> Laurent<Ring>::try_exact_div(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) fail(Errc::invalid_argument, "division by zero polynomial");
  if (a.is_zero()) return Laurent();
  if constexpr (std::is_same_v<Ring, ZRing>) {
    if (detail::use_kronecker(a, b)) {
      std::vector<Term> out;
      if (kronecker_divexact(a.terms_, b.terms_, out)) {
        Laurent q;
        q.terms_ = std::move(out);
        if (q * b == a) return q;  // fast path is advisory; verify
      }
      // fall through to the generic algorithm for the authoritative answer
    }
  }
  auto q = generic_exact_div(a, b);
  if (q && !(*q * b == a)) return std::nullopt;
  return q;
}

// ---------------------------------------------------------------------------
// Coefficient ring Z[q1,q2]: the same sparse container, restricted to
// nonnegative exponents. Division is polynomial (not Laurent) division.

struct QPolyRing {
  using Coeff = ZPoly;
  static const char* name() { return "qpoly"; }
  static Coeff zero() { return ZPoly(); }
  static Coeff one() { return ZPoly::constant(Int(1)); }
  static bool is_zero(const Coeff& c) { return c.is_zero(); }
  static bool is_one(const Coeff& c) { return c == one(); }
  static void add_assign(Coeff& a, const Coeff& b) { a += b; }
  static void sub_assign(Coeff& a, const Coeff& b) { a -= b; }
  static Coeff mul(const Coeff& a, const Coeff& b) { return a * b; }
  static void addmul(Coeff& acc, const Coeff& a, const Coeff& b) { acc += a * b; }
  static void submul(Coeff& acc, const Coeff& a, const Coeff& b) { acc -= a * b; }
  static Coeff neg(const Coeff& a) { return -a; }
  static bool exact_div(Coeff& q, const Coeff& a, const Coeff& b) {
    auto r = ZPoly::try_exact_div(a, b);
    if (!r) return false;
    if (!r->is_zero() && (r->support_min().g1 < 0 || r->support_min().g2 < 0))
      return false;  // Laurent quotient exists but is not a polynomial in q
    q = std::move(*r);
    return true;
  }
};

using QPoly = ZPoly;              // polynomial in q1,q2 (nonnegative exponents)
using QLaurent = Laurent<QPolyRing>;  // Laurent in Y1,Y2 over Z[q1,q2]

}  // namespace rank2
