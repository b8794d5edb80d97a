#include "rank2/expr.hpp"

#include <cctype>

namespace rank2 {

namespace {

GenMonomial mono_mul(const GenMonomial& a, const GenMonomial& b) {
  GenMonomial r;
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      r.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      r.push_back(*ib++);
    } else {
      r.emplace_back(ia->first, ia->second + ib->second);
      ++ia, ++ib;
    }
  }
  return r;
}

}  // namespace

void GeneratorExpr::add_term(GenMonomial mono, Int coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(mono), std::move(coeff));
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

GeneratorExpr GeneratorExpr::constant(Int c) {
  GeneratorExpr e;
  e.add_term({}, std::move(c));
  return e;
}

GeneratorExpr GeneratorExpr::variable(long long m, long long exponent) {
  GeneratorExpr e;
  if (exponent < 0) fail(Errc::invalid_argument, "negative exponent in generator expression");
  if (exponent == 0) return constant(Int(1));
  e.add_term({{GenFactor{GenFactor::Kind::var, m}, exponent}}, Int(1));
  return e;
}

GeneratorExpr GeneratorExpr::z(long long n, long long exponent) {
  if (n < 1) fail(Errc::invalid_argument, "z index must be positive");
  if (exponent < 0) fail(Errc::invalid_argument, "negative exponent in generator expression");
  if (exponent == 0) return constant(Int(1));
  GeneratorExpr e;
  e.add_term({{GenFactor{GenFactor::Kind::zel, n}, exponent}}, Int(1));
  return e;
}

GeneratorExpr GeneratorExpr::operator+(const GeneratorExpr& o) const {
  GeneratorExpr r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

GeneratorExpr GeneratorExpr::operator-(const GeneratorExpr& o) const {
  GeneratorExpr r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

GeneratorExpr GeneratorExpr::operator-() const {
  GeneratorExpr r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

GeneratorExpr GeneratorExpr::operator*(const GeneratorExpr& o) const {
  GeneratorExpr r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

GeneratorExpr GeneratorExpr::pow(unsigned long e) const {
  GeneratorExpr r = constant(Int(1));
  GeneratorExpr base = *this;
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

GeneratorExpr GeneratorExpr::scaled(const Int& c) const {
  GeneratorExpr r;
  if (sgn(c) == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

GeneratorExpr GeneratorExpr::sigma(long long p) const {
  GeneratorExpr r;
  for (const auto& [mono, c] : terms_) {
    GenMonomial img;
    for (const auto& [f, e] : mono) {
      GenFactor g = f;
      if (g.kind == GenFactor::Kind::var) g.index = 2 * p - g.index;
      img.emplace_back(g, e);
    }
    std::sort(img.begin(), img.end());
    r.add_term(std::move(img), c);
  }
  return r;
}

std::string GeneratorExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [mono, c] : terms_) {
    bool neg = sgn(c) < 0;
    Int abs = neg ? Int(-c) : c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    std::string body;
    for (const auto& [f, e] : mono) {
      if (!body.empty()) body += "*";
      body += (f.kind == GenFactor::Kind::var ? "y" : "z") + std::to_string(f.index);
      if (e != 1) body += "^" + std::to_string(e);
    }
    if (body.empty()) {
      s += abs.get_str();
    } else {
      if (abs != 1) s += abs.get_str() + "*";
      s += body;
    }
  }
  return s;
}

// --- recursive-descent parser -----------------------------------------------

namespace {

struct Parser {
  const std::string& src;
  std::size_t pos = 0;

  explicit Parser(const std::string& s) : src(s) {}

  void skip_ws() {
    while (pos < src.size() && std::isspace((unsigned char)src[pos])) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  [[noreturn]] void error(const std::string& what) {
    fail(Errc::parse_error, what + " at position " + std::to_string(pos) + " in \"" + src + "\"");
  }

  long long integer(bool allow_sign) {
    skip_ws();
    std::size_t start = pos;
    if (allow_sign && pos < src.size() && src[pos] == '-') ++pos;
    std::size_t digits = pos;
    while (pos < src.size() && std::isdigit((unsigned char)src[pos])) ++pos;
    if (pos == digits) error("expected integer");
    try {
      return std::stoll(src.substr(start, pos - start));
    } catch (const std::out_of_range&) {
      error("integer literal out of range");
    }
  }

  GeneratorExpr expr() {
    bool neg = eat('-');
    GeneratorExpr r = term();
    if (neg) r = -r;
    for (;;) {
      if (eat('+')) {
        r += term();
      } else if (eat('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  GeneratorExpr term() {
    GeneratorExpr r = factor();
    while (eat('*')) r *= factor();
    return r;
  }

  GeneratorExpr factor() {
    GeneratorExpr a = atom();
    if (eat('^')) {
      long long e = integer(false);
      if (e > 100000) error("exponent too large");
      a = a.pow((unsigned long)e);
    }
    return a;
  }

  GeneratorExpr atom() {
    char c = peek();
    if (c == '(') {
      eat('(');
      GeneratorExpr r = expr();
      if (!eat(')')) error("expected ')'");
      return r;
    }
    if (c == 'y') {
      ++pos;
      return GeneratorExpr::variable(integer(true));
    }
    if (c == 'z') {
      ++pos;
      skip_ws();
      if (pos < src.size() && std::isdigit((unsigned char)src[pos]))
        return GeneratorExpr::z(integer(false));
      return GeneratorExpr::z(1);
    }
    if (std::isdigit((unsigned char)c)) {
      std::size_t start = pos;
      while (pos < src.size() && std::isdigit((unsigned char)src[pos])) ++pos;
      return GeneratorExpr::constant(Int(src.substr(start, pos - start)));
    }
    error("unexpected character");
  }
};

}  // namespace

GeneratorExpr GeneratorExpr::parse(const std::string& text) {
  Parser p(text);
  GeneratorExpr r = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.error("trailing input");
  return r;
}

}  // namespace rank2
