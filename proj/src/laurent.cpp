#include "qc/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace qc {

namespace {

[[noreturn]] void die(const std::string& msg) {
  throw std::runtime_error("laurent: " + msg);
}

void put_term(LaurentPoly& p, const Mono& m, const Int& c) {
  if (c == 0) return;
  auto it = p.terms.find(m);
  if (it == p.terms.end()) {
    p.terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) p.terms.erase(it);
  }
}

}  // namespace

Mono mono_one() { return Mono{}; }

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r;
  for (int i = 0; i < kNumVars; ++i) r[i] = a[i] + b[i];
  return r;
}

Mono mono_div(const Mono& a, const Mono& b) {
  Mono r;
  for (int i = 0; i < kNumVars; ++i) r[i] = a[i] - b[i];
  return r;
}

LaurentPoly lp_zero() { return {}; }

LaurentPoly lp_const(const Int& c) {
  LaurentPoly p;
  put_term(p, mono_one(), c);
  return p;
}

LaurentPoly lp_var(int idx, int exp) {
  Mono m{};
  m[idx] = exp;
  return lp_mono(m);
}

LaurentPoly lp_mono(const Mono& m, const Int& c) {
  LaurentPoly p;
  put_term(p, m, c);
  return p;
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [m, c] : b.terms) put_term(r, m, c);
  return r;
}

LaurentPoly lp_sub(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [m, c] : b.terms) put_term(r, m, -c);
  return r;
}

LaurentPoly lp_neg(const LaurentPoly& a) {
  LaurentPoly r;
  for (const auto& [m, c] : a.terms) r.terms.emplace(m, -c);
  return r;
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) put_term(r, mono_mul(ma, mb), ca * cb);
  return r;
}

LaurentPoly lp_pow(const LaurentPoly& a, int n) {
  if (n < 0) {
    if (!a.is_monomial()) die("negative power of a non-monomial");
    const auto& [m, c] = *a.terms.begin();
    if (c != 1 && c != -1) die("negative power of a non-unit coefficient");
    Mono inv{};
    for (int i = 0; i < kNumVars; ++i) inv[i] = -m[i];
    Int cc = (n % 2 == 0) ? Int(1) : c;
    Mono acc{};
    for (int i = 0; i < kNumVars; ++i) acc[i] = inv[i] * (-n);
    return lp_mono(acc, cc);
  }
  LaurentPoly r = lp_const(1);
  LaurentPoly base = a;
  while (n > 0) {
    if (n & 1) r = lp_mul(r, base);
    n >>= 1;
    if (n) base = lp_mul(base, base);
  }
  return r;
}

LaurentPoly lp_div_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) die("division by zero");
  if (num.is_zero()) return {};
  // Reduce against the lex-leading term of den; exactness of the full division
  // makes every leading-coefficient division exact as well.
  const auto dl = std::prev(den.terms.end());
  LaurentPoly rem = num;
  LaurentPoly quot;
  while (!rem.is_zero()) {
    const auto rl = std::prev(rem.terms.end());
    Mono qm = mono_div(rl->first, dl->first);
    Int qc = rl->second / dl->second;
    if (qc * dl->second != rl->second) die("inexact division (coefficient)");
    LaurentPoly qt = lp_mono(qm, qc);
    rem = lp_sub(rem, lp_mul(qt, den));
    put_term(quot, qm, qc);
    if (!rem.is_zero() && !(std::prev(rem.terms.end())->first < rl->first))
      die("inexact division (remainder)");
  }
  return quot;
}

Mono lp_monomial_denominator(const LaurentPoly& p) {
  Mono d{};
  for (const auto& [m, c] : p.terms)
    for (int i = 0; i < kNumVars; ++i) d[i] = std::max(d[i], -m[i]);
  return d;
}

bool lp_is_polynomial(const LaurentPoly& p) {
  Mono d = lp_monomial_denominator(p);
  return d == mono_one();
}

LaurentPoly lp_derivative(const LaurentPoly& p, int var) {
  LaurentPoly r;
  for (const auto& [m, c] : p.terms) {
    if (m[var] == 0) continue;
    Mono mm = m;
    mm[var] -= 1;
    put_term(r, mm, c * m[var]);
  }
  return r;
}

namespace {
Rat rat_pow(const Rat& x, int e) {
  if (e == 0) return 1;
  bool inv = e < 0;
  unsigned k = inv ? -e : e;
  Rat r = 1, b = x;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  if (inv) {
    if (r == 0) die("evaluation pole");
    r = Rat(denominator(r), numerator(r));
  }
  return r;
}
}  // namespace

Rat lp_eval(const LaurentPoly& p, const std::array<Rat, kNumVars>& point) {
  Rat s = 0;
  for (const auto& [m, c] : p.terms) {
    Rat t(c);
    for (int i = 0; i < kNumVars; ++i)
      if (m[i] != 0) t *= rat_pow(point[i], m[i]);
    s += t;
  }
  return s;
}

int Alphabet::match(const std::string& s, size_t pos, size_t* len) const {
  int best = -1;
  size_t best_len = 0;
  for (size_t i = 0; i < names.size(); ++i) {
    const std::string& n = names[i];
    if (n.size() > best_len && s.compare(pos, n.size(), n) == 0) {
      best = static_cast<int>(i);
      best_len = n.size();
    }
  }
  *len = best_len;
  return best;
}

const Alphabet& x_alphabet() {
  static const Alphabet a = [] {
    Alphabet al;
    for (int i = 0; i < kNumVars; ++i) al.names.push_back("x" + std::to_string(i));
    return al;
  }();
  return a;
}

const Alphabet& gen_alphabet() {
  static const Alphabet a{{"a", "a'", "b", "c", "c'", "d", "d'", "e", "f"}};
  return a;
}

std::string lp_print(const LaurentPoly& p, const Alphabet& al) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    const Mono& m = it->first;
    const Int& c = it->second;
    bool neg = c < 0;
    Int ac = neg ? Int(-c) : c;
    std::vector<std::string> factors;
    if (ac != 1) factors.push_back(ac.str());
    for (int i = 0; i < kNumVars; ++i) {
      if (m[i] == 0) continue;
      std::string f = al.names[static_cast<size_t>(i)];
      if (m[i] != 1) f += "^" + std::to_string(m[i]);
      factors.push_back(f);
    }
    if (factors.empty()) factors.push_back("1");
    std::string term;
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) term += "*";
      term += factors[i];
    }
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

namespace {

// Recursive-descent parser over a cleaned string (no spaces or underscores).
struct Parser {
  std::string s;
  size_t pos = 0;
  const Alphabet& al;

  explicit Parser(const std::string& raw, const Alphabet& a) : al(a) {
    for (char ch : raw)
      if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '_') s.push_back(ch);
  }

  [[noreturn]] void fail(const std::string& why) {
    die("parse error at '" + s.substr(pos, 12) + "': " + why);
  }

  bool eof() const { return pos >= s.size(); }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  long long integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s[pos] - '0');
      ++pos;
    }
    return v;
  }

  bool starts_factor() const {
    char c = peek();
    if (c == '(' || c == '[') return true;
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    size_t len = 0;
    return al.match(s, pos, &len) >= 0;
  }

  LaurentPoly primary() {
    if (eat('(')) {
      LaurentPoly e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (eat('[')) {
      LaurentPoly e = expr();
      if (!eat(']')) fail("expected ']'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) return lp_const(integer());
    size_t len = 0;
    int idx = al.match(s, pos, &len);
    if (idx < 0) fail("expected symbol");
    pos += len;
    return lp_var(idx);
  }

  LaurentPoly factor() {
    LaurentPoly base = primary();
    if (eat('^')) {
      int sign = 1;
      if (eat('-')) sign = -1;
      long long e = integer();
      return lp_pow(base, static_cast<int>(sign * e));
    }
    return base;
  }

  LaurentPoly term() {
    LaurentPoly r = factor();
    for (;;) {
      if (eat('*')) {
        r = lp_mul(r, factor());
      } else if (eat('/')) {
        r = lp_div_exact(r, factor());
      } else if (starts_factor()) {
        r = lp_mul(r, factor());
      } else {
        return r;
      }
    }
  }

  LaurentPoly expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    LaurentPoly r = term();
    if (neg) r = lp_neg(r);
    for (;;) {
      if (eat('+'))
        r = lp_add(r, term());
      else if (eat('-'))
        r = lp_sub(r, term());
      else
        return r;
    }
  }
};

}  // namespace

LaurentPoly lp_parse(const std::string& text, const Alphabet& al) {
  Parser p(text, al);
  LaurentPoly r = p.expr();
  if (!p.eof()) p.fail("trailing input");
  return r;
}

}  // namespace qc
