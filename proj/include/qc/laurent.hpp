#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qc/bigint.hpp"

namespace qc {

inline constexpr int kNumVars = 9;

// Exponent vector of one Laurent monomial over a fixed 9-symbol alphabet.
using Mono = std::array<int, kNumVars>;

Mono mono_one();
Mono mono_mul(const Mono&, const Mono&);
Mono mono_div(const Mono&, const Mono&);

// Laurent polynomial with exact integer coefficients; terms keyed by exponent
// vector, zero coefficients never stored.
struct LaurentPoly {
  std::map<Mono, Int> terms;

  bool operator==(const LaurentPoly&) const = default;
  bool is_zero() const { return terms.empty(); }
  bool is_monomial() const { return terms.size() == 1; }
};

LaurentPoly lp_zero();
LaurentPoly lp_const(const Int& c);
LaurentPoly lp_var(int idx, int exp = 1);
LaurentPoly lp_mono(const Mono& m, const Int& c = 1);

LaurentPoly lp_add(const LaurentPoly&, const LaurentPoly&);
LaurentPoly lp_sub(const LaurentPoly&, const LaurentPoly&);
LaurentPoly lp_neg(const LaurentPoly&);
LaurentPoly lp_mul(const LaurentPoly&, const LaurentPoly&);
LaurentPoly lp_pow(const LaurentPoly&, int n);  // n >= 0
// Exact division; aborts if the remainder is nonzero.
LaurentPoly lp_div_exact(const LaurentPoly& num, const LaurentPoly& den);

// Per-variable denominator exponents: d[i] = max(0, -min over terms of e_i).
Mono lp_monomial_denominator(const LaurentPoly&);
// True when every term has nonnegative exponents.
bool lp_is_polynomial(const LaurentPoly&);

LaurentPoly lp_derivative(const LaurentPoly&, int var);
Rat lp_eval(const LaurentPoly&, const std::array<Rat, kNumVars>& point);

// Fixed symbol table used for parsing and printing.
struct Alphabet {
  std::vector<std::string> names;  // index -> primary spelling
  // Longest symbol matching at s[pos..]; returns index or -1, *len = match length.
  int match(const std::string& s, size_t pos, size_t* len) const;
};

const Alphabet& x_alphabet();    // x0..x8
const Alphabet& gen_alphabet();  // a a' b c c' d d' e f

// Canonical form: terms in descending exponent-lex order, "*" between factors,
// "^" for exponents, e.g. "x0^-1*x1 + 2*x7".
std::string lp_print(const LaurentPoly&, const Alphabet& = x_alphabet());
// Accepts the canonical form plus free-form expressions: parentheses and
// brackets, juxtaposition as multiplication, unary "-", "/" by an exact
// divisor. Underscores and whitespace are ignored, so "x_0 x_2^2" works.
LaurentPoly lp_parse(const std::string&, const Alphabet& = x_alphabet());

}  // namespace qc
