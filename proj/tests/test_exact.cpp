#include <cstdio>
#include <cstdlib>
#include <string>

#include "qc/laurent.hpp"

using namespace qc;

static int failures = 0;

#define REQUIRE(cond)                                                  \
  do {                                                                 \
    if (!(cond)) {                                                     \
      std::printf("FAIL %s:%d  %s\n", __FILE__, __LINE__, #cond);      \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

int main() {
  // monomial arithmetic
  Mono one = mono_one();
  for (int i = 0; i < kNumVars; ++i) REQUIRE(one[i] == 0);
  Mono a = one, b = one;
  a[0] = 2;
  a[3] = -1;
  b[0] = 1;
  b[3] = 4;
  Mono ab = mono_mul(a, b);
  REQUIRE(ab[0] == 3 && ab[3] == 3);
  REQUIRE(mono_div(ab, b) == a);

  // ring identities on small polynomials
  LaurentPoly x0 = lp_var(0), x1 = lp_var(1);
  LaurentPoly s = lp_add(x0, x1);
  LaurentPoly sq = lp_mul(s, s);
  REQUIRE(sq == lp_pow(s, 2));
  REQUIRE(lp_sub(sq, sq).is_zero());
  REQUIRE(lp_pow(s, 0) == lp_const(1));
  REQUIRE(lp_add(s, lp_neg(s)).is_zero());
  // (x0^2 - x1^2) / (x0 + x1) = x0 - x1
  LaurentPoly diff = lp_sub(lp_mul(x0, x0), lp_mul(x1, x1));
  REQUIRE(lp_div_exact(diff, s) == lp_sub(x0, x1));

  // denominators and polynomiality
  LaurentPoly q = lp_parse("(x_0 x_2 + x_7)/x_1");
  Mono den = lp_monomial_denominator(q);
  REQUIRE(den[1] == 1);
  for (int i = 0; i < kNumVars; ++i)
    if (i != 1) REQUIRE(den[i] == 0);
  REQUIRE(!lp_is_polynomial(q));
  REQUIRE(lp_is_polynomial(sq));
  REQUIRE(lp_mul(q, x1) == lp_parse("x0*x2 + x7"));

  // parser: whitespace, underscores, juxtaposition, brackets, unary minus
  REQUIRE(lp_parse("x_0 x_2^2") == lp_parse("x0*x2^2"));
  REQUIRE(lp_parse("[x0 + x1][x0 - x1]") == diff);
  REQUIRE(lp_parse("-x0 + x0").is_zero());
  REQUIRE(lp_parse("x0(x1 + x2)") == lp_parse("x0 x1 + x0 x2"));
  REQUIRE(lp_parse("2x0^-3") == lp_mono([] {
            Mono m = mono_one();
            m[0] = -3;
            return m;
          }(),
                                        2));

  // print -> parse round trip stays canonical
  LaurentPoly p = lp_parse("x0^-1*x1 + 2*x7 - x3 x4^2");
  REQUIRE(lp_parse(lp_print(p)) == p);
  REQUIRE(lp_print(lp_const(1)) == "1");
  REQUIRE(lp_print(lp_zero()) == "0");

  // generator alphabet: primed names must win the longest match
  const Alphabet& g = gen_alphabet();
  LaurentPoly ap = lp_parse("a'", g);
  LaurentPoly aa = lp_parse("a", g);
  REQUIRE(ap != aa);
  REQUIRE(lp_parse("a a'", g) == lp_mul(aa, ap));
  REQUIRE(lp_parse("d'^2", g) == lp_pow(lp_parse("d'", g), 2));
  REQUIRE(lp_parse("c'c", g) == lp_mul(lp_parse("c", g), lp_parse("c'", g)));
  REQUIRE(lp_parse(lp_print(lp_parse("ab + c'd'", g), g), g) == lp_parse("ab + c'd'", g));

  // calculus and evaluation
  LaurentPoly d0 = lp_derivative(lp_parse("x0^2 x1 + x0^-1"), 0);
  REQUIRE(d0 == lp_parse("2 x0 x1 - x0^-2"));
  std::array<Rat, kNumVars> pt;
  for (auto& v : pt) v = Rat(1);
  pt[0] = Rat(2);
  pt[1] = Rat(3);
  REQUIRE(lp_eval(lp_parse("x0^2 x1 + x0^-1"), pt) == Rat(25, 2));

  if (failures) {
    std::printf("%d failure(s)\n", failures);
    return 1;
  }
  std::printf("ok\n");
  return 0;
}
