#include <cstdio>
#include <map>
#include <vector>

#include "qc/qchar.hpp"
#include "qc/ymono.hpp"

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
  // monomials and A-records
  YMono y = ym_mul(ym_var(1, 0), ym_var(2, 3, 2));
  REQUIRE(ym_print(y) == "Y[1,0]*Y[2,3]^2");
  REQUIRE(ym_parse(ym_print(y)) == y);
  REQUIRE(ym_print(ym_one()) == "1");
  REQUIRE(ym_div(y, y) == ym_one());
  REQUIRE(ym_is_dominant(y));
  // Y[2,1] * A[2,2]^-1 = Y[1,2] Y[3,2] / Y[2,3]
  YMono low = ym_apply_a_inverse(ym_var(2, 1), 2, 2);
  YMono want = ym_mul(ym_mul(ym_var(1, 2), ym_var(3, 2)), ym_var(2, 3, -1));
  REQUIRE(low == want);
  REQUIRE(!ym_is_dominant(low));
  REQUIRE(ym_is_dominant_at(low, 1) && ym_is_dominant_at(low, 3));
  REQUIRE(!ym_is_dominant_at(low, 2));

  // dominance order witnesses through the A-lattice
  REQUIRE(ym_dominance_leq(low, ym_var(2, 1)));
  REQUIRE(!ym_dominance_leq(ym_var(2, 1), low));
  auto w = ym_dominance_witness(low, ym_var(2, 1));
  REQUIRE(w.has_value() && w->size() == 1 && w->at({2, 2}) == 1);
  ARec rec;
  rec[{1, 1}] = 2;
  rec[{2, 4}] = 1;
  REQUIRE(arec_total(rec) == 3);
  REQUIRE(arec_max_shift(rec) == 4);
  REQUIRE(arec_print(rec) == "A[1,1]^-2*A[2,4]^-1");
  YMono stepped = ym_apply_a_record(y, rec);
  auto w2 = ym_dominance_witness(stepped, y);
  REQUIRE(w2.has_value() && *w2 == rec);

  // segment slicing of a shift histogram
  auto segs = segment_decompose({{0, 1}, {2, 1}});
  REQUIRE(segs.size() == 1 && segs[0].k == 2 && segs[0].r == 0);
  segs = segment_decompose({{0, 1}, {4, 1}});
  REQUIRE(segs.size() == 2);
  segs = segment_decompose({{0, 2}, {2, 1}});
  REQUIRE(segs.size() == 2);  // nested: a 2-string over a 1-string

  // single-node characters: a k-string has k+1 terms, all coefficient 1
  for (int k = 1; k <= 3; ++k) {
    std::map<int, int> counts;
    for (int t = 0; t < k; ++t) counts[2 * t] = 1;
    auto terms = sl2_char(counts, 1000);
    REQUIRE(terms.size() == static_cast<size_t>(k) + 1);
    for (const auto& t : terms) REQUIRE(t.coeff == 1);
  }
  REQUIRE(sl2_char({{0, 1}}, 0).size() == 1);  // truncation drops the lowering step

  // string-module highest weights
  REQUIRE(kr_monomial(2, 2, 1) == ym_mul(ym_var(2, 1), ym_var(2, 3)));
  REQUIRE(kr_monomial(1, 1, 4) == ym_var(1, 4));

  // generation from a highest weight
  YPoly p = fm_char(ym_var(1, 0), 4);
  REQUIRE(p.highest == ym_var(1, 0));
  REQUIRE(p.terms.size() == 4);  // node 1 string through the window
  REQUIRE(p.terms.count(ARec{}));
  for (const auto& [r, c] : p.terms) REQUIRE(c == 1);
  REQUIRE(is_minuscule(ym_var(1, 0), 4));
  REQUIRE(is_minuscule(ym_var(2, 1), 4));

  // scheduling independence and post-hoc pruning consistency
  static const YKey tops[] = {{1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 0}, {3, 2}};
  for (const auto& [node, shift] : tops) {
    YPoly a = fm_char(ym_var(node, shift), 4);
    YPoly b = fm_char(ym_var(node, shift), 4, kMonomialCap, /*reverse_levels=*/true);
    REQUIRE(a.highest == b.highest && a.terms == b.terms);
    YPoly full = fm_char(ym_var(node, shift), 1000);
    YPoly cut = yp_truncate(full, 4);
    REQUIRE(cut.terms == a.terms);
  }
  {
    YMono m = ym_mul(ym_var(2, 1), ym_var(2, 3));
    YPoly a = fm_char(m, 4);
    YPoly b = fm_char(m, 4, kMonomialCap, true);
    REQUIRE(a.terms == b.terms);
    REQUIRE(yp_truncate(fm_char(m, 1000), 4).terms == a.terms);
  }

  // the restricted closure over all three nodes reproduces generation
  {
    YMono m = ym_var(2, 1);
    YPoly a = fm_char(m, 4);
    auto terms = phi_closure({m, ARec{}}, {1, 2, 3}, 4);
    std::map<ARec, Int> got;
    for (const auto& t : terms) got[t.m.a] = t.coeff;
    REQUIRE(got == a.terms);
  }

  // the bounded closure never exceeds generation on these samples
  for (const auto& [node, shift] : tops) {
    YPoly fm = fm_char(ym_var(node, shift), 4);
    YPoly n = n_poly(ym_var(node, shift), 4);
    REQUIRE(n.highest == fm.highest);
    for (const auto& [r, c] : n.terms) {
      REQUIRE(fm.terms.count(r));
      REQUIRE(c <= fm.terms.at(r));
    }
  }

  // polynomial text round trips
  YPoly q = yp_parse("Y[2,3](1+A[2,4]^-1)");
  REQUIRE(q.highest == ym_var(2, 3));
  REQUIRE(q.terms.size() == 2);
  REQUIRE(yp_parse(yp_print(q)).terms == q.terms);
  YPoly one = yp_one(ym_var(1, 2));
  REQUIRE(yp_print(one) == "Y[1,2]");
  REQUIRE(yp_coeff(q, ARec{}) == 1);

  // truncated identities
  REQUIRE(check_t_system_single(1, 0, 1000));
  REQUIRE(check_t_system_single(2, 0, 1000));
  REQUIRE(check_t_system(1, 1, 0, 4));
  REQUIRE(check_t_system(2, 1, 1, 4));
  REQUIRE(check_t_system(3, 2, 0, 4));

  if (failures) {
    std::printf("%d failure(s)\n", failures);
    return 1;
  }
  std::printf("ok\n");
  return 0;
}
