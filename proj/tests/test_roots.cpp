#include <cstdio>
#include <map>
#include <set>

#include "qc/roots.hpp"

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
  // diagram shape
  REQUIRE(e6_adjacent(0, 1) && e6_adjacent(1, 2) && e6_adjacent(2, 3));
  REQUIRE(e6_adjacent(3, 4) && e6_adjacent(2, 5));
  REQUIRE(!e6_adjacent(0, 2) && !e6_adjacent(4, 5) && !e6_adjacent(0, 5));
  for (int i = 0; i < 6; ++i) {
    REQUIRE(kCartan[i][i] == 2);
    for (int j = 0; j < 6; ++j) {
      REQUIRE(kCartan[i][j] == kCartan[j][i]);
      if (i != j) REQUIRE(kCartan[i][j] == (e6_adjacent(i, j) ? -1 : 0));
    }
  }
  REQUIRE(eps_of(1) == 1 && eps_of(3) == 1 && eps_of(5) == 1);
  REQUIRE(eps_of(0) == -1 && eps_of(2) == -1 && eps_of(4) == -1);

  // 6 negated simples + 36 positives, heights 1..6, the highest root last
  const auto& aps = almost_positive_roots();
  REQUIRE(aps.size() == 42);
  int negs = 0, positives = 0;
  for (const auto& r : aps) {
    if (root_height(r) < 0)
      ++negs;
    else
      ++positives;
  }
  REQUIRE(negs == 6 && positives == 36);
  Root theta{1, 2, 3, 2, 1, 2};
  REQUIRE(root_height(theta) == 11);
  REQUIRE(root_index(theta) == 41);
  for (int i = 0; i < 42; ++i) REQUIRE(root_index(aps[i]) == i);
  REQUIRE(root_index(Root{1, 1, 0, 0, 0, 0}) >= 0);
  REQUIRE(root_index(Root{1, 0, 1, 0, 0, 0}) == -1);  // a0+a2 is not a root

  // tau oracles
  Root a2{0, 0, 1, 0, 0, 0};
  REQUIRE(tau(a2, 1) == (Root{0, 1, 1, 1, 0, 1}));
  Root na1{0, -1, 0, 0, 0, 0}, na0{-1, 0, 0, 0, 0, 0};
  REQUIRE(tau(na1, -1) == na1);  // fixed by the opposite color
  REQUIRE(tau(na0, 1) == na0);
  REQUIRE(tau(na1, 1) == (Root{0, 1, 0, 0, 0, 0}));
  for (const auto& r : aps) {
    REQUIRE(tau(tau(r, 1), 1) == r);
    REQUIRE(tau(tau(r, -1), -1) == r);
    REQUIRE(root_index(tau(r, 1)) >= 0);
  }

  // compatibility degrees
  Root a0{1, 0, 0, 0, 0, 0}, a1{0, 1, 0, 0, 0, 0}, a4{0, 0, 0, 0, 1, 0};
  REQUIRE(compat_degree(a0, a4) == 0);
  REQUIRE(compat_degree(a0, a1) == 1);
  REQUIRE(compat_degree(a1, a0) == 1);
  REQUIRE(compat_degree(na0, a0) == 1);
  REQUIRE(compat_degree(na0, a4) == 0);
  // negated simples are compatible with exactly the roots not using them
  for (const auto& r : aps) {
    int expect = r[0] > 0 ? r[0] : 0;
    REQUIRE(compat_degree(na0, r) == expect);
  }

  // compatible sets: symmetric, 798 memberships in total
  std::map<int, std::set<int>> table;
  size_t total = 0;
  for (const auto& r : aps) {
    auto c = compatible_set(r);
    total += c.size();
    for (const auto& b : c) table[root_index(r)].insert(root_index(b));
  }
  REQUIRE(total == 798);
  for (const auto& [i, members] : table)
    for (int j : members) REQUIRE(table.at(j).count(i));

  // clusters: 833 pairwise compatible 6-subsets, each root in at least one
  const auto& cl = clusters();
  REQUIRE(cl.size() == 833);
  std::set<int> used;
  for (const auto& c : cl) {
    for (int i = 0; i < 6; ++i) {
      used.insert(c[i]);
      for (int j = i + 1; j < 6; ++j)
        REQUIRE(compat_degree(aps[c[i]], aps[c[j]]) == 0);
    }
  }
  REQUIRE(used.size() == 42);

  // cone expansions
  for (const auto& r : aps) {
    ClusterExpansion ex = cluster_expansion(r);
    REQUIRE(ex.coeff.size() == 1 && ex.coeff.count(r) && ex.coeff.at(r) == 1);
  }
  Root a1a3{0, 1, 0, 1, 0, 0};  // not a root: splits over two compatible simples
  ClusterExpansion ex = cluster_expansion(a1a3);
  REQUIRE(ex.coeff.size() == 2);
  REQUIRE(ex.coeff.at(Root{0, 1, 0, 0, 0, 0}) == 1);
  REQUIRE(ex.coeff.at(Root{0, 0, 0, 1, 0, 0}) == 1);
  ClusterExpansion ex2 = cluster_expansion(Root{0, 0, 2, 0, 0, 0});
  REQUIRE(ex2.coeff.size() == 1 && ex2.coeff.at(a2) == 2);

  // text forms
  REQUIRE(root_print(na1) == "-a1");
  REQUIRE(root_print(Root{1, 2, 0, 0, 0, 0}) == "a0+2a1");
  REQUIRE(root_parse("-a3") == (Root{0, 0, 0, -1, 0, 0}));
  REQUIRE(root_parse("a0+2a1+3a2+2a3+a4+2a5") == theta);
  REQUIRE(root_parse("[1,2,3,2,1,2]") == theta);
  for (const auto& r : aps) REQUIRE(root_parse(root_print(r)) == r);

  if (failures) {
    std::printf("%d failure(s)\n", failures);
    return 1;
  }
  std::printf("ok\n");
  return 0;
}
