#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <set>
#include <string>

#include "qc/cluster.hpp"
#include "qc/laurent.hpp"
#include "qc/roots.hpp"
#include "qc/verify.hpp"

using namespace qc;

static int failures = 0;

#define REQUIRE(cond)                                                  \
  do {                                                                 \
    if (!(cond)) {                                                     \
      std::printf("FAIL %s:%d  %s\n", __FILE__, __LINE__, #cond);      \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

static void dump_nonpass(const VerificationReport& r, int cap = 12) {
  int shown = 0;
  for (const auto& it : r.items) {
    if (it.status == "pass") continue;
    if (shown++ == cap) {
      std::printf("  ...\n");
      break;
    }
    std::printf("  [%s] %s\n    computed: %s\n    expected: %s\n", it.status.c_str(),
                it.key.c_str(), it.computed.c_str(), it.expected.c_str());
    if (!it.note.empty()) std::printf("    note: %s\n", it.note.c_str());
  }
}

static void require_clean(const VerificationReport& r) {
  if (r.failed != 0) dump_nonpass(r);
  REQUIRE(r.failed == 0);
  REQUIRE(r.passed > 0);
}

// Full enumeration from the start seed: counts, denominator bijection,
// frozen usage on the exchange graph.
static void criterion_enumeration() {
  const EnumerationResult& e = enumeration();
  REQUIRE(e.variables.size() == 42);
  REQUIRE(e.clusters.size() == 833);

  std::set<Root> droots;
  for (const auto& rec : e.variables) {
    REQUIRE(root_index(rec.droot) >= 0);
    REQUIRE(droots.insert(rec.droot).second);
  }
  REQUIRE(droots.size() == almost_positive_roots().size());

  for (int i = 0; i < 6; ++i) {
    Root r{};
    r[i] = -1;
    REQUIRE(e.variables[variable_of_root(r)].value == lp_var(i));
  }

  std::set<int> frozen_refs;
  for (const auto& ed : e.edges) {
    REQUIRE(ed.var_out >= 0 && ed.var_out < (int)e.variables.size());
    REQUIRE(ed.var_in >= 0 && ed.var_in < (int)e.variables.size());
    for (const auto* side : {&ed.plus_side, &ed.minus_side})
      for (const auto& [id, mult] : *side) {
        REQUIRE(mult > 0);
        if (id < 0)
          frozen_refs.insert(id);
        else
          REQUIRE(id < (int)e.variables.size());
      }
  }
  REQUIRE(frozen_refs == (std::set<int>{-9, -8, -7}));

  // 42 mutable variables plus the three frozen ones
  REQUIRE(e.variables.size() + 3 == 45);
}

int main(int argc, char** argv) {
  if (argc != 2) {
    std::printf("usage: acceptance <1..10>\n");
    return 2;
  }
  int n = std::atoi(argv[1]);
  switch (n) {
    case 1:
      criterion_enumeration();
      break;
    case 2: {
      VerificationReport r = verify_variables(true);
      int typo = 0;
      for (const auto& it : r.items)
        if (it.status == "paper-typo-suspected") ++typo;
      REQUIRE(typo <= 2);
      require_clean(r);
      break;
    }
    case 3:
      require_clean(verify_compatible_sets(true));
      break;
    case 4:
      require_clean(verify_presentation(true));
      break;
    case 5:
      require_clean(verify_characters(true));
      break;
    case 6:
      require_clean(verify_exchange());
      break;
    case 7:
      require_clean(verify_tsystem());
      break;
    case 8:
      require_clean(verify_factorization(1000, 2024));
      break;
    case 9:
      require_clean(verify_pairs(true));
      break;
    case 10:
      require_clean(verify_properties());
      break;
    default:
      std::printf("usage: acceptance <1..10>\n");
      return 2;
  }
  if (failures) {
    std::printf("%d failure(s)\n", failures);
    return 1;
  }
  std::printf("ok\n");
  return 0;
}
