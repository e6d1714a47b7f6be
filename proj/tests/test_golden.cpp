#include <cstdio>
#include <set>
#include <string>

#include "qc/bridge.hpp"
#include "qc/golden.hpp"
#include "qc/laurent.hpp"
#include "qc/qchar.hpp"

using namespace qc;

static int failures = 0;

#define REQUIRE(cond)                                                  \
  do {                                                                 \
    if (!(cond)) {                                                     \
      std::printf("FAIL %s:%d  %s\n", __FILE__, __LINE__, #cond);      \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

static bool is_frozen_key(const std::string& k) {
  return k.size() == 2 && k[0] == 'f';
}

int main() {
  const GoldenCorpus& c = corpus();

  REQUIRE(c.variables.size() == 45);
  REQUIRE(c.compat.size() == 42);
  REQUIRE(c.gens.size() == 9);
  REQUIRE(c.presentation.size() == 24);
  REQUIRE(c.characters.size() == 45);
  REQUIRE(c.pair_cases.size() == 28);

  // variable entries: unique keys, parseable formulas, frozen rows bare
  {
    std::set<std::string> keys;
    int flags = 0, frozen = 0;
    Alphabet ax = x_alphabet();
    for (const auto& v : c.variables) {
      REQUIRE(keys.insert(v.key).second);
      if (v.flagged) ++flags;
      LaurentPoly p = lp_parse(v.expr, ax);
      REQUIRE(lp_parse(lp_print(p, ax), ax) == p);
      if (is_frozen_key(v.key)) {
        ++frozen;
        REQUIRE(v.seq.empty());
      } else {
        REQUIRE(root_index(root_parse(v.key)) >= 0);
      }
    }
    REQUIRE(frozen == 3);
    REQUIRE(flags == 0);
  }

  // compatibility lists: one entry per almost positive root, members valid
  {
    std::set<Root> roots;
    int flags = 0;
    for (const auto& ce : c.compat) {
      REQUIRE(root_index(ce.root) >= 0);
      REQUIRE(roots.insert(ce.root).second);
      if (ce.flagged) {
        ++flags;
        REQUIRE(!ce.flag.empty());
      }
      std::set<Root> members;
      for (const auto& m : ce.compat) {
        REQUIRE(root_index(m) >= 0);
        REQUIRE(members.insert(m).second);
        REQUIRE(!(m == ce.root));
      }
    }
    REQUIRE(roots.size() == 42);
    REQUIRE(flags == 9);
  }

  // generator bindings: nine distinct names bound to distinct roots
  {
    std::set<std::string> names;
    std::set<Root> roots;
    for (const auto& g : c.gens) {
      REQUIRE(names.insert(g.name).second);
      REQUIRE(roots.insert(g.root).second);
      REQUIRE(root_index(g.root) >= 0);
    }
    Alphabet ag = gen_alphabet();
    int flags = 0;
    for (const auto& pe : c.presentation) {
      if (pe.flagged) ++flags;
      LaurentPoly p = lp_parse(pe.poly, ag);
      REQUIRE(lp_is_polynomial(p));
      REQUIRE(lp_parse(lp_print(p, ag), ag) == p);
    }
    REQUIRE(flags == 1);
  }

  // character entries: method tag matches the generation rule per root
  {
    std::set<std::string> keys;
    int flags = 0, nmeth = 0;
    for (const auto& ch : c.characters) {
      REQUIRE(keys.insert(ch.key).second);
      if (ch.flagged) ++flags;
      if (ch.n_method) ++nmeth;
      if (is_frozen_key(ch.key)) {
        REQUIRE(!ch.n_method);
      } else {
        Root r = root_parse(ch.key);
        REQUIRE(root_index(r) >= 0);
        REQUIRE(ch.n_method == root_uses_n_method(r));
      }
      YPoly p = yp_parse(ch.poly);
      YPoly back = yp_parse(yp_print(p));
      REQUIRE(back.highest == p.highest && back.terms == p.terms);
    }
    REQUIRE(keys.size() == 45);
    REQUIRE(flags == 1);
    REQUIRE(nmeth == 13);
  }

  // pair catalogue: numbering, marker counts, printed dominant totals
  {
    int number = 0, betas = 0, flags = 0, fmc = 0, fmp = 0, so = 0;
    std::size_t dom_lines = 0;
    for (const auto& pc : c.pair_cases) {
      ++number;
      REQUIRE(pc.number == number);
      REQUIRE(root_index(pc.alpha) >= 0);
      REQUIRE(!pc.betas.empty());
      for (const auto& pb : pc.betas) {
        ++betas;
        REQUIRE(root_index(pb.beta) >= 0);
        REQUIRE(compat_degree(pc.alpha, pb.beta) == 0);
        if (pb.flagged) ++flags;
        if (pb.fm_contradiction) ++fmc;
        if (!pb.fm_poly.empty()) ++fmp;
        if (pb.simple_only) ++so;
        if (pb.has_dominants) {
          dom_lines += pb.dominants.size();
          REQUIRE(!pb.dominants.empty());
          for (const auto& [mult, rec] : pb.dominants) REQUIRE(mult > 0);
          // the list leads with the highest weight itself
          REQUIRE(pb.dominants.front().second.empty());
        } else {
          REQUIRE(pb.dominants.empty());
        }
        REQUIRE(!(pb.simple_only && pb.has_dominants));
        if (!pb.fm_poly.empty()) REQUIRE(pb.fm_contradiction);
      }
    }
    REQUIRE(betas == 213);
    REQUIRE(dom_lines == 599);
    REQUIRE(flags == 2);
    REQUIRE(fmc == 5);
    REQUIRE(fmp == 4);
    REQUIRE(so == 1);
  }

  if (failures) {
    std::printf("%d failure(s)\n", failures);
    return 1;
  }
  std::printf("ok\n");
  return 0;
}
