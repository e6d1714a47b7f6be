#include <cstdio>
#include <map>
#include <string>

#include "qc/bridge.hpp"
#include "qc/qchar.hpp"
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

static YMono ym_of(const std::string& text) { return ym_parse(text); }

int main() {
  // diagram flips on both sides
  REQUIRE(sigma_root(root_parse("a0")) == root_parse("a4"));
  REQUIRE(sigma_root(root_parse("-a1")) == root_parse("-a3"));
  REQUIRE(sigma_root(root_parse("a2+a5")) == root_parse("a2+a5"));
  REQUIRE(sigma_root(root_parse("a0+a1+a2")) == root_parse("a2+a3+a4"));
  REQUIRE(sigma_ymono(ym_of("Y[1,0]*Y[2,3]")) == ym_of("Y[3,0]*Y[2,3]"));

  // highest weights of the nine seed objects and the nine simple-root layers
  static const std::pair<const char*, const char*> table[] = {
      {"-a0", "Y[1,0]"},
      {"a0+a1+a2+a5", "Y[1,2]"},
      {"a3+a4", "Y[1,4]"},
      {"-a4", "Y[3,0]"},
      {"a2+a3+a4+a5", "Y[3,2]"},
      {"a0+a1", "Y[3,4]"},
      {"a2+a5", "Y[2,1]"},
      {"a0+a1+a2+a3+a4+a5", "Y[2,3]"},
      {"-a5", "Y[2,5]"},
      {"-a1", "Y[1,4]*Y[2,1]"},
      {"-a2", "Y[1,4]*Y[2,1]*Y[3,4]"},
      {"-a3", "Y[2,1]*Y[3,4]"},
      {"a0", "Y[1,2]*Y[1,4]"},
      {"a4", "Y[3,2]*Y[3,4]"},
      {"a5", "Y[2,1]*Y[2,3]"},
      {"a1", "Y[1,0]*Y[3,4]"},
      {"a2", "Y[2,1]*Y[2,5]"},
      {"a3", "Y[1,4]*Y[3,0]"},
  };
  for (const auto& [root_text, mono_text] : table)
    REQUIRE(root_to_monomial(root_parse(root_text)) == ym_of(mono_text));
  // coefficient case split beyond the tables
  REQUIRE(root_to_monomial(root_parse("a1+a2")) == ym_of("Y[1,0]*Y[1,2]*Y[2,5]"));
  REQUIRE(root_to_monomial(root_parse("a0+2a1+3a2+2a3+a4+2a5")) ==
          ym_of("Y[1,0]*Y[1,2]*Y[2,3]*Y[2,5]*Y[3,0]*Y[3,2]"));
  // the flip intertwines the two assignments
  for (const auto& r : almost_positive_roots())
    REQUIRE(root_to_monomial(sigma_root(r)) == sigma_ymono(root_to_monomial(r)));

  // frozen triples
  REQUIRE(frozen_monomial(1) == ym_of("Y[1,0]*Y[1,2]*Y[1,4]"));
  REQUIRE(frozen_monomial(2) == ym_of("Y[2,1]*Y[2,3]*Y[2,5]"));
  REQUIRE(frozen_monomial(3) == ym_of("Y[3,0]*Y[3,2]*Y[3,4]"));
  REQUIRE(frozen_node_of_vertex(6) == 2);
  REQUIRE(frozen_node_of_vertex(7) == 1);
  REQUIRE(frozen_node_of_vertex(8) == 3);

  // bounded-closure roots: 13, closed under the flip
  int n_count = 0;
  for (const auto& r : almost_positive_roots()) {
    if (root_uses_n_method(r)) {
      ++n_count;
      REQUIRE(root_uses_n_method(sigma_root(r)));
    }
  }
  REQUIRE(n_count == 13);

  // characters agree with the generators they are built from
  {
    Root r = root_parse("-a0");
    REQUIRE(!root_uses_n_method(r));
    const YPoly& c = bridge_char(r);
    YPoly direct = fm_char(root_to_monomial(r), 4);
    REQUIRE(c.highest == direct.highest && c.terms == direct.terms);
  }
  for (const auto& r : almost_positive_roots()) {
    if (!root_uses_n_method(r)) continue;
    const YPoly& c = bridge_char(r);
    YPoly direct = n_poly(root_to_monomial(r), 4);
    REQUIRE(c.highest == direct.highest && c.terms == direct.terms);
    break;
  }
  {
    const YPoly& f1 = bridge_char_frozen(1);
    REQUIRE(f1.highest == frozen_monomial(1));
  }

  // factorization round trips on fixed inputs
  {
    FactorizationResult f = factor_dominant_monomial(frozen_monomial(1));
    REQUIRE(f.frozen_powers == (std::array<int, 3>{1, 0, 0}));
    REQUIRE(f.expansion.empty());
  }
  {
    YMono m = ym_mul(ym_of("Y[1,0]"), ym_of("Y[3,0]"));
    FactorizationResult f = factor_dominant_monomial(m);
    REQUIRE(f.frozen_powers == (std::array<int, 3>{0, 0, 0}));
    REQUIRE(f.expansion.size() == 2);
    REQUIRE(f.expansion.at(root_parse("-a0")) == 1);
    REQUIRE(f.expansion.at(root_parse("-a4")) == 1);
    REQUIRE(assemble_factorization(f) == m);
  }
  {
    // frozen triple times a squared highest weight
    FactorizationResult f;
    f.frozen_powers = {0, 2, 1};
    f.expansion[root_parse("a2+a5")] = 3;
    f.expansion[root_parse("-a0")] = 1;
    YMono m = assemble_factorization(f);
    FactorizationResult g = factor_dominant_monomial(m);
    REQUIRE(g.frozen_powers == f.frozen_powers);
    REQUIRE(g.expansion == f.expansion);
  }

  // one exchange edge of the enumerated graph, transported to characters
  {
    const EnumerationResult& e = enumeration();
    REQUIRE(!e.edges.empty());
    REQUIRE(verify_exchange_edge(e, e.edges.front()));
  }

  // simplicity certificates: a two-dominant product and its report
  {
    PairReport rep = check_pair_simplicity(root_parse("-a0"), root_parse("-a2"));
    REQUIRE(rep.simple);
    REQUIRE(rep.monomials.size() == 2);
    REQUIRE(rep.monomials[0].rec.empty());
    REQUIRE(rep.monomials[0].mult == 1 && rep.monomials[0].certified == 1);
    REQUIRE(rep.monomials[1].mult == 1 && rep.monomials[1].certified == 1);
    REQUIRE(arec_print(rep.monomials[1].rec) == "A[1,1]^-1*A[2,2]^-1*A[3,3]^-1");
  }

  if (failures) {
    std::printf("%d failure(s)\n", failures);
    return 1;
  }
  std::printf("ok\n");
  return 0;
}
