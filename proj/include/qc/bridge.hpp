#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qc/cluster.hpp"
#include "qc/qchar.hpp"
#include "qc/roots.hpp"
#include "qc/ymono.hpp"

namespace qc {

// Diagram flip 0<->4, 1<->3 on roots; node flip 1<->3 on monomials. The two
// sides of the correspondence are exchanged consistently by these.
Root sigma_root(const Root&);
YMono sigma_ymono(const YMono&);

// Highest weight attached to a root: explicit table for the simple roots,
// their negatives, and the three short sums; case split on the coefficients
// at 1, 2, 3 for the rest.
YMono root_to_monomial(const Root&);

// Triple of one node's variables at all three shifts.
YMono frozen_monomial(int node);
// Frozen seed vertices carry the triples of nodes 2, 1, 3 in vertex order 6, 7, 8.
int frozen_node_of_vertex(int vertex);

// Roots whose character is produced by the bounded phi-closure rather than
// the plain generation from the highest weight.
bool root_uses_n_method(const Root&);

// Truncated characters, memoized.
const YPoly& bridge_char(const Root&);
const YPoly& bridge_char_frozen(int node);

// Unique factorization of a dominant monomial on the nine-variable alphabet:
// frozen triples peeled off by node, then the residual written over the
// highest weights of a single compatible six-root family.
struct FactorizationResult {
  std::array<int, 3> frozen_powers{};  // per node 1..3
  std::map<Root, int> expansion;
};
FactorizationResult factor_dominant_monomial(const YMono& m);
YMono assemble_factorization(const FactorizationResult&);

// Exchange identity on one edge of the mutation graph, transported to the
// character ring: char(out) * char(in) = prod(plus side) + prod(minus side).
bool verify_exchange_edge(const EnumerationResult& e, const ExchangeEdge& edge);

// Simplicity certificate for a compatible pair. The product of the two
// characters bounds the character of the simple module with the product
// highest weight; every dominant monomial of the product must be certified
// to actually occur, by expansions phi_J(m') of already-certified monomials
// m' whose step record avoids J. Contributions add over witnesses for a
// fixed J and the best J wins.
struct PairMonomialReport {
  ARec rec;        // relative to the product highest weight
  Int mult;        // multiplicity in the product character
  Int certified;   // certified lower bound for the simple character
};
struct PairReport {
  Root a, b;
  bool simple = false;                       // every dominant monomial certified
  std::vector<PairMonomialReport> monomials; // dominant monomials, highest first
};
PairReport check_pair_simplicity(const Root& a, const Root& b);

}  // namespace qc
