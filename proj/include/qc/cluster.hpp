#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qc/laurent.hpp"

namespace qc {

inline constexpr int kMutable = 6;

// Rows cover all 9 vertices, columns only the 6 mutable ones; the top 6x6
// block is antisymmetric and stays so under mutation.
struct ExchangeMatrix {
  std::array<std::array<int, kMutable>, kNumVars> b{};
  bool operator==(const ExchangeMatrix&) const = default;
};

ExchangeMatrix mutate_matrix(const ExchangeMatrix&, int k);

struct Seed {
  ExchangeMatrix m;
  std::array<LaurentPoly, kNumVars> vars;
  std::vector<std::string> vertex_names;
  bool operator==(const Seed&) const = default;
};

// Bipartite 6-vertex quiver shaped like the E6 diagram (chain 0-1-2-3-4 plus
// 2-5, sources 1,3,5) with one frozen vertex hung on each bipartite block:
// 0 -> 7 -> 1, 2 -> 6 -> 5, 8 -> 3 and 4 -> 8.
Seed initial_seed();
// 3x3 grid quiver with the third column frozen ("gamma2").
Seed grid_seed();

Seed mutate_seed(const Seed&, int k);
// Sequences are stored in composition order by default: the rightmost entry
// is applied first. Pass left_to_right to apply in listed order.
Seed replay_sequence(const Seed&, const std::vector<int>& seq, bool left_to_right = false);
// "0,1,2" or "(2,1),(1,1)" matched against the seed's vertex names.
std::vector<int> parse_sequence(const Seed&, const std::string&);

std::string seed_to_json(const Seed&);
Seed seed_from_json(const std::string&);

struct ClusterVariableRecord {
  LaurentPoly value;
  std::array<int, kMutable> droot{};  // denominator vector in root coordinates
  std::vector<int> witness_seq;       // reaches the variable from the start seed
                                      // (application order)
};

struct ExchangeEdge {
  int var_out = 0, var_in = 0;  // variable ids swapped by the mutation
  // Factors of the two exchange products: variable id (mutable) or -(vertex+1)
  // for a frozen vertex, with multiplicity.
  std::vector<std::pair<int, int>> plus_side, minus_side;
};

struct EnumerationResult {
  std::vector<ClusterVariableRecord> variables;
  std::vector<std::array<int, kMutable>> clusters;  // sorted variable ids per seed
  std::vector<ExchangeEdge> edges;                  // deduplicated exchange relations
};

// Breadth-first closure of the mutation graph; aborts if the seed cap is hit.
EnumerationResult enumerate_cluster_variables(const Seed& start, size_t cap = 10000);

// Denominator vector of a cluster variable: the monomial x_i itself maps to
// -alpha_i, anything else to its positive denominator exponents.
std::array<int, kMutable> denominator_root(const LaurentPoly&);

}  // namespace qc
