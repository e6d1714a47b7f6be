#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

namespace qc {

// E6 root combinatorics over the labelled diagram 0-1-2-3-4 with 5 attached
// to 2. Coordinates are always in the simple-root basis a0..a5.

using Root = std::array<int, 6>;

extern const std::array<std::array<int, 6>, 6> kCartan;
bool e6_adjacent(int i, int j);
// Bipartition sign: +1 on {1,3,5}, -1 on {0,2,4}.
int eps_of(int i);

// The 42 almost positive roots: -a0..-a5 first, then the 36 positive roots
// ordered by height then lexicographically.
const std::vector<Root>& almost_positive_roots();
int root_index(const Root&);  // -1 when absent
int root_height(const Root&);

// Piecewise-linear involution on almost positive roots: coordinates at the
// eps-colored vertices become -c_i + sum of max(c_j, 0) over neighbours j.
Root tau(const Root&, int eps);
// Bilinear pairing sum of eps(i) * xi_i * gamma_i.
int pairing(const Root& xi, const Root& gamma);
// Compatibility degree: zero exactly when the two roots are compatible.
int compat_degree(const Root&, const Root&);
// All other almost positive roots compatible with a, in the canonical order.
std::vector<Root> compatible_set(const Root&);

// Maximal pairwise-compatible 6-subsets, as sorted root indices.
const std::vector<std::array<int, 6>>& clusters();

struct ClusterExpansion {
  std::map<Root, int> coeff;  // support with positive multiplicities
};
// Expands a nonnegative root-lattice vector over the unique compatible-set
// cone containing it (searches every cluster; aborts if none fits or if two
// fits disagree on support).
ClusterExpansion cluster_expansion(const Root& gamma);

std::string root_print(const Root&);  // "-a3", "a0+2a1", "0"
Root root_parse(const std::string&);  // also accepts "[1,2,3,2,1,2]"

}  // namespace qc
