#pragma once

#include <map>
#include <vector>

#include "qc/ymono.hpp"

namespace qc {

// A q-segment: shifts r, r+2, ..., r+2k-2 on one node's lattice.
struct Segment {
  int k = 0;
  int r = 0;
};

// Canonical decomposition of a shift multiset into segments such that every
// pair is nested or separated by a gap. Built by histogram slicing: level j
// contributes the maximal runs of {s : count(s) >= j}.
std::vector<Segment> segment_decompose(const std::map<int, int>& shift_counts);

// One term of a single-node character: a multiset of lowering steps.
struct Sl2Term {
  std::map<int, int> steps;
  Int coeff;
};

// Character of the simple single-node module with the given shift multiset,
// dropping every term using a step with shift > trunc. Pass a large trunc for
// the untruncated character.
std::vector<Sl2Term> sl2_char(const std::map<int, int>& shift_counts, int trunc);

// Expansion of a node-dominant monomial along one node: the single-node
// character of its node part, re-read on the full three-node lattice.
// The leading term (m, 1) is included.
std::vector<TrackedTerm> phi_terms(const TrackedYMono& m, int node, int trunc);

constexpr long kMonomialCap = 100000;

// Character generation from a dominant monomial. New monomials come from
// phi-expansions of node-dominant ones; the multiplicity of a monomial is the
// max over nodes of the contributions pushed from strictly smaller expansions.
// reverse_levels flips the processing order inside each record-size level, a
// scheduling choice the result must not depend on.
YPoly fm_char(const YMono& m, int trunc, long cap = kMonomialCap,
              bool reverse_levels = false);

// True when the generated character has exactly one dominant monomial.
bool is_minuscule(const YMono& m, int trunc, long cap = kMonomialCap);

// Post-hoc pruning: keep the terms whose step records stay within the shift
// window. Cross-check utility; generation-time pruning is the primary path.
YPoly yp_truncate(const YPoly& p, int trunc);

// Lower-bound polynomial: breadth-first phi-closure where each monomial is
// expanded only along nodes absent from its step record, stopping once a
// record touches every node. Coefficients take the max of weight * coefficient
// over expansions.
YPoly n_poly(const YMono& m, int trunc, long cap = kMonomialCap);

// phi-closure of a tracked monomial restricted to a node subset: the same
// generation and counting rule as fm_char but expanding only along the given
// nodes. The start monomial must be dominant at each of them. Terms keep their
// global step records.
std::vector<TrackedTerm> phi_closure(const TrackedYMono& m, const std::vector<int>& nodes,
                                     int trunc, long cap = kMonomialCap);

// Highest weight of the string module on one node: Y_{node,r} ... Y_{node,r+2k-2}.
YMono kr_monomial(int node, int k, int r);

// Single-node identity:
//   X(k,r) X(k,r+2) = X(k+1,r) X(k-1,r+2) + 1
// checked on explicit characters with the given truncation.
bool check_t_system_single(int k, int r, int trunc);

// Three-node identity for string modules:
//   X_i(k,r) X_i(k,r+2) = X_i(k+1,r) X_i(k-1,r+2) + prod_{j ~ i} X_j(k,r+1)
// with every factor truncated.
bool check_t_system(int node, int k, int r, int trunc);

}  // namespace qc
