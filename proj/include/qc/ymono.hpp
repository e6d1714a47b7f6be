#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qc/bigint.hpp"

namespace qc {

// Commutative monomials in the variables Y[i,r], i a node of the A3 chain
// 1 - 2 - 3, r an integer spectral shift. The root-vector variables are
// A[i,r] = Y[i,r-1] * Y[i,r+1] / prod over nodes j adjacent to i of Y[j,r].

using YKey = std::pair<int, int>;   // (node, shift)
using YMono = std::map<YKey, int>;  // exponents, zeros never stored
using ARec = std::map<YKey, int>;   // multiset of A^-1 steps, values > 0

const std::vector<int>& node_adjacent(int node);

YMono ym_one();
YMono ym_var(int node, int shift, int exp = 1);
YMono ym_mul(const YMono&, const YMono&);
YMono ym_pow(const YMono&, int n);
YMono ym_div(const YMono&, const YMono&);
bool ym_is_dominant(const YMono&);              // all exponents >= 0
bool ym_is_dominant_at(const YMono&, int node); // node-i exponents >= 0
std::map<int, int> ym_node_part(const YMono&, int node);  // shift -> exponent

YMono ym_apply_a_inverse(const YMono&, int node, int shift);
YMono ym_apply_a_record(const YMono&, const ARec&);
ARec arec_add(const ARec&, const ARec&);
int arec_total(const ARec&);
int arec_max_shift(const ARec&);                // 0 when empty

// m <= mp iff mp * m^-1 is a nonnegative integer combination of A-vectors.
// The A-vectors are linearly independent, so a witness is unique.
bool ym_dominance_leq(const YMono& m, const YMono& mp);
std::optional<ARec> ym_dominance_witness(const YMono& m, const YMono& mp);

struct TrackedYMono {
  YMono y;
  ARec a;
  auto operator<=>(const TrackedYMono&) const = default;
};

// Character-shaped polynomial: every term's y-monomial equals
// highest * (expansion of its a-record); multiplicities positive.
struct YPoly {
  YMono highest;
  std::map<ARec, Int> terms;  // includes the empty record for the top term
};

// Plain ring elements, forgetting the step tracking.
using YRing = std::map<YMono, Int>;
YRing yr_mul(const YRing&, const YRing&);
void yr_add(YRing&, const YRing&, const Int& scale = Int(1));

YPoly yp_one(const YMono& highest);
YPoly yp_mul(const YPoly&, const YPoly&);
YPoly yp_pow(const YPoly&, int n);
Int yp_coeff(const YPoly&, const ARec&);
YMono yp_term_y(const YPoly&, const ARec&);
// Ring collapse down to plain monomials (the tracking forgotten).
std::map<YMono, Int> yp_collapse(const YPoly&);
bool yp_ring_equal(const YPoly&, const YPoly&);
std::vector<std::pair<TrackedYMono, Int>> yp_dominant_monomials(const YPoly&);

std::string ym_print(const YMono&);   // "Y[1,0]*Y[2,3]^2", "1"
std::string arec_print(const ARec&);  // "A[1,1]^-1*A[2,2]^-2", "1"
// "H*(1 + A[2,4]^-1 + 2*A[1,1]^-1*A[2,4]^-1 + ...)", terms in canonical order
// (step count, then lex on the record); a bare "H" for a one-term character.
std::string yp_print(const YPoly&);
YMono ym_parse(const std::string&);

struct TrackedTerm {
  TrackedYMono m;
  Int coeff;
};
// Parses sums and products of Y[i,r]^e, A[i,r]^-e, integer coefficients,
// parentheses, and named bindings; an A-factor both extends the a-record and
// multiplies the y-part by its expansion.
std::vector<TrackedTerm> ya_parse(
    const std::string&, const std::map<std::string, TrackedYMono>& bindings = {});
// As above, requiring a well-formed character (unique term with empty record,
// consistent y-monomials, positive multiplicities).
YPoly yp_parse(const std::string&);

}  // namespace qc
