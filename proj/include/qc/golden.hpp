#pragma once

#include <string>
#include <vector>

#include "qc/bigint.hpp"
#include "qc/roots.hpp"
#include "qc/ymono.hpp"

namespace qc {

// Directory holding the reference data files; overridable by the
// CLUSTER_QCHAR_GOLDEN_DIR environment variable.
std::string golden_dir();

struct VariableEntry {
  std::string key;                 // root text, or f1/f2/f3 for the frozen ones
  std::vector<std::string> seq;    // vertex names in composition order: the leftmost
                                   // vertex is mutated last and carries the variable
  std::string expr;                // Laurent formula in x_0..x_8
  bool flagged = false;            // transcription repaired a suspected misprint
  std::string flag;
};

struct CompatEntry {
  Root root{};
  std::vector<Root> compat;
  bool flagged = false;
  std::string flag;
};

struct GenBinding {
  std::string name;
  Root root{};
};

struct PresentationEntry {
  std::string target;              // root text, or x6/x7/x8
  std::string poly;                // polynomial in the nine generator names
  bool flagged = false;
  std::string flag;
};

struct CharEntry {
  std::string key;                 // root text, or f1/f2/f3
  bool n_method = false;
  std::string poly;                // full character text
  bool flagged = false;
  std::string flag;
};

struct PairBeta {
  Root beta{};
  // Printed dominant monomials of the product character, as multiplicity and
  // step record; empty means the default single-monomial expectation.
  std::vector<std::pair<Int, ARec>> dominants;
  bool has_dominants = false;
  bool simple_only = false;        // no printed list; only simplicity is claimed
  bool fm_contradiction = false;   // certified by comparing the generated
  std::string fm_poly;             // polynomial instead of a closure search
  bool flagged = false;
  std::string flag;
};

struct PairCase {
  int number = 0;
  Root alpha{};
  std::vector<PairBeta> betas;
};

struct GoldenCorpus {
  std::vector<VariableEntry> variables;
  std::vector<CompatEntry> compat;
  std::vector<GenBinding> gens;
  std::vector<PresentationEntry> presentation;
  std::vector<CharEntry> characters;
  std::vector<PairCase> pair_cases;
};

// Loaded once from golden_dir(); aborts with a message on any parse error.
const GoldenCorpus& corpus();

}  // namespace qc
