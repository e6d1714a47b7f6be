#pragma once

#include <string>
#include <vector>

#include "qc/cluster.hpp"
#include "qc/roots.hpp"

namespace qc {

struct ItemResult {
  std::string key;
  std::string status;    // pass, mismatch, paper-typo-suspected
  std::string computed;  // canonical text, filled for non-pass items
  std::string expected;
  std::string note;      // human-oriented remark, text report only
};

struct VerificationReport {
  std::string suite;
  std::vector<ItemResult> items;  // sorted by key
  int passed = 0;
  int failed = 0;
  double wall_seconds = 0.0;
};

// Full mutation-graph enumeration from the triangle seed, computed once.
const EnumerationResult& enumeration();
// Index into enumeration().variables of the variable with this denominator
// root; dies if the root is unknown.
int variable_of_root(const Root& r);

// Lenient mode counts a reproduced repaired reading (paper-typo-suspected) as
// a pass; strict mode fails it.
VerificationReport verify_variables(bool lenient = true);
VerificationReport verify_compatible_sets(bool lenient = true);
VerificationReport verify_presentation(bool lenient = true);
VerificationReport verify_characters(bool lenient = true);
VerificationReport verify_exchange();
VerificationReport verify_tsystem();
VerificationReport verify_factorization(int rounds = 1000, unsigned long long seed = 2024);
VerificationReport verify_pairs(bool lenient = true);
VerificationReport verify_properties(int rounds = 1000, unsigned long long seed = 2024);

std::vector<VerificationReport> verify_all(bool lenient = true);
const std::vector<std::string>& suite_names();
VerificationReport run_suite(const std::string& name, bool lenient);

std::string report_json(const VerificationReport&);
std::string report_json(const std::vector<VerificationReport>&);
std::string report_text(const VerificationReport&);

}  // namespace qc
