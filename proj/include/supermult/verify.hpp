#pragma once

#include <string>
#include <vector>

#include "supermult/multiplier.hpp"
#include "supermult/oracle.hpp"

namespace supermult::verify {

struct CheckResult {
  std::string name;
  std::string provenance;
  bool pass = false;
  std::string detail;
};

struct Options {
  int max_dim = 5;  // cap on k+l for the family corpora
  std::size_t word_cap = freelie::TruncatedFrame::kDefaultWordCap;
};

/// All Heisenberg-plus-abelian decompositions with total dimension <= max_total.
std::vector<multiplier::FamilyDesc> dim1_families(int max_total);

std::vector<CheckResult> run_counts(const Options& options);
std::vector<CheckResult> run_formulas(const Options& options);
std::vector<CheckResult> run_bounds(const Options& options);
std::vector<CheckResult> run_capability(const Options& options);

/// suite ∈ {counts, formulas, bounds, capability, all}.
std::vector<CheckResult> run_suite(const std::string& suite, const Options& options);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace supermult::verify
