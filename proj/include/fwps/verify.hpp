#pragma once

#include "fwps/corpus.hpp"
#include "fwps/sylvester.hpp"

namespace fwps {

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Number-theoretic lemma instances behind the towers, both variants.
SuiteResult run_appendix_suite(std::size_t n, std::size_t m_max);

// Mutation calculus over the shared corpus: weight formula, height ratio,
// multiplicity constraint, degree and dual-count invariance, edge-only
// multiplicity preservation, executor-vs-closed-form agreement, inverses.
SuiteResult run_mutation_suite();

// Polytope-side vs weight-side classifier agreement plus the named cases.
SuiteResult run_singularity_suite();

}  // namespace fwps
