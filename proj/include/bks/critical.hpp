#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bks/colouring.hpp"
#include "bks/rays.hpp"

namespace bks {

struct MinimalSubset {
  std::vector<int> indices;  // sorted positions into the input set
};

struct CriticalReport {
  std::string label;
  bool is_critical = false;
  std::vector<int> removable;  // rays whose deletion keeps non-colourability
  std::vector<MinimalSubset> minimal_subsets;
  int min_size = 0;       // smallest cardinality among the reported subsets
  int count_at_min = 0;
  bool exhaustive = true;  // false when the node budget cut the search short
  std::uint64_t nodes = 0;
};

struct SearchBudget {
  std::uint64_t max_nodes = 1'000'000'000ull;
};

// Tests criticality: solves S minus each single ray; critical iff every such
// deletion is colourable. Throws NotAProofError when S itself is colourable.
CriticalReport is_critical(const RaySet& s,
                           ConstraintMode mode = ConstraintMode::BasisOnly);

// Enumerates every inclusion-minimal non-colourable subset of S (or only
// those of size <= max_size). Deletion search over the subset lattice with
// verdict memoisation and pruning by found witnesses; exact and exhaustive
// unless the node budget trips, which is flagged, never silent. Results are
// order-normalised, so output does not depend on the thread count.
CriticalReport enumerate_minimal(const RaySet& s,
                                 ConstraintMode mode = ConstraintMode::BasisOnly,
                                 std::optional<int> max_size = std::nullopt,
                                 SearchBudget budget = SearchBudget{},
                                 int threads = 1);

// Cardinality of the smallest non-colourable subset, by branch-and-bound over
// the same deletion search. Throws BudgetExceededError if the budget trips.
int minimum_proof_size(const RaySet& s,
                       ConstraintMode mode = ConstraintMode::BasisOnly,
                       SearchBudget budget = SearchBudget{});

}  // namespace bks
