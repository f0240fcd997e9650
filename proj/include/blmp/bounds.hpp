#pragma once

#include <cstdint>
#include <vector>

#include "blmp/core.hpp"
#include "blmp/cost.hpp"

namespace blmp {

inline constexpr std::uint64_t kDefaultBruteForceBudget = 5'000'000;

// Budget for exhaustive searches; BLMP_BRUTE_FORCE_BUDGET overrides the default when set.
std::uint64_t brute_force_budget();

// Sum of the 2N(N-1) smallest pairwise distances among all probes. Never exceeds the optimum.
Cost lower_bound(const ProbeSet& probes, std::size_t side, const DistanceOracle& dist);

struct ExactPlacement {
  Cost cost = 0;
  Placement placement;
  std::uint64_t search_space = 0;  // distinct placements modulo duplicate probes
};

// Number of placements distinct up to exchanging identical probes: n! / prod(multiplicity!).
// Saturates at UINT64_MAX.
std::uint64_t distinct_placement_count(const ProbeSet& probes);

// Exact BLMP optimum by branch and bound over placements modulo duplicate probes. Among optimal
// placements the lexicographically smallest cell vector is returned. Throws BudgetExceeded when
// the distinct placement count exceeds `budget`.
ExactPlacement brute_force_opt(const ProbeSet& probes, std::size_t side, const DistanceOracle& dist,
                               std::uint64_t budget = brute_force_budget());

struct ExactTour {
  Cost cost = 0;
  std::vector<ProbeId> order;
};

// Exact HTSP optimum. Duplicate strings are collapsed first (copies ride along at zero cost), then
// (m-1)!/2 distinct tours over the m distinct strings are searched.
ExactTour brute_force_htsp(const ProbeSet& probes, std::uint64_t budget = brute_force_budget());

}  // namespace blmp
