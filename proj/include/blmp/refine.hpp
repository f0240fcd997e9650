#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blmp/core.hpp"
#include "blmp/cost.hpp"

namespace blmp {

struct RefinementConfig {
  std::size_t degree = 2;
  std::size_t rhra_iterations = 350;
  std::uint64_t seed = 0;
  std::uint64_t subproblem_budget = 5'000'000;  // max permutations per sub-problem

  // Throws ValidationError for degree < 2, BudgetExceeded when (degree^2)! > subproblem_budget.
  void validate() const;
};

struct RefineResult {
  Placement placement;
  Cost initial_cost = 0;
  Cost final_cost = 0;
  // Placement cost after every sub-problem (HRA) or every iteration (RHRA), starting with the input.
  std::vector<Cost> trace;
  std::uint64_t evaluations = 0;  // partial arrangements scored by the exhaustive searches
};

// Hierarchical refinement. The grid side must be a power of the degree d. Level 0 solves every
// d x d block exactly; level j moves d^j x d^j blocks rigidly inside d^(j+1) super-blocks. Every
// sub-problem scores the edges to the frozen exterior as well, so cost never increases.
RefineResult hra(const Placement& p, const ProbeSet& probes, const DistanceOracle& dist,
                 const RefinementConfig& config);

// Randomized variant: each iteration runs the hierarchy inside a random d^j sub-square.
RefineResult rhra(const Placement& p, const ProbeSet& probes, const DistanceOracle& dist,
                  const RefinementConfig& config);

// The hierarchy restricted to the square [row, row + size) x [col, col + size); `size` must be a
// power of the degree. Updates `p`, appends the running cost to `trace` after each sub-problem.
void refine_square(Placement& p, std::size_t row, std::size_t col, std::size_t size,
                   const DistanceOracle& dist, const RefinementConfig& config, Cost& running_cost,
                   std::vector<Cost>* trace, std::uint64_t& evaluations);

// 100 * (init - refined) / init; 0 when init is 0.
double refinement_percent(Cost init_cost, Cost refined_cost);
std::string format_percent(double percent);

}  // namespace blmp
