#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "blmp/core.hpp"
#include "blmp/cost.hpp"
#include "blmp/heuristics.hpp"
#include "blmp/tsp_thread.hpp"

namespace blmp {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitBudget = 3;

// Heuristics selectable by name: rand, sort, swm, epx, repx, qepx, tsp. SWM and REPX start from
// the sorted placement.
Placement run_heuristic(std::string_view algo, const ProbeSet& probes, std::size_t side,
                        const DistanceOracle& dist, const HeuristicConfig& config,
                        TourMethod tour_method = TourMethod::mst_double);

bool is_known_heuristic(std::string_view algo);

// Entry point of the `blmp` tool. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blmp
