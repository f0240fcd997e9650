#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "blmp/core.hpp"
#include "blmp/cost.hpp"

namespace blmp {

struct Tour {
  std::vector<ProbeId> order;
  Cost cycle_cost = 0;  // includes the closing edge
};

enum class TourMethod {
  mst_double,  // preorder walk of a minimum spanning tree; cost <= 2 * optimal tour
  nn_2opt,     // nearest neighbour from probe 0, then 2-opt to a local optimum
};

TourMethod parse_tour_method(std::string_view name);
std::string_view tour_method_name(TourMethod method);

Cost tour_cost(const std::vector<ProbeId>& order, const DistanceOracle& dist);

Tour build_tour(const ProbeSet& probes, const DistanceOracle& dist, TourMethod method,
                std::uint64_t seed = 0);

// Serpentine threading: even rows left to right, odd rows right to left, so consecutive tour
// entries are always grid neighbours.
Placement thread_tour(const Tour& tour, std::size_t side);

// Reads a threaded placement back into tour order.
std::vector<ProbeId> unthread(const Placement& p);

struct ApproxResult {
  Placement placement;
  Tour tour;
  // A-priori ratio to the BLMP optimum: 4(N+1) for the MST tour, none for the unguaranteed mode.
  std::optional<Cost> ratio_bound;
};

ApproxResult approx_solve(const ProbeSet& probes, std::size_t side, const DistanceOracle& dist,
                          TourMethod method, std::uint64_t seed = 0);

}  // namespace blmp
