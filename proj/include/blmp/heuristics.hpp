#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "blmp/core.hpp"
#include "blmp/cost.hpp"

namespace blmp {

// How QEPX hands probes to its four quarters: contiguous runs of the input order, or of the
// lexicographically sorted order.
enum class QepxSplit { input, sorted };

QepxSplit parse_qepx_split(std::string_view name);
std::string_view qepx_split_name(QepxSplit split);

struct HeuristicConfig {
  std::size_t swm_window = 6;
  std::size_t swm_step = 3;
  std::size_t repx_lookahead_rows = 3;
  bool qepx_orientations = false;
  QepxSplit qepx_split = QepxSplit::sorted;
  std::uint64_t seed = 0;

  void validate() const;
};

// Input order, row-major.
Placement place_rand(const ProbeSet& probes, std::size_t side);

// Lexicographic order of symbol sequences, stable on probe id.
Placement place_sort(const ProbeSet& probes, std::size_t side);

// Epitaxial growth from a seeded probe at the grid centre. Each step attaches the (frontier cell,
// unplaced probe) pair with the lowest mean distance to the cell's placed neighbours; ties prefer
// more placed neighbours, then the lower cell index, then the lower probe id.
Placement place_epx(const ProbeSet& probes, std::size_t side, const DistanceOracle& dist,
                    const HeuristicConfig& config);

// Same growth restricted to `ids` on a rows x cols grid. Returns the row-major layout of ids.
std::vector<ProbeId> grow_epitaxial(std::span<const ProbeId> ids, std::size_t rows, std::size_t cols,
                                    const DistanceOracle& dist, std::uint64_t seed);

// Row-epitaxial: fills cells row-major, each time pulling the best probe out of a look-ahead band
// of the evolving placement.
Placement place_repx(const ProbeSet& probes, std::size_t side, const Placement& initial,
                     const DistanceOracle& dist, const HeuristicConfig& config);

struct SwmTrace {
  std::vector<Cost> costs;  // placement cost before the sweep, then after every window pass
};

// Sliding window matching: within each window, one checkerboard colour class at a time is lifted
// and reassigned to its cells by an exact minimum-cost assignment.
Placement place_swm(const ProbeSet& probes, std::size_t side, const Placement& initial,
                    const DistanceOracle& dist, const HeuristicConfig& config,
                    SwmTrace* trace = nullptr);

// Minimum-cost perfect assignment on a square cost matrix (row i -> column result[i]).
std::vector<std::size_t> solve_assignment(const std::vector<std::vector<Cost>>& cost);

// One quadrant block of a QEPX layout.
struct QuadrantChoice {
  std::array<std::size_t, 4> block_at{0, 1, 2, 3};  // block placed in quadrant q (TL, TR, BL, BR)
  std::array<int, 4> rotation{0, 0, 0, 0};          // quarter turns clockwise per quadrant
};

struct QepxResult {
  Placement placement;
  QuadrantChoice choice;
  std::array<std::vector<ProbeId>, 4> blocks;  // per-quarter EPX layouts before arrangement
  std::array<std::size_t, 4> block_rows{};
  std::array<std::size_t, 4> block_cols{};
};

// Quad epitaxial: EPX on four contiguous quarters of the probes (see QepxSplit), then the best
// arrangement of the four blocks by seam cost.
QepxResult place_qepx_detailed(const ProbeSet& probes, std::size_t side, const DistanceOracle& dist,
                               const HeuristicConfig& config);

Placement place_qepx(const ProbeSet& probes, std::size_t side, const DistanceOracle& dist,
                     const HeuristicConfig& config);

// Rotates a rows x cols row-major block by `quarter_turns` clockwise; rows/cols are updated.
std::vector<ProbeId> rotate_block(std::span<const ProbeId> block, std::size_t& rows, std::size_t& cols,
                                  int quarter_turns);

}  // namespace blmp
