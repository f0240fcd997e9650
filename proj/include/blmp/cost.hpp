#pragma once

#include <cstdint>
#include <vector>

#include "blmp/core.hpp"

namespace blmp {

// Hamming distances between the probes of one ProbeSet. The probe set must outlive the oracle.
class DistanceOracle {
 public:
  enum class Mode { automatic, on_demand, full_matrix };

  static constexpr std::size_t kDefaultMatrixCap = 8192;

  explicit DistanceOracle(const ProbeSet& probes, Mode mode = Mode::automatic,
                          std::size_t matrix_cap = kDefaultMatrixCap);

  std::size_t probe_count() const { return probes_->size(); }
  const ProbeSet& probes() const { return *probes_; }
  Mode mode() const { return mode_; }

  Cost operator()(ProbeId a, ProbeId b) const {
    if (a == b) return 0;
    if (mode_ == Mode::full_matrix) {
      if (a > b) std::swap(a, b);
      return matrix_[static_cast<std::size_t>(b) * (b - 1) / 2 + a];
    }
    return hamming(probes_->probe(a), probes_->probe(b));
  }

 private:
  const ProbeSet* probes_;
  Mode mode_;
  std::vector<std::uint32_t> matrix_;  // strict lower triangle, row b holds (0..b-1, b)
};

// Axis-aligned block of cells [row, row + rows) x [col, col + cols).
struct Window {
  std::size_t row = 0;
  std::size_t col = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;

  bool contains(std::size_t r, std::size_t c) const {
    return r >= row && r < row + rows && c >= col && c < col + cols;
  }
};

// Border length: every grid edge counted once (right and down from each cell).
Cost placement_cost(const Placement& p, const DistanceOracle& dist);

// Cost(after swapping c1 and c2) - Cost(before), touching only edges incident to the two cells.
Cost swap_delta(const Placement& p, GridCoord c1, GridCoord c2, const DistanceOracle& dist);

// Edges with both ends in the window, plus those crossing its border when include_boundary is set.
Cost region_cost(const Placement& p, const Window& window, const DistanceOracle& dist,
                 bool include_boundary);

}  // namespace blmp
