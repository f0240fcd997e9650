#include "blmp/cost.hpp"

#include <string>

namespace blmp {

DistanceOracle::DistanceOracle(const ProbeSet& probes, Mode mode, std::size_t matrix_cap)
    : probes_(&probes), mode_(mode) {
  const std::size_t n = probes.size();
  if (mode_ == Mode::automatic) {
    mode_ = n <= matrix_cap ? Mode::full_matrix : Mode::on_demand;
  }
  if (mode_ == Mode::full_matrix) {
    if (n > matrix_cap) {
      throw ValidationError("full distance matrix refused for " + std::to_string(n) +
                            " probes (cap " + std::to_string(matrix_cap) + ")");
    }
    matrix_.resize(n * (n - (n > 0)) / 2);
    std::size_t k = 0;
    for (std::size_t b = 1; b < n; ++b) {
      auto pb = probes.probe(static_cast<ProbeId>(b));
      for (std::size_t a = 0; a < b; ++a) {
        matrix_[k++] = static_cast<std::uint32_t>(hamming(probes.probe(static_cast<ProbeId>(a)), pb));
      }
    }
  }
}

Cost placement_cost(const Placement& p, const DistanceOracle& dist) {
  if (p.size() != dist.probe_count()) {
    throw ValidationError("placement size does not match probe count");
  }
  const std::size_t n = p.side();
  Cost total = 0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      ProbeId here = p.at(r, c);
      if (c + 1 < n) total += dist(here, p.at(r, c + 1));
      if (r + 1 < n) total += dist(here, p.at(r + 1, c));
    }
  }
  return total;
}

namespace {

Cost incident_cost(const Placement& p, GridCoord c, GridCoord skip, const DistanceOracle& dist) {
  Cost sum = 0;
  ProbeId here = p.at(c);
  for (GridCoord nb : neighbors(c, p.side())) {
    if (nb == skip) continue;
    sum += dist(here, p.at(nb));
  }
  return sum;
}

void check_in_bounds(GridCoord c, std::size_t side) {
  if (c.row >= side || c.col >= side) throw ValidationError("grid coordinate out of bounds");
}

}  // namespace

Cost swap_delta(const Placement& p, GridCoord c1, GridCoord c2, const DistanceOracle& dist) {
  check_in_bounds(c1, p.side());
  check_in_bounds(c2, p.side());
  if (c1 == c2) throw ValidationError("swap of a cell with itself");
  const ProbeId a = p.at(c1);
  const ProbeId b = p.at(c2);
  // The c1-c2 edge, when present, keeps its cost under the swap, so it is skipped on both sides.
  Cost before = incident_cost(p, c1, c2, dist) + incident_cost(p, c2, c1, dist);
  Cost after = 0;
  for (GridCoord nb : neighbors(c1, p.side())) {
    if (nb != c2) after += dist(b, p.at(nb));
  }
  for (GridCoord nb : neighbors(c2, p.side())) {
    if (nb != c1) after += dist(a, p.at(nb));
  }
  return after - before;
}

Cost region_cost(const Placement& p, const Window& w, const DistanceOracle& dist,
                 bool include_boundary) {
  const std::size_t n = p.side();
  if (w.rows == 0 || w.cols == 0) throw ValidationError("empty window");
  if (w.row + w.rows > n || w.col + w.cols > n) throw ValidationError("window exceeds grid");
  Cost total = 0;
  for (std::size_t r = w.row; r < w.row + w.rows; ++r) {
    for (std::size_t c = w.col; c < w.col + w.cols; ++c) {
      ProbeId here = p.at(r, c);
      if (c + 1 < w.col + w.cols) total += dist(here, p.at(r, c + 1));
      if (r + 1 < w.row + w.rows) total += dist(here, p.at(r + 1, c));
    }
  }
  if (!include_boundary) return total;
  for (std::size_t c = w.col; c < w.col + w.cols; ++c) {
    if (w.row > 0) total += dist(p.at(w.row, c), p.at(w.row - 1, c));
    if (w.row + w.rows < n) total += dist(p.at(w.row + w.rows - 1, c), p.at(w.row + w.rows, c));
  }
  for (std::size_t r = w.row; r < w.row + w.rows; ++r) {
    if (w.col > 0) total += dist(p.at(r, w.col), p.at(r, w.col - 1));
    if (w.col + w.cols < n) total += dist(p.at(r, w.col + w.cols - 1), p.at(r, w.col + w.cols));
  }
  return total;
}

}  // namespace blmp
