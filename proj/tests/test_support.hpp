#pragma once

// Independent oracles shared by the test suites. Nothing here calls into the code paths it checks.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "blmp/core.hpp"
#include "blmp/cost.hpp"

namespace blmp::test {

inline Placement random_placement(std::size_t side, std::uint64_t seed) {
  std::vector<ProbeId> cells(side * side);
  std::iota(cells.begin(), cells.end(), ProbeId{0});
  std::mt19937_64 rng(seed);
  std::shuffle(cells.begin(), cells.end(), rng);
  return Placement(side, std::move(cells));
}

// All grid edges as explicit cell pairs.
inline std::vector<std::pair<std::size_t, std::size_t>> grid_edges(std::size_t side) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < side * side; ++a) {
    for (std::size_t b = a + 1; b < side * side; ++b) {
      const long dr = static_cast<long>(a / side) - static_cast<long>(b / side);
      const long dc = static_cast<long>(a % side) - static_cast<long>(b % side);
      if (std::abs(dr) + std::abs(dc) == 1) edges.emplace_back(a, b);
    }
  }
  return edges;
}

inline Cost brute_edge_cost(const Placement& p, const DistanceOracle& dist) {
  Cost total = 0;
  for (auto [a, b] : grid_edges(p.side())) {
    total += hamming(dist.probes().probe(p[a]), dist.probes().probe(p[b]));
  }
  return total;
}

inline Cost brute_window_cost(const Placement& p, const Window& w, const DistanceOracle& dist,
                              bool include_boundary) {
  Cost total = 0;
  const std::size_t side = p.side();
  for (auto [a, b] : grid_edges(side)) {
    const bool in_a = w.contains(a / side, a % side);
    const bool in_b = w.contains(b / side, b % side);
    if ((in_a && in_b) || (include_boundary && in_a != in_b)) {
      total += hamming(dist.probes().probe(p[a]), dist.probes().probe(p[b]));
    }
  }
  return total;
}

inline std::vector<Placement> dihedral_images(const Placement& p) {
  const std::size_t n = p.side();
  std::vector<Placement> out;
  for (int flip = 0; flip < 2; ++flip) {
    for (int turn = 0; turn < 4; ++turn) {
      std::vector<ProbeId> cells(n * n);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          std::size_t rr = r, cc = flip ? n - 1 - c : c;
          for (int t = 0; t < turn; ++t) {
            const std::size_t nr = cc, nc = n - 1 - rr;
            rr = nr;
            cc = nc;
          }
          cells[rr * n + cc] = p.at(r, c);
        }
      }
      out.emplace_back(n, std::move(cells));
    }
  }
  return out;
}

// Exhaustive placement optimum over all n! permutations, no symmetry reduction, no pruning.
inline Cost naive_opt(const ProbeSet& probes, std::size_t side) {
  std::vector<ProbeId> cells(side * side);
  std::iota(cells.begin(), cells.end(), ProbeId{0});
  Cost best = -1;
  do {
    Cost c = 0;
    for (std::size_t r = 0; r < side; ++r) {
      for (std::size_t col = 0; col < side; ++col) {
        const ProbeId here = cells[r * side + col];
        if (col + 1 < side) c += hamming(probes.probe(here), probes.probe(cells[r * side + col + 1]));
        if (r + 1 < side) c += hamming(probes.probe(here), probes.probe(cells[(r + 1) * side + col]));
      }
    }
    if (best < 0 || c < best) best = c;
  } while (std::next_permutation(cells.begin(), cells.end()));
  return best;
}

// Exhaustive Hamming TSP optimum over all orders starting at probe 0.
inline Cost naive_tour(const ProbeSet& probes) {
  const std::size_t n = probes.size();
  if (n <= 1) return 0;
  std::vector<ProbeId> order(n);
  std::iota(order.begin(), order.end(), ProbeId{0});
  Cost best = -1;
  do {
    Cost c = 0;
    for (std::size_t i = 0; i < n; ++i) c += hamming(probes.probe(order[i]), probes.probe(order[(i + 1) % n]));
    if (best < 0 || c < best) best = c;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return best;
}

}  // namespace blmp::test
