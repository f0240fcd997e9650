#include "blmp/tsp_thread.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace blmp {

TourMethod parse_tour_method(std::string_view name) {
  if (name == "mst_double") return TourMethod::mst_double;
  if (name == "nn_2opt") return TourMethod::nn_2opt;
  throw ValidationError("unknown tour method '" + std::string(name) + "'");
}

std::string_view tour_method_name(TourMethod method) {
  return method == TourMethod::mst_double ? "mst_double" : "nn_2opt";
}

Cost tour_cost(const std::vector<ProbeId>& order, const DistanceOracle& dist) {
  Cost total = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    total += dist(order[i], order[(i + 1) % order.size()]);
  }
  return total;
}

namespace {

std::vector<ProbeId> mst_preorder(std::size_t n, const DistanceOracle& dist) {
  // Dense Prim from probe 0.
  constexpr Cost kInf = std::numeric_limits<Cost>::max();
  std::vector<Cost> key(n, kInf);
  std::vector<std::size_t> parent(n, 0);
  std::vector<bool> in_tree(n, false);
  std::vector<std::vector<ProbeId>> children(n);
  key[0] = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t u = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!in_tree[v] && (u == n || key[v] < key[u])) u = v;
    }
    in_tree[u] = true;
    if (u != 0) children[parent[u]].push_back(static_cast<ProbeId>(u));
    for (std::size_t v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      Cost d = dist(static_cast<ProbeId>(u), static_cast<ProbeId>(v));
      if (d < key[v]) {
        key[v] = d;
        parent[v] = u;
      }
    }
  }
  // Preorder walk of the doubled tree with repeated vertices shortcut.
  std::vector<ProbeId> order;
  order.reserve(n);
  std::vector<ProbeId> stack{0};
  while (!stack.empty()) {
    ProbeId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    auto& ch = children[v];
    std::sort(ch.begin(), ch.end());
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return order;
}

std::vector<ProbeId> nearest_neighbor(std::size_t n, const DistanceOracle& dist) {
  std::vector<ProbeId> order{0};
  std::vector<bool> visited(n, false);
  visited[0] = true;
  for (std::size_t step = 1; step < n; ++step) {
    const ProbeId from = order.back();
    ProbeId best = 0;
    Cost best_d = std::numeric_limits<Cost>::max();
    for (ProbeId v = 0; v < n; ++v) {
      if (visited[v]) continue;
      Cost d = dist(from, v);
      if (d < best_d) {
        best_d = d;
        best = v;
      }
    }
    visited[best] = true;
    order.push_back(best);
  }
  return order;
}

// First-improvement 2-opt: reverse order[i+1..j] when it shortens the cycle.
void two_opt(std::vector<ProbeId>& order, const DistanceOracle& dist) {
  const std::size_t n = order.size();
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t i = 0; i + 2 < n; ++i) {
      for (std::size_t j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;  // the two edges share a vertex
        const ProbeId a = order[i], b = order[i + 1];
        const ProbeId c = order[j], d = order[(j + 1) % n];
        const Cost delta = dist(a, c) + dist(b, d) - dist(a, b) - dist(c, d);
        if (delta < 0) {
          std::reverse(order.begin() + static_cast<std::ptrdiff_t>(i + 1),
                       order.begin() + static_cast<std::ptrdiff_t>(j + 1));
          improved = true;
        }
      }
    }
  }
}

}  // namespace

Tour build_tour(const ProbeSet& probes, const DistanceOracle& dist, TourMethod method,
                std::uint64_t /*seed*/) {
  const std::size_t n = probes.size();
  if (n < 3) throw ValidationError("a tour needs at least 3 probes");
  Tour tour;
  if (method == TourMethod::mst_double) {
    tour.order = mst_preorder(n, dist);
  } else {
    tour.order = nearest_neighbor(n, dist);
    two_opt(tour.order, dist);
  }
  tour.cycle_cost = tour_cost(tour.order, dist);
  return tour;
}

Placement thread_tour(const Tour& tour, std::size_t side) {
  if (tour.order.size() != side * side) {
    throw ValidationError("tour of " + std::to_string(tour.order.size()) +
                          " probes does not fill a grid of side " + std::to_string(side));
  }
  std::vector<ProbeId> cells(side * side);
  for (std::size_t k = 0; k < tour.order.size(); ++k) {
    const std::size_t r = k / side;
    const std::size_t offset = k % side;
    const std::size_t c = (r % 2 == 0) ? offset : side - 1 - offset;
    cells[r * side + c] = tour.order[k];
  }
  return Placement(side, std::move(cells));
}

std::vector<ProbeId> unthread(const Placement& p) {
  const std::size_t side = p.side();
  std::vector<ProbeId> order(p.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t r = k / side;
    const std::size_t offset = k % side;
    order[k] = p.at(r, (r % 2 == 0) ? offset : side - 1 - offset);
  }
  return order;
}

ApproxResult approx_solve(const ProbeSet& probes, std::size_t side, const DistanceOracle& dist,
                          TourMethod method, std::uint64_t seed) {
  if (probes.size() != side * side) throw ValidationError("probe count does not fill the grid");
  ApproxResult out;
  out.tour = build_tour(probes, dist, method, seed);
  out.placement = thread_tour(out.tour, side);
  if (method == TourMethod::mst_double) out.ratio_bound = 4 * static_cast<Cost>(side + 1);
  return out;
}

}  // namespace blmp
