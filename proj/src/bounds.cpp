#include "blmp/bounds.hpp"

#include <cstdlib>
#include <limits>
#include <map>
#include <string>

namespace blmp {

std::uint64_t brute_force_budget() {
  if (const char* env = std::getenv("BLMP_BRUTE_FORCE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultBruteForceBudget;
}

Cost lower_bound(const ProbeSet& probes, std::size_t side, const DistanceOracle& dist) {
  if (side < 2) throw ValidationError("lower bound needs a grid side of at least 2");
  if (probes.size() != side * side) {
    throw ValidationError("probe count " + std::to_string(probes.size()) +
                          " does not fill a grid of side " + std::to_string(side));
  }
  // Distances are bounded by the string length, so a histogram replaces sorting C(n,2) values.
  std::vector<std::uint64_t> histogram(probes.length() + 1, 0);
  const auto n = static_cast<ProbeId>(probes.size());
  for (ProbeId b = 1; b < n; ++b) {
    for (ProbeId a = 0; a < b; ++a) ++histogram[static_cast<std::size_t>(dist(a, b))];
  }
  std::uint64_t need = 2 * side * (side - 1);
  Cost total = 0;
  for (std::size_t d = 0; d < histogram.size() && need > 0; ++d) {
    std::uint64_t take = std::min(need, histogram[d]);
    total += static_cast<Cost>(take * d);
    need -= take;
  }
  return total;
}

namespace {

// Probe ids grouped by identical content; groups ordered by their smallest id.
struct DuplicateClasses {
  std::vector<std::size_t> class_of;              // per probe
  std::vector<std::vector<ProbeId>> members;      // ascending ids per class
};

DuplicateClasses group_duplicates(const ProbeSet& probes) {
  DuplicateClasses out;
  std::map<std::vector<Symbol>, std::size_t> seen;
  out.class_of.resize(probes.size());
  for (ProbeId id = 0; id < probes.size(); ++id) {
    auto s = probes.probe(id);
    auto [it, inserted] = seen.try_emplace(std::vector<Symbol>(s.begin(), s.end()), out.members.size());
    if (inserted) out.members.emplace_back();
    out.class_of[id] = it->second;
    out.members[it->second].push_back(id);
  }
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

// Multinomial n! / prod(k_i!) built incrementally as a product of binomials, saturating.
std::uint64_t multinomial(const std::vector<std::size_t>& counts) {
  std::uint64_t result = 1;
  std::uint64_t placed = 0;
  for (std::size_t k : counts) {
    // multiply by C(placed + k, k), one factor at a time so every step stays integral
    std::uint64_t binom = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
      std::uint64_t num = placed + i;
      // binom * num / i is exact because binom * num = C(placed+i, i) * i
      if (binom > std::numeric_limits<std::uint64_t>::max() / num) {
        return std::numeric_limits<std::uint64_t>::max();
      }
      binom = binom * num / i;
    }
    result = saturating_mul(result, binom);
    placed += k;
  }
  return result;
}

class PlacementSearch {
 public:
  PlacementSearch(const ProbeSet& probes, std::size_t side, const DistanceOracle& dist)
      : side_(side), n_(probes.size()), dist_(dist), classes_(group_duplicates(probes)) {
    next_.assign(classes_.members.size(), 0);
    used_.assign(n_, false);
    cells_.assign(n_, 0);
  }

  ExactPlacement run() {
    Placement identity = Placement::identity(side_);
    best_cost_ = placement_cost(identity, dist_) + 1;
    descend(0, 0);
    ExactPlacement out;
    out.cost = best_cost_;
    out.placement = Placement(side_, best_cells_);
    return out;
  }

 private:
  void descend(std::size_t cell, Cost partial) {
    if (partial >= best_cost_) return;
    if (cell == n_) {
      best_cost_ = partial;
      best_cells_ = cells_;
      return;
    }
    const std::size_t r = cell / side_;
    const std::size_t c = cell % side_;
    // Ascending candidate ids, taking only the next unused copy of each class, enumerates
    // placements modulo duplicates in lexicographic order of the cell vector.
    for (ProbeId id = 0; id < n_; ++id) {
      if (used_[id]) continue;
      std::size_t cls = classes_.class_of[id];
      if (classes_.members[cls][next_[cls]] != id) continue;
      Cost add = 0;
      if (c > 0) add += dist_(id, cells_[cell - 1]);
      if (r > 0) add += dist_(id, cells_[cell - side_]);
      used_[id] = true;
      ++next_[cls];
      cells_[cell] = id;
      descend(cell + 1, partial + add);
      --next_[cls];
      used_[id] = false;
    }
  }

  std::size_t side_;
  std::size_t n_;
  const DistanceOracle& dist_;
  DuplicateClasses classes_;
  std::vector<std::size_t> next_;
  std::vector<bool> used_;
  std::vector<ProbeId> cells_;
  std::vector<ProbeId> best_cells_;
  Cost best_cost_ = 0;
};

}  // namespace

std::uint64_t distinct_placement_count(const ProbeSet& probes) {
  auto classes = group_duplicates(probes);
  std::vector<std::size_t> counts;
  for (const auto& m : classes.members) counts.push_back(m.size());
  return multinomial(counts);
}

ExactPlacement brute_force_opt(const ProbeSet& probes, std::size_t side, const DistanceOracle& dist,
                               std::uint64_t budget) {
  if (side == 0 || probes.size() != side * side) {
    throw ValidationError("probe count does not fill the grid");
  }
  const std::uint64_t space = distinct_placement_count(probes);
  if (space > budget) {
    throw BudgetExceeded("exhaustive placement search needs " +
                         (space == std::numeric_limits<std::uint64_t>::max() ? std::string("> 1.8e19")
                                                                           : std::to_string(space)) +
                         " placements, budget is " + std::to_string(budget));
  }
  PlacementSearch search(probes, side, dist);
  ExactPlacement out = search.run();
  out.search_space = space;
  return out;
}

namespace {

class TourSearch {
 public:
  explicit TourSearch(std::vector<std::vector<Cost>> d) : d_(std::move(d)), m_(d_.size()) {
    used_.assign(m_, false);
    order_.assign(m_, 0);
  }

  std::vector<std::size_t> run(Cost upper) {
    best_ = upper + 1;
    used_[0] = true;
    order_[0] = 0;
    descend(1, 0);
    return best_order_;
  }

  Cost best() const { return best_; }

 private:
  void descend(std::size_t depth, Cost partial) {
    if (partial >= best_) return;
    if (depth == m_) {
      Cost total = partial + d_[order_[m_ - 1]][0];
      if (total < best_) {
        best_ = total;
        best_order_ = order_;
      }
      return;
    }
    for (std::size_t v = 1; v < m_; ++v) {
      if (used_[v]) continue;
      // fix orientation: the second stop has a smaller index than the last stop
      if (depth == m_ - 1 && m_ > 2 && order_[1] > v) continue;
      used_[v] = true;
      order_[depth] = v;
      descend(depth + 1, partial + d_[order_[depth - 1]][v]);
      used_[v] = false;
    }
  }

  std::vector<std::vector<Cost>> d_;
  std::size_t m_;
  std::vector<bool> used_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> best_order_;
  Cost best_ = 0;
};

}  // namespace

ExactTour brute_force_htsp(const ProbeSet& probes, std::uint64_t budget) {
  if (probes.size() == 0) throw ValidationError("tour over an empty probe set");
  auto classes = group_duplicates(probes);
  const std::size_t m = classes.members.size();

  std::uint64_t tours = 1;
  for (std::uint64_t k = 3; k < m; ++k) tours = saturating_mul(tours, k);  // (m-1)!/2
  if (tours > budget) {
    throw BudgetExceeded("exhaustive tour search needs " + std::to_string(tours) +
                         " tours, budget is " + std::to_string(budget));
  }

  std::vector<std::vector<Cost>> d(m, std::vector<Cost>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      d[i][j] = d[j][i] = hamming(probes.probe(classes.members[i][0]), probes.probe(classes.members[j][0]));
    }
  }

  std::vector<std::size_t> class_order(m);
  Cost cost = 0;
  if (m >= 3) {
    Cost upper = 0;
    for (std::size_t i = 0; i < m; ++i) upper += d[i][(i + 1) % m];
    TourSearch search(d);
    class_order = search.run(upper);
    cost = search.best();
  } else {
    for (std::size_t i = 0; i < m; ++i) class_order[i] = i;
    if (m == 2) cost = 2 * d[0][1];
  }

  ExactTour out;
  out.cost = cost;
  for (std::size_t cls : class_order) {
    out.order.insert(out.order.end(), classes.members[cls].begin(), classes.members[cls].end());
  }
  return out;
}

}  // namespace blmp
