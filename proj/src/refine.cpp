#include "blmp/refine.hpp"

#include <cstdio>
#include <limits>
#include <random>

namespace blmp {

namespace {

std::uint64_t factorial_capped(std::uint64_t k, std::uint64_t cap) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= k; ++i) {
    if (f > cap / i) return cap + 1;
    f *= i;
  }
  return f;
}

// Exponent m with degree^m == size, or 0 when size is not a positive power of degree.
std::size_t power_of(std::size_t size, std::size_t degree) {
  std::size_t m = 0;
  while (size > 1 && size % degree == 0) {
    size /= degree;
    ++m;
  }
  return size == 1 ? m : 0;
}

// One sub-problem: a d x d arrangement of unit x unit blocks inside a super-block, the rest of the
// grid frozen. Units are identified by their current slot.
class BlockPermutation {
 public:
  BlockPermutation(Placement& p, std::size_t row0, std::size_t col0, std::size_t unit, std::size_t d,
                   const DistanceOracle& dist)
      : p_(p), row0_(row0), col0_(col0), unit_(unit), d_(d), slots_(d * d), dist_(dist) {
    ext_.assign(slots_ * slots_, 0);
    right_.assign(slots_ * slots_, 0);
    below_.assign(slots_ * slots_, 0);
    for (std::size_t k = 0; k < slots_; ++k) {
      for (std::size_t s = 0; s < slots_; ++s) ext_[k * slots_ + s] = exterior_cost(k, s);
      for (std::size_t k2 = 0; k2 < slots_; ++k2) {
        if (k == k2) continue;
        Cost h = 0, v = 0;
        for (std::size_t i = 0; i < unit_; ++i) {
          h += dist_(unit_cell(k, i, unit_ - 1), unit_cell(k2, i, 0));
          v += dist_(unit_cell(k, unit_ - 1, i), unit_cell(k2, 0, i));
        }
        right_[k * slots_ + k2] = h;
        below_[k * slots_ + k2] = v;
      }
    }
  }

  // Returns (old local cost, new local cost) and rewrites the super-block with the best arrangement.
  std::pair<Cost, Cost> solve(std::uint64_t& evaluations) {
    perm_.assign(slots_, 0);
    used_.assign(slots_, false);
    best_ = std::numeric_limits<Cost>::max();
    descend(0, 0, evaluations);
    Cost old_cost = 0;
    for (std::size_t s = 0; s < slots_; ++s) old_cost += step_cost(s, s, identity_view());
    bool identity = true;
    for (std::size_t s = 0; s < slots_; ++s) identity = identity && best_perm_[s] == s;
    if (!identity) apply();
    return {old_cost, best_};
  }

 private:
  std::vector<std::size_t> identity_view() const {
    std::vector<std::size_t> id(slots_);
    for (std::size_t s = 0; s < slots_; ++s) id[s] = s;
    return id;
  }

  ProbeId unit_cell(std::size_t k, std::size_t r, std::size_t c) const {
    return p_.at(row0_ + (k / d_) * unit_ + r, col0_ + (k % d_) * unit_ + c);
  }

  Cost exterior_cost(std::size_t k, std::size_t s) const {
    const std::size_t n = p_.side();
    const std::size_t sr = s / d_, sc = s % d_;
    const std::size_t top = row0_ + sr * unit_, left = col0_ + sc * unit_;
    Cost total = 0;
    for (std::size_t i = 0; i < unit_; ++i) {
      if (sr == 0 && row0_ > 0) total += dist_(unit_cell(k, 0, i), p_.at(row0_ - 1, left + i));
      if (sr == d_ - 1 && top + unit_ < n) total += dist_(unit_cell(k, unit_ - 1, i), p_.at(top + unit_, left + i));
      if (sc == 0 && col0_ > 0) total += dist_(unit_cell(k, i, 0), p_.at(top + i, col0_ - 1));
      if (sc == d_ - 1 && left + unit_ < n) total += dist_(unit_cell(k, i, unit_ - 1), p_.at(top + i, left + unit_));
    }
    return total;
  }

  // Cost added by putting unit k in slot s, given slots before s are filled per `perm`.
  Cost step_cost(std::size_t s, std::size_t k, const std::vector<std::size_t>& perm) const {
    Cost c = ext_[k * slots_ + s];
    if (s % d_ > 0) c += right_[perm[s - 1] * slots_ + k];
    if (s >= d_) c += below_[perm[s - d_] * slots_ + k];
    return c;
  }

  // Lexicographic enumeration; identity is reached first and only strictly better arrangements
  // replace it. Pruning on partial >= best keeps the result identical to full enumeration.
  void descend(std::size_t s, Cost partial, std::uint64_t& evaluations) {
    if (partial >= best_) return;
    if (s == slots_) {
      best_ = partial;
      best_perm_ = perm_;
      return;
    }
    for (std::size_t k = 0; k < slots_; ++k) {
      if (used_[k]) continue;
      used_[k] = true;
      perm_[s] = k;
      ++evaluations;
      descend(s + 1, partial + step_cost(s, k, perm_), evaluations);
      used_[k] = false;
    }
  }

  void apply() {
    std::vector<std::vector<ProbeId>> units(slots_, std::vector<ProbeId>(unit_ * unit_));
    for (std::size_t k = 0; k < slots_; ++k) {
      for (std::size_t r = 0; r < unit_; ++r) {
        for (std::size_t c = 0; c < unit_; ++c) units[k][r * unit_ + c] = unit_cell(k, r, c);
      }
    }
    for (std::size_t s = 0; s < slots_; ++s) {
      const auto& src = units[best_perm_[s]];
      for (std::size_t r = 0; r < unit_; ++r) {
        for (std::size_t c = 0; c < unit_; ++c) {
          p_.at(row0_ + (s / d_) * unit_ + r, col0_ + (s % d_) * unit_ + c) = src[r * unit_ + c];
        }
      }
    }
  }

  Placement& p_;
  std::size_t row0_, col0_, unit_, d_, slots_;
  const DistanceOracle& dist_;
  std::vector<Cost> ext_, right_, below_;
  std::vector<std::size_t> perm_, best_perm_;
  std::vector<bool> used_;
  Cost best_ = 0;
};

}  // namespace

void RefinementConfig::validate() const {
  if (degree < 2) throw ValidationError("refinement degree must be at least 2");
  if (factorial_capped(degree * degree, subproblem_budget) > subproblem_budget) {
    throw BudgetExceeded("refinement degree " + std::to_string(degree) + " needs (" +
                         std::to_string(degree * degree) + ")! permutations per sub-problem, budget is " +
                         std::to_string(subproblem_budget));
  }
}

void refine_square(Placement& p, std::size_t row, std::size_t col, std::size_t size,
                   const DistanceOracle& dist, const RefinementConfig& config, Cost& running_cost,
                   std::vector<Cost>* trace, std::uint64_t& evaluations) {
  const std::size_t d = config.degree;
  const std::size_t levels = power_of(size, d);
  if (levels == 0) {
    throw ValidationError("square side " + std::to_string(size) + " is not a power of degree " +
                          std::to_string(d));
  }
  if (row + size > p.side() || col + size > p.side()) throw ValidationError("square exceeds grid");
  std::size_t unit = 1;
  for (std::size_t level = 0; level < levels; ++level) {
    const std::size_t super = unit * d;
    for (std::size_t r = row; r < row + size; r += super) {
      for (std::size_t c = col; c < col + size; c += super) {
        BlockPermutation sub(p, r, c, unit, d, dist);
        auto [before, after] = sub.solve(evaluations);
        running_cost += after - before;
        if (trace) trace->push_back(running_cost);
      }
    }
    unit = super;
  }
}

RefineResult hra(const Placement& p, const ProbeSet& probes, const DistanceOracle& dist,
                 const RefinementConfig& config) {
  config.validate();
  validate_placement(p, probes.size());
  if (power_of(p.side(), config.degree) == 0) {
    throw ValidationError("grid side " + std::to_string(p.side()) + " is not a power of degree " +
                          std::to_string(config.degree));
  }
  RefineResult out;
  out.placement = p;
  out.initial_cost = placement_cost(p, dist);
  Cost running = out.initial_cost;
  out.trace.push_back(running);
  refine_square(out.placement, 0, 0, p.side(), dist, config, running, &out.trace, out.evaluations);
  out.final_cost = running;
  return out;
}

RefineResult rhra(const Placement& p, const ProbeSet& probes, const DistanceOracle& dist,
                  const RefinementConfig& config) {
  config.validate();
  validate_placement(p, probes.size());
  const std::size_t d = config.degree;
  const std::size_t side = p.side();
  std::size_t max_level = 0;
  for (std::size_t s = d; s <= side; s *= d) ++max_level;
  if (max_level == 0 && config.rhra_iterations > 0) {
    throw ValidationError("grid side " + std::to_string(side) + " is smaller than degree " +
                          std::to_string(d));
  }

  RefineResult out;
  out.placement = p;
  out.initial_cost = placement_cost(p, dist);
  Cost running = out.initial_cost;
  out.trace.push_back(running);
  std::mt19937_64 rng(config.seed);
  for (std::size_t it = 0; it < config.rhra_iterations; ++it) {
    std::uniform_int_distribution<std::size_t> pick_level(1, max_level);
    std::size_t size = 1;
    for (std::size_t j = pick_level(rng); j > 0; --j) size *= d;
    std::uniform_int_distribution<std::size_t> pick_offset(0, side - size);
    const std::size_t r = pick_offset(rng);
    const std::size_t c = pick_offset(rng);
    refine_square(out.placement, r, c, size, dist, config, running, nullptr, out.evaluations);
    out.trace.push_back(running);
  }
  out.final_cost = running;
  return out;
}

double refinement_percent(Cost init_cost, Cost refined_cost) {
  if (init_cost == 0) return 0.0;
  return 100.0 * static_cast<double>(init_cost - refined_cost) / static_cast<double>(init_cost);
}

std::string format_percent(double percent) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", percent);
  return buf;
}

}  // namespace blmp
