#include "blmp/heuristics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace blmp {

QepxSplit parse_qepx_split(std::string_view name) {
  if (name == "input") return QepxSplit::input;
  if (name == "sorted") return QepxSplit::sorted;
  throw ValidationError("unknown qepx split '" + std::string(name) + "' (expected input or sorted)");
}

std::string_view qepx_split_name(QepxSplit split) {
  return split == QepxSplit::input ? "input" : "sorted";
}

void HeuristicConfig::validate() const {
  if (swm_window < 2) throw ValidationError("swm window must be at least 2");
  if (swm_step == 0 || swm_step > swm_window) throw ValidationError("swm step must be in [1, window]");
  if (repx_lookahead_rows == 0) throw ValidationError("repx look-ahead must be at least one row");
}

namespace {

void check_size(const ProbeSet& probes, std::size_t side) {
  if (side == 0 || probes.size() != side * side) {
    throw ValidationError("probe count " + std::to_string(probes.size()) +
                          " does not fill a grid of side " + std::to_string(side));
  }
}

}  // namespace

Placement place_rand(const ProbeSet& probes, std::size_t side) {
  check_size(probes, side);
  return Placement::identity(side);
}

Placement place_sort(const ProbeSet& probes, std::size_t side) {
  check_size(probes, side);
  std::vector<ProbeId> order(probes.size());
  std::iota(order.begin(), order.end(), ProbeId{0});
  std::stable_sort(order.begin(), order.end(), [&](ProbeId a, ProbeId b) {
    auto pa = probes.probe(a);
    auto pb = probes.probe(b);
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
  });
  return Placement(side, std::move(order));
}

// ---------------------------------------------------------------------------
// Epitaxial growth

namespace {

class EpitaxialGrowth {
 public:
  EpitaxialGrowth(std::span<const ProbeId> ids, std::size_t rows, std::size_t cols,
                  const DistanceOracle& dist)
      : rows_(rows), cols_(cols), dist_(dist) {
    const std::size_t m = rows * cols;
    layout_.assign(m, kEmpty);
    in_frontier_.assign(m, false);
    cache_.resize(m);
    pool_.reserve(ids.size());
    for (ProbeId id : ids) pool_.push_back(id);
  }

  std::vector<ProbeId> run(std::size_t seed_index) {
    const std::size_t m = rows_ * cols_;
    place((rows_ / 2) * cols_ + cols_ / 2, seed_index);
    for (std::size_t step = 1; step < m; ++step) {
      std::size_t best_slot = 0;
      for (std::size_t s = 0; s < frontier_.size(); ++s) {
        refresh(frontier_[s]);
        if (s > 0 && better(frontier_[s], frontier_[best_slot])) best_slot = s;
      }
      std::size_t cell = frontier_[best_slot];
      place(cell, cache_[cell].pool_index);
    }
    return layout_;
  }

 private:
  static constexpr ProbeId kEmpty = std::numeric_limits<ProbeId>::max();

  struct Candidate {
    Cost sum = 0;
    std::size_t placed_neighbors = 0;
    std::size_t pool_index = 0;
    ProbeId probe = kEmpty;
    bool valid = false;
  };

  std::size_t placed_neighbors_of(std::size_t cell, std::array<ProbeId, 4>& out) const {
    std::size_t r = cell / cols_, c = cell % cols_, k = 0;
    auto take = [&](std::size_t other) {
      if (layout_[other] != kEmpty) out[k++] = layout_[other];
    };
    if (r > 0) take(cell - cols_);
    if (r + 1 < rows_) take(cell + cols_);
    if (c > 0) take(cell - 1);
    if (c + 1 < cols_) take(cell + 1);
    return k;
  }

  void refresh(std::size_t cell) {
    Candidate& cand = cache_[cell];
    if (cand.valid) return;
    std::array<ProbeId, 4> nb{};
    const std::size_t k = placed_neighbors_of(cell, nb);
    cand.placed_neighbors = k;
    cand.sum = std::numeric_limits<Cost>::max();
    cand.probe = kEmpty;
    for (std::size_t i = 0; i < pool_.size(); ++i) {
      const ProbeId p = pool_[i];
      Cost s = 0;
      for (std::size_t j = 0; j < k; ++j) s += dist_(p, nb[j]);
      if (s < cand.sum || (s == cand.sum && p < cand.probe)) {
        cand.sum = s;
        cand.probe = p;
        cand.pool_index = i;
      }
    }
    cand.valid = true;
  }

  // Lower mean attachment cost, then more placed neighbours, then lower cell index.
  bool better(std::size_t a, std::size_t b) const {
    const Candidate& x = cache_[a];
    const Candidate& y = cache_[b];
    const Cost lhs = x.sum * static_cast<Cost>(y.placed_neighbors);
    const Cost rhs = y.sum * static_cast<Cost>(x.placed_neighbors);
    if (lhs != rhs) return lhs < rhs;
    if (x.placed_neighbors != y.placed_neighbors) return x.placed_neighbors > y.placed_neighbors;
    return a < b;
  }

  void place(std::size_t cell, std::size_t pool_index) {
    const ProbeId probe = pool_[pool_index];
    layout_[cell] = probe;
    pool_[pool_index] = pool_.back();
    pool_.pop_back();

    if (in_frontier_[cell]) {
      in_frontier_[cell] = false;
      frontier_.erase(std::find(frontier_.begin(), frontier_.end(), cell));
    }
    for (std::size_t f : frontier_) {
      // swap-removal moved the last pool entry into pool_index
      Candidate& cand = cache_[f];
      if (cand.probe == probe) {
        cand.valid = false;
      } else if (cand.valid && cand.pool_index == pool_.size()) {
        cand.pool_index = pool_index;
      }
    }
    const std::size_t r = cell / cols_, c = cell % cols_;
    auto touch = [&](std::size_t other) {
      if (layout_[other] != kEmpty) return;
      cache_[other].valid = false;
      if (!in_frontier_[other]) {
        in_frontier_[other] = true;
        frontier_.push_back(other);
      }
    };
    if (r > 0) touch(cell - cols_);
    if (r + 1 < rows_) touch(cell + cols_);
    if (c > 0) touch(cell - 1);
    if (c + 1 < cols_) touch(cell + 1);
  }

  std::size_t rows_;
  std::size_t cols_;
  const DistanceOracle& dist_;
  std::vector<ProbeId> layout_;
  std::vector<bool> in_frontier_;
  std::vector<std::size_t> frontier_;
  std::vector<Candidate> cache_;
  std::vector<ProbeId> pool_;
};

}  // namespace

std::vector<ProbeId> grow_epitaxial(std::span<const ProbeId> ids, std::size_t rows, std::size_t cols,
                                    const DistanceOracle& dist, std::uint64_t seed) {
  if (ids.size() != rows * cols) throw ValidationError("epitaxial region size mismatch");
  if (ids.empty()) return {};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1);
  EpitaxialGrowth growth(ids, rows, cols, dist);
  return growth.run(pick(rng));
}

Placement place_epx(const ProbeSet& probes, std::size_t side, const DistanceOracle& dist,
                    const HeuristicConfig& config) {
  check_size(probes, side);
  std::vector<ProbeId> ids(probes.size());
  std::iota(ids.begin(), ids.end(), ProbeId{0});
  return Placement(side, grow_epitaxial(ids, side, side, dist, config.seed));
}

// ---------------------------------------------------------------------------
// Row-epitaxial

Placement place_repx(const ProbeSet& probes, std::size_t side, const Placement& initial,
                     const DistanceOracle& dist, const HeuristicConfig& config) {
  check_size(probes, side);
  config.validate();
  validate_placement(initial, probes.size());
  if (initial.side() != side) throw ValidationError("initial placement side mismatch");
  Placement p = initial;
  const std::size_t n = p.size();
  for (std::size_t cell = 0; cell < n; ++cell) {
    const std::size_t r = cell / side, c = cell % side;
    const std::size_t band_end = std::min(n, (r + config.repx_lookahead_rows) * side);
    std::size_t best = cell;
    Cost best_score = std::numeric_limits<Cost>::max();
    for (std::size_t j = cell; j < band_end; ++j) {
      Cost score = 0;
      if (c > 0) score += dist(p[j], p[cell - 1]);
      if (r > 0) score += dist(p[j], p[cell - side]);
      if (score < best_score || (score == best_score && p[j] < p[best])) {
        best_score = score;
        best = j;
      }
    }
    p.swap_cells(cell, best);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Sliding window matching

std::vector<std::size_t> solve_assignment(const std::vector<std::vector<Cost>>& cost) {
  // Shortest augmenting path with row/column potentials, O(k^3).
  const std::size_t k = cost.size();
  if (k == 0) return {};
  constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;
  std::vector<Cost> u(k + 1, 0), v(k + 1, 0);
  std::vector<std::size_t> match(k + 1, 0), way(k + 1, 0);  // match[col] = row, 1-based
  for (std::size_t i = 1; i <= k; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<Cost> minv(k + 1, kInf);
    std::vector<bool> used(k + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = match[j0];
      Cost delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= k; ++j) {
        if (used[j]) continue;
        Cost cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= k; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> result(k);
  for (std::size_t j = 1; j <= k; ++j) result[match[j] - 1] = j - 1;
  return result;
}

namespace {

std::vector<std::size_t> window_origins(std::size_t side, std::size_t window, std::size_t step) {
  std::vector<std::size_t> out;
  if (window >= side) return {0};
  for (std::size_t o = 0; o + window <= side; o += step) out.push_back(o);
  if (out.back() + window < side) out.push_back(side - window);
  return out;
}

}  // namespace

Placement place_swm(const ProbeSet& probes, std::size_t side, const Placement& initial,
                    const DistanceOracle& dist, const HeuristicConfig& config, SwmTrace* trace) {
  check_size(probes, side);
  config.validate();
  validate_placement(initial, probes.size());
  if (initial.side() != side) throw ValidationError("initial placement side mismatch");
  Placement p = initial;
  const std::size_t w = std::min(config.swm_window, side);
  const auto origins = window_origins(side, w, config.swm_step);

  Cost running = 0;
  if (trace) {
    running = placement_cost(p, dist);
    trace->costs.assign(1, running);
  }

  std::vector<std::size_t> cells;
  std::vector<ProbeId> lifted;
  std::vector<std::vector<Cost>> matrix;
  for (std::size_t r0 : origins) {
    for (std::size_t c0 : origins) {
      for (std::size_t color = 0; color < 2; ++color) {
        cells.clear();
        for (std::size_t r = r0; r < r0 + w; ++r) {
          for (std::size_t c = c0; c < c0 + w; ++c) {
            if ((r + c) % 2 == color) cells.push_back(r * side + c);
          }
        }
        const std::size_t k = cells.size();
        if (k < 2) continue;
        lifted.resize(k);
        for (std::size_t i = 0; i < k; ++i) lifted[i] = p[cells[i]];
        // Cells of one colour are pairwise non-adjacent, so each probe-to-cell cost depends only
        // on the fixed neighbours of that cell.
        matrix.assign(k, std::vector<Cost>(k, 0));
        for (std::size_t b = 0; b < k; ++b) {
          for (GridCoord nb : neighbors(p.coord(cells[b]), side)) {
            const ProbeId fixed = p.at(nb);
            for (std::size_t a = 0; a < k; ++a) matrix[a][b] += dist(lifted[a], fixed);
          }
        }
        const auto assign = solve_assignment(matrix);
        Cost before = 0, after = 0;
        for (std::size_t a = 0; a < k; ++a) {
          before += matrix[a][a];
          after += matrix[a][assign[a]];
        }
        if (after < before) {
          for (std::size_t a = 0; a < k; ++a) p[cells[assign[a]]] = lifted[a];
          running += after - before;
        }
      }
      if (trace) trace->costs.push_back(running);
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Quad epitaxial

std::vector<ProbeId> rotate_block(std::span<const ProbeId> block, std::size_t& rows, std::size_t& cols,
                                  int quarter_turns) {
  const int t = ((quarter_turns % 4) + 4) % 4;
  const std::size_t R = rows, C = cols;
  const std::size_t nr = (t % 2) ? C : R;
  const std::size_t nc = (t % 2) ? R : C;
  std::vector<ProbeId> out(block.size());
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) {
      std::size_t sr = r, sc = c;
      switch (t) {
        case 1: sr = R - 1 - c; sc = r; break;
        case 2: sr = R - 1 - r; sc = C - 1 - c; break;
        case 3: sr = c; sc = C - 1 - r; break;
        default: break;
      }
      out[r * nc + c] = block[sr * C + sc];
    }
  }
  rows = nr;
  cols = nc;
  return out;
}

namespace {

struct OrientedBlock {
  const std::vector<ProbeId>* cells;
  std::size_t rows;  // original dimensions
  std::size_t cols;
  int turns;

  std::size_t out_rows() const { return turns % 2 ? cols : rows; }
  std::size_t out_cols() const { return turns % 2 ? rows : cols; }

  ProbeId at(std::size_t r, std::size_t c) const {
    std::size_t sr = r, sc = c;
    switch (turns) {
      case 1: sr = rows - 1 - c; sc = r; break;
      case 2: sr = rows - 1 - r; sc = cols - 1 - c; break;
      case 3: sr = c; sc = cols - 1 - r; break;
      default: break;
    }
    return (*cells)[sr * cols + sc];
  }
};

}  // namespace

QepxResult place_qepx_detailed(const ProbeSet& probes, std::size_t side, const DistanceOracle& dist,
                               const HeuristicConfig& config) {
  if (side < 2) throw ValidationError("qepx needs a grid side of at least 2");
  check_size(probes, side);
  const std::size_t a = (side + 1) / 2;
  const std::size_t b = side / 2;
  const std::array<std::size_t, 4> q_rows{a, a, b, b};
  const std::array<std::size_t, 4> q_cols{a, b, a, b};
  const std::array<std::size_t, 4> q_row0{0, 0, a, a};
  const std::array<std::size_t, 4> q_col0{0, a, 0, a};

  QepxResult result;
  const std::vector<ProbeId> order = config.qepx_split == QepxSplit::sorted
                                         ? place_sort(probes, side).cells()
                                         : Placement::identity(side).cells();
  std::size_t next = 0;
  for (std::size_t q = 0; q < 4; ++q) {
    const std::size_t count = q_rows[q] * q_cols[q];
    std::vector<ProbeId> ids(order.begin() + static_cast<std::ptrdiff_t>(next),
                             order.begin() + static_cast<std::ptrdiff_t>(next + count));
    next += count;
    const std::uint64_t sub_seed = config.seed ^ (0x9E3779B97F4A7C15ULL * (q + 1));
    result.blocks[q] = grow_epitaxial(ids, q_rows[q], q_cols[q], dist, sub_seed);
    result.block_rows[q] = q_rows[q];
    result.block_cols[q] = q_cols[q];
  }

  const int orientation_combos = config.qepx_orientations ? 256 : 1;
  std::array<std::size_t, 4> perm{0, 1, 2, 3};
  Cost best = std::numeric_limits<Cost>::max();
  QuadrantChoice best_choice;
  do {
    for (int combo = 0; combo < orientation_combos; ++combo) {
      std::array<OrientedBlock, 4> placed{};
      bool fits = true;
      for (std::size_t q = 0; q < 4 && fits; ++q) {
        const std::size_t blk = perm[q];
        placed[q] = OrientedBlock{&result.blocks[blk], q_rows[blk], q_cols[blk], (combo >> (2 * q)) & 3};
        fits = placed[q].out_rows() == q_rows[q] && placed[q].out_cols() == q_cols[q];
      }
      if (!fits) continue;
      Cost seam = 0;
      // vertical seam: TL|TR over rows [0,a), BL|BR over rows [a,side)
      for (std::size_t r = 0; r < a; ++r) seam += dist(placed[0].at(r, a - 1), placed[1].at(r, 0));
      for (std::size_t r = 0; r < b; ++r) seam += dist(placed[2].at(r, a - 1), placed[3].at(r, 0));
      // horizontal seam: TL over BL, TR over BR
      for (std::size_t c = 0; c < a; ++c) seam += dist(placed[0].at(a - 1, c), placed[2].at(0, c));
      for (std::size_t c = 0; c < b; ++c) seam += dist(placed[1].at(a - 1, c), placed[3].at(0, c));
      if (seam < best) {
        best = seam;
        best_choice.block_at = perm;
        for (std::size_t q = 0; q < 4; ++q) best_choice.rotation[q] = placed[q].turns;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<ProbeId> cells(side * side);
  for (std::size_t q = 0; q < 4; ++q) {
    const std::size_t blk = best_choice.block_at[q];
    OrientedBlock ob{&result.blocks[blk], q_rows[blk], q_cols[blk], best_choice.rotation[q]};
    for (std::size_t r = 0; r < q_rows[q]; ++r) {
      for (std::size_t c = 0; c < q_cols[q]; ++c) {
        cells[(q_row0[q] + r) * side + q_col0[q] + c] = ob.at(r, c);
      }
    }
  }
  result.placement = Placement(side, std::move(cells));
  result.choice = best_choice;
  return result;
}

Placement place_qepx(const ProbeSet& probes, std::size_t side, const DistanceOracle& dist,
                     const HeuristicConfig& config) {
  return place_qepx_detailed(probes, side, dist, config).placement;
}

}  // namespace blmp
