#include "blmp/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace blmp {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  std::fill(std::begin(lookup_), std::end(lookup_), std::int16_t{-1});
  if (symbols_.size() < 2) {
    throw ValidationError("alphabet needs at least two symbols");
  }
  if (symbols_.size() > 255) {
    throw ValidationError("alphabet is limited to 255 symbols");
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto c = static_cast<unsigned char>(symbols_[i]);
    if (c <= ' ' || c == 0x7f) {
      throw ValidationError("alphabet symbols must be printable and non-blank");
    }
    if (lookup_[c] >= 0) {
      throw ValidationError(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
    }
    lookup_[c] = static_cast<std::int16_t>(i);
  }
}

Symbol Alphabet::index_of(char c) const {
  auto v = lookup_[static_cast<unsigned char>(c)];
  if (v < 0) {
    throw ValidationError(std::string("symbol '") + c + "' not in alphabet \"" + symbols_ + "\"");
  }
  return static_cast<Symbol>(v);
}

Symbols Alphabet::encode(std::string_view text) const {
  Symbols out;
  out.reserve(text.size());
  for (char c : text) out.push_back(index_of(c));
  return out;
}

std::string Alphabet::decode(std::span<const Symbol> sequence) const {
  std::string out;
  out.reserve(sequence.size());
  for (Symbol s : sequence) out.push_back(symbols_.at(s));
  return out;
}

ProbeSet::ProbeSet(Alphabet alphabet, std::size_t length)
    : alphabet_(std::move(alphabet)), length_(length) {}

ProbeSet::ProbeSet(Alphabet alphabet, const std::vector<std::string>& probes)
    : alphabet_(std::move(alphabet)), length_(probes.empty() ? 0 : probes.front().size()) {
  data_.reserve(probes.size() * length_);
  for (const auto& p : probes) add(p);
}

void ProbeSet::add(std::span<const Symbol> probe) {
  if (probe.size() != length_) {
    throw ValidationError("probe length " + std::to_string(probe.size()) + " differs from " +
                          std::to_string(length_));
  }
  for (Symbol s : probe) {
    if (s >= alphabet_.size()) throw ValidationError("symbol index out of alphabet range");
  }
  data_.insert(data_.end(), probe.begin(), probe.end());
  ++count_;
}

void ProbeSet::add(std::string_view probe) {
  auto encoded = alphabet_.encode(probe);
  add(encoded);
}

Placement::Placement(std::size_t side, std::vector<ProbeId> cells)
    : side_(side), cells_(std::move(cells)) {
  if (cells_.size() != side_ * side_) {
    throw ValidationError("placement of side " + std::to_string(side_) + " needs " +
                          std::to_string(side_ * side_) + " cells, got " +
                          std::to_string(cells_.size()));
  }
}

Placement Placement::identity(std::size_t side) {
  std::vector<ProbeId> cells(side * side);
  std::iota(cells.begin(), cells.end(), ProbeId{0});
  return Placement(side, std::move(cells));
}

std::vector<std::size_t> Placement::inverse() const {
  std::vector<std::size_t> where(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) where[cells_[i]] = i;
  return where;
}

bool is_permutation_of_range(std::span<const ProbeId> cells) {
  std::vector<bool> seen(cells.size(), false);
  for (ProbeId id : cells) {
    if (id >= cells.size() || seen[id]) return false;
    seen[id] = true;
  }
  return true;
}

void validate_placement(const Placement& p, std::size_t probe_count) {
  if (p.size() != probe_count) {
    throw ValidationError("placement holds " + std::to_string(p.size()) + " cells but instance has " +
                          std::to_string(probe_count) + " probes");
  }
  if (!is_permutation_of_range(p.cells())) {
    throw ValidationError("placement is not a permutation of probe ids");
  }
}

std::size_t grid_side_for(std::size_t probe_count) {
  auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(probe_count))));
  while (side * side > probe_count) --side;
  while ((side + 1) * (side + 1) <= probe_count) ++side;
  if (side * side != probe_count || side == 0) {
    throw ValidationError("probe count " + std::to_string(probe_count) + " is not a perfect square");
  }
  return side;
}

Cost hamming(std::span<const Symbol> a, std::span<const Symbol> b) {
  if (a.size() != b.size()) {
    throw ValidationError("hamming distance of strings with lengths " + std::to_string(a.size()) +
                          " and " + std::to_string(b.size()));
  }
  Cost d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

Cost hamming(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) {
    throw ValidationError("hamming distance of strings with lengths " + std::to_string(a.size()) +
                          " and " + std::to_string(b.size()));
  }
  Cost d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

Symbols concat(std::span<const Symbol> x, std::span<const Symbol> y) {
  Symbols out(x.begin(), x.end());
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

std::string concat(std::string_view x, std::string_view y) {
  std::string out(x);
  out.append(y);
  return out;
}

Symbols rep(std::span<const Symbol> x, std::size_t h) {
  if (h == 0) throw ValidationError("replication factor must be positive");
  Symbols out;
  out.reserve(x.size() * h);
  for (Symbol s : x) out.insert(out.end(), h, s);
  return out;
}

std::string rep(std::string_view x, std::size_t h) {
  if (h == 0) throw ValidationError("replication factor must be positive");
  std::string out;
  out.reserve(x.size() * h);
  for (char c : x) out.append(h, c);
  return out;
}

ProbeSet code_set(std::size_t n) {
  if (n < 2) throw ValidationError("code set needs n >= 2");
  ProbeSet out(Alphabet::binary(), n);
  Symbols word(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    word[i] = 1;
    out.add(word);
    word[i] = 0;
  }
  return out;
}

std::vector<GridCoord> neighbors(GridCoord coord, std::size_t side) {
  std::vector<GridCoord> out;
  out.reserve(4);
  if (coord.row > 0) out.push_back({coord.row - 1, coord.col});
  if (coord.row + 1 < side) out.push_back({coord.row + 1, coord.col});
  if (coord.col > 0) out.push_back({coord.row, coord.col - 1});
  if (coord.col + 1 < side) out.push_back({coord.row, coord.col + 1});
  return out;
}

}  // namespace blmp
