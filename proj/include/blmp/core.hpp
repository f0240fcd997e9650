#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace blmp {

using Cost = std::int64_t;
using ProbeId = std::uint32_t;
using Symbol = std::uint8_t;
using Symbols = std::vector<Symbol>;

// Malformed input: bad sizes, bad symbols, bad parameters.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive search was asked to cover more states than it is allowed to.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Alphabet {
 public:
  explicit Alphabet(std::string_view symbols);

  static Alphabet binary() { return Alphabet("01"); }

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbols() const { return symbols_; }
  char symbol(Symbol index) const { return symbols_[index]; }
  bool contains(char c) const { return lookup_[static_cast<unsigned char>(c)] >= 0; }

  Symbol index_of(char c) const;
  Symbols encode(std::string_view text) const;
  std::string decode(std::span<const Symbol> sequence) const;

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

 private:
  std::string symbols_;
  std::int16_t lookup_[256];
};

// Equal-length strings stored as one flat buffer of symbol indices.
class ProbeSet {
 public:
  ProbeSet(Alphabet alphabet, std::size_t length);
  ProbeSet(Alphabet alphabet, const std::vector<std::string>& probes);

  void add(std::span<const Symbol> probe);
  void add(std::string_view probe);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t length() const { return length_; }
  std::size_t size() const { return count_; }

  std::span<const Symbol> probe(ProbeId id) const {
    return {data_.data() + static_cast<std::size_t>(id) * length_, length_};
  }
  std::string text(ProbeId id) const { return alphabet_.decode(probe(id)); }

  bool operator==(const ProbeSet& other) const {
    return alphabet_ == other.alphabet_ && length_ == other.length_ && count_ == other.count_ &&
           data_ == other.data_;
  }

 private:
  Alphabet alphabet_;
  std::size_t length_;
  std::size_t count_ = 0;
  Symbols data_;
};

struct GridCoord {
  std::size_t row = 0;
  std::size_t col = 0;

  bool operator==(const GridCoord&) const = default;
};

// Row-major bijection from the cells of a side x side grid to probe ids.
class Placement {
 public:
  Placement() = default;
  Placement(std::size_t side, std::vector<ProbeId> cells);

  static Placement identity(std::size_t side);

  std::size_t side() const { return side_; }
  std::size_t size() const { return cells_.size(); }
  const std::vector<ProbeId>& cells() const { return cells_; }

  ProbeId at(std::size_t row, std::size_t col) const { return cells_[row * side_ + col]; }
  ProbeId at(GridCoord c) const { return at(c.row, c.col); }
  ProbeId& at(std::size_t row, std::size_t col) { return cells_[row * side_ + col]; }
  ProbeId operator[](std::size_t cell) const { return cells_[cell]; }
  ProbeId& operator[](std::size_t cell) { return cells_[cell]; }

  GridCoord coord(std::size_t cell) const { return {cell / side_, cell % side_}; }
  std::size_t index(GridCoord c) const { return c.row * side_ + c.col; }

  void swap_cells(std::size_t a, std::size_t b) { std::swap(cells_[a], cells_[b]); }

  // cell index holding each probe
  std::vector<std::size_t> inverse() const;

  bool operator==(const Placement&) const = default;

 private:
  std::size_t side_ = 0;
  std::vector<ProbeId> cells_;
};

bool is_permutation_of_range(std::span<const ProbeId> cells);

// Throws ValidationError unless `p` is a permutation sized for `probe_count` probes.
void validate_placement(const Placement& p, std::size_t probe_count);

// Exact integer square root, or throws ValidationError when n is not a perfect square.
std::size_t grid_side_for(std::size_t probe_count);

Cost hamming(std::span<const Symbol> a, std::span<const Symbol> b);
Cost hamming(std::string_view a, std::string_view b);

Symbols concat(std::span<const Symbol> x, std::span<const Symbol> y);
std::string concat(std::string_view x, std::string_view y);

// Each symbol of x repeated h times in place.
Symbols rep(std::span<const Symbol> x, std::size_t h);
std::string rep(std::string_view x, std::size_t h);

// One-hot binary code: string i has a single '1' at position i, so all pairs sit at distance 2.
ProbeSet code_set(std::size_t n);

// Orthogonal neighbours in up, down, left, right order.
std::vector<GridCoord> neighbors(GridCoord coord, std::size_t side);

}  // namespace blmp
