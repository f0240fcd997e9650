#include "blmp/reductions.hpp"

#include <algorithm>

namespace blmp {

ReductionKind parse_reduction_kind(std::string_view name) {
  if (name == "padded_4n_htsp") return ReductionKind::padded_4n_htsp;
  if (name == "main_blmp") return ReductionKind::main_blmp;
  if (name == "four_segment_htsp") return ReductionKind::four_segment_htsp;
  if (name == "alternate_blmp") return ReductionKind::alternate_blmp;
  if (name == "alternate_special") return ReductionKind::alternate_special;
  throw ValidationError("unknown reduction kind '" + std::string(name) + "'");
}

std::string_view reduction_kind_name(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::padded_4n_htsp: return "padded_4n_htsp";
    case ReductionKind::main_blmp: return "main_blmp";
    case ReductionKind::four_segment_htsp: return "four_segment_htsp";
    case ReductionKind::alternate_blmp: return "alternate_blmp";
    case ReductionKind::alternate_special: return "alternate_special";
  }
  return "unknown";
}

std::int64_t ReductionInstance::param(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw ValidationError("reduction instance has no parameter '" + key + "'");
  return it->second;
}

namespace {

void require_binary(const ProbeSet& s, std::size_t min_count) {
  if (!(s.alphabet() == Alphabet::binary())) {
    throw ValidationError("reduction input must use the binary alphabet \"01\"");
  }
  if (s.size() < min_count) {
    throw ValidationError("reduction input needs at least " + std::to_string(min_count) + " strings");
  }
  if (s.length() == 0) throw ValidationError("reduction input strings must be non-empty");
}

std::string alternating(std::size_t pairs) {
  std::string out;
  for (std::size_t i = 0; i < pairs; ++i) out += "01";
  return out;
}

// Base strings of the alternate construction, each of length 8n + 1: gadget i (0-based) has a
// zero block at position i, the last entry is t.
std::vector<std::string> alternate_base(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i <= n; ++i) {
    std::string bits(n, '1');
    if (i < n) bits[i] = '0';
    out.push_back(concat(i < n ? "0" : "1", rep(bits, 8)));
  }
  return out;
}

}  // namespace

ReductionInstance pad_to_4n(const ProbeSet& htsp_input) {
  require_binary(htsp_input, 2);
  const std::size_t n = htsp_input.size();
  const std::size_t l = htsp_input.length();
  const std::size_t groups = (n + 3) / 4;
  const std::size_t total = 4 * groups;
  const std::string zeros(2 * n * l, '0');
  const std::string ones(2 * n * l, '1');

  std::vector<std::string> out;
  for (ProbeId i = 0; i + 1 < n; ++i) out.push_back(concat(zeros, htsp_input.text(i)));
  const std::string last = concat(ones, htsp_input.text(static_cast<ProbeId>(n - 1)));
  while (out.size() < total) out.push_back(last);

  ReductionInstance inst{ProbeSet(Alphabet::binary(), out), ReductionKind::padded_4n_htsp, {}};
  inst.params = {{"n", static_cast<std::int64_t>(n)},
                 {"l", static_cast<std::int64_t>(l)},
                 {"N", static_cast<std::int64_t>(groups)},
                 {"copies", static_cast<std::int64_t>(total - n + 1)}};
  return inst;
}

ReductionInstance build_main_blmp(const ProbeSet& htsp_input) {
  require_binary(htsp_input, 4);
  if (htsp_input.size() % 4 != 0) {
    throw ValidationError("main reduction needs 4N input strings, got " + std::to_string(htsp_input.size()));
  }
  const std::size_t strings = htsp_input.size();
  const std::size_t N = strings / 4;
  const std::size_t l = htsp_input.length();
  const std::size_t h = 8 * l;
  const ProbeSet code = code_set(strings);

  std::vector<std::string> out;
  for (ProbeId i = 0; i < strings; ++i) {
    out.push_back(concat(rep(code.text(i), h), rep(htsp_input.text(i), 2)));
  }
  const std::string t = concat(std::string(strings * h, '0'), alternating(l));
  const std::size_t copies = (N - 1) * (N - 1);
  for (std::size_t i = 0; i < copies; ++i) out.push_back(t);

  ReductionInstance inst{ProbeSet(Alphabet::binary(), out), ReductionKind::main_blmp, {}};
  inst.params = {{"N", static_cast<std::int64_t>(N)},
                 {"n", static_cast<std::int64_t>(strings)},
                 {"l", static_cast<std::int64_t>(l)},
                 {"h", static_cast<std::int64_t>(h)},
                 {"k", static_cast<std::int64_t>(h + l)},
                 {"copies", static_cast<std::int64_t>(copies)},
                 {"gadget_count", static_cast<std::int64_t>(strings)},
                 {"side", static_cast<std::int64_t>(N + 1)}};
  return inst;
}

ReductionInstance build_four_segment_htsp(const ProbeSet& htsp_input) {
  require_binary(htsp_input, 2);
  const std::size_t n = htsp_input.size();
  const std::size_t l = htsp_input.length();
  const std::string base[4] = {"1110", "1101", "1011", "0111"};
  std::string blocks[4];
  for (int i = 0; i < 4; ++i) blocks[i] = rep(base[i], n * l);

  std::vector<std::string> out;
  for (ProbeId i = 0; i < n; ++i) out.push_back(concat(blocks[0], htsp_input.text(i)));
  for (int j = 1; j < 4; ++j) out.push_back(concat(blocks[j], std::string(l, '0')));

  ReductionInstance inst{ProbeSet(Alphabet::binary(), out), ReductionKind::four_segment_htsp, {}};
  inst.params = {{"n", static_cast<std::int64_t>(n)},
                 {"l", static_cast<std::int64_t>(l)},
                 {"k", 4}};
  return inst;
}

ReductionInstance build_alternate_special(std::size_t n) {
  if (n < 2) throw ValidationError("alternate special instance needs n >= 2");
  const auto base = alternate_base(n);
  std::vector<std::string> out(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(n));
  const std::size_t copies = n * n - n;
  for (std::size_t i = 0; i < copies; ++i) out.push_back(base[n]);

  ReductionInstance inst{ProbeSet(Alphabet::binary(), out), ReductionKind::alternate_special, {}};
  inst.params = {{"n", static_cast<std::int64_t>(n)},
                 {"copies", static_cast<std::int64_t>(copies)},
                 {"gadget_count", static_cast<std::int64_t>(n)},
                 {"side", static_cast<std::int64_t>(n)}};
  return inst;
}

ReductionInstance build_alternate_blmp(const ProbeSet& htsp_input) {
  require_binary(htsp_input, 2);
  const std::size_t n = htsp_input.size();
  const std::size_t l = htsp_input.length();
  const auto base = alternate_base(n);

  std::vector<std::string> out;
  for (ProbeId i = 0; i < n; ++i) {
    out.push_back(concat(rep(base[i], n * l), rep(htsp_input.text(i), 2)));
  }
  const std::string t = concat(rep(base[n], n * l), alternating(l));
  const std::size_t copies = n * n - n;
  for (std::size_t i = 0; i < copies; ++i) out.push_back(t);

  ReductionInstance inst{ProbeSet(Alphabet::binary(), out), ReductionKind::alternate_blmp, {}};
  inst.params = {{"n", static_cast<std::int64_t>(n)},
                 {"l", static_cast<std::int64_t>(l)},
                 {"copies", static_cast<std::int64_t>(copies)},
                 {"gadget_count", static_cast<std::int64_t>(n)},
                 {"side", static_cast<std::int64_t>(n)}};
  return inst;
}

std::vector<std::size_t> boundary_cycle(std::size_t side) {
  if (side == 0) return {};
  if (side == 1) return {0};
  std::vector<std::size_t> cycle;
  for (std::size_t c = 0; c < side; ++c) cycle.push_back(c);
  for (std::size_t r = 1; r < side; ++r) cycle.push_back(r * side + side - 1);
  for (std::size_t c = side - 1; c-- > 0;) cycle.push_back((side - 1) * side + c);
  for (std::size_t r = side - 1; r-- > 1;) cycle.push_back(r * side);
  return cycle;
}

BoundaryReport check_special_boundary(const ReductionInstance& instance, const Placement& placement) {
  validate_placement(placement, instance.probes.size());
  const auto gadgets = static_cast<ProbeId>(instance.param("gadget_count"));
  const std::size_t side = placement.side();
  BoundaryReport report;

  for (std::size_t cell = 0; cell < placement.size(); ++cell) {
    const std::size_t r = cell / side, c = cell % side;
    const bool on_boundary = r == 0 || c == 0 || r + 1 == side || c + 1 == side;
    if (placement[cell] < gadgets && !on_boundary) report.violators.push_back(placement[cell]);
  }
  std::sort(report.violators.begin(), report.violators.end());
  report.all_on_boundary = report.violators.empty();

  const auto cycle = boundary_cycle(side);
  const std::size_t len = cycle.size();
  auto is_gadget = [&](std::size_t i) { return placement[cycle[i % len]] < gadgets; };
  auto is_corner = [&](std::size_t cell) {
    const std::size_t r = cell / side, c = cell % side;
    return (r == 0 || r + 1 == side) && (c == 0 || c + 1 == side);
  };
  // start the scan just after a non-gadget cell so runs are not split by the wrap-around
  std::size_t start = 0;
  bool gap_found = false;
  for (std::size_t i = 0; i < len && !gap_found; ++i) {
    if (!is_gadget(i)) {
      start = i + 1;
      gap_found = true;
    }
  }
  if (!gap_found) {
    if (len > 0) report.segments.push_back(cycle);
  } else {
    std::vector<std::size_t> run;
    for (std::size_t k = 0; k < len; ++k) {
      const std::size_t i = (start + k) % len;
      if (is_gadget(i)) {
        run.push_back(cycle[i]);
      } else if (!run.empty()) {
        report.segments.push_back(std::move(run));
        run.clear();
      }
    }
    if (!run.empty()) report.segments.push_back(std::move(run));
  }
  for (const auto& seg : report.segments) {
    if (std::any_of(seg.begin(), seg.end(), is_corner)) ++report.corner_anchored_segments;
  }
  return report;
}

}  // namespace blmp
