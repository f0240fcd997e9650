#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "blmp/core.hpp"

namespace blmp {

// Gadget instances from the NP-hardness constructions. Strings read left to right; "prepend"
// means the leftmost symbols and the low-order end of a string is its right end.
enum class ReductionKind {
  padded_4n_htsp,
  main_blmp,
  four_segment_htsp,
  alternate_blmp,
  alternate_special,
};

ReductionKind parse_reduction_kind(std::string_view name);
std::string_view reduction_kind_name(ReductionKind kind);

struct ReductionInstance {
  ProbeSet probes;
  ReductionKind kind;
  // Construction constants: n, N, l, h, k, copies, gadget_count (leading probes that are not t).
  std::map<std::string, std::int64_t> params;

  std::int64_t param(const std::string& key) const;
};

// HTSP input of n strings -> 4*ceil(n/4) strings: the first n-1 get 2nl zeros prepended, the last
// gets 2nl ones prepended and is repeated to fill the count.
ReductionInstance pad_to_4n(const ProbeSet& htsp_input);

// 4N HTSP strings -> (N+1)^2 BLMP strings t_1..t_4N followed by (N-1)^2 copies of t, with
// t_i = REP_h(a_i) + REP_2(s_i), t = 0^(4Nh) + (01)^l and h = 8l.
ReductionInstance build_main_blmp(const ProbeSet& htsp_input);

// n HTSP strings of length l -> n + 3 strings of length 4nl + l for the 4-segment HTSP.
ReductionInstance build_four_segment_htsp(const ProbeSet& htsp_input);

// n gadget strings at pairwise distance 16 plus n^2 - n copies of t at distance 9 from each.
ReductionInstance build_alternate_special(std::size_t n);

// n HTSP strings -> n^2 BLMP strings q_1..q_n and n^2 - n copies of t, length (8n+1)nl + 2l.
ReductionInstance build_alternate_blmp(const ProbeSet& htsp_input);

struct BoundaryReport {
  bool all_on_boundary = true;
  std::vector<ProbeId> violators;  // gadget probes found in interior cells
  // Maximal runs of gadget probes along the boundary cycle (cell indices in cycle order).
  std::vector<std::vector<std::size_t>> segments;
  std::size_t corner_anchored_segments = 0;
};

// Clockwise boundary cycle of a side x side grid starting at the top-left corner.
std::vector<std::size_t> boundary_cycle(std::size_t side);

// True iff every gadget probe (every probe before the copies of t) sits on the grid boundary.
BoundaryReport check_special_boundary(const ReductionInstance& instance, const Placement& placement);

}  // namespace blmp
