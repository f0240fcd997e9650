#include <doctest.h>

#include <functional>

#include "blmp/bounds.hpp"
#include "blmp/instance_io.hpp"
#include "blmp/reductions.hpp"
#include "test_support.hpp"

using namespace blmp;

namespace {

ProbeSet binary(std::vector<std::string> s) { return ProbeSet(Alphabet::binary(), s); }

// All partitions of {0..n-1} into exactly k non-empty blocks (restricted growth strings).
void partitions(std::size_t n, std::size_t k, std::vector<std::size_t>& label, std::size_t used,
                const std::function<void(const std::vector<std::size_t>&)>& visit) {
  const std::size_t i = label.size();
  if (i == n) {
    if (used == k) visit(label);
    return;
  }
  if (k - used > n - i) return;
  for (std::size_t b = 0; b <= used && b < k; ++b) {
    label.push_back(b);
    partitions(n, k, label, std::max(used, b + 1), visit);
    label.pop_back();
  }
}

}  // namespace

TEST_CASE("kind names round trip") {
  for (auto k : {ReductionKind::padded_4n_htsp, ReductionKind::main_blmp, ReductionKind::four_segment_htsp,
                 ReductionKind::alternate_blmp, ReductionKind::alternate_special}) {
    CHECK(parse_reduction_kind(reduction_kind_name(k)) == k);
  }
  CHECK_THROWS_AS(parse_reduction_kind("bordered_ring"), ValidationError);
}

TEST_CASE("pad to 4n") {
  auto inst = pad_to_4n(binary({"101", "000", "111", "010"}));
  REQUIRE(inst.probes.size() == 4);
  CHECK(inst.probes.text(0) == std::string(24, '0') + "101");
  CHECK(inst.probes.length() == 27);
  CHECK(inst.probes.text(3) == std::string(24, '1') + "010");
  CHECK_THROWS_AS(pad_to_4n(ProbeSet(Alphabet("AC"), std::vector<std::string>{"A", "C"})), ValidationError);
  CHECK_THROWS_AS(pad_to_4n(binary({"1"})), ValidationError);
}

TEST_CASE("pad to 4n with five strings keeps the copies together") {
  auto input = random_binary_strings(5, 2, 3);
  auto inst = pad_to_4n(input);
  REQUIRE(inst.probes.size() == 8);
  for (ProbeId i = 4; i < 8; ++i) CHECK(inst.probes.text(i) == inst.probes.text(4));
  auto t = brute_force_htsp(inst.probes);
  CHECK(t.cost == test::naive_tour(inst.probes));
  // the four copies sit on consecutive tour positions, cyclically
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < t.order.size(); ++i) {
    if (t.order[i] >= 4) pos.push_back(i);
  }
  REQUIRE(pos.size() == 4);
  const bool straight = pos.back() - pos.front() == 3;
  const bool wrapped = pos[0] == 0 && pos[3] == 7 && (pos[1] == 1 || pos[2] == 6);
  CHECK((straight || wrapped));
}

TEST_CASE("main reduction distances and shape") {
  for (std::size_t N : {1u, 2u, 3u}) {
    for (std::size_t l : {1u, 2u, 3u}) {
      auto input = random_binary_strings(4 * N, l, N * 10 + l);
      auto inst = build_main_blmp(input);
      const std::size_t h = 8 * l;
      CHECK(inst.param("h") == static_cast<std::int64_t>(h));
      CHECK(inst.probes.size() == (N + 1) * (N + 1));
      CHECK(inst.param("copies") == static_cast<std::int64_t>(N * N - 2 * N + 1));
      CHECK(inst.probes.length() == 4 * N * h + 2 * l);
      const ProbeId t = static_cast<ProbeId>(4 * N);
      const Cost k = static_cast<Cost>(h + l);
      for (ProbeId i = 0; i < 4 * N; ++i) {
        if (N > 1) CHECK(hamming(inst.probes.probe(i), inst.probes.probe(t)) == k);
        for (ProbeId j = i + 1; j < 4 * N; ++j) {
          const Cost d = hamming(inst.probes.probe(i), inst.probes.probe(j));
          CHECK(d == static_cast<Cost>(2 * h) + 2 * hamming(input.probe(i), input.probe(j)));
          CHECK(d <= 2 * k);
          CHECK(4 * d > 7 * k);
        }
      }
    }
  }
  CHECK_THROWS_AS(build_main_blmp(binary({"0", "1", "0"})), ValidationError);
  CHECK_THROWS_AS(build_main_blmp(binary({"0", "1", "0", "1", "1"})), ValidationError);
}

TEST_CASE("main reduction optimum identity at N=1 and N=2") {
  for (std::size_t N : {1u, 2u}) {
    for (std::uint64_t seed = 0; seed < 2; ++seed) {
      auto input = random_binary_strings(4 * N, 1, seed + 7 * N);
      auto inst = build_main_blmp(input);
      const std::size_t side = N + 1;
      DistanceOracle dist(inst.probes);
      const Cost h = inst.param("h"), l = inst.param("l");
      const Cost opt = brute_force_opt(inst.probes, side, dist).cost;
      const Cost tour = brute_force_htsp(input).cost;
      CHECK(opt == 4 * static_cast<Cost>(N - 1) * (h + l) + 8 * static_cast<Cost>(N) * h + 2 * tour);
    }
  }
}

TEST_CASE("main reduction optimum puts every gadget on the boundary") {
  auto inst = build_main_blmp(binary({"0", "1", "0", "1", "1", "0", "0", "1"}));
  DistanceOracle dist(inst.probes);
  auto e = brute_force_opt(inst.probes, 3, dist);
  auto rep = check_special_boundary(inst, e.placement);
  CHECK(rep.all_on_boundary);
  CHECK(rep.violators.empty());

  // gadget 0 in the centre breaks it
  auto bad = e.placement;
  auto where = bad.inverse();
  bad.swap_cells(where[0], 4);
  auto bad_rep = check_special_boundary(inst, bad);
  CHECK_FALSE(bad_rep.all_on_boundary);
  CHECK(bad_rep.violators == std::vector<ProbeId>{0});
}

TEST_CASE("boundary cycle") {
  CHECK(boundary_cycle(3) == std::vector<std::size_t>{0, 1, 2, 5, 8, 7, 6, 3});
  CHECK(boundary_cycle(2) == std::vector<std::size_t>{0, 1, 3, 2});
  CHECK(boundary_cycle(5).size() == 16);
}

TEST_CASE("four segment construction") {
  for (std::size_t n : {2u, 3u, 5u}) {
    for (std::size_t l : {1u, 2u}) {
      auto input = random_binary_strings(n, l, n + l);
      auto inst = build_four_segment_htsp(input);
      REQUIRE(inst.probes.size() == n + 3);
      CHECK(inst.probes.length() == 4 * n * l + l);
      for (ProbeId i = 0; i < n; ++i) {
        for (ProbeId j = i + 1; j < n; ++j) {
          CHECK(hamming(inst.probes.probe(i), inst.probes.probe(j)) == hamming(input.probe(i), input.probe(j)));
        }
      }
      // the four base blocks are 2nl apart
      const std::size_t base = 4 * n * l;
      std::vector<std::string> blocks{inst.probes.text(0).substr(0, base)};
      for (ProbeId j = static_cast<ProbeId>(n); j < n + 3; ++j) blocks.push_back(inst.probes.text(j).substr(0, base));
      for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = a + 1; b < 4; ++b) CHECK(hamming(blocks[a], blocks[b]) == static_cast<Cost>(2 * n * l));
      }
    }
  }
}

TEST_CASE("four segment optimum isolates the three filler strings") {
  auto input = random_binary_strings(3, 2, 5);
  auto inst = build_four_segment_htsp(input);
  const std::size_t m = inst.probes.size();
  Cost best = -1;
  std::vector<std::size_t> best_label;
  std::vector<std::size_t> label;
  partitions(m, 4, label, 0, [&](const std::vector<std::size_t>& lab) {
    Cost total = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      ProbeSet part(Alphabet::binary(), inst.probes.length());
      for (ProbeId i = 0; i < m; ++i) {
        if (lab[i] == b) part.add(inst.probes.probe(i));
      }
      total += brute_force_htsp(part).cost;
    }
    if (best < 0 || total < best) {
      best = total;
      best_label = lab;
    }
  });
  // q1..q3 share one block, q4, q5, q6 are singletons
  CHECK(best_label[0] == best_label[1]);
  CHECK(best_label[1] == best_label[2]);
  for (std::size_t j = 3; j < 6; ++j) {
    for (std::size_t i = 0; i < 6; ++i) {
      if (i != j) CHECK(best_label[i] != best_label[j]);
    }
  }
  CHECK(best == brute_force_htsp(input).cost);
}

TEST_CASE("alternate special distances") {
  for (std::size_t n : {2u, 3u, 4u, 6u}) {
    auto inst = build_alternate_special(n);
    CHECK(inst.probes.size() == n * n);
    CHECK(inst.probes.length() == 8 * n + 1);
    const ProbeId t = static_cast<ProbeId>(n);
    for (ProbeId i = 0; i < n; ++i) {
      CHECK(hamming(inst.probes.probe(i), inst.probes.probe(t)) == 9);
      for (ProbeId j = i + 1; j < n; ++j) CHECK(hamming(inst.probes.probe(i), inst.probes.probe(j)) == 16);
    }
    for (ProbeId c = t; c < n * n; ++c) CHECK(inst.probes.text(c) == inst.probes.text(t));
  }
  CHECK_THROWS_AS(build_alternate_special(1), ValidationError);
}

TEST_CASE("alternate special optimum at n=4") {
  auto inst = build_alternate_special(4);
  DistanceOracle dist(inst.probes);
  auto e = brute_force_opt(inst.probes, 4, dist);
  CHECK(e.search_space == 16 * 15 * 14 * 13);
  CHECK(e.cost == 25 * 4 - 28);
  auto rep = check_special_boundary(inst, e.placement);
  CHECK(rep.all_on_boundary);
  CHECK(rep.segments.size() == 4);
  CHECK(rep.corner_anchored_segments == 4);
}

TEST_CASE("alternate reduction distances") {
  for (std::size_t n : {2u, 3u, 4u}) {
    for (std::size_t l : {1u, 2u}) {
      auto input = random_binary_strings(n, l, 3 * n + l);
      auto inst = build_alternate_blmp(input);
      CHECK(inst.probes.size() == n * n);
      CHECK(inst.param("copies") == static_cast<std::int64_t>(n * n - n));
      CHECK(inst.probes.length() == (8 * n + 1) * n * l + 2 * l);
      const ProbeId t = static_cast<ProbeId>(n);
      const Cost nl = static_cast<Cost>(n * l);
      for (ProbeId i = 0; i < n; ++i) {
        CHECK(hamming(inst.probes.probe(i), inst.probes.probe(t)) == 9 * nl + static_cast<Cost>(l));
        for (ProbeId j = i + 1; j < n; ++j) {
          const Cost ds = hamming(input.probe(i), input.probe(j));
          CHECK(hamming(rep(input.text(i), 2), rep(input.text(j), 2)) == 2 * ds);
          CHECK(hamming(inst.probes.probe(i), inst.probes.probe(j)) == 16 * nl + 2 * ds);
        }
      }
    }
  }
}
