#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "blmp/core.hpp"

namespace blmp {

// Instance file: line 1 "N L ALPHABET", then N^2 probe lines in input order.
struct Instance {
  std::size_t side = 0;
  ProbeSet probes;
};

Instance read_instance(std::istream& in);
Instance read_instance(const std::filesystem::path& path);
void write_instance(std::ostream& out, const ProbeSet& probes, std::size_t side);
void write_instance(const std::filesystem::path& path, const ProbeSet& probes, std::size_t side);

// Placement file: N^2 probe ids, row-major, one per line.
Placement read_placement(std::istream& in, std::size_t side);
Placement read_placement(const std::filesystem::path& path, std::size_t side);
void write_placement(std::ostream& out, const Placement& p);
void write_placement(const std::filesystem::path& path, const Placement& p);

// Uniform i.i.d. probes drawn with a 64-bit Mersenne twister seeded by `seed`.
ProbeSet random_probes(std::size_t count, std::size_t length, const Alphabet& alphabet,
                       std::uint64_t seed);

// Random binary strings, used as HTSP inputs for the gadget generators.
ProbeSet random_binary_strings(std::size_t count, std::size_t length, std::uint64_t seed);

struct SolveReport {
  std::string test_case;
  std::size_t probes = 0;
  std::optional<Cost> lower_bound;
  Cost init_cost = 0;
  std::string algorithm;
  std::optional<Cost> final_cost;  // empty when the run failed
  std::optional<double> wall_time_seconds;
  std::uint64_t seed = 0;
};

inline constexpr const char* kReportHeader =
    "test_case,probes,lower_bound,init_cost,algo,final_cost,time_sec,refined_percent,seed";

std::string format_report_row(const SolveReport& report);

// Appends rows, writing the header first when the file is new or empty.
void append_report(const std::filesystem::path& path, const std::vector<SolveReport>& rows);

}  // namespace blmp
