#include "blmp/instance_io.hpp"

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "blmp/refine.hpp"

namespace blmp {

namespace {

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode = std::ios::trunc) {
  std::ofstream out(path, std::ios::out | mode);
  if (!out) throw ValidationError("cannot open '" + path.string() + "' for writing");
  return out;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

Instance read_instance(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ValidationError("instance file is empty");
  strip_cr(header);
  std::istringstream hs(header);
  long long side = 0, length = 0;
  std::string alphabet_text, extra;
  if (!(hs >> side >> length >> alphabet_text) || (hs >> extra) || side <= 0 || length <= 0) {
    throw ValidationError("malformed instance header '" + header + "', expected 'N L ALPHABET'");
  }
  Instance inst{static_cast<std::size_t>(side),
                ProbeSet(Alphabet(alphabet_text), static_cast<std::size_t>(length))};
  const std::size_t expected = inst.side * inst.side;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (inst.probes.size() == expected) {
      if (!line.empty()) throw ValidationError("instance has more than N^2 probe lines");
      continue;
    }
    if (line.size() != static_cast<std::size_t>(length)) {
      throw ValidationError("line " + std::to_string(line_no) + ": probe length " +
                            std::to_string(line.size()) + " differs from declared " + std::to_string(length));
    }
    inst.probes.add(line);
  }
  if (inst.probes.size() != expected) {
    throw ValidationError("instance declares " + std::to_string(expected) + " probes but has " +
                          std::to_string(inst.probes.size()));
  }
  return inst;
}

Instance read_instance(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_instance(in);
}

void write_instance(std::ostream& out, const ProbeSet& probes, std::size_t side) {
  if (probes.size() != side * side) throw ValidationError("probe count does not fill the grid");
  out << side << ' ' << probes.length() << ' ' << probes.alphabet().symbols() << '\n';
  for (ProbeId i = 0; i < probes.size(); ++i) out << probes.text(i) << '\n';
}

void write_instance(const std::filesystem::path& path, const ProbeSet& probes, std::size_t side) {
  auto out = open_out(path);
  write_instance(out, probes, side);
  if (!out) throw ValidationError("failed writing '" + path.string() + "'");
}

Placement read_placement(std::istream& in, std::size_t side) {
  std::vector<ProbeId> cells;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || token.front() == '-') {
      throw ValidationError("placement entry '" + token + "' is not a probe id");
    }
    cells.push_back(static_cast<ProbeId>(v));
  }
  Placement p(side, std::move(cells));
  validate_placement(p, side * side);
  return p;
}

Placement read_placement(const std::filesystem::path& path, std::size_t side) {
  auto in = open_in(path);
  return read_placement(in, side);
}

void write_placement(std::ostream& out, const Placement& p) {
  for (ProbeId id : p.cells()) out << id << '\n';
}

void write_placement(const std::filesystem::path& path, const Placement& p) {
  auto out = open_out(path);
  write_placement(out, p);
  if (!out) throw ValidationError("failed writing '" + path.string() + "'");
}

ProbeSet random_probes(std::size_t count, std::size_t length, const Alphabet& alphabet,
                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(alphabet.size()) - 1);
  ProbeSet out(alphabet, length);
  Symbols probe(length);
  for (std::size_t i = 0; i < count; ++i) {
    for (auto& s : probe) s = static_cast<Symbol>(pick(rng));
    out.add(probe);
  }
  return out;
}

ProbeSet random_binary_strings(std::size_t count, std::size_t length, std::uint64_t seed) {
  return random_probes(count, length, Alphabet::binary(), seed);
}

std::string format_report_row(const SolveReport& r) {
  std::ostringstream os;
  os << r.test_case << ',' << r.probes << ',';
  if (r.lower_bound) os << *r.lower_bound; else os << '-';
  os << ',' << r.init_cost << ',' << r.algorithm << ',';
  if (r.final_cost) os << *r.final_cost; else os << '-';
  os << ',';
  if (r.wall_time_seconds && r.final_cost) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", *r.wall_time_seconds);
    os << buf;
  } else {
    os << '-';
  }
  os << ',';
  if (r.final_cost) os << format_percent(refinement_percent(r.init_cost, *r.final_cost)); else os << '-';
  os << ',' << r.seed;
  return os.str();
}

void append_report(const std::filesystem::path& path, const std::vector<SolveReport>& rows) {
  std::error_code ec;
  const bool fresh = !std::filesystem::exists(path, ec) || std::filesystem::file_size(path, ec) == 0;
  auto out = open_out(path, std::ios::app);
  if (fresh) out << kReportHeader << '\n';
  for (const auto& r : rows) out << format_report_row(r) << '\n';
  if (!out) throw ValidationError("failed writing '" + path.string() + "'");
}

}  // namespace blmp
