#include "smp/trace_io.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "smp/errors.hpp"

namespace smp::trace_io {

namespace {

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

template <typename T>
T parse_number(std::string_view field, std::size_t row, const char* name) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(),
                                   value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw FormatError("trace row " + std::to_string(row) + ": bad " + name +
                          " field '" + std::string(field) + "'",
                      row);
  return value;
}

}  // namespace

estimate::TransitionTrace read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw FormatError("trace file is empty; expected header rep,from,to,sojourn");
  if (strip_cr(line) != "rep,from,to,sojourn")
    throw FormatError("trace header must be 'rep,from,to,sojourn'", 1);

  estimate::TransitionTrace trace;
  std::map<long, int> last_to;  // per replication, for chain checking
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    std::string_view sv = strip_cr(line);
    if (sv.empty()) continue;
    std::array<std::string_view, 4> fields;
    std::size_t start = 0;
    for (int f = 0; f < 4; ++f) {
      std::size_t comma = f < 3 ? sv.find(',', start) : std::string_view::npos;
      if (f < 3 && comma == std::string_view::npos)
        throw FormatError("trace row " + std::to_string(row) +
                              ": expected 4 comma-separated fields",
                          row);
      fields[static_cast<std::size_t>(f)] =
          sv.substr(start, comma == std::string_view::npos ? comma
                                                           : comma - start);
      start = comma + 1;
    }
    if (fields[3].find(',') != std::string_view::npos)
      throw FormatError("trace row " + std::to_string(row) +
                            ": expected 4 comma-separated fields",
                        row);

    estimate::TraceRecord rec;
    rec.rep = parse_number<long>(fields[0], row, "rep");
    if (rec.rep < 0)
      throw FormatError("trace row " + std::to_string(row) +
                            ": rep must be a nonnegative integer",
                        row);
    rec.from = parse_number<int>(fields[1], row, "from") - 1;
    rec.to = parse_number<int>(fields[2], row, "to") - 1;
    rec.sojourn = parse_number<double>(fields[3], row, "sojourn");

    auto it = last_to.find(rec.rep);
    if (it != last_to.end() && it->second != rec.from)
      throw FormatError("trace row " + std::to_string(row) +
                            ": replication " + std::to_string(rec.rep) +
                            " does not chain (previous destination " +
                            std::to_string(it->second + 1) + ", this source " +
                            std::to_string(rec.from + 1) + ")",
                        row);
    last_to[rec.rep] = rec.to;
    trace.records.push_back(rec);
  }
  return trace;
}

estimate::TransitionTrace read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open trace file: " + path);
  return read_csv(in);
}

void write_csv(std::ostream& out, const estimate::TransitionTrace& trace) {
  out << "rep,from,to,sojourn\n";
  for (const auto& rec : trace.records) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", rec.sojourn);
    out << rec.rep << ',' << rec.from + 1 << ',' << rec.to + 1 << ',' << buf
        << '\n';
  }
}

void write_csv_file(const std::string& path,
                    const estimate::TransitionTrace& trace) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open trace file for writing: " + path);
  write_csv(out, trace);
}

}  // namespace smp::trace_io
