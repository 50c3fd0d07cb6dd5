#pragma once

#include <iosfwd>
#include <string>

#include "smp/estimate.hpp"

namespace smp::trace_io {

// CSV schema: header `rep,from,to,sojourn`; states 1-based in the file,
// 0-based in memory.  Rows within a replication must chain (the destination
// of one record is the source of the next).  LF and CRLF both accepted.
estimate::TransitionTrace read_csv(std::istream& in);
estimate::TransitionTrace read_csv_file(const std::string& path);

void write_csv(std::ostream& out, const estimate::TransitionTrace& trace);
void write_csv_file(const std::string& path,
                    const estimate::TransitionTrace& trace);

}  // namespace smp::trace_io
