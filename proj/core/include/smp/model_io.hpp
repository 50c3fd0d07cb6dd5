#pragma once

#include <iosfwd>
#include <string>

#include "smp/model.hpp"

namespace smp::model_io {

// Model file: JSON object with keys `states`, `p`, and exactly one of
// `moments` ({"orders": [...]}) or `distributions` (m x m array of null or
// {"family", "params"}).  Unknown keys are rejected.  Parse errors carry
// line/column.
SmpModel read(std::istream& in);
SmpModel read_file(const std::string& path);

std::string write(const SmpModel& model);  // pretty-printed JSON
void write_file(const std::string& path, const SmpModel& model);

}  // namespace smp::model_io
