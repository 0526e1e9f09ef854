#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wel/observation.hpp"

namespace wel {

// CSV rows, one observation each:
//   exact,<v> | right,<v> | left,<v> | interval,<lo>,<hi>
// An optional header `kind,a,b` (or `sample,kind,a,b`) is skipped.
// Rows may carry a leading sample column in {x,y} for combined two-sample files.
std::vector<Observation> ingest_csv(const std::string& path, SampleScheme scheme);
std::vector<Observation> read_observations(std::istream& in, SampleScheme scheme,
                                           const std::string& source_name);

// Combined file with a leading `sample` column in {x,y}.
TwoSampleData ingest_csv_combined(const std::string& path, SampleScheme scheme_x,
                                  SampleScheme scheme_y);

void write_csv(const std::string& path, const std::vector<Observation>& sample);
void write_observations(std::ostream& out, const std::vector<Observation>& sample);

} // namespace wel
