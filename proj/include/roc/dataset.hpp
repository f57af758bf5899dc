// CSV dataset ingestion. Expected format: a "group,value" header, group
// labels 0 (reference) / 1 (comparator), decimal values, UTF-8.

#pragma once

#include <iosfwd>
#include <string>

#include "roc/sample.hpp"

namespace roc {

enum class ConventionFlag { Lower, Higher, Auto };

// Parses CSV text into a validated sample under the declared convention
// ("auto" picks the convention that makes the empirical AUC >= 0.5) and
// returns it canonicalized. Throws parse_error naming the first offending
// line, or validation_error for undersized groups.
TwoGroupSample parse_dataset(std::istream& in, ConventionFlag convention);
TwoGroupSample parse_dataset_file(const std::string& path, ConventionFlag convention);

}  // namespace roc
