#include "roc/dataset.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "roc/errors.hpp"

namespace roc {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

TwoGroupSample parse_dataset(std::istream& in, ConventionFlag convention) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) throw parse_error(0, "empty input");
  ++line_no;
  if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);  // UTF-8 BOM
  if (!line.empty() && line.back() == '\r') line.pop_back();
  {
    std::string header = strip(line);
    for (auto& ch : header) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (header != "group,value")
      throw parse_error(1, "missing header (expected \"group,value\")");
  }

  std::vector<double> reference, comparator;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (strip(line).empty()) continue;

    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw parse_error(line_no, "expected two comma-separated fields");
    std::string group_field = strip(line.substr(0, comma));
    std::string value_field = strip(line.substr(comma + 1));

    bool is_reference;
    if (group_field == "0")
      is_reference = true;
    else if (group_field == "1")
      is_reference = false;
    else
      throw parse_error(line_no, "unknown group label \"" + group_field + "\"");

    double value = 0.0;
    auto [ptr, ec] = std::from_chars(
        value_field.data(), value_field.data() + value_field.size(), value);
    if (ec != std::errc{} || ptr != value_field.data() + value_field.size())
      throw parse_error(line_no, "non-numeric value \"" + value_field + "\"");
    if (!std::isfinite(value)) throw parse_error(line_no, "non-finite value");

    (is_reference ? reference : comparator).push_back(value);
  }

  TwoGroupSample sample = validate_sample(
      std::move(reference), std::move(comparator),
      convention == ConventionFlag::Higher ? Orientation::HigherLessDesirable
                                           : Orientation::LowerLessDesirable);
  if (convention == ConventionFlag::Auto) return resolve_auto_orientation(sample);
  return canonical_orientation(sample);
}

TwoGroupSample parse_dataset_file(const std::string& path, ConventionFlag convention) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open dataset file: " + path);
  return parse_dataset(in, convention);
}

}  // namespace roc
