#include "roc/rng.hpp"

#include <cmath>

#include "roc/special_functions.hpp"

namespace roc {

double RngStream::next_normal() { return normal_quantile(next_unit()); }

double RngStream::next_exponential(double rate) {
  return -std::log1p(-next_unit()) / rate;
}

}  // namespace roc
