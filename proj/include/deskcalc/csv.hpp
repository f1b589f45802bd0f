#pragma once

#include <istream>
#include <string>
#include <vector>

#include "deskcalc/stats.hpp"

namespace deskcalc::csv {

/// Reads long-format `group,value` CSV (header required). Groups come
/// back in first-appearance order. Throws std::runtime_error on a
/// malformed header, a short row, or an unparsable value.
std::vector<stats::Sample> read_grouped(std::istream& in);

}  // namespace deskcalc::csv
