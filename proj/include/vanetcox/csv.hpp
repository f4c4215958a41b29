#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vanetcox::csv {

/// Locale-independent numeric cell with 12 significant digits.
std::string number(double value);

std::string integer(std::uint64_t value);

/// Joins cells with commas; cells are assumed free of commas and quotes.
std::string row(const std::vector<std::string>& cells);

}  // namespace vanetcox::csv
