#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "dglcl/prob_core.hpp"

namespace dglcl {

// Sequence files: whitespace-separated base-10 symbol indices; blank lines ignored.
Sequence parse_sequence(std::istream& in);
Sequence read_sequence_file(const std::filesystem::path& path);

// Distribution files: whitespace-separated decimals.
Distribution parse_distribution(std::istream& in);
Distribution read_distribution_file(const std::filesystem::path& path);

// 12 significant digits, '.' separator, scientific below 1e-4 in magnitude. Locale-free.
std::string format_real(double value);

}  // namespace dglcl
