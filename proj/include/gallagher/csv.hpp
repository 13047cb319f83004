#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace gallagher::csv {

/// Shortest round-trip decimal form of `value` (deterministic across runs).
std::string format(double value);
std::string format(long long value);
inline std::string format(int value) { return format(static_cast<long long>(value)); }
inline std::string format(bool value) { return value ? "true" : "false"; }

/// Joins already formatted cells with commas.
std::string row(const std::vector<std::string>& cells);

/// Splits one CSV line on commas, trimming surrounding blanks.
std::vector<std::string> split(std::string_view line);

/// Parses a double, throwing ParameterDomainError with `what` in the message on failure.
double parse_double(std::string_view text, std::string_view what);
long long parse_int(std::string_view text, std::string_view what);

/// Reads every non-empty, non-'#' line of a file and splits it. A first row
/// whose leading cell is not numeric is treated as a header and dropped.
std::vector<std::vector<std::string>> read_rows(const std::string& path);

}  // namespace gallagher::csv
