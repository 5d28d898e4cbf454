#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cellshape::csv {

/// Shortest round-trip-free rendering with 6 significant digits, '.' as the
/// decimal separator regardless of locale. NaN renders as "nan".
std::string format_number(double value);

/// Quotes a field when it contains a comma, quote or line break.
std::string escape(std::string_view field);

/// Splits one record (no trailing newline) honouring double-quoted fields.
/// Unquoted fields are trimmed of surrounding blanks.
std::vector<std::string> split_record(std::string_view line);

/// Splits text into records on LF or CRLF; blank lines are dropped.
std::vector<std::string> split_lines(std::string_view text);

}  // namespace cellshape::csv
