// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace beamtrace {

/// Shortest decimal representation that round-trips the exact double.
/// Negative infinity renders as the literal token "-inf".
std::string format_double(double value);

std::string format_int(std::int64_t value);

/// Strict parsers; return false on trailing garbage or empty input.
bool parse_double(std::string_view text, double& out);
bool parse_int(std::string_view text, std::int64_t& out);

/// FNV-1a 64-bit digest of a byte string, as 16 hex digits.
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace beamtrace
