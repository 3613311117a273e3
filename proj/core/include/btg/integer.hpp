#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace btg {

using Integer = boost::multiprecision::cpp_int;

std::string to_string(const Integer& value);

/// Parses an optionally negative decimal numeral. Throws Error(SyntaxError).
Integer parse_integer(std::string_view text);

bool is_numeral(std::string_view text) noexcept;

/// Least non-negative residue of `value` modulo `modulus` (> 0).
Integer mod_floor(const Integer& value, const Integer& modulus);

}  // namespace btg
