#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hahn::detail {

// Parses an exact rational "a", "-a" or "a/b" (b > 0), surrounding spaces
// allowed. Error offsets are relative to text, shifted by base.
mpq_class parse_rational(std::string_view text, std::size_t base = 0);

// Canonical rendering: "3", "-5/2".
std::string rational_str(const mpq_class& q);

std::string_view trim(std::string_view s, std::size_t* leading = nullptr);

} // namespace hahn::detail
