#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace vgb {

/// Exact rational coefficient. gmpxx keeps results canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Coefficient = mpq_class;

/// Parses "p" or "p/q" into a canonical rational. Throws DomainError on bad
/// input or a zero denominator.
Coefficient parse_coefficient(std::string_view text);

inline std::string to_string(const Coefficient& c) { return c.get_str(); }

/// Bit size of max(|numerator|, denominator).
std::size_t bit_size(const Coefficient& c);

}  // namespace vgb
