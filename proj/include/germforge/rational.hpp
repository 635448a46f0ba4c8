#pragma once

#include <gmpxx.h>

#include <string>

namespace germforge {

/// Exact rational, always canonical (lowest terms, positive denominator).
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);
Rat parse_rat(const std::string& text);
std::string to_string(const Rat& r);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

} // namespace germforge
