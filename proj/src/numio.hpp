#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rootdense {

// Parses "2/39", "0.333", "1e-3", "25e-4" or a plain integer into an exact
// rational. Throws std::invalid_argument on malformed input.
mpq_class parse_rational(const std::string& text);

// Renders a rational as a decimal string with the given number of significant
// digits (round half away from zero). Exact for 0 and integers up to rounding.
std::string decimal_string(const mpq_class& value, int significant_digits = 12);

// Exact "num/den" form ("num" when the denominator is 1).
std::string rational_string(const mpq_class& value);

// Stable stream of per-task seeds derived from one master seed.
uint64_t derive_seed(uint64_t seed, uint64_t index);

}  // namespace rootdense
