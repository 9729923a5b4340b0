#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace vinerep {

// All times and heights are exact rationals. No floating point in the core.
using Rat = mpq_class;

// Parses "p/q" or "n" (optional sign). Returns nullopt on malformed input or
// zero denominator. Result is always canonical (reduced, positive denominator).
std::optional<Rat> rat_from_string(const std::string& s);

// Canonical form: "n" when the denominator is 1, else "p/q" reduced.
std::string rat_to_string(const Rat& r);

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

}  // namespace vinerep
