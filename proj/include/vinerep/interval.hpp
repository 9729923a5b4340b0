#pragma once

#include <string>

#include "vinerep/rational.hpp"

namespace vinerep {

// Half-open interval [birth, death) with exact endpoints, birth < death.
struct Interval {
  Rat birth;
  Rat death;

  Rat length() const { return Rat(death - birth); }
  bool valid() const { return birth < death; }
  bool operator==(const Interval&) const = default;
  std::string to_string() const;
};

// Staircase (product) order on intervals: a <= b iff birth(a) <= birth(b)
// and death(a) <= death(b). Governs admissible basis-transformation entries
// and forwards/backwards incompatibility.
inline bool staircase_leq(const Interval& a, const Interval& b) {
  return a.birth <= b.birth && a.death <= b.death;
}

}  // namespace vinerep
