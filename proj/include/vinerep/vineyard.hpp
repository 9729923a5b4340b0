#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vinerep/interval.hpp"
#include "vinerep/rational.hpp"
#include "vinerep/report.hpp"

namespace vinerep {

// Strictly increasing finite list of exact times t_0 < ... < t_M.
struct TimeGrid {
  std::vector<Rat> times;

  std::size_t size() const { return times.size(); }
  const Rat& operator[](std::size_t i) const { return times[i]; }
  bool operator==(const TimeGrid&) const = default;
  // Index of an exact time value, if it is a grid point.
  std::optional<std::size_t> index_of(const Rat& t) const;
};

// A vine: a piecewise-linear path of intervals over a contiguous range of
// grid indices [lo, hi]. births/deaths hold one value per supported index.
struct Vine {
  int id = 0;
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::vector<Rat> births;
  std::vector<Rat> deaths;

  bool supported_at(std::size_t grid_index) const {
    return grid_index >= lo && grid_index <= hi;
  }
  Interval interval_at(std::size_t grid_index) const;
  bool operator==(const Vine&) const = default;
};

// Finite set of vines over a shared grid. Vines are kept sorted by id;
// matrix coordinates throughout the library are positions in this order.
struct Vineyard {
  TimeGrid grid;
  std::vector<Vine> vines;

  std::size_t vine_count() const { return vines.size(); }
  std::optional<std::size_t> position_of(int vine_id) const;
  // Interpolated endpoint values at an arbitrary time inside the support.
  Rat birth_at_time(std::size_t vine_pos, const Rat& t) const;
  Rat death_at_time(std::size_t vine_pos, const Rat& t) const;
  std::vector<bool> support_at(std::size_t grid_index) const;
  bool operator==(const Vineyard&) const = default;
};

// Time slice of a vineyard: one optional interval per vine position
// (absent slot = extended-basis zero element).
struct Barcode {
  std::vector<std::optional<Interval>> slots;

  std::size_t size() const { return slots.size(); }
  bool present(std::size_t i) const { return slots[i].has_value(); }
  const Interval& at(std::size_t i) const { return *slots[i]; }
  std::vector<bool> support() const;
  bool operator==(const Barcode&) const = default;
};

enum class EventKind {
  birth_coincidence,
  death_coincidence,
  birth_death_coincidence,
  vine_appears,
  vine_disappears,
};

// One critical time of a vineyard. For coincidences, vine_a/vine_b are the
// two vine ids involved (for birth_death_coincidence, vine_a owns the birth
// and vine_b the death). For support boundaries only vine_a is set.
struct CriticalEvent {
  Rat time;
  std::size_t grid_index = 0;
  EventKind kind = EventKind::birth_coincidence;
  int vine_a = -1;
  int vine_b = -1;

  std::string to_string() const;
};

enum class Direction { forward, backward };

// Slice extraction; throws DuplicateInterval when two present intervals
// coincide exactly.
Barcode barcode_at(const Vineyard& v, std::size_t grid_index);

// All critical times, sorted. Throws GenericityViolation when more than one
// coincidence or boundary event happens at a single time.
std::vector<CriticalEvent> critical_times(const Vineyard& v);

// Returns (k, l) as vine ids when the staircase relation vine_l <= vine_k
// holds at grid point i but fails just after (forward) or just before
// (backward); none otherwise. At most one pair exists under genericity.
std::optional<std::pair<int, int>> incompatibility(const Vineyard& v,
                                                   std::size_t grid_index,
                                                   Direction dir);

// Minimum pairwise distance among distinct critical heights at t_i; the
// coinciding pair at a critical time contributes one value, and the own
// (birth, death) pair of a vine with a support boundary at t_i is skipped.
// nullopt encodes +infinity (fewer than 2 distinct heights).
std::optional<Rat> min_height_gap(const Vineyard& v, std::size_t grid_index);

// Refines the grid so that it contains the seed times, every critical time,
// and satisfies the segment-spacing rule; vine endpoints are interpolated
// exactly at inserted times. Idempotent on compliant input.
Vineyard refine_grid(const Vineyard& v, const TimeGrid& seed);

// Checks all vineyard invariants plus grid-spacing compliance.
// Empty report <=> compliant.
Report validate_vineyard(const Vineyard& v);

}  // namespace vinerep
