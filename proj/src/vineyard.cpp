#include "vinerep/vineyard.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "vinerep/error.hpp"

namespace vinerep {

std::string Interval::to_string() const {
  return "[" + rat_to_string(birth) + "," + rat_to_string(death) + ")";
}

std::optional<std::size_t> TimeGrid::index_of(const Rat& t) const {
  auto it = std::lower_bound(times.begin(), times.end(), t);
  if (it == times.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - times.begin());
}

Interval Vine::interval_at(std::size_t grid_index) const {
  if (!supported_at(grid_index)) fail("IndexOutOfRange", "vine not supported at index");
  return Interval{births[grid_index - lo], deaths[grid_index - lo]};
}

std::optional<std::size_t> Vineyard::position_of(int vine_id) const {
  for (std::size_t p = 0; p < vines.size(); ++p)
    if (vines[p].id == vine_id) return p;
  return std::nullopt;
}

namespace {

Rat interpolate(const Rat& t0, const Rat& y0, const Rat& t1, const Rat& y1, const Rat& t) {
  if (t0 == t1) return y0;
  return Rat(y0 + (y1 - y0) * (t - t0) / (t1 - t0));
}

Rat endpoint_at_time(const Vineyard& v, std::size_t pos, const Rat& t, bool birth) {
  const Vine& vn = v.vines[pos];
  const auto& ys = birth ? vn.births : vn.deaths;
  const auto& ts = v.grid.times;
  if (t < ts[vn.lo] || t > ts[vn.hi]) fail("IndexOutOfRange", "time outside vine support");
  // locate the piece [g_j, g_{j+1}] containing t
  auto it = std::upper_bound(ts.begin() + static_cast<long>(vn.lo),
                             ts.begin() + static_cast<long>(vn.hi) + 1, t);
  std::size_t j = static_cast<std::size_t>(it - ts.begin());
  if (j > vn.lo) --j;
  if (j >= vn.hi) j = vn.hi == vn.lo ? vn.lo : vn.hi - 1;
  std::size_t a = j - vn.lo;
  if (vn.lo == vn.hi) return ys[0];
  return interpolate(ts[j], ys[a], ts[j + 1], ys[a + 1], t);
}

}  // namespace

Rat Vineyard::birth_at_time(std::size_t pos, const Rat& t) const {
  return endpoint_at_time(*this, pos, t, true);
}

Rat Vineyard::death_at_time(std::size_t pos, const Rat& t) const {
  return endpoint_at_time(*this, pos, t, false);
}

std::vector<bool> Vineyard::support_at(std::size_t grid_index) const {
  std::vector<bool> s(vines.size(), false);
  for (std::size_t p = 0; p < vines.size(); ++p) s[p] = vines[p].supported_at(grid_index);
  return s;
}

std::vector<bool> Barcode::support() const {
  std::vector<bool> s(slots.size(), false);
  for (std::size_t p = 0; p < slots.size(); ++p) s[p] = slots[p].has_value();
  return s;
}

std::string CriticalEvent::to_string() const {
  std::ostringstream os;
  os << "t=" << rat_to_string(time) << " ";
  switch (kind) {
    case EventKind::birth_coincidence:
      os << "BirthCoincidence(" << vine_a << "," << vine_b << ")";
      break;
    case EventKind::death_coincidence:
      os << "DeathCoincidence(" << vine_a << "," << vine_b << ")";
      break;
    case EventKind::birth_death_coincidence:
      os << "BirthDeathCoincidence(" << vine_a << "," << vine_b << ")";
      break;
    case EventKind::vine_appears:
      os << "VineAppears(" << vine_a << ")";
      break;
    case EventKind::vine_disappears:
      os << "VineDisappears(" << vine_a << ")";
      break;
  }
  return os.str();
}

Barcode barcode_at(const Vineyard& v, std::size_t grid_index) {
  if (grid_index >= v.grid.size()) fail("IndexOutOfRange", "grid index out of range");
  Barcode bc;
  bc.slots.resize(v.vine_count());
  for (std::size_t p = 0; p < v.vine_count(); ++p)
    if (v.vines[p].supported_at(grid_index)) bc.slots[p] = v.vines[p].interval_at(grid_index);
  for (std::size_t p = 0; p < bc.size(); ++p)
    for (std::size_t q = p + 1; q < bc.size(); ++q)
      if (bc.present(p) && bc.present(q) && bc.at(p) == bc.at(q))
        fail("DuplicateInterval", "vines " + std::to_string(v.vines[p].id) + " and " +
                                      std::to_string(v.vines[q].id) + " coincide at index " +
                                      std::to_string(grid_index));
  return bc;
}

namespace {

struct HeightEntry {
  Rat value;
  std::size_t pos;
  bool is_birth;
};

std::vector<HeightEntry> heights_at(const Vineyard& v, std::size_t i) {
  std::vector<HeightEntry> hs;
  for (std::size_t p = 0; p < v.vine_count(); ++p) {
    if (!v.vines[p].supported_at(i)) continue;
    Interval iv = v.vines[p].interval_at(i);
    hs.push_back({iv.birth, p, true});
    hs.push_back({iv.death, p, false});
  }
  std::sort(hs.begin(), hs.end(),
            [](const HeightEntry& a, const HeightEntry& b) { return a.value < b.value; });
  return hs;
}

// Events at one grid index; genericity problems are reported, not thrown.
std::vector<CriticalEvent> events_at(const Vineyard& v, std::size_t i, Report* problems) {
  std::vector<CriticalEvent> evs;
  const Rat& t = v.grid[i];
  auto hs = heights_at(v, i);
  std::size_t a = 0;
  while (a < hs.size()) {
    std::size_t b = a + 1;
    while (b < hs.size() && hs[b].value == hs[a].value) ++b;
    std::size_t n = b - a;
    if (n == 2) {
      const HeightEntry &e1 = hs[a], &e2 = hs[a + 1];
      CriticalEvent ev;
      ev.time = t;
      ev.grid_index = i;
      int id1 = v.vines[e1.pos].id, id2 = v.vines[e2.pos].id;
      if (e1.is_birth && e2.is_birth) {
        ev.kind = EventKind::birth_coincidence;
        ev.vine_a = std::min(id1, id2);
        ev.vine_b = std::max(id1, id2);
      } else if (!e1.is_birth && !e2.is_birth) {
        ev.kind = EventKind::death_coincidence;
        ev.vine_a = std::min(id1, id2);
        ev.vine_b = std::max(id1, id2);
      } else {
        ev.kind = EventKind::birth_death_coincidence;
        ev.vine_a = e1.is_birth ? id1 : id2;
        ev.vine_b = e1.is_birth ? id2 : id1;
      }
      evs.push_back(ev);
    } else if (n > 2 && problems) {
      problems->add("GenericityViolation", "index " + std::to_string(i),
                    std::to_string(n) + " critical heights coincide at value " +
                        rat_to_string(hs[a].value));
    }
    a = b;
  }
  for (const Vine& vn : v.vines) {
    if (vn.lo == i && vn.lo > 0)
      evs.push_back({t, i, EventKind::vine_appears, vn.id, -1});
    if (vn.hi == i && vn.hi + 1 < v.grid.size())
      evs.push_back({t, i, EventKind::vine_disappears, vn.id, -1});
  }
  if (evs.size() > 1 && problems)
    problems->add("GenericityViolation", "index " + std::to_string(i),
                  std::to_string(evs.size()) + " simultaneous critical events");
  return evs;
}

bool same_coincidence(const CriticalEvent& a, const CriticalEvent& b) {
  return a.kind == b.kind && a.vine_a == b.vine_a && a.vine_b == b.vine_b;
}

std::vector<bool> critical_flags(const Vineyard& v) {
  std::vector<bool> flags(v.grid.size(), false);
  for (std::size_t i = 0; i < v.grid.size(); ++i)
    flags[i] = !events_at(v, i, nullptr).empty();
  return flags;
}

}  // namespace

std::vector<CriticalEvent> critical_times(const Vineyard& v) {
  Report problems;
  std::vector<CriticalEvent> all;
  std::vector<CriticalEvent> prev;
  for (std::size_t i = 0; i < v.grid.size(); ++i) {
    auto evs = events_at(v, i, &problems);
    for (const auto& e : evs) {
      for (const auto& p : prev)
        if (same_coincidence(e, p))
          problems.add("GenericityViolation", "index " + std::to_string(i),
                       "coincidence persists over consecutive grid times");
      all.push_back(e);
    }
    prev = std::move(evs);
  }
  if (!problems.ok()) fail("GenericityViolation", problems.to_string());
  return all;
}

std::optional<std::pair<int, int>> incompatibility(const Vineyard& v, std::size_t grid_index,
                                                   Direction dir) {
  if (grid_index >= v.grid.size()) fail("IndexOutOfRange", "grid index out of range");
  std::size_t adj;
  if (dir == Direction::forward) {
    if (grid_index + 1 >= v.grid.size()) return std::nullopt;
    adj = grid_index + 1;
  } else {
    if (grid_index == 0) return std::nullopt;
    adj = grid_index - 1;
  }
  Rat mid = Rat((v.grid[grid_index] + v.grid[adj]) / 2);
  std::vector<std::pair<int, int>> found;
  for (std::size_t kp = 0; kp < v.vine_count(); ++kp) {
    for (std::size_t lp = 0; lp < v.vine_count(); ++lp) {
      if (kp == lp) continue;
      if (!v.vines[kp].supported_at(grid_index) || !v.vines[lp].supported_at(grid_index))
        continue;
      if (!v.vines[kp].supported_at(adj) || !v.vines[lp].supported_at(adj)) continue;
      Interval at_k = v.vines[kp].interval_at(grid_index);
      Interval at_l = v.vines[lp].interval_at(grid_index);
      if (!staircase_leq(at_l, at_k)) continue;
      Interval mid_k{v.birth_at_time(kp, mid), v.death_at_time(kp, mid)};
      Interval mid_l{v.birth_at_time(lp, mid), v.death_at_time(lp, mid)};
      if (!staircase_leq(mid_l, mid_k)) found.push_back({v.vines[kp].id, v.vines[lp].id});
    }
  }
  if (found.size() > 1)
    fail("GenericityViolation",
         "multiple incompatible pairs at index " + std::to_string(grid_index));
  if (found.empty()) return std::nullopt;
  return found[0];
}

std::optional<Rat> min_height_gap(const Vineyard& v, std::size_t grid_index) {
  if (grid_index >= v.grid.size()) fail("IndexOutOfRange", "grid index out of range");
  auto hs = heights_at(v, grid_index);
  // distinct values
  std::vector<Rat> values;
  for (const auto& h : hs)
    if (values.empty() || values.back() != h.value) values.push_back(h.value);
  // own (birth, death) pairs of vines with a support boundary here
  std::vector<std::pair<Rat, Rat>> excluded;
  for (const Vine& vn : v.vines) {
    bool boundary = (vn.lo == grid_index && vn.lo > 0) ||
                    (vn.hi == grid_index && vn.hi + 1 < v.grid.size());
    if (boundary) {
      Interval iv = vn.interval_at(grid_index);
      excluded.push_back({iv.birth, iv.death});
    }
  }
  std::optional<Rat> best;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    bool skip = false;
    for (const auto& ex : excluded)
      if (ex.first == values[i] && ex.second == values[i + 1]) skip = true;
    if (skip) continue;
    Rat gap = Rat(values[i + 1] - values[i]);
    if (!best || gap < *best) best = gap;
  }
  return best;
}

namespace {

bool segment_ok(const std::optional<Rat>& mhg_u, bool crit_u, const std::optional<Rat>& mhg_v,
                bool crit_v, const Rat& gap) {
  auto fits = [&](const std::optional<Rat>& m) { return !m.has_value() || gap * 4 <= *m; };
  if (crit_u && crit_v) return false;
  if (crit_u) return fits(mhg_u);
  if (crit_v) return fits(mhg_v);
  return fits(mhg_u) && fits(mhg_v);
}

// Rebuild a vineyard on a refined point set; endpoints interpolated exactly
// from the original data.
Vineyard rebuild_on(const Vineyard& v, const std::set<Rat>& pts) {
  Vineyard out;
  out.grid.times.assign(pts.begin(), pts.end());
  for (const Vine& vn : v.vines) {
    Vine nv;
    nv.id = vn.id;
    const Rat& t_lo = v.grid[vn.lo];
    const Rat& t_hi = v.grid[vn.hi];
    auto lo_idx = out.grid.index_of(t_lo);
    auto hi_idx = out.grid.index_of(t_hi);
    if (!lo_idx || !hi_idx) fail("InternalError", "support endpoint lost in refinement");
    nv.lo = *lo_idx;
    nv.hi = *hi_idx;
    std::size_t src_pos = *v.position_of(vn.id);
    for (std::size_t i = nv.lo; i <= nv.hi; ++i) {
      Rat b = v.birth_at_time(src_pos, out.grid[i]);
      Rat d = v.death_at_time(src_pos, out.grid[i]);
      if (!(b < d))
        fail("DegenerateVineyard", "vine " + std::to_string(vn.id) +
                                       " degenerate at t=" + rat_to_string(out.grid[i]));
      nv.births.push_back(b);
      nv.deaths.push_back(d);
    }
    out.vines.push_back(nv);
  }
  return out;
}

// Exact crossing times of pairs of endpoint trajectories, piece by piece.
std::vector<Rat> trajectory_crossings(const Vineyard& v) {
  std::vector<Rat> roots;
  struct Traj {
    std::size_t pos;
    bool is_birth;
  };
  std::vector<Traj> trajs;
  for (std::size_t p = 0; p < v.vine_count(); ++p) {
    trajs.push_back({p, true});
    trajs.push_back({p, false});
  }
  for (std::size_t a = 0; a < trajs.size(); ++a) {
    for (std::size_t b = a + 1; b < trajs.size(); ++b) {
      if (trajs[a].pos == trajs[b].pos) continue;  // same vine: birth < death always
      const Vine& va = v.vines[trajs[a].pos];
      const Vine& vb = v.vines[trajs[b].pos];
      std::size_t lo = std::max(va.lo, vb.lo);
      std::size_t hi = std::min(va.hi, vb.hi);
      if (lo >= hi) continue;
      const auto& ya = trajs[a].is_birth ? va.births : va.deaths;
      const auto& yb = trajs[b].is_birth ? vb.births : vb.deaths;
      for (std::size_t j = lo; j < hi; ++j) {
        Rat d0 = Rat(ya[j - va.lo] - yb[j - vb.lo]);
        Rat d1 = Rat(ya[j + 1 - va.lo] - yb[j + 1 - vb.lo]);
        if (d0 == 0 || d1 == 0) continue;  // grid-point coincidence, already a point
        if ((d0 < 0) != (d1 < 0)) {
          Rat r = Rat(v.grid[j] + (v.grid[j + 1] - v.grid[j]) * d0 / (d0 - d1));
          roots.push_back(r);
        }
      }
    }
  }
  return roots;
}

constexpr std::size_t kMaxRefinedPoints = 20000;

}  // namespace

Vineyard refine_grid(const Vineyard& v, const TimeGrid& seed) {
  if (v.grid.size() < 2) fail("IndexOutOfRange", "grid needs at least 2 points");
  for (const Rat& t : seed.times)
    if (t < v.grid.times.front() || t > v.grid.times.back())
      fail("SeedOutOfRange", "seed time " + rat_to_string(t) + " outside vineyard range");

  std::set<Rat> pts(v.grid.times.begin(), v.grid.times.end());
  pts.insert(seed.times.begin(), seed.times.end());
  for (const Rat& r : trajectory_crossings(v)) pts.insert(r);

  Vineyard out = rebuild_on(v, pts);
  for (;;) {
    auto flags = critical_flags(out);
    std::vector<std::optional<Rat>> mhg(out.grid.size());
    for (std::size_t i = 0; i < out.grid.size(); ++i) mhg[i] = min_height_gap(out, i);
    std::vector<Rat> inserts;
    for (std::size_t i = 0; i + 1 < out.grid.size(); ++i) {
      Rat gap = Rat(out.grid[i + 1] - out.grid[i]);
      if (!segment_ok(mhg[i], flags[i], mhg[i + 1], flags[i + 1], gap))
        inserts.push_back(Rat((out.grid[i] + out.grid[i + 1]) / 2));
    }
    if (inserts.empty()) break;
    for (const Rat& t : inserts) pts.insert(t);
    if (pts.size() > kMaxRefinedPoints)
      fail("RefinementOverflow", "grid refinement exceeded the point budget");
    out = rebuild_on(v, pts);
  }
  return out;
}

Report validate_vineyard(const Vineyard& v) {
  Report rep;
  const std::size_t M1 = v.grid.size();
  if (M1 < 2) rep.add("GridTooSmall", "grid", "fewer than 2 grid times");
  for (std::size_t i = 0; i + 1 < M1; ++i)
    if (!(v.grid[i] < v.grid[i + 1]))
      rep.add("GridMonotonicity", "index " + std::to_string(i), "times not strictly increasing");

  std::set<int> ids;
  for (const Vine& vn : v.vines) {
    std::string where = "vine " + std::to_string(vn.id);
    if (!ids.insert(vn.id).second) rep.add("DuplicateVineId", where, "vine id repeated");
    if (vn.lo > vn.hi || vn.hi >= M1) {
      rep.add("SupportOutOfRange", where, "support range invalid");
      continue;
    }
    std::size_t n = vn.hi - vn.lo + 1;
    if (vn.births.size() != n || vn.deaths.size() != n) {
      rep.add("ListSize", where, "endpoint list length does not match support");
      continue;
    }
    for (std::size_t s = 0; s < n; ++s)
      if (!(vn.births[s] < vn.deaths[s]))
        rep.add("IntervalOrder", where + " offset " + std::to_string(s),
                "birth not strictly below death");
    for (std::size_t s = 0; s + 1 < n; ++s) {
      Rat dt = Rat(v.grid[vn.lo + s + 1] - v.grid[vn.lo + s]);
      if (rat_abs(Rat(vn.births[s + 1] - vn.births[s])) > dt ||
          rat_abs(Rat(vn.deaths[s + 1] - vn.deaths[s])) > dt)
        rep.add("LipschitzViolation", where + " offset " + std::to_string(s),
                "endpoint moves faster than the grid gap");
    }
    if (vn.lo > 0) {
      Rat len = Rat(vn.deaths.front() - vn.births.front());
      Rat gap = Rat(v.grid[vn.lo] - v.grid[vn.lo - 1]);
      if (!(len < gap * 2))
        rep.add("ShortBoundaryInterval", where,
                "interval at interior support start must be shorter than twice the adjacent gap");
    }
    if (vn.hi + 1 < M1) {
      Rat len = Rat(vn.deaths.back() - vn.births.back());
      Rat gap = Rat(v.grid[vn.hi + 1] - v.grid[vn.hi]);
      if (!(len < gap * 2))
        rep.add("ShortBoundaryInterval", where,
                "interval at interior support end must be shorter than twice the adjacent gap");
    }
  }
  if (!rep.ok()) return rep;  // structural problems make the rest unreliable

  // duplicate intervals
  for (std::size_t i = 0; i < M1; ++i) {
    for (std::size_t p = 0; p < v.vine_count(); ++p) {
      for (std::size_t q = p + 1; q < v.vine_count(); ++q) {
        if (!v.vines[p].supported_at(i) || !v.vines[q].supported_at(i)) continue;
        if (v.vines[p].interval_at(i) == v.vines[q].interval_at(i))
          rep.add("DuplicateInterval", "index " + std::to_string(i),
                  "vines " + std::to_string(v.vines[p].id) + " and " +
                      std::to_string(v.vines[q].id) + " carry the same interval");
      }
    }
  }

  // genericity per grid time and persistence of coincidences
  std::vector<CriticalEvent> prev;
  for (std::size_t i = 0; i < M1; ++i) {
    auto evs = events_at(v, i, &rep);
    for (const auto& e : evs)
      for (const auto& p : prev)
        if (same_coincidence(e, p))
          rep.add("GenericityViolation", "index " + std::to_string(i),
                  "coincidence persists over consecutive grid times");
    prev = std::move(evs);
  }

  // crossings strictly inside grid intervals
  if (!trajectory_crossings(v).empty())
    rep.add("OffGridCrossing", "grid", "a critical time is not a grid point");

  // segment spacing
  auto flags = critical_flags(v);
  std::vector<std::optional<Rat>> mhg(M1);
  for (std::size_t i = 0; i < M1; ++i) mhg[i] = min_height_gap(v, i);
  for (std::size_t i = 0; i + 1 < M1; ++i) {
    Rat gap = Rat(v.grid[i + 1] - v.grid[i]);
    if (flags[i] && flags[i + 1]) {
      rep.add("AdjacentCriticalTimes", "pair " + std::to_string(i),
              "two consecutive grid times are both critical");
      continue;
    }
    if (!segment_ok(mhg[i], flags[i], mhg[i + 1], flags[i + 1], gap))
      rep.add("SegmentSpacing", "pair " + std::to_string(i),
              "grid gap exceeds a quarter of the minimal height gap");
  }
  return rep;
}

}  // namespace vinerep
