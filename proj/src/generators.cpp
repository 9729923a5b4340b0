#include "vinerep/generators.hpp"

#include <algorithm>
#include <map>

#include "vinerep/error.hpp"
#include "vinerep/simplify.hpp"

namespace vinerep {

namespace {

// splitmix64; the usual uniform_int_distribution is implementation-defined,
// and generator output must be byte-stable across platforms.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
  bool coin() { return next() & 1u; }
};

Scalar random_nonzero(Rng& rng, const Field& f) {
  if (f.is_prime_field())
    return Scalar::from_int(f, static_cast<long>(1 + rng.below(f.p - 1)));
  static const long nums[] = {1, -1, 2, -2, 3};
  static const long dens[] = {1, 1, 1, 2, 1};
  std::size_t pick = rng.below(5);
  return Scalar::from_rat(f, Rat(nums[pick], dens[pick]));
}

Scalar random_value(Rng& rng, const Field& f) {
  if (f.is_prime_field())
    return Scalar::from_int(f, static_cast<long>(rng.below(f.p)));
  static const long pool[] = {0, 1, -1, 2};
  return Scalar::from_int(f, pool[rng.below(4)]);
}

}  // namespace

VineyardModuleRep generate_annulus(const AnnulusOptions& opt) {
  if (opt.t_min < 0 || opt.t_max > 10 || opt.t_min >= opt.t_max)
    fail("IndexOutOfRange", "annulus window must be inside [0, 10]");

  Vineyard raw;
  for (long t = opt.t_min; t <= opt.t_max; ++t) raw.grid.times.push_back(Rat(t));
  Vine v1, v2;
  v1.id = 1;
  v2.id = 2;
  v1.lo = v2.lo = 0;
  v1.hi = v2.hi = raw.grid.size() - 1;
  for (long t = opt.t_min; t <= opt.t_max; ++t) {
    v1.births.push_back(Rat(14 - t));
    v2.births.push_back(Rat(t));
    if (t <= 3) {
      v1.deaths.push_back(Rat(15 + t));
      v2.deaths.push_back(Rat(21 - t));
    } else {
      v1.deaths.push_back(Rat(21 - t));
      v2.deaths.push_back(Rat(15 + t));
    }
  }
  raw.vines = {v1, v2};

  Vineyard refined = refine_grid(raw, raw.grid);
  Field f = Field::gf(2);
  VineyardModuleRep rep = trivial_module(refined, f);

  if (opt.twisted) {
    auto idx = refined.grid.index_of(Rat(3));
    if (!idx || *idx == 0)
      fail("IndexOutOfRange", "twisted annulus needs t=3 inside the window");
    std::size_t pair = *idx - 1;
    // alpha = beta = I + E(2->1; 1); over GF(2) the two are mutually inverse
    Matrix e = elementary(f, 2, 1, 0, Scalar::one(f));
    MorphismMatrix& al = rep.alpha[pair];
    MorphismMatrix& be = rep.beta[pair];
    al = truncate(e, al.src, al.dst, al.eps);
    be = truncate(e, be.src, be.dst, be.eps);
  }

  Report check = validate_module(rep);
  if (!check.ok()) fail("InternalError", "annulus generator output invalid:\n" + check.to_string());
  return rep;
}

namespace {

enum class BlockType { death_kink, birth_kink, death_cross, birth_cross, boundary };

struct Block {
  BlockType type;
  long start = 0;
  long width = 0;
  std::size_t lo_vine = 0;  // owner of the lower height (kinks/crosses)
  std::size_t hi_vine = 0;
  long center() const { return start + width / 2; }
};

struct Layout {
  std::vector<Rat> seed_times;
  // per vine position, values at the seed times
  std::vector<std::vector<Rat>> births;
  std::vector<std::vector<Rat>> deaths;
  std::vector<long> kink_centers;
  // boundary vine: id and supported seed-time range
  bool has_boundary = false;
  Rat boundary_from, boundary_to;
};

// Piecewise value of a height taking part in a block event.
Rat event_height(BlockType type, bool is_lower, long level_lo, long level_hi, long t, long c) {
  long dist = std::abs(t - c);
  long half = (level_hi - level_lo) / 2;
  switch (type) {
    case BlockType::death_kink:
    case BlockType::birth_kink: {
      long approach = std::max(0l, half - dist);
      return Rat(is_lower ? level_lo + approach : level_hi - approach);
    }
    case BlockType::death_cross:
    case BlockType::birth_cross: {
      long travel = std::min(std::max(t - (c - half), 0l), 2 * half);
      return Rat(is_lower ? level_lo + travel : level_hi - travel);
    }
    default:
      fail("InternalError", "boundary blocks carry no pair event");
  }
}

Layout build_layout(Rng& rng, int n_vines, int n_events, bool with_boundary, bool compact) {
  const std::size_t n = static_cast<std::size_t>(n_vines);
  Layout lay;
  lay.births.assign(n, {});
  lay.deaths.assign(n, {});

  // nested family at rest: births 8, 16, ..., deaths descending from 8(2n+1)
  std::vector<long> birth_level(n), death_level(n);
  for (std::size_t j = 0; j < n; ++j) {
    birth_level[j] = 8 * static_cast<long>(j + 1);
    death_level[j] = 8 * static_cast<long>(2 * n + 1 - j);
  }
  // rank -> vine owning that level, lowest first
  std::vector<std::size_t> birth_rank(n), death_rank(n);
  for (std::size_t j = 0; j < n; ++j) {
    birth_rank[j] = j;
    death_rank[n - 1 - j] = j;
  }

  std::vector<Block> blocks;
  long clock = 0;
  if (n_vines < 2) n_events = 0;
  for (int e = 0; e < n_events; ++e) {
    Block b;
    std::size_t pick = rng.below(4);
    b.type = static_cast<BlockType>(pick);
    b.start = clock;
    b.width = 8;
    std::size_t slot = n >= 2 ? rng.below(n - 1) : 0;
    const auto& rank = (b.type == BlockType::death_kink || b.type == BlockType::death_cross)
                           ? death_rank
                           : birth_rank;
    b.lo_vine = rank[slot];
    b.hi_vine = rank[slot + 1];
    clock += b.width;
    if (b.type == BlockType::death_kink || b.type == BlockType::birth_kink)
      lay.kink_centers.push_back(b.center());
    if (b.type == BlockType::death_cross) {
      std::swap(death_level[b.lo_vine], death_level[b.hi_vine]);
      std::swap(death_rank[slot], death_rank[slot + 1]);
    }
    if (b.type == BlockType::birth_cross) {
      std::swap(birth_level[b.lo_vine], birth_level[b.hi_vine]);
      std::swap(birth_rank[slot], birth_rank[slot + 1]);
    }
    blocks.push_back(b);
  }
  if (with_boundary) {
    Block b;
    b.type = BlockType::boundary;
    b.start = clock;
    b.width = compact ? 4 : 6;
    clock += b.width;
    blocks.push_back(b);
  }

  // seed times: block-local points, halved resolution for compact grids
  std::vector<long> ticks;
  if (blocks.empty()) {
    ticks = {0, 2, 4};
    clock = 4;
  } else {
    for (const Block& b : blocks) {
      long step = (compact && b.type != BlockType::boundary) ? 2 : 1;
      for (long t = b.start; t <= b.start + b.width; t += step) ticks.push_back(t);
    }
  }
  std::sort(ticks.begin(), ticks.end());
  ticks.erase(std::unique(ticks.begin(), ticks.end()), ticks.end());
  for (long t : ticks) lay.seed_times.push_back(Rat(t));

  // reset to initial levels and replay blocks while emitting values
  for (std::size_t j = 0; j < n; ++j) {
    birth_level[j] = 8 * static_cast<long>(j + 1);
    death_level[j] = 8 * static_cast<long>(2 * n + 1 - j);
  }
  std::vector<std::size_t> block_of_tick(ticks.size(), blocks.size());
  for (std::size_t bi = 0; bi < blocks.size(); ++bi)
    for (std::size_t ti = 0; ti < ticks.size(); ++ti)
      if (ticks[ti] >= blocks[bi].start && ticks[ti] <= blocks[bi].start + blocks[bi].width &&
          block_of_tick[ti] == blocks.size())
        block_of_tick[ti] = bi;

  for (std::size_t ti = 0; ti < ticks.size(); ++ti) {
    long t = ticks[ti];
    const Block* b = block_of_tick[ti] < blocks.size() ? &blocks[block_of_tick[ti]] : nullptr;
    // advance level state past finished cross blocks
    for (std::size_t j = 0; j < n; ++j) {
      Rat birth(birth_level[j]), death(death_level[j]);
      if (b && b->type != BlockType::boundary && (j == b->lo_vine || j == b->hi_vine)) {
        bool death_side = b->type == BlockType::death_kink || b->type == BlockType::death_cross;
        std::size_t lo = b->lo_vine, hi = b->hi_vine;
        long lv_lo = death_side ? std::min(death_level[lo], death_level[hi])
                                : std::min(birth_level[lo], birth_level[hi]);
        long lv_hi = death_side ? std::max(death_level[lo], death_level[hi])
                                : std::max(birth_level[lo], birth_level[hi]);
        bool is_lower = death_side ? death_level[j] == lv_lo : birth_level[j] == lv_lo;
        Rat moved = event_height(b->type, is_lower, lv_lo, lv_hi, t, b->center());
        if (death_side)
          death = moved;
        else
          birth = moved;
      }
      lay.births[j].push_back(birth);
      lay.deaths[j].push_back(death);
    }
    // cross blocks exchange the pair's levels once the block is over
    if (b && ti + 1 < ticks.size() && block_of_tick[ti + 1] != block_of_tick[ti]) {
      if (b->type == BlockType::death_cross)
        std::swap(death_level[b->lo_vine], death_level[b->hi_vine]);
      if (b->type == BlockType::birth_cross)
        std::swap(birth_level[b->lo_vine], birth_level[b->hi_vine]);
    }
    if (b && b->type == BlockType::boundary && !lay.has_boundary) {
      lay.has_boundary = true;
      lay.boundary_from = Rat(b->start + 1);
      lay.boundary_to = Rat(b->start + b->width - 1);
    }
  }
  return lay;
}

Vineyard layout_to_vineyard(const Layout& lay, int n_vines, int n_total_vines, bool compact) {
  Vineyard v;
  v.grid.times = lay.seed_times;
  for (int j = 0; j < n_vines; ++j) {
    Vine vn;
    vn.id = j + 1;
    vn.lo = 0;
    vn.hi = v.grid.size() - 1;
    vn.births = lay.births[static_cast<std::size_t>(j)];
    vn.deaths = lay.deaths[static_cast<std::size_t>(j)];
    v.vines.push_back(std::move(vn));
  }
  if (lay.has_boundary) {
    // short interior vine in the middle band, grown and shrunk one unit per step
    Vine vn;
    vn.id = n_total_vines;
    std::size_t lo = *v.grid.index_of(lay.boundary_from);
    std::size_t hi = *v.grid.index_of(lay.boundary_to);
    vn.lo = lo;
    vn.hi = hi;
    long base = 8 * static_cast<long>(n_vines) + 7;
    long span = static_cast<long>(hi - lo);
    for (long s = 0; s <= span; ++s) {
      long depth = std::min(s, span - s);
      vn.births.push_back(Rat(base - depth));
      vn.deaths.push_back(Rat(base + 1 + depth));
    }
    v.vines.push_back(std::move(vn));
    (void)compact;
  }
  return v;
}

}  // namespace

VineyardModuleRep generate_random(const RandomOptions& opt) {
  if (opt.n_vines < 0 || opt.n_vines > 6)
    fail("IndexOutOfRange", "random generator supports 0..6 vines");
  if (opt.n_events < 0 || opt.n_events > 8)
    fail("IndexOutOfRange", "random generator supports 0..8 events");

  for (int attempt = 0; attempt < 4; ++attempt) {
    Rng rng(opt.seed * 0x100000001b3ull + static_cast<std::uint64_t>(attempt));
    Layout lay = build_layout(rng, opt.n_vines, opt.n_events, opt.with_boundary_vine, opt.compact);
    int total = opt.n_vines + (lay.has_boundary ? 1 : 0);
    Vineyard raw = layout_to_vineyard(lay, opt.n_vines, total, opt.compact);
    Vineyard refined = refine_grid(raw, raw.grid);
    if (!validate_vineyard(refined).ok()) continue;

    VineyardModuleRep rep = trivial_module(refined, opt.field);

    // twists: admissible elementary pairs injected at pairs ending at kink times
    int injected = 0;
    for (long c : lay.kink_centers) {
      if (injected >= opt.twist_count) break;
      auto idx = refined.grid.index_of(Rat(c));
      if (!idx || *idx == 0) continue;
      auto kl = incompatibility(refined, *idx, Direction::backward);
      if (!kl) continue;
      std::size_t kp = *refined.position_of(kl->first);
      std::size_t lp = *refined.position_of(kl->second);
      Scalar mu = random_nonzero(rng, opt.field);
      std::size_t pair = *idx - 1;
      std::size_t nv = refined.vine_count();
      MorphismMatrix& al = rep.alpha[pair];
      MorphismMatrix& be = rep.beta[pair];
      auto common = al.src.support();
      auto dst_sup = al.dst.support();
      for (std::size_t s = 0; s < common.size(); ++s)
        common[s] = common[s] && dst_sup[s];
      Matrix pi = projection(opt.field, common);
      al = truncate(elementary(opt.field, nv, lp, kp, mu) * pi, al.src, al.dst, al.eps);
      be = truncate(elementary(opt.field, nv, lp, kp, -mu) * pi, be.src, be.dst, be.eps);
      ++injected;
    }

    if (opt.obfuscate) {
      for (std::size_t i = 0; i < refined.grid.size(); ++i) {
        Barcode bc = barcode_at(refined, i);
        Matrix t = Matrix::identity(opt.field, refined.vine_count());
        for (std::size_t p = 0; p < bc.size(); ++p)
          if (bc.present(p)) t.set(p, p, random_nonzero(rng, opt.field));
        for (std::size_t q = 0; q < bc.size(); ++q)
          for (std::size_t p = 0; p < bc.size(); ++p)
            if (q != p && bc.present(q) && bc.present(p) &&
                staircase_leq(bc.at(q), bc.at(p)) && rng.coin())
              t.set(q, p, random_value(rng, opt.field));
        rep = change_basis(rep, i, t);
      }
    }

    Report check = validate_module(rep);
    if (check.ok()) return rep;
  }
  fail("CannotSatisfyGenericity", "random generator could not produce a compliant module");
}

}  // namespace vinerep
