#pragma once

#include <cstdint>

#include "vinerep/module.hpp"

namespace vinerep {

// The two-vine annulus example over GF(2): vine 1 follows [14-t, 15+t) until
// the death touch at t=3 and [14-t, 21-t) after; vine 2 is the complementary
// pairing. Critical times are t=3 (deaths touch) and t=7 (births cross).
// When twisted, the pair ending at t=3 carries alpha = beta = I + E(2->1; 1),
// which is exactly the module that is not isomorphic to a direct sum of vine
// modules. The time window [t_min, t_max] defaults to the full [0, 10];
// narrower windows give coarser grids (the window must contain a critical
// time to stay interesting).
struct AnnulusOptions {
  bool twisted = false;
  long t_min = 0;
  long t_max = 10;
};

VineyardModuleRep generate_annulus(const AnnulusOptions& opt);
inline VineyardModuleRep generate_annulus(bool twisted) {
  return generate_annulus(AnnulusOptions{twisted});
}

// Deterministic random module generator. Builds a compliant generic vineyard
// from a nested family of vines with seeded events (death/birth kinks that
// touch, transversal crossings, optional interior-support vines), starts from
// the trivial module, injects admissible elementary twists at pairs ending at
// kink times, and optionally applies random valid rebasings at every index.
struct RandomOptions {
  std::uint64_t seed = 0;
  int n_vines = 2;
  int n_events = 1;     // coincidence events among consecutive vine pairs
  Field field = Field::gf(2);
  bool obfuscate = false;
  int twist_count = 0;  // elementary twists injected at kink pairs
  bool with_boundary_vine = false;  // add one interior-support vine
  bool compact = false;  // tight grids (oracle-friendly sizes)
};

VineyardModuleRep generate_random(const RandomOptions& opt);

}  // namespace vinerep
