#pragma once

#include <optional>
#include <vector>

#include "vinerep/module.hpp"

namespace vinerep {

// One residual scalar left behind by a simplification pass at an
// incompatible critical time: the (l,k) entry of the adjacent matrix,
// with (k,l) the incompatibility pair (vine ids).
struct ResidualEntry {
  Rat time;
  std::size_t grid_index = 0;
  int k = -1;
  int l = -1;
  Scalar value;

  bool operator==(const ResidualEntry&) const = default;
};

struct PassResult {
  VineyardModuleRep rep;
  std::vector<Matrix> transforms;  // per grid index, accumulated rebasings
  std::vector<ResidualEntry> residuals;  // ascending in time
};

// Post-pipeline representation plus the lambda vector (one exact scalar per
// backwards-incompatible critical time) and the accumulated per-index basis
// transformations conjugating the original module to `rep`.
struct SimplifiedModule {
  VineyardModuleRep rep;
  std::vector<ResidualEntry> lambda;
  std::vector<ResidualEntry> forward_residuals;
  std::vector<Matrix> transforms;
};

// Forward pass: absorbs each pair's alpha matrix into the basis at the upper
// index; at forwards-incompatible times the unabsorbable elementary residual
// E(l->k; lambda_f) stays in the pair's matrices and is recorded.
PassResult forward_simplify(const VineyardModuleRep& m);

// Mirror pass processing pairs from the top, absorbing beta matrices into
// the basis at the lower index, recording residuals at backwards-incompatible
// times (one entry per such time, zero when nothing is stuck).
PassResult backward_simplify(const VineyardModuleRep& m);

// Forward then backward; asserts the conjugation identity against the input
// and the residual shape of the result.
SimplifiedModule simplify(const VineyardModuleRep& m);

// Residual values in increasing time order of backwards-incompatible times.
std::vector<Scalar> lambda_vector(const SimplifiedModule& s);

struct TrivialityResult {
  bool trivial = false;
  // When trivial: per-index transforms conjugating the original module to
  // trivial_module(vineyard), checkable by reps_equal.
  std::optional<std::vector<Matrix>> witness;
};

// Trivial (isomorphic to the direct sum of vine modules) iff every lambda
// entry is zero.
TrivialityResult is_trivial(const SimplifiedModule& s);

// Finest partition of vine ids such that every matrix is block-diagonal
// w.r.t. it (union-find over nonzero off-diagonal entries).
std::vector<std::vector<int>> block_partition(const VineyardModuleRep& m);

// Independent triviality oracle: exhaustive search over families of valid
// basis transformations (one per grid index) conjugating m to the trivial
// module. Requires a prime field, at most 3 vines and at most 10 grid points.
bool brute_force_trivial(const VineyardModuleRep& m);

}  // namespace vinerep
