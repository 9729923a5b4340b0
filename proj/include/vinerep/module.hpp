#pragma once

#include <vector>

#include "vinerep/morphism.hpp"

namespace vinerep {

// Vine-and-matrix representation of a vineyard module: consecutive-pair
// interleaving matrices over a vineyard. alpha[m] is the matrix of the
// forward map t_m -> t_{m+1}, beta[m] of the backward map t_{m+1} -> t_m,
// both with eps = t_{m+1} - t_m. Matrices for non-adjacent pairs are defined
// by truncated composition and never stored.
struct VineyardModuleRep {
  Vineyard vy;
  Field field;
  std::vector<MorphismMatrix> alpha;
  std::vector<MorphismMatrix> beta;

  std::size_t pair_count() const { return alpha.size(); }
};

// Direct sum of the vine modules of v: every matrix is the truncated
// projection onto the common support of the pair.
VineyardModuleRep trivial_module(const Vineyard& v, const Field& f);

// Block-diagonal sum; requires equal grids and fields and disjoint vine ids.
VineyardModuleRep direct_sum(const VineyardModuleRep& a, const VineyardModuleRep& b);

// Empty report iff all representation invariants hold: shapes and barcodes
// match the vineyard, every matrix is admissible, and per pair
// beta.alpha and alpha.beta equal the truncated identities (2 eps shift).
Report validate_module(const VineyardModuleRep& m);

// Rebase the module at grid index i by basis transformation t: matrices with
// source at i are right-multiplied by t, matrices with target at i are
// left-multiplied by its inverse, then truncated. Represents an isomorphic
// module over the same vineyard.
VineyardModuleRep change_basis(const VineyardModuleRep& m, std::size_t i, const Matrix& t);

// Restriction to a block of vine ids; requires every matrix to be
// block-compatible with the set (throws NotBlockCompatible otherwise).
VineyardModuleRep restrict_to(const VineyardModuleRep& m, const std::vector<int>& vine_ids);

// Structural equality of grids, vineyards, fields and all matrices.
bool reps_equal(const VineyardModuleRep& a, const VineyardModuleRep& b);

}  // namespace vinerep
