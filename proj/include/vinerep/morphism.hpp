#pragma once

#include "vinerep/matrix.hpp"
#include "vinerep/rational.hpp"
#include "vinerep/report.hpp"
#include "vinerep/vineyard.hpp"

namespace vinerep {

// Matrix of an eps-morphism relative to extended bases. Rows index the
// target barcode, columns the source barcode. Entry (j,i) may be nonzero
// only when birth(dst_j) <= birth(src_i)+eps < death(dst_j) <= death(src_i)+eps.
struct MorphismMatrix {
  Matrix mat;
  Rat eps;
  Barcode src;
  Barcode dst;

  bool operator==(const MorphismMatrix&) const = default;
};

// Zeroes every entry outside the extended-basis support or failing the birth
// window birth(dst_j) <= birth(src_i)+eps < death(dst_j); copies the rest.
// The death condition is a validity assertion, not a truncation rule.
MorphismMatrix truncate(const Matrix& m, Barcode src, Barcode dst, Rat eps);
MorphismMatrix truncate(const MorphismMatrix& m);

// Empty report iff all MorphismMatrix invariants hold, including the death
// condition death(dst_j) <= death(src_i)+eps on nonzero entries.
Report validate_morphism(const MorphismMatrix& m);

// Truncated product: the matrix of the composite m2 after m1, with shift
// eps1 + eps2. Requires m1.dst == m2.src.
MorphismMatrix compose(const MorphismMatrix& m2, const MorphismMatrix& m1);

// The matrix of the 2*eps transition map phi relative to one barcode:
// truncate(identity, bc, bc, shift).
MorphismMatrix truncated_identity(const Field& f, const Barcode& bc, const Rat& shift);

}  // namespace vinerep
