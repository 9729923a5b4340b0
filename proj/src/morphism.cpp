#include "vinerep/morphism.hpp"

#include "vinerep/error.hpp"

namespace vinerep {

MorphismMatrix truncate(const Matrix& m, Barcode src, Barcode dst, Rat eps) {
  if (m.rows() != dst.size() || m.cols() != src.size())
    fail("ShapeMismatch", "matrix shape does not match the barcodes");
  if (eps < 0) fail("IndexOutOfRange", "negative shift");
  Matrix out(m.field(), m.rows(), m.cols());
  for (std::size_t j = 0; j < m.rows(); ++j) {
    for (std::size_t i = 0; i < m.cols(); ++i) {
      if (m.at(j, i).is_zero()) continue;
      if (!src.present(i) || !dst.present(j)) continue;
      Rat shifted = Rat(src.at(i).birth + eps);
      if (dst.at(j).birth <= shifted && shifted < dst.at(j).death)
        out.set(j, i, m.at(j, i));
    }
  }
  return MorphismMatrix{std::move(out), std::move(eps), std::move(src), std::move(dst)};
}

MorphismMatrix truncate(const MorphismMatrix& m) {
  return truncate(m.mat, m.src, m.dst, m.eps);
}

Report validate_morphism(const MorphismMatrix& m) {
  Report rep;
  if (m.eps < 0) rep.add("NegativeShift", "eps", "shift must be nonnegative");
  if (m.mat.rows() != m.dst.size() || m.mat.cols() != m.src.size()) {
    rep.add("ShapeMismatch", "matrix", "shape does not match the barcodes");
    return rep;
  }
  for (std::size_t j = 0; j < m.mat.rows(); ++j) {
    for (std::size_t i = 0; i < m.mat.cols(); ++i) {
      if (m.mat.at(j, i).is_zero()) continue;
      std::string where = "entry (" + std::to_string(j) + "," + std::to_string(i) + ")";
      if (!m.src.present(i)) {
        rep.add("AbsentSourceColumn", where, "nonzero column for an absent source vine");
        continue;
      }
      if (!m.dst.present(j)) {
        rep.add("AbsentTargetRow", where, "nonzero row for an absent target vine");
        continue;
      }
      Rat b = Rat(m.src.at(i).birth + m.eps);
      Rat d = Rat(m.src.at(i).death + m.eps);
      if (!(m.dst.at(j).birth <= b && b < m.dst.at(j).death && m.dst.at(j).death <= d))
        rep.add("DeathOrBirthViolation", where,
                "entry outside the admissible window " + m.dst.at(j).to_string() + " vs " +
                    m.src.at(i).to_string() + " shifted by " + rat_to_string(m.eps));
    }
  }
  return rep;
}

MorphismMatrix compose(const MorphismMatrix& m2, const MorphismMatrix& m1) {
  if (!(m1.dst == m2.src)) fail("ShapeMismatch", "composition barcodes do not match");
  return truncate(m2.mat * m1.mat, m1.src, m2.dst, Rat(m1.eps + m2.eps));
}

MorphismMatrix truncated_identity(const Field& f, const Barcode& bc, const Rat& shift) {
  return truncate(Matrix::identity(f, bc.size()), bc, bc, shift);
}

}  // namespace vinerep
