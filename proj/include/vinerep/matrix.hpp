#pragma once

#include <cstddef>
#include <vector>

#include "vinerep/field.hpp"
#include "vinerep/vineyard.hpp"

namespace vinerep {

// Dense matrix of exact field elements. Vine counts are small; sparse
// storage is a non-goal.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, Scalar v);

  Matrix operator*(const Matrix& o) const;  // throws ShapeMismatch
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Field field_ = Field::rationals();
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

// Elementary matrix E(l->k; mu) = identity + mu at (row l, column k), so that
// A * E(l->k; mu) adds mu times column l of A to column k.
// E(l->k; mu) * E(l->k; -mu) = identity.
Matrix elementary(const Field& f, std::size_t n, std::size_t l, std::size_t k,
                  const Scalar& mu);

// Diagonal projection: 1 on the supported coordinates, 0 elsewhere.
Matrix projection(const Field& f, const std::vector<bool>& support);

// Copy of `a` with the diagonal set to 1 at every unsupported index.
// On fully supported input tilde(a) == a.
Matrix tilde(const Matrix& a, const std::vector<bool>& support);

// True iff `t` is a valid (extended) basis transformation at the barcode:
// nonzero diagonal on supported slots, identity rows/columns on unsupported
// slots, and every off-diagonal entry (j,i) sits at a staircase-ordered
// position interval_j <= interval_i.
bool is_basis_transformation(const Matrix& t, const Barcode& at);

// Exact inverse of the supported block (triangular under any linear
// extension of the staircase order); identity on unsupported slots.
// Throws SingularOnSupport when the block is not invertible.
Matrix inverse_on_support(const Matrix& t, const std::vector<bool>& support);

}  // namespace vinerep
