#include "vinerep/matrix.hpp"

#include <sstream>

#include "vinerep/error.hpp"

namespace vinerep {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) fail("IndexOutOfRange", "matrix entry out of range");
  return entries_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, Scalar v) {
  if (r >= rows_ || c >= cols_) fail("IndexOutOfRange", "matrix entry out of range");
  if (!(v.field() == field_)) fail("FieldMismatch", "entry from a different field");
  entries_[r * cols_ + c] = std::move(v);
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) fail("ShapeMismatch", "matrix product shape mismatch");
  if (!(field_ == o.field_)) fail("FieldMismatch", "matrix product field mismatch");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (b.is_zero()) continue;
        out.set(i, j, out.at(i, j) + a * b);
      }
    }
  }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_)) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] != o.entries_[i]) return false;
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : " ") << "[";
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c).to_string();
    os << "]" << (r + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

Matrix elementary(const Field& f, std::size_t n, std::size_t l, std::size_t k,
                  const Scalar& mu) {
  if (l >= n || k >= n || l == k) fail("IndexOutOfRange", "elementary matrix needs l != k in range");
  Matrix m = Matrix::identity(f, n);
  m.set(l, k, mu);
  return m;
}

Matrix projection(const Field& f, const std::vector<bool>& support) {
  Matrix m(f, support.size(), support.size());
  for (std::size_t i = 0; i < support.size(); ++i)
    if (support[i]) m.set(i, i, Scalar::one(f));
  return m;
}

Matrix tilde(const Matrix& a, const std::vector<bool>& support) {
  if (!a.is_square() || a.rows() != support.size())
    fail("ShapeMismatch", "tilde needs a square matrix matching the support size");
  Matrix out = a;
  for (std::size_t i = 0; i < support.size(); ++i)
    if (!support[i]) out.set(i, i, Scalar::one(a.field()));
  return out;
}

bool is_basis_transformation(const Matrix& t, const Barcode& at) {
  if (!t.is_square() || t.rows() != at.size()) return false;
  const std::size_t n = at.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (at.present(i)) {
      if (t.at(i, i).is_zero()) return false;
    } else {
      if (!t.at(i, i).is_one()) return false;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (j == i || t.at(j, i).is_zero()) continue;
      if (!at.present(j) || !at.present(i)) return false;
      if (!staircase_leq(at.at(j), at.at(i))) return false;
    }
  }
  return true;
}

Matrix inverse_on_support(const Matrix& t, const std::vector<bool>& support) {
  if (!t.is_square() || t.rows() != support.size())
    fail("ShapeMismatch", "inverse needs a square matrix matching the support size");
  const Field& f = t.field();
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < support.size(); ++i)
    if (support[i]) idx.push_back(i);
  const std::size_t n = idx.size();

  // Gauss-Jordan on the supported block, tracking the inverse alongside.
  Matrix block(f, n, n), inv = Matrix::identity(f, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) block.set(r, c, t.at(idx[r], idx[c]));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && block.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) fail("SingularOnSupport", "supported block is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        Scalar tmp = block.at(pivot, c);
        block.set(pivot, c, block.at(col, c));
        block.set(col, c, tmp);
        tmp = inv.at(pivot, c);
        inv.set(pivot, c, inv.at(col, c));
        inv.set(col, c, tmp);
      }
    }
    Scalar d = block.at(col, col).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      block.set(col, c, block.at(col, c) * d);
      inv.set(col, c, inv.at(col, c) * d);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || block.at(r, col).is_zero()) continue;
      Scalar factor = block.at(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        block.set(r, c, block.at(r, c) - factor * block.at(col, c));
        inv.set(r, c, inv.at(r, c) - factor * inv.at(col, c));
      }
    }
  }

  Matrix out = Matrix::identity(f, support.size());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.set(idx[r], idx[c], inv.at(r, c));
  return out;
}

}  // namespace vinerep
