#pragma once

#include <cstdint>
#include <vector>

#include "thetalab/error.hpp"

namespace thetalab::lattice {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {}
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  std::int64_t operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Determinant by fraction-free (Bareiss) elimination.
std::int64_t determinant(const IntMatrix& m);

/// Elementary divisors of a square integer matrix: the nonnegative diagonal
/// of its Smith normal form, each dividing the next (zeros last).
std::vector<std::int64_t> smith_diagonal(IntMatrix m);

/// Basis (as columns) of the lattice generated by the columns of `gens`,
/// which must have full row rank. Lower-triangular column Hermite form.
IntMatrix column_hermite_basis(IntMatrix gens);

}  // namespace thetalab::lattice
