#include "thetalab/lattice/smith.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace thetalab::lattice {

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row a -= q * row b
void axpy_row(IntMatrix& m, int a, int b, std::int64_t q) {
  for (int c = 0; c < m.cols(); ++c) m(a, c) -= q * m(b, c);
}

void axpy_col(IntMatrix& m, int a, int b, std::int64_t q) {
  for (int r = 0; r < m.rows(); ++r) m(r, a) -= q * m(r, b);
}

// Floor division for signed integers.
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix p(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k)
      for (int j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
  return p;
}

std::int64_t determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of non-square matrix");
  IntMatrix m = input;
  const int n = m.rows();
  std::int64_t sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(m, k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<std::int64_t> smith_diagonal(IntMatrix m) {
  const int rows = m.rows(), cols = m.cols();
  const int n = std::min(rows, cols);
  for (int t = 0; t < n; ++t) {
    for (;;) {
      // Pivot: smallest nonzero |entry| in the trailing block.
      int pr = -1, pc = -1;
      for (int r = t; r < rows; ++r)
        for (int c = t; c < cols; ++c)
          if (m(r, c) != 0 && (pr < 0 || std::llabs(m(r, c)) < std::llabs(m(pr, pc)))) {
            pr = r;
            pc = c;
          }
      if (pr < 0) goto done;  // trailing block is zero
      swap_rows(m, t, pr);
      swap_cols(m, t, pc);

      bool clean = true;
      for (int r = t + 1; r < rows; ++r) {
        axpy_row(m, r, t, floor_div(m(r, t), m(t, t)));
        if (m(r, t) != 0) clean = false;
      }
      for (int c = t + 1; c < cols; ++c) {
        axpy_col(m, c, t, floor_div(m(t, c), m(t, t)));
        if (m(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the whole trailing block.
      int bad_row = -1;
      for (int r = t + 1; r < rows && bad_row < 0; ++r)
        for (int c = t + 1; c < cols; ++c)
          if (m(r, c) % m(t, t) != 0) {
            bad_row = r;
            break;
          }
      if (bad_row < 0) break;
      axpy_row(m, t, bad_row, -1);  // row t += row bad_row
    }
  }
done:
  std::vector<std::int64_t> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = std::llabs(m(i, i));
  return diag;
}

IntMatrix column_hermite_basis(IntMatrix g) {
  const int rows = g.rows(), cols = g.cols();
  if (cols < rows) throw std::invalid_argument("too few generators for a full-rank lattice");
  for (int r = 0; r < rows; ++r) {
    // Euclid on row r across columns r..cols-1 until only column r is nonzero.
    for (;;) {
      int pc = -1;
      for (int c = r; c < cols; ++c)
        if (g(r, c) != 0 && (pc < 0 || std::llabs(g(r, c)) < std::llabs(g(r, pc)))) pc = c;
      if (pc < 0) throw std::invalid_argument("generators do not span a full-rank lattice");
      swap_cols(g, r, pc);
      bool done = true;
      for (int c = r + 1; c < cols; ++c) {
        if (g(r, c) == 0) continue;
        axpy_col(g, c, r, floor_div(g(r, c), g(r, r)));
        if (g(r, c) != 0) done = false;
      }
      if (done) break;
    }
    if (g(r, r) < 0)
      for (int i = 0; i < rows; ++i) g(i, r) = -g(i, r);
    // Reduce the entries left of the diagonal into [0, g(r, r)).
    for (int c = 0; c < r; ++c) axpy_col(g, c, r, floor_div(g(r, c), g(r, r)));
  }
  IntMatrix basis(rows, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < rows; ++c) basis(r, c) = g(r, c);
  return basis;
}

}  // namespace thetalab::lattice
