#pragma once

#include "graphk/numeric.hpp"

#include <vector>

namespace graphk {

// Dense exact integer matrix.  Empty shapes (0 rows or 0 columns) are
// first-class values: a graph with no regular vertices produces an
// |E0| x 0 matrix whose cokernel is all of Z^|E0|.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  IntMatrix(int rows, int cols, std::vector<Int> entries);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  bool operator==(const IntMatrix& o) const = default;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  // row i -= q * row j   /   col i -= q * col j
  void row_axpy(int i, int j, const Int& q);
  void col_axpy(int i, int j, const Int& q);
  void negate_row(int i);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> a_;
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> mul(const IntMatrix& a, const std::vector<Int>& x);

// Smith normal form u * m * v = diag(d).
//
// d has length min(rows, cols); entries are nonnegative, each divides the
// next, and once a zero appears all later entries are zero.  u and v are
// unimodular; their determinant signs are tracked exactly so that
// det(m) = det_u * det_v * prod(d) for square m.
struct SnfResult {
  std::vector<Int> d;
  IntMatrix u;
  IntMatrix v;
  int rank = 0;
  int det_u = 1;  // +1 or -1
  int det_v = 1;  // +1 or -1
};

SnfResult snf(const IntMatrix& m);

// Exact determinant; input_error unless square.
Int det(const IntMatrix& m);

int rank(const IntMatrix& m);

}  // namespace graphk
