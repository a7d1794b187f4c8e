#include "graphk/intmatrix.hpp"

#include "graphk/errors.hpp"

#include <utility>

namespace graphk {

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != size_t(rows) * cols) {
    throw input_error("IntMatrix: entry count does not match shape");
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::row_axpy(int i, int j, const Int& q) {
  if (q == 0) return;
  for (int c = 0; c < cols_; ++c) at(i, c) -= q * at(j, c);
}

void IntMatrix::col_axpy(int i, int j, const Int& q) {
  if (q == 0) return;
  for (int r = 0; r < rows_; ++r) at(r, i) -= q * at(r, j);
}

void IntMatrix::negate_row(int i) {
  for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw input_error("mul: shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
    }
  }
  return out;
}

std::vector<Int> mul(const IntMatrix& a, const std::vector<Int>& x) {
  if (int(x.size()) != a.cols()) throw input_error("mul: vector length mismatch");
  std::vector<Int> out(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    Int s = 0;
    for (int j = 0; j < a.cols(); ++j) s += a.at(i, j) * x[j];
    out[i] = s;
  }
  return out;
}

namespace {

// Smallest-absolute-value nonzero entry of d[t.., t..]; false when the
// submatrix is zero.  Small pivots keep intermediate entry growth down.
bool find_pivot(const IntMatrix& d, int t, int* pr, int* pc) {
  bool found = false;
  Int best = 0;
  for (int i = t; i < d.rows(); ++i) {
    for (int j = t; j < d.cols(); ++j) {
      const Int& e = d.at(i, j);
      if (e == 0) continue;
      Int a = abs_int(e);
      if (!found || a < best) {
        found = true;
        best = a;
        *pr = i;
        *pc = j;
      }
    }
  }
  return found;
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
  SnfResult res;
  res.u = IntMatrix::identity(m.rows());
  res.v = IntMatrix::identity(m.cols());
  IntMatrix d = m;

  const int n = std::min(m.rows(), m.cols());
  int t = 0;
  for (; t < n; ++t) {
    int pr = 0, pc = 0;
    if (!find_pivot(d, t, &pr, &pc)) break;
    if (pr != t) {
      d.swap_rows(pr, t);
      res.u.swap_rows(pr, t);
      res.det_u = -res.det_u;
    }
    if (pc != t) {
      d.swap_cols(pc, t);
      res.v.swap_cols(pc, t);
      res.det_v = -res.det_v;
    }

    for (;;) {
      bool dirty = false;
      for (int i = t + 1; i < d.rows(); ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);
        d.row_axpy(i, t, q);
        res.u.row_axpy(i, t, q);
        if (d.at(i, t) != 0) dirty = true;
      }
      for (int j = t + 1; j < d.cols(); ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        d.col_axpy(j, t, q);
        res.v.col_axpy(j, t, q);
        if (d.at(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // a remainder beat the pivot; promote the new minimum and repeat
        int rr = 0, cc = 0;
        find_pivot(d, t, &rr, &cc);
        if (rr != t) {
          d.swap_rows(rr, t);
          res.u.swap_rows(rr, t);
          res.det_u = -res.det_u;
        }
        if (cc != t) {
          d.swap_cols(cc, t);
          res.v.swap_cols(cc, t);
          res.det_v = -res.det_v;
        }
        continue;
      }
      // cross cleared; enforce that the pivot divides the rest of the block
      bool fixed = true;
      for (int i = t + 1; i < d.rows() && fixed; ++i) {
        for (int j = t + 1; j < d.cols() && fixed; ++j) {
          if (d.at(i, j) % d.at(t, t) != 0) {
            d.row_axpy(t, i, Int(-1));  // row t += row i
            res.u.row_axpy(t, i, Int(-1));
            fixed = false;
          }
        }
      }
      if (fixed) break;
    }

    if (d.at(t, t) < 0) {
      d.negate_row(t);
      res.u.negate_row(t);
      res.det_u = -res.det_u;
    }
  }

  res.rank = t;
  res.d.resize(n);
  for (int i = 0; i < n; ++i) res.d[i] = d.at(i, i);
  return res;
}

Int det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw input_error("det: matrix is not square");
  SnfResult s = snf(m);
  Int prod = 1;
  for (const Int& e : s.d) prod *= e;
  return Int(s.det_u) * Int(s.det_v) * prod;
}

int rank(const IntMatrix& m) { return snf(m).rank; }

}  // namespace graphk
