// Dense exact linear algebra over a FieldElem field: row reduction, rank,
// kernel bases. Used by homology dimension counts and Hilbert functions.
#pragma once

#include <utility>
#include <vector>

#include "depthlab/field.hpp"

namespace depthlab {

class DenseMatrix {
 public:
  int rows = 0, cols = 0;
  std::vector<FieldElem> a;  // row-major

  DenseMatrix() = default;
  DenseMatrix(int r, int c, const Field& f) : rows(r), cols(c), a(size_t(r) * c, fe::zero(f)) {}

  FieldElem& at(int r, int c) { return a[size_t(r) * cols + c]; }
  const FieldElem& at(int r, int c) const { return a[size_t(r) * cols + c]; }

  DenseMatrix transposed() const {
    DenseMatrix t;
    t.rows = cols;
    t.cols = rows;
    t.a = a;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.a[size_t(j) * rows + i] = at(i, j);
    return t;
  }
};

struct RankKernel {
  int rank = 0;
  // Kernel basis vectors (length = cols), in reduced echelon form: one vector
  // per non-pivot column with a 1 in that column.
  std::vector<std::vector<FieldElem>> kernel;
};

// In-place reduced row echelon form; returns pivot column indices.
inline std::vector<int> rref(DenseMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pr = -1;
    for (int i = r; i < m.rows; ++i)
      if (!m.at(i, c).isZero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
    FieldElem piv = fe::inv(m.at(r, c));
    for (int j = c; j < m.cols; ++j) m.at(r, j) = fe::mul(m.at(r, j), piv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c).isZero()) continue;
      FieldElem f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) = fe::sub(m.at(i, j), fe::mul(f, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int rankOf(DenseMatrix m) { return int(rref(m).size()); }

inline RankKernel rankAndKernel(DenseMatrix m, const Field& f) {
  RankKernel out;
  if (m.cols == 0) return out;
  auto pivots = rref(m);
  out.rank = int(pivots.size());
  std::vector<int> pivotOfCol(m.cols, -1);
  for (int i = 0; i < out.rank; ++i) pivotOfCol[pivots[i]] = i;
  for (int c = 0; c < m.cols; ++c) {
    if (pivotOfCol[c] >= 0) continue;
    std::vector<FieldElem> v(m.cols, fe::zero(f));
    v[c] = fe::one(f);
    for (int pc = 0; pc < m.cols; ++pc) {
      int pr = pivotOfCol[pc];
      if (pr >= 0) v[pc] = fe::neg(m.at(pr, c));
    }
    out.kernel.push_back(std::move(v));
  }
  return out;
}

// y = M x
inline std::vector<FieldElem> matVec(const DenseMatrix& m, const std::vector<FieldElem>& x,
                                     const Field& f) {
  std::vector<FieldElem> y(m.rows, fe::zero(f));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!m.at(i, j).isZero() && !x[j].isZero())
        y[i] = fe::add(y[i], fe::mul(m.at(i, j), x[j]));
  return y;
}

}  // namespace depthlab
