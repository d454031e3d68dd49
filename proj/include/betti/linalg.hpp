#pragma once

// Exact row-echelon linear algebra over a field scalar.  Vectors are rows;
// a subspace is the row space of its unique reduced row-echelon basis, so
// equal subspaces always compare bit-identical.

#include <Eigen/Core>

#include <vector>

#include "betti/field.hpp"

namespace betti {

template <class K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class K>
using Row = Eigen::Matrix<K, 1, Eigen::Dynamic>;

template <class K>
Mat<K> zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  Mat<K> m(rows, cols);
  m.setConstant(K(0));
  return m;
}

template <class K>
Row<K> zero_row(Eigen::Index cols) {
  Row<K> r(cols);
  r.setConstant(K(0));
  return r;
}

// Reduced row echelon form: pivots 1 and strictly increasing, pivot columns
// cleared elsewhere, zero rows dropped.  Returns the pivot column of each
// surviving row.
template <class K>
std::vector<int> rref_in_place(Mat<K>& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index sel = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (!scalar_is_zero(m(i, c))) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != r) m.row(sel).swap(m.row(r));
    K inv = K(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || scalar_is_zero(m(i, c))) continue;
      K f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  m.conservativeResize(r, cols);
  return pivots;
}

template <class K>
Mat<K> rref(Mat<K> m) {
  rref_in_place(m);
  return m;
}

template <class K>
int rank_of(Mat<K> m) {
  return static_cast<int>(rref_in_place(m).size());
}

template <class K>
std::vector<int> pivot_columns(const Mat<K>& rref_basis) {
  std::vector<int> piv;
  for (Eigen::Index i = 0; i < rref_basis.rows(); ++i) {
    for (Eigen::Index c = 0; c < rref_basis.cols(); ++c) {
      if (!scalar_is_zero(rref_basis(i, c))) {
        piv.push_back(static_cast<int>(c));
        break;
      }
    }
  }
  return piv;
}

// Residual of v after elimination against an RREF basis; zero iff v lies in
// the row space.
template <class K>
Row<K> reduce_against(Row<K> v, const Mat<K>& rref_basis,
                      const std::vector<int>& pivots) {
  for (size_t i = 0; i < pivots.size(); ++i) {
    K f = v(pivots[i]);
    if (scalar_is_zero(f)) continue;
    v -= f * rref_basis.row(static_cast<Eigen::Index>(i));
  }
  return v;
}

template <class K>
Row<K> reduce_against(const Row<K>& v, const Mat<K>& rref_basis) {
  return reduce_against(v, rref_basis, pivot_columns(rref_basis));
}

template <class K>
bool in_rowspace(const Row<K>& v, const Mat<K>& rref_basis) {
  Row<K> r = reduce_against(v, rref_basis);
  for (Eigen::Index j = 0; j < r.cols(); ++j)
    if (!scalar_is_zero(r(j))) return false;
  return true;
}

template <class K>
bool rowspace_contains(const Mat<K>& rref_outer, const Mat<K>& inner) {
  for (Eigen::Index i = 0; i < inner.rows(); ++i) {
    Row<K> row = inner.row(i);
    if (!in_rowspace(row, rref_outer)) return false;
  }
  return true;
}

// Canonical basis of { x : A x^T = 0 }, rows of the result.
template <class K>
Mat<K> kernel_of(Mat<K> a) {
  const Eigen::Index n = a.cols();
  std::vector<int> piv = rref_in_place(a);
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int c : piv) is_pivot[static_cast<size_t>(c)] = true;
  const Eigen::Index k = n - static_cast<Eigen::Index>(piv.size());
  Mat<K> ker = zero_matrix<K>(k, n);
  Eigen::Index row = 0;
  for (Eigen::Index free_c = 0; free_c < n; ++free_c) {
    if (is_pivot[static_cast<size_t>(free_c)]) continue;
    ker(row, free_c) = K(1);
    for (size_t i = 0; i < piv.size(); ++i)
      ker(row, piv[i]) = -a(static_cast<Eigen::Index>(i), free_c);
    ++row;
  }
  rref_in_place(ker);
  return ker;
}

template <class K>
Mat<K> stack_rows(const Mat<K>& a, const Mat<K>& b) {
  internal_check(a.cols() == b.cols() || a.rows() == 0 || b.rows() == 0,
                 "stack_rows: column mismatch");
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  Mat<K> m(a.rows() + b.rows(), a.cols());
  m.topRows(a.rows()) = a;
  m.bottomRows(b.rows()) = b;
  return m;
}

// Row space of the sum of two row spaces.
template <class K>
Mat<K> sum_rowspaces(const Mat<K>& a, const Mat<K>& b) {
  return rref<K>(stack_rows(a, b));
}

// Row space intersection: solve u A = v B by a kernel computation in the
// coefficients (u, v).
template <class K>
Mat<K> intersect_rowspaces(const Mat<K>& a, const Mat<K>& b) {
  const Eigen::Index n = a.cols() ? a.cols() : b.cols();
  if (a.rows() == 0 || b.rows() == 0) return zero_matrix<K>(0, n);
  internal_check(a.cols() == b.cols(), "intersect_rowspaces: ambient mismatch");
  Mat<K> sys = zero_matrix<K>(n, a.rows() + b.rows());
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) sys(j, i) = a(i, j);
    for (Eigen::Index i = 0; i < b.rows(); ++i)
      sys(j, a.rows() + i) = -b(i, j);
  }
  Mat<K> ker = kernel_of<K>(sys);
  Mat<K> inter = zero_matrix<K>(ker.rows(), n);
  for (Eigen::Index i = 0; i < ker.rows(); ++i)
    inter.row(i) = ker.block(i, 0, 1, a.rows()) * a;
  rref_in_place(inter);
  return inter;
}

// Unique coordinates of v in the row space of `basis` (not necessarily RREF);
// throws if v is outside or the representation is not unique.
template <class K>
Row<K> coordinates_in(const Row<K>& v, const Mat<K>& basis) {
  // Solve c * basis = v by elimination on the transposed augmented system.
  Mat<K> aug = zero_matrix<K>(basis.cols(), basis.rows() + 1);
  for (Eigen::Index j = 0; j < basis.cols(); ++j) {
    for (Eigen::Index i = 0; i < basis.rows(); ++i) aug(j, i) = basis(i, j);
    aug(j, basis.rows()) = v(j);
  }
  std::vector<int> piv = rref_in_place(aug);
  Row<K> coords = zero_row<K>(basis.rows());
  for (size_t i = 0; i < piv.size(); ++i) {
    internal_check(piv[i] < basis.rows(),
                   "coordinates_in: vector outside the span");
    coords(piv[i]) = aug(static_cast<Eigen::Index>(i), basis.rows());
  }
  internal_check(static_cast<Eigen::Index>(piv.size()) == basis.rows(),
                 "coordinates_in: dependent basis");
  return coords;
}

}  // namespace betti
