#pragma once

// Degreewise subspaces V of R_d = k[x,y]_d with canonical RREF bases, the
// R_1-multiplication and division operators, the tau invariant, and
// contraction-pairing perps into the dual space.

#include <vector>

#include "betti/forms.hpp"

namespace betti {

template <class K>
struct GradedSubspace {
  int degree{0};
  Mat<K> basis;  // RREF, rows span the subspace, dim x (degree+1)

  GradedSubspace() : basis(zero_matrix<K>(0, 1)) {}
  explicit GradedSubspace(int d) : degree(d), basis(zero_matrix<K>(0, d + 1)) {}
  GradedSubspace(int d, Mat<K> b) : degree(d), basis(std::move(b)) {
    internal_check(basis.cols() == degree + 1, "GradedSubspace: ambient size");
    rref_in_place(basis);
  }

  int dim() const { return static_cast<int>(basis.rows()); }
  int ambient_dim() const { return degree + 1; }
  bool is_full() const { return dim() == ambient_dim(); }
  bool contains(const BiForm<K>& f) const {
    internal_check(f.degree == degree, "membership across degrees");
    Row<K> row = f.coeffs;
    return in_rowspace(row, basis);
  }
  bool operator==(const GradedSubspace& o) const {
    if (degree != o.degree || dim() != o.dim()) return false;
    for (Eigen::Index i = 0; i < basis.rows(); ++i)
      for (Eigen::Index j = 0; j < basis.cols(); ++j)
        if (!(basis(i, j) == o.basis(i, j))) return false;
    return true;
  }
};

// The full space R_d.
template <class K>
GradedSubspace<K> full_space(int d, const Field<K>& field) {
  Mat<K> m = zero_matrix<K>(d + 1, d + 1);
  for (int i = 0; i <= d; ++i) m(i, i) = field.make(1);
  return GradedSubspace<K>(d, std::move(m));
}

template <class K>
GradedSubspace<K> rref_basis(const std::vector<BiForm<K>>& vectors, int degree) {
  Mat<K> m = zero_matrix<K>(static_cast<Eigen::Index>(vectors.size()), degree + 1);
  for (size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].degree != degree)
      throw InputError("rref_basis: mixed degrees in the span");
    m.row(static_cast<Eigen::Index>(i)) = vectors[i].coeffs;
  }
  return GradedSubspace<K>(degree, std::move(m));
}

template <class K>
std::vector<BiForm<K>> basis_forms(const GradedSubspace<K>& v) {
  std::vector<BiForm<K>> out;
  out.reserve(static_cast<size_t>(v.dim()));
  for (int i = 0; i < v.dim(); ++i)
    out.emplace_back(v.degree, Row<K>(v.basis.row(i)));
  return out;
}

// R_1 V inside degree deg(V)+1.
template <class K>
GradedSubspace<K> multiply_by_r1(const GradedSubspace<K>& v) {
  const int d = v.degree;
  Mat<K> m = zero_matrix<K>(2 * v.dim(), d + 2);
  for (int i = 0; i < v.dim(); ++i) {
    // y * row: x-exponents unchanged; x * row: shifted by one.
    m.block(2 * i, 0, 1, d + 1) = v.basis.row(i);
    m.block(2 * i + 1, 1, 1, d + 1) = v.basis.row(i);
  }
  return GradedSubspace<K>(d + 1, std::move(m));
}

// R_{-1} V = { f in R_{deg-1} : x f and y f lie in V }.
template <class K>
GradedSubspace<K> divide_by_r1_once(const GradedSubspace<K>& v) {
  const int d = v.degree;
  internal_check(d >= 1, "divide_by_r1: degree underflow");
  if (v.is_full()) {
    Mat<K> id = zero_matrix<K>(d, d);
    for (int i = 0; i < d; ++i) id(i, i) = K(1);
    return GradedSubspace<K>(d - 1, std::move(id));
  }
  const std::vector<int> piv = pivot_columns(v.basis);
  std::vector<int> nonpiv;
  for (int c = 0; c <= d; ++c)
    if (std::find(piv.begin(), piv.end(), c) == piv.end()) nonpiv.push_back(c);
  const Eigen::Index q = static_cast<Eigen::Index>(nonpiv.size());
  // Constraints: residuals of x*e_m and y*e_m against V, projected onto the
  // non-pivot coordinates; kernel over the unknown coefficients of f.
  Mat<K> sys = zero_matrix<K>(2 * q, d);
  for (int m = 0; m < d; ++m) {
    Row<K> xe = zero_row<K>(d + 1), ye = zero_row<K>(d + 1);
    xe(m + 1) = K(1);
    ye(m) = K(1);
    Row<K> rx = reduce_against(xe, v.basis, piv);
    Row<K> ry = reduce_against(ye, v.basis, piv);
    for (Eigen::Index j = 0; j < q; ++j) {
      sys(j, m) = rx(nonpiv[static_cast<size_t>(j)]);
      sys(q + j, m) = ry(nonpiv[static_cast<size_t>(j)]);
    }
  }
  return GradedSubspace<K>(d - 1, kernel_of<K>(sys));
}

template <class K>
GradedSubspace<K> divide_by_r1(const GradedSubspace<K>& v, int a = 1) {
  if (a > v.degree) throw InputError("divide_by_r1: a exceeds the degree");
  GradedSubspace<K> out = v;
  for (int k = 0; k < a; ++k) out = divide_by_r1_once(out);
  return out;
}

// tau(V) = dim R_1 V - dim V; equals dim V - dim R_{-1} V for V != 0.
template <class K>
int tau_of(const GradedSubspace<K>& v) {
  return multiply_by_r1(v).dim() - v.dim();
}

// ---------------------------------------------------------------------------
// Dual space under the contraction (differentiation) pairing.  Dual basis
// order is (X^d, X^{d-1}Y, ..., Y^d): index n holds X^{d-n} Y^n, so
// <y^{d-m} x^m , X^{d-n} Y^n> = m! (d-m)! when n = d-m and 0 otherwise.
// The pairing is perfect only in char 0 or p > d, which the perp operations
// enforce.
// ---------------------------------------------------------------------------

template <class K>
struct DualSubspace {
  int degree{0};
  Mat<K> basis;  // RREF rows in the dual coordinates

  DualSubspace() : basis(zero_matrix<K>(0, 1)) {}
  DualSubspace(int d, Mat<K> b) : degree(d), basis(std::move(b)) {
    internal_check(basis.cols() == degree + 1, "DualSubspace: ambient size");
    rref_in_place(basis);
  }
  int dim() const { return static_cast<int>(basis.rows()); }
};

// <f, F> for f in R_d and F dual of degree d.
template <class K>
K contraction_pair(const BiForm<K>& f, const Row<K>& dual_coeffs,
                   const Field<K>& field) {
  const int d = f.degree;
  internal_check(dual_coeffs.cols() == d + 1, "pairing across degrees");
  K acc = field.make(0);
  for (int m = 0; m <= d; ++m) {
    K w = field.make(1);
    for (int t = 2; t <= m; ++t) w = w * field.make(t);
    for (int t = 2; t <= d - m; ++t) w = w * field.make(t);
    acc += f.coeffs(m) * dual_coeffs(d - m) * w;
  }
  return acc;
}

// (L)^d for the dual linear form attached to the projective point (a : b),
// i.e. L = a X + b Y, expanded in the dual coordinates.
template <class K>
Row<K> dual_power(const ProjectivePoint<K>& pt, int d, const Field<K>& field) {
  Row<K> out = zero_row<K>(d + 1);
  // Coefficient of X^{d-n} Y^n is C(d,n) a^{d-n} b^n.
  K binom = field.make(1);
  for (int n = 0; n <= d; ++n) {
    K term = binom;
    for (int t = 0; t < d - n; ++t) term = term * pt.a;
    for (int t = 0; t < n; ++t) term = term * pt.b;
    out(n) = term;
    binom = binom * field.make(d - n) / field.make(n + 1);
  }
  return out;
}

// Perp of W <= R_d inside the dual space.
template <class K>
DualSubspace<K> perp_of(const GradedSubspace<K>& w, const Field<K>& field) {
  const int d = w.degree;
  require_characteristic_at_least(field.spec, d + 1, "contraction perp");
  Mat<K> sys = zero_matrix<K>(w.dim(), d + 1);
  for (int i = 0; i < w.dim(); ++i) {
    for (int n = 0; n <= d; ++n) {
      int m = d - n;
      K weight = field.make(1);
      for (int t = 2; t <= m; ++t) weight = weight * field.make(t);
      for (int t = 2; t <= d - m; ++t) weight = weight * field.make(t);
      sys(i, n) = w.basis(i, m) * weight;
    }
  }
  return DualSubspace<K>(d, kernel_of<K>(sys));
}

// <f R_{i-c}>^perp = <L_1^i, ..., L_c^i> for f a product of c distinct
// linear factors with roots L_v.
template <class K>
DualSubspace<K> principal_perp(const BiForm<K>& f, int i, const Field<K>& field) {
  const int c = f.degree;
  if (c > i) throw InputError("principal_perp: deg f exceeds the degree");
  require_characteristic_at_least(field.spec, i + 1, "principal_perp");
  auto split = split_distinct_linear_factors(f, field);
  if (!split)
    throw InputError("principal_perp: form does not split into distinct "
                     "linear factors over the field");
  Mat<K> m = zero_matrix<K>(c, i + 1);
  for (int v = 0; v < c; ++v)
    m.row(v) = dual_power(split->second[static_cast<size_t>(v)], i, field);
  DualSubspace<K> out(i, std::move(m));
  internal_check(out.dim() == c, "principal_perp: dependent powers");
  return out;
}

}  // namespace betti
