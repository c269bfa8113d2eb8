#pragma once

#include "lg36/linalg.hpp"

namespace lg36 {

// Point of P^n, compared up to a nonzero scalar.
template <class S>
class ProjPoint {
 public:
  ProjPoint() = default;
  explicit ProjPoint(Vec<S> coords) : c_(std::move(coords)) {
    if (is_zero_vec(c_)) throw Error(ErrorCode::kInvalidArgument, "projective point with all-zero coordinates");
  }

  std::size_t ambient_dim() const { return c_.size() - 1; }
  const Vec<S>& coords() const { return c_; }
  const S& operator[](std::size_t i) const { return c_[i]; }

  // Representative with first nonzero coordinate equal to 1.
  ProjPoint normalized() const {
    for (const auto& x : c_)
      if (!x.is_zero()) {
        const S inv = x.inverse();
        ProjPoint p;
        p.c_ = scaled(c_, inv);
        return p;
      }
    return *this;
  }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    if (a.c_.size() != b.c_.size()) return false;
    // a_i b_j = a_j b_i for all i, j; checking against one pivot suffices.
    std::size_t k = 0;
    while (k < a.c_.size() && a.c_[k].is_zero()) ++k;
    if (k == a.c_.size() || b.c_[k].is_zero()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i] * b.c_[k] != b.c_[i] * a.c_[k]) return false;
    return true;
  }

 private:
  Vec<S> c_;
};

// Linear subspace of F^{n+1} viewed in P^n. The basis is kept in reduced row
// echelon form, so equality is equality of bases.
template <class S>
class ProjSubspace {
 public:
  ProjSubspace() = default;
  explicit ProjSubspace(const Matrix<S>& spanning_rows) : basis_(row_basis(spanning_rows)) {
    if (spanning_rows.rows() == 0) basis_ = Matrix<S>(0, spanning_rows.cols());
  }
  static ProjSubspace empty(std::size_t ambient_dim) { return ProjSubspace(Matrix<S>(0, ambient_dim + 1)); }
  static ProjSubspace point(const Vec<S>& v) { return ProjSubspace(row_matrix(v)); }

  const Matrix<S>& basis() const { return basis_; }
  std::size_t ambient_dim() const { return basis_.cols() - 1; }
  std::size_t linear_dim() const { return basis_.rows(); }
  // Projective dimension; -1 for the empty subspace.
  long dim() const { return static_cast<long>(basis_.rows()) - 1; }
  bool is_empty() const { return basis_.rows() == 0; }

  bool contains(CSpan<S> v) const {
    if (is_zero_vec(v)) return true;
    return rank(stack(basis_, row_matrix(Vec<S>(v.begin(), v.end())))) == basis_.rows();
  }
  bool contains(const ProjSubspace& o) const {
    if (o.is_empty()) return true;
    return rank(stack(basis_, o.basis_)) == basis_.rows();
  }

  // Covectors vanishing on the subspace, as a subspace of the dual space.
  ProjSubspace orthogonal_complement(const FieldOf<S>& F) const {
    if (basis_.rows() == 0) return ProjSubspace(Matrix<S>::identity(basis_.cols(), F));
    return ProjSubspace(kernel(basis_, F));
  }

  // Coordinates of v in the rref basis: v's entries at the pivot columns.
  Vec<S> coords_of(CSpan<S> v) const {
    Vec<S> c(basis_.rows());
    std::size_t r = 0;
    for (std::size_t j = 0; j < basis_.cols() && r < basis_.rows(); ++j)
      if (!basis_(r, j).is_zero()) c[r++] = v[j];
    return c;
  }
  Vec<S> from_coords(CSpan<S> c) const { return row_times(c, basis_); }

  friend bool operator==(const ProjSubspace& a, const ProjSubspace& b) { return a.basis_ == b.basis_; }

 private:
  Matrix<S> basis_;
};

template <class S>
ProjSubspace<S> join(const ProjSubspace<S>& a, const ProjSubspace<S>& b) {
  if (a.basis().cols() != b.basis().cols()) throw Error(ErrorCode::kInvalidArgument, "join: ambient mismatch");
  return ProjSubspace<S>(stack(a.basis(), b.basis()));
}

// Intersection computed directly: solve x A = y B and map x back through A.
template <class S>
ProjSubspace<S> meet(const ProjSubspace<S>& a, const ProjSubspace<S>& b, const FieldOf<S>& F) {
  if (a.basis().cols() != b.basis().cols()) throw Error(ErrorCode::kInvalidArgument, "meet: ambient mismatch");
  const std::size_t n = a.basis().cols();
  if (a.is_empty() || b.is_empty()) return ProjSubspace<S>::empty(n - 1);
  const Matrix<S> both = stack(a.basis(), -b.basis());
  const Matrix<S> rel = left_kernel(both, F);
  Matrix<S> pts(rel.rows(), n);
  const std::size_t ka = a.basis().rows();
  for (std::size_t i = 0; i < rel.rows(); ++i) {
    Vec<S> x(rel.row_span(i).begin(), rel.row_span(i).begin() + ka);
    pts.set_row(i, row_times<S>(x, a.basis()));
  }
  return ProjSubspace<S>(pts);
}

}  // namespace lg36
