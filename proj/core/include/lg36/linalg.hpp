#pragma once

#include <optional>
#include <vector>

#include "lg36/matrix.hpp"

namespace lg36 {

template <class S>
struct RrefResult {
  std::size_t rank = 0;
  Matrix<S> reduced;  // same shape as the input; rows past `rank` are zero
  std::vector<std::size_t> pivot_cols;
};

template <class S>
RrefResult<S> rref(Matrix<S> m) {
  RrefResult<S> out;
  const std::size_t R = m.rows(), C = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && m(piv, c).is_zero()) ++piv;
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(m(r, j), m(piv, j));
    const S inv = m(r, c).inverse();
    for (std::size_t j = c; j < C; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const S f = m(i, c);
      for (std::size_t j = c; j < C; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

template <class S>
std::size_t rank(const Matrix<S>& m) {
  return rref(m).rank;
}

// Nonzero rows of the rref: the canonical basis of the row space.
template <class S>
Matrix<S> row_basis(const Matrix<S>& m) {
  auto r = rref(m);
  return r.reduced.block(0, r.rank, 0, m.cols());
}

// Rows span the right null space {x : m x = 0}. One basis vector per free
// column, with a 1 in that column (the usual rref-derived basis).
template <class S>
Matrix<S> kernel(const Matrix<S>& m, const FieldOf<S>& F) {
  const std::size_t C = m.cols();
  auto r = rref(m);
  std::vector<char> is_pivot(C, 0);
  for (auto c : r.pivot_cols) is_pivot[c] = 1;
  Matrix<S> k(C - r.rank, C);
  std::size_t row = 0;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    k(row, f) = F.one();
    for (std::size_t i = 0; i < r.rank; ++i) k(row, r.pivot_cols[i]) = -r.reduced(i, f);
    ++row;
  }
  return k;
}

// Left null space {y : y m = 0}, as rows.
template <class S>
Matrix<S> left_kernel(const Matrix<S>& m, const FieldOf<S>& F) {
  return kernel(m.transpose(), F);
}

template <class S>
S det(Matrix<S> m, const FieldOf<S>& F) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kInvalidArgument, "det of non-square matrix");
  const std::size_t n = m.rows();
  S d = F.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return F.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
      d = -d;
    }
    d *= m(c, c);
    const S inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const S f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

// Throws kRankDeficient for singular input.
template <class S>
Matrix<S> inverse(const Matrix<S>& m, const FieldOf<S>& F) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorCode::kInvalidArgument, "inverse of non-square matrix");
  Matrix<S> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F.one();
  }
  auto r = rref(std::move(aug));
  if (r.rank < n || r.pivot_cols[n - 1] != n - 1) throw Error(ErrorCode::kRankDeficient, "singular matrix");
  return r.reduced.block(0, n, n, 2 * n);
}

// Some x with m x = b, or nullopt if inconsistent.
template <class S>
std::optional<Vec<S>> solve(const Matrix<S>& m, CSpan<S> b) {
  const std::size_t R = m.rows(), C = m.cols();
  Matrix<S> aug(R, C + 1);
  for (std::size_t i = 0; i < R; ++i) {
    for (std::size_t j = 0; j < C; ++j) aug(i, j) = m(i, j);
    aug(i, C) = b[i];
  }
  auto r = rref(std::move(aug));
  if (r.rank > 0 && r.pivot_cols[r.rank - 1] == C) return std::nullopt;
  Vec<S> x(C);
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivot_cols[i]] = r.reduced(i, C);
  return x;
}

// Coefficients c with c^T basis = v, when v lies in the row space.
template <class S>
std::optional<Vec<S>> coords_in_rows(const Matrix<S>& basis, CSpan<S> v) {
  return solve(basis.transpose(), v);
}

}  // namespace lg36
