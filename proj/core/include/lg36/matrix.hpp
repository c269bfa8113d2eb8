#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <type_traits>
#include <vector>

#include "lg36/field.hpp"

namespace lg36 {

template <class S>
using Vec = std::vector<S>;

// Non-deduced span parameter, so a Vec<S> argument converts implicitly.
template <class S>
using CSpan = std::type_identity_t<std::span<const S>>;

// Dense row-major matrix over a field scalar. Default-constructed entries are
// zero; for Fp they pick up the modulus on first contact with a bound value.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), d_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<S> data) : r_(rows), c_(cols), d_(std::move(data)) {
    if (d_.size() != r_ * c_) throw Error(ErrorCode::kInvalidArgument, "matrix data size mismatch");
  }

  static Matrix from_rows(const std::vector<Vec<S>>& rows, std::size_t cols_if_empty = 0) {
    Matrix m(rows.size(), rows.empty() ? cols_if_empty : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
  }
  static Matrix identity(std::size_t n, const FieldOf<S>& F) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F.one();
    return m;
  }
  static Matrix random(std::size_t rows, std::size_t cols, const FieldOf<S>& F, Rng& rng) {
    Matrix m(rows, cols);
    for (auto& x : m.d_) x = F.random(rng);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool empty() const { return r_ == 0; }

  S& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }

  std::span<S> row_span(std::size_t i) { return {d_.data() + i * c_, c_}; }
  std::span<const S> row_span(std::size_t i) const { return {d_.data() + i * c_, c_}; }
  Vec<S> row(std::size_t i) const { return Vec<S>(d_.begin() + i * c_, d_.begin() + (i + 1) * c_); }
  Vec<S> col(std::size_t j) const {
    Vec<S> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_row(std::size_t i, std::span<const S> v) {
    if (v.size() != c_) throw Error(ErrorCode::kInvalidArgument, "row length mismatch");
    for (std::size_t j = 0; j < c_; ++j) (*this)(i, j) = v[j];
  }
  void append_row(std::span<const S> v) {
    if (r_ == 0 && c_ == 0) c_ = v.size();
    if (v.size() != c_) throw Error(ErrorCode::kInvalidArgument, "row length mismatch");
    d_.insert(d_.end(), v.begin(), v.end());
    ++r_;
  }
  std::vector<Vec<S>> to_rows() const {
    std::vector<Vec<S>> out;
    for (std::size_t i = 0; i < r_; ++i) out.push_back(row(i));
    return out;
  }
  const std::vector<S>& data() const { return d_; }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // Rows [r0, r1) and columns [c0, c1).
  Matrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
    Matrix b(r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i)
      for (std::size_t j = c0; j < c1; ++j) b(i - r0, j - c0) = (*this)(i, j);
    return b;
  }

  bool is_zero() const {
    for (const auto& x : d_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < d_.size(); ++k) d_[k] += o.d_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < d_.size(); ++k) d_[k] -= o.d_[k];
    return *this;
  }
  Matrix& operator*=(const S& s) {
    for (auto& x : d_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
  friend Matrix operator*(const S& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix m(*this);
    for (auto& x : m.d_) x = -x;
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw Error(ErrorCode::kInvalidArgument, "matrix product shape mismatch");
    Matrix m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const S& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
      }
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_;
  }

 private:
  void check_same(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw Error(ErrorCode::kInvalidArgument, "matrix shape mismatch");
  }

  std::size_t r_ = 0;
  std::size_t c_ = 0;
  std::vector<S> d_;
};

// Vertical concatenation; an empty operand (0 rows) is skipped.
template <class S>
Matrix<S> stack(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw Error(ErrorCode::kInvalidArgument, "stack: column mismatch");
  Matrix<S> m = a;
  for (std::size_t i = 0; i < b.rows(); ++i) m.append_row(b.row_span(i));
  return m;
}

template <class S>
Matrix<S> row_matrix(const Vec<S>& v) {
  Matrix<S> m(1, v.size());
  m.set_row(0, v);
  return m;
}

template <class A, class B>
auto dot(const A& a, const B& b) {
  using S = std::remove_cvref_t<decltype(a[0])>;
  if (a.size() != b.size()) throw Error(ErrorCode::kInvalidArgument, "dot: length mismatch");
  S s{};
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) s += a[i] * b[i];
  return s;
}

// M v (v as a column).
template <class S>
Vec<S> apply(const Matrix<S>& m, CSpan<S> v) {
  Vec<S> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = dot(m.row_span(i), v);
  return out;
}

// v^T M (v as a row).
template <class S>
Vec<S> row_times(CSpan<S> v, const Matrix<S>& m) {
  if (v.size() != m.rows()) throw Error(ErrorCode::kInvalidArgument, "row_times: length mismatch");
  Vec<S> out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

template <class S>
Vec<S> add(Vec<S> a, CSpan<S> b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class S>
Vec<S> scaled(Vec<S> a, const S& s) {
  for (auto& x : a) x *= s;
  return a;
}

// a + s*b
template <class S>
Vec<S> axpy(Vec<S> a, const S& s, CSpan<S> b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}

template <class R>
bool is_zero_vec(const R& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <class S>
Vec<S> random_vec(std::size_t n, const FieldOf<S>& F, Rng& rng) {
  Vec<S> v(n);
  for (auto& x : v) x = F.random(rng);
  return v;
}

// Random combination of the rows of m.
template <class S>
Vec<S> random_combination(const Matrix<S>& m, const FieldOf<S>& F, Rng& rng) {
  return row_times<S>(random_vec<S>(m.rows(), F, rng), m);
}

}  // namespace lg36
