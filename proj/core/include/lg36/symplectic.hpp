#pragma once

#include <array>
#include <optional>

#include "lg36/subspace.hpp"

namespace lg36 {

// Basis of ∧³V for dim V = 6: e_i∧e_j∧e_k with i<j<k, in lexicographic order.
namespace wedge {

inline constexpr std::size_t kDim = 20;

inline constexpr std::array<std::array<int, 3>, 20> kTriples = [] {
  std::array<std::array<int, 3>, 20> t{};
  int n = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) t[n++] = {i, j, k};
  return t;
}();

inline constexpr int index_of(int i, int j, int k) {
  for (int n = 0; n < 20; ++n)
    if (kTriples[n][0] == i && kTriples[n][1] == j && kTriples[n][2] == k) return n;
  return -1;
}

// Sign of the permutation sorting `idx` (entries distinct).
template <std::size_t N>
constexpr int perm_sign(std::array<int, N> idx) {
  int s = 1;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b)
      if (idx[a] > idx[b]) s = -s;
  return s;
}

// Complementary triple of kTriples[n] and the sign of e_I ∧ e_{I^c}.
inline constexpr std::array<std::pair<int, int>, 20> kComplement = [] {
  std::array<std::pair<int, int>, 20> out{};
  for (int n = 0; n < 20; ++n) {
    std::array<int, 3> c{};
    int m = 0;
    for (int v = 0; v < 6; ++v)
      if (v != kTriples[n][0] && v != kTriples[n][1] && v != kTriples[n][2]) c[m++] = v;
    const int idx = index_of(c[0], c[1], c[2]);
    out[n] = {idx, perm_sign<6>({kTriples[n][0], kTriples[n][1], kTriples[n][2], c[0], c[1], c[2]})};
  }
  return out;
}();

}  // namespace wedge

// The 20 maximal minors of a 3x6 matrix (its Plücker vector in ∧³V). Works
// over any commutative ring type, which is how tangent vectors are obtained
// from dual numbers.
template <class T>
std::array<T, 20> minors3(const std::array<std::array<T, 6>, 3>& r) {
  std::array<T, 20> out{};
  for (std::size_t n = 0; n < 20; ++n) {
    const auto [i, j, k] = wedge::kTriples[n];
    out[n] = r[0][i] * (r[1][j] * r[2][k] - r[1][k] * r[2][j]) - r[0][j] * (r[1][i] * r[2][k] - r[1][k] * r[2][i]) +
             r[0][k] * (r[1][i] * r[2][j] - r[1][j] * r[2][i]);
  }
  return out;
}

template <class S>
Vec<S> plucker20(const Matrix<S>& L) {
  if (L.rows() != 3 || L.cols() != 6) throw Error(ErrorCode::kInvalidArgument, "plucker20 expects a 3x6 matrix");
  std::array<std::array<S, 6>, 3> r;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 6; ++b) r[a][b] = L(a, b);
  auto m = minors3(r);
  return Vec<S>(m.begin(), m.end());
}

// Matrix (6x20) of the contraction d_β: u∧v∧w ↦ β(u,v)w − β(u,w)v + β(v,w)u
// for an antisymmetric 6x6 matrix β.
template <class S>
Matrix<S> contraction_matrix(const Matrix<S>& beta) {
  Matrix<S> m(6, 20);
  for (std::size_t c = 0; c < 20; ++c) {
    const auto [i, j, k] = wedge::kTriples[c];
    m(k, c) += beta(i, j);
    m(j, c) -= beta(i, k);
    m(i, c) += beta(j, k);
  }
  return m;
}

// ω ∧ ω' as a multiple of e1∧...∧e6, for 20-vectors.
template <class S>
S wedge_pairing20(CSpan<S> a, CSpan<S> b) {
  S s{};
  for (std::size_t n = 0; n < 20; ++n) {
    if (a[n].is_zero()) continue;
    const auto [c, sign] = wedge::kComplement[n];
    const S t = a[n] * b[static_cast<std::size_t>(c)];
    s += sign > 0 ? t : -t;
  }
  return s;
}

// Dual number a + bε with ε² = 0.
template <class S>
struct Dual {
  S a{}, b{};
  friend Dual operator+(const Dual& x, const Dual& y) { return {x.a + y.a, x.b + y.b}; }
  friend Dual operator-(const Dual& x, const Dual& y) { return {x.a - y.a, x.b - y.b}; }
  friend Dual operator*(const Dual& x, const Dual& y) { return {x.a * y.a, x.a * y.b + x.b * y.a}; }
};

// V = F^6 with α = x1∧x4 + x2∧x5 + x3∧x6, plus W = ker d_α ⊂ ∧³V and its
// fixed coordinates. W-coordinates of ω ∈ W are ω's entries at the 14 non-pivot
// columns of rref(d_α); the W basis is the matching rref kernel basis.
template <class S>
class SymplecticSpace {
 public:
  using Field = FieldOf<S>;

  explicit SymplecticSpace(Field F) : F_(std::move(F)) {
    alpha_ = Matrix<S>(6, 6);
    for (std::size_t i = 0; i < 3; ++i) {
      alpha_(i, i + 3) = F_.one();
      alpha_(i + 3, i) = -F_.one();
    }
    d_alpha_ = contraction_matrix(alpha_);
    auto r = rref(d_alpha_);
    std::vector<char> piv(20, 0);
    for (auto c : r.pivot_cols) piv[c] = 1;
    for (std::size_t c = 0; c < 20; ++c)
      if (!piv[c]) free_.push_back(c);
    wb_ = kernel(d_alpha_, F_);
    pairing_ = Matrix<S>(wb_.rows(), wb_.rows());
    for (std::size_t i = 0; i < wb_.rows(); ++i)
      for (std::size_t j = 0; j < wb_.rows(); ++j) pairing_(i, j) = wedge_pairing20<S>(wb_.row(i), wb_.row(j));
  }

  const Field& field() const { return F_; }
  const Matrix<S>& alpha() const { return alpha_; }
  const Matrix<S>& d_alpha() const { return d_alpha_; }
  const Matrix<S>& w_basis() const { return wb_; }
  const std::vector<std::size_t>& w_free_cols() const { return free_; }
  std::size_t w_dim() const { return wb_.rows(); }
  // 14x14 Gram matrix of the wedge pairing on the W basis.
  const Matrix<S>& pairing() const { return pairing_; }

  S alpha_form(CSpan<S> u, CSpan<S> v) const { return bilinear(alpha_, u, v); }
  static S bilinear(const Matrix<S>& B, CSpan<S> u, CSpan<S> v) { return dot(u, apply(B, v)); }

  bool in_w(CSpan<S> v20) const { return is_zero_vec(apply(d_alpha_, v20)); }
  Vec<S> to_w(CSpan<S> v20) const {
    Vec<S> w(free_.size());
    for (std::size_t i = 0; i < free_.size(); ++i) w[i] = v20[free_[i]];
    return w;
  }
  Vec<S> from_w(CSpan<S> w) const { return row_times(w, wb_); }

 private:
  Field F_;
  Matrix<S> alpha_, d_alpha_, wb_, pairing_;
  std::vector<std::size_t> free_;
};

template <class S>
Vec<S> d_alpha(const SymplecticSpace<S>& V, CSpan<S> omega20) {
  return apply(V.d_alpha(), omega20);
}

// Throws kRankDeficient unless L is 3x6 of rank 3.
template <class S>
bool is_lagrangian(const SymplecticSpace<S>& V, const Matrix<S>& L) {
  if (L.rows() != 3 || L.cols() != 6 || rank(L) != 3)
    throw Error(ErrorCode::kRankDeficient, "expected a 3x6 matrix of rank 3");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (!V.alpha_form(L.row(i), L.row(j)).is_zero()) return false;
  return true;
}

// Point of Σ: a Lagrangian 3-space and its Plücker point in W-coordinates.
template <class S>
struct SigmaPoint {
  Matrix<S> lagrangian;
  ProjPoint<S> plucker;
};

template <class S>
SigmaPoint<S> sigma_point(const SymplecticSpace<S>& V, const Matrix<S>& L) {
  if (!is_lagrangian(V, L)) throw Error(ErrorCode::kNotLagrangian, "3-space is not isotropic for alpha");
  return {row_basis(L), ProjPoint<S>(V.to_w(plucker20(L)))};
}

// Adapted basis e1..e6 as the rows of E (standard coordinates): rows 0-2 span
// U0, rows 3-5 span U∞, and E J E^T = J.
template <class S>
struct SymplecticFrame {
  Matrix<S> E;
  Matrix<S> E_inv;

  Matrix<S> U0() const { return E.block(0, 3, 0, 6); }
  Matrix<S> Uinf() const { return E.block(3, 6, 0, 6); }
};

template <class S>
SymplecticFrame<S> frame_from_matrix(const SymplecticSpace<S>& V, const Matrix<S>& E) {
  if (!(E * V.alpha() * E.transpose() == V.alpha()))
    throw Error(ErrorCode::kInvalidArgument, "frame is not symplectic for alpha");
  return {E, inverse(E, V.field())};
}

template <class S>
SymplecticFrame<S> standard_frame(const SymplecticSpace<S>& V) {
  auto I = Matrix<S>::identity(6, V.field());
  return {I, I};
}

template <class S>
bool transverse(const Matrix<S>& U, const Matrix<S>& W) {
  return rank(stack(U, W)) == U.rows() + W.rows();
}

// Basis a of U0 (rref rows), then the α-dual basis b of U∞: α(a_i, b_j) = δ_ij.
template <class S>
SymplecticFrame<S> adapted_frame(const SymplecticSpace<S>& V, const Matrix<S>& U0, const Matrix<S>& Uinf) {
  if (!is_lagrangian(V, U0) || !is_lagrangian(V, Uinf))
    throw Error(ErrorCode::kNotLagrangian, "adapted_frame needs Lagrangian inputs");
  if (!transverse(U0, Uinf)) throw Error(ErrorCode::kNotTransverse, "U0 and Uinf meet");
  const Matrix<S> a = row_basis(U0), c = row_basis(Uinf);
  const Matrix<S> A = a * V.alpha() * c.transpose();  // A_ij = α(a_i, c_j)
  // b_j = sum_k X_kj c_k with X = A^{-1}, so α(a_i, b_j) = (A X)_ij = δ_ij.
  const Matrix<S> b = inverse(A, V.field()).transpose() * c;
  const Matrix<S> E = stack(a, b);
  return {E, inverse(E, V.field())};
}

template <class S>
bool is_symmetric(const Matrix<S>& B) {
  if (B.rows() != B.cols()) return false;
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = i + 1; j < B.cols(); ++j)
      if (B(i, j) != B(j, i)) return false;
  return true;
}

// Rows [I | B] in frame coordinates, mapped to standard coordinates.
template <class S>
Matrix<S> exp_lagrangian(const SymplecticSpace<S>& V, const SymplecticFrame<S>& fr, const Matrix<S>& B) {
  if (B.rows() != 3 || !is_symmetric(B)) throw Error(ErrorCode::kNotSymmetric, "exp chart needs a symmetric 3x3");
  Matrix<S> X(3, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    X(i, i) = V.field().one();
    for (std::size_t j = 0; j < 3; ++j) X(i, 3 + j) = B(i, j);
  }
  return X * fr.E;
}

template <class S>
SigmaPoint<S> exp_point(const SymplecticSpace<S>& V, const SymplecticFrame<S>& fr, const Matrix<S>& B) {
  return sigma_point(V, exp_lagrangian(V, fr, B));
}

template <class S>
SigmaPoint<S> exp_point_at_infinity(const SymplecticSpace<S>& V, const SymplecticFrame<S>& fr) {
  return sigma_point(V, fr.Uinf());
}

// B with L = exp(B) in the frame, or nullopt when L meets U∞.
template <class S>
std::optional<Matrix<S>> chart(const SymplecticSpace<S>& V, const SymplecticFrame<S>& fr, const Matrix<S>& L) {
  const Matrix<S> X = L * fr.E_inv;
  const Matrix<S> X0 = X.block(0, 3, 0, 3), X1 = X.block(0, 3, 3, 6);
  if (rank(X0) < 3) return std::nullopt;
  return inverse(X0, V.field()) * X1;
}

// Random element of Sp(6): a product of unipotent generators [[I,S],[0,I]]
// and [[I,0],[S,I]] with S symmetric.
template <class S>
Matrix<S> random_symplectic(const SymplecticSpace<S>& V, Rng& rng) {
  const auto& F = V.field();
  Matrix<S> M = Matrix<S>::identity(6, F);
  for (int round = 0; round < 3; ++round) {
    for (int lower = 0; lower < 2; ++lower) {
      Matrix<S> U = Matrix<S>::identity(6, F);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) {
          const S s = F.random(rng);
          if (lower) {
            U(3 + i, j) = s;
            U(3 + j, i) = s;
          } else {
            U(i, 3 + j) = s;
            U(j, 3 + i) = s;
          }
        }
      M = M * U;
    }
  }
  return M;
}

template <class S>
Matrix<S> random_symmetric(const FieldOf<S>& F, Rng& rng) {
  Matrix<S> B(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) B(i, j) = B(j, i) = F.random(rng);
  return B;
}

template <class S>
Matrix<S> random_lagrangian(const SymplecticSpace<S>& V, Rng& rng) {
  return row_basis(exp_lagrangian(V, standard_frame(V), random_symmetric<S>(V.field(), rng)) *
                   random_symplectic(V, rng));
}

// Random Lagrangian transverse to L; kChartFailure after 20 misses.
template <class S>
Matrix<S> random_transverse_lagrangian(const SymplecticSpace<S>& V, const Matrix<S>& L, Rng& rng) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    Matrix<S> U = random_lagrangian(V, rng);
    if (transverse(L, U)) return U;
  }
  throw Error(ErrorCode::kChartFailure, "no transverse Lagrangian in 20 attempts");
}

// Projective tangent space to Σ at p (a P^6 in P^13): p together with the
// derivatives of ε ↦ exp(εḂ) over a basis of symmetric Ḃ, in a chart centred
// at p.
template <class S>
ProjSubspace<S> tangent_space(const SymplecticSpace<S>& V, const SigmaPoint<S>& p, Rng& rng) {
  const Matrix<S> Uinf = random_transverse_lagrangian(V, p.lagrangian, rng);
  const SymplecticFrame<S> fr = adapted_frame(V, p.lagrangian, Uinf);
  Matrix<S> rows(0, V.w_dim());
  rows.append_row(p.plucker.coords());
  static constexpr std::array<std::pair<int, int>, 6> kSym{{{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}}};
  for (const auto& [a, b] : kSym) {
    // Rows of [I | εḂ] E over the dual numbers.
    std::array<std::array<Dual<S>, 6>, 3> X{};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t col = 0; col < 6; ++col) {
        Dual<S> acc{};
        acc.a = fr.E(i, col);
        if (static_cast<int>(i) == a) acc.b += fr.E(3 + static_cast<std::size_t>(b), col);
        if (static_cast<int>(i) == b && a != b) acc.b += fr.E(3 + static_cast<std::size_t>(a), col);
        X[i][col] = acc;
      }
    const auto m = minors3(X);
    Vec<S> d(20);
    for (std::size_t n = 0; n < 20; ++n) d[n] = m[n].b;
    rows.append_row(V.to_w(d));
  }
  return ProjSubspace<S>(rows);
}

template <class S>
S w_pairing(const SymplecticSpace<S>& V, CSpan<S> w1, CSpan<S> w2) {
  return wedge_pairing20<S>(V.from_w(w1), V.from_w(w2));
}

extern template class SymplecticSpace<Fp>;
extern template class SymplecticSpace<Rational>;

}  // namespace lg36
