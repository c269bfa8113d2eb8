#pragma once

#include <array>
#include <vector>

#include "lg36/cubic.hpp"
#include "lg36/dual_quartic.hpp"

namespace lg36 {

// Three lines of P^5 (2x6 each) that are conjugate for α.
template <class S>
struct ConjugateLines {
  std::array<Matrix<S>, 3> L;
};

// The Segre threefold (a, b, c) ↦ a∧b∧c over conjugate lines.
template <class S>
struct SegreThreefold {
  ConjugateLines<S> lines;
  ProjSubspace<S> span7;

  Vec<S> image(const SymplecticSpace<S>& V, CSpan<S> a, CSpan<S> b, CSpan<S> c) const {
    Matrix<S> P(0, 6);
    P.append_row(Vec<S>(a.begin(), a.end()));
    P.append_row(Vec<S>(b.begin(), b.end()));
    P.append_row(Vec<S>(c.begin(), c.end()));
    return V.to_w(plucker20(P));
  }
};

template <class S>
S pfaffian(const Matrix<S>& A) {
  const std::size_t n = A.rows();
  if (n % 2 == 1) return S{};
  if (n == 2) return A(0, 1);
  S acc{};
  std::vector<std::size_t> rest;
  for (std::size_t j = 1; j < n; ++j) {
    if (A(0, j).is_zero()) continue;
    rest.clear();
    for (std::size_t k = 1; k < n; ++k)
      if (k != j) rest.push_back(k);
    Matrix<S> M(n - 2, n - 2);
    for (std::size_t r = 0; r < rest.size(); ++r)
      for (std::size_t c = 0; c < rest.size(); ++c) M(r, c) = A(rest[r], rest[c]);
    const S term = A(0, j) * pfaffian(M);
    if (j % 2 == 1) acc += term;
    else acc -= term;
  }
  return acc;
}

template <class S>
bool is_antisymmetric(const Matrix<S>& A) {
  if (A.rows() != A.cols()) return false;
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (A(i, j) != -A(j, i)) return false;
  return true;
}

// Conjugacy check: pairwise disjoint lines spanning P^5, and planes through a
// point of each line are Lagrangian (checked on the 8 basis combinations,
// which suffices by trilinearity of α(a,b), α(b,c), α(a,c)).
template <class S>
bool is_conjugate(const SymplecticSpace<S>& V, const ConjugateLines<S>& cl) {
  for (int i = 0; i < 3; ++i) {
    if (rank(cl.L[static_cast<std::size_t>(i)]) != 2) return false;
    for (int j = i + 1; j < 3; ++j)
      if (rank(stack(cl.L[static_cast<std::size_t>(i)], cl.L[static_cast<std::size_t>(j)])) != 4) return false;
  }
  if (rank(stack(stack(cl.L[0], cl.L[1]), cl.L[2])) != 6) return false;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
          if (!SymplecticSpace<S>::bilinear(V.alpha(), cl.L[i].row_span(a), cl.L[j].row_span(b)).is_zero()) return false;
  return true;
}

template <class S>
SegreThreefold<S> segre_from_lines(const SymplecticSpace<S>& V, ConjugateLines<S> cl) {
  if (!is_conjugate(V, cl)) throw Error(ErrorCode::kConjugacyFail, "lines are not conjugate");
  Matrix<S> rows(0, V.w_dim());
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c) {
        Matrix<S> P(0, 6);
        P.append_row(cl.L[0].row(a));
        P.append_row(cl.L[1].row(b));
        P.append_row(cl.L[2].row(c));
        rows.append_row(V.to_w(plucker20(P)));
      }
  SegreThreefold<S> Y{std::move(cl), ProjSubspace<S>(rows)};
  if (Y.span7.dim() != 7) throw Error(ErrorCode::kConjugacyFail, "Segre span is not a P^7");
  return Y;
}

// The eigenplanes ker(β − μα) at the three roots of Pf(β − μα).
template <class S>
ConjugateLines<S> segre_from_beta(const SymplecticSpace<S>& V, const Matrix<S>& beta) {
  const auto& F = V.field();
  if (beta.rows() != 6 || !is_antisymmetric(beta)) throw Error(ErrorCode::kInvalidArgument, "beta must be antisymmetric 6x6");
  if (rank(beta) != 6) throw Error(ErrorCode::kInvalidArgument, "beta must be invertible");
  std::vector<S> xs, ys;
  for (std::int64_t m = 0; m < 4; ++m) {
    xs.push_back(F.from_int(m));
    ys.push_back(pfaffian(beta - xs.back() * V.alpha()));
  }
  const auto pf = interpolate(xs, ys, F);
  const auto roots = uniroots(pf, F);
  if (static_cast<int>(roots.size()) != 3) throw Error(ErrorCode::kNotSplit, "Pfaffian cubic does not split");
  if (roots[0] == roots[1] || roots[1] == roots[2] || roots[0] == roots[2])
    throw Error(ErrorCode::kEigenDegenerate, "repeated eigenvalue");
  ConjugateLines<S> cl;
  for (std::size_t i = 0; i < 3; ++i) {
    cl.L[i] = kernel(beta - roots[i] * V.alpha(), F);
    if (cl.L[i].rows() != 2) throw Error(ErrorCode::kEigenDegenerate, "eigenspace is not 2-dimensional");
  }
  return cl;
}

// P(ker d_β) ∩ P(W): the span of the Segre threefold of β (a P^7).
template <class S>
ProjSubspace<S> beta_span7(const SymplecticSpace<S>& V, const Matrix<S>& beta) {
  return ProjSubspace<S>(kernel(contraction_matrix(beta) * V.w_basis().transpose(), V.field()));
}

// A 2-form whose conjugate lines are those of the Segre threefold through C
// and the tangency plane P, defined over the base field: in C's frame,
// β(v, w) = α(Av, w) with A = diag(D, Dᵀ), D = B⁻¹G and G the chart of P.
template <class S>
Matrix<S> beta_for_mark(const SymplecticSpace<S>& V, const TwistedCubic<S>& C, const Matrix<S>& P) {
  const auto G = chart(V, C.frame, P);
  if (!G) throw Error(ErrorCode::kNotTransverse, "tangency plane meets the plane at infinity of C");
  const Matrix<S> D = C.B_inv * *G;
  Matrix<S> A(6, 6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      A(i, j) = D(i, j);
      A(3 + i, 3 + j) = D(j, i);
    }
  const Matrix<S> Bf = A.transpose() * V.alpha();
  const Matrix<S>& Ei = C.frame.E_inv;
  return Ei * Bf * Ei.transpose();
}

// Split route: the tangency plane of the mark meets V_C in 3 points
// (u_i, t_i B u_i); the horizontal lines through them are conjugate.
template <class S>
SegreThreefold<S> segre_through(const SymplecticSpace<S>& V, const TwistedCubic<S>& C,
                                const TangentHyperplaneSample<S>& mark) {
  const auto hits = plane_meets_vc(V, C, mark.tangency.lagrangian);
  ConjugateLines<S> cl;
  for (std::size_t i = 0; i < 3; ++i) cl.L[i] = horizontal_line(C, CSpan<S>(hits[i].u));
  return segre_from_lines(V, std::move(cl));
}

}  // namespace lg36
