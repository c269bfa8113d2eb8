#pragma once

#include <optional>
#include <string_view>

#include "lg36/monomials.hpp"
#include "lg36/symplectic.hpp"

namespace lg36 {

// {v ∈ V : v ∧ ω = 0} for ω given in W-coordinates; rows are a basis.
template <class S>
Matrix<S> support_space(const SymplecticSpace<S>& V, CSpan<S> w) {
  const Vec<S> om = V.from_w(w);
  // ∧⁴V basis: 4-subsets of {0..5}, indexed by the complementary pair.
  auto pair_index = [](int a, int b) {
    int n = 0;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j, ++n)
        if (i == a && j == b) return n;
    return -1;
  };
  Matrix<S> M(15, 6);
  for (int v = 0; v < 6; ++v)
    for (std::size_t c = 0; c < 20; ++c) {
      if (om[c].is_zero()) continue;
      const auto [i, j, k] = wedge::kTriples[c];
      if (v == i || v == j || v == k) continue;
      int rest[2], m = 0;
      for (int x = 0; x < 6; ++x)
        if (x != v && x != i && x != j && x != k) rest[m++] = x;
      const int sign = wedge::perm_sign<4>({v, i, j, k});
      S& e = M(static_cast<std::size_t>(pair_index(rest[0], rest[1])), static_cast<std::size_t>(v));
      e += sign > 0 ? om[c] : -om[c];
    }
  return kernel(M, V.field());
}

// The Lagrangian 3-space when w is a point of Σ.
template <class S>
std::optional<Matrix<S>> on_sigma(const SymplecticSpace<S>& V, CSpan<S> w) {
  Matrix<S> sup = support_space(V, w);
  if (sup.rows() != 3 || !is_lagrangian(V, sup)) return std::nullopt;
  return row_basis(sup);
}

template <class S>
struct HitchinResult {
  Matrix<S> K;  // K² = λ·I
  S lambda;
};

// K(ξ) for a covector ξ is read off from (ι_ξ ω) ∧ ω ∈ ∧⁵V ≅ V: row a of K is
// the image of ε_a. Normalized by λ(e123 + e456) = 1.
template <class S>
HitchinResult<S> hitchin_endo(const SymplecticSpace<S>& V, CSpan<S> w) {
  const Vec<S> om = V.from_w(w);
  Matrix<S> K(6, 6);
  for (int a = 0; a < 6; ++a) {
    // ι_{ε_a} ω as coefficients on e_y ∧ e_z (y < z).
    S two[6][6] = {};
    for (std::size_t c = 0; c < 20; ++c) {
      if (om[c].is_zero()) continue;
      const auto [i, j, k] = wedge::kTriples[c];
      if (a == i) two[j][k] += om[c];
      if (a == j) two[i][k] -= om[c];
      if (a == k) two[i][j] += om[c];
    }
    for (int y = 0; y < 6; ++y)
      for (int z = y + 1; z < 6; ++z) {
        if (two[y][z].is_zero()) continue;
        for (std::size_t c = 0; c < 20; ++c) {
          if (om[c].is_zero()) continue;
          const auto [i, j, k] = wedge::kTriples[c];
          if (i == y || i == z || j == y || j == z || k == y || k == z) continue;
          int v = 0;
          while (v == y || v == z || v == i || v == j || v == k) ++v;
          // e_y∧e_z∧e_ijk = s1 e_{sorted}, and e_v ∧ e_{sorted} = (-1)^v e_123456.
          const int s1 = wedge::perm_sign<5>({y, z, i, j, k});
          const int sign = (v % 2 == 0 ? 1 : -1) * s1;
          const S t = two[y][z] * om[c];
          K(static_cast<std::size_t>(a), static_cast<std::size_t>(v)) += sign > 0 ? t : -t;
        }
      }
  }
  const Matrix<S> K2 = K * K;
  return {K, K2(0, 0) + V.field().zero()};
}

enum class Stratum { kSigma, kOmega, kFSmoothLocus, kGeneric };

inline std::string_view stratum_name(Stratum s) {
  switch (s) {
    case Stratum::kSigma: return "SIGMA";
    case Stratum::kOmega: return "OMEGA";
    case Stratum::kFSmoothLocus: return "F_SMOOTH_LOCUS";
    case Stratum::kGeneric: return "GENERIC";
  }
  return "?";
}

template <class S>
struct StratumLabel {
  Stratum kind = Stratum::kGeneric;
  S lambda{};
  std::optional<Matrix<S>> lagrangian;  // SIGMA
  std::optional<Vec<S>> x_omega;        // OMEGA
  std::optional<Matrix<S>> tangency;    // F_SMOOTH_LOCUS: Lagrangian of the tangency point
};

// Decision order Σ, Ω, F, generic. Rank signatures (fixed from constructed
// witnesses): support dim 3 on Σ, 1 on Ω∖Σ, 0 elsewhere; λ = 0 on F.
template <class S>
StratumLabel<S> stratum(const SymplecticSpace<S>& V, CSpan<S> w) {
  StratumLabel<S> out;
  const Matrix<S> sup = support_space(V, w);
  if (sup.rows() == 3 && is_lagrangian(V, sup)) {
    out.kind = Stratum::kSigma;
    out.lagrangian = row_basis(sup);
    return out;
  }
  if (sup.rows() >= 1) {
    out.kind = Stratum::kOmega;
    out.x_omega = sup.row(0);
    return out;
  }
  const auto h = hitchin_endo(V, w);
  out.lambda = h.lambda;
  if (h.lambda.is_zero()) {
    out.kind = Stratum::kFSmoothLocus;
    out.tangency = row_basis(h.K.transpose());
    return out;
  }
  out.kind = Stratum::kGeneric;
  return out;
}

template <class S>
struct BisecantWitness {
  SigmaPoint<S> p, q;  // equal in the tangent case
  ProjSubspace<S> line;
  bool tangent = false;
};

// The unique bisecant or tangent line of Σ through w. For λ ≠ 0 the two
// eigenspaces K v = ±√λ v are the Lagrangians; for λ = 0, K ≠ 0 the column
// space of K is the tangency Lagrangian.
template <class S>
BisecantWitness<S> bisecant_decompose(const SymplecticSpace<S>& V, CSpan<S> w) {
  const auto& F = V.field();
  const auto h = hitchin_endo(V, w);
  if (h.lambda.is_zero()) {
    if (rank(h.K) != 3) throw Error(ErrorCode::kInOmega, "lambda = 0 and rank K != 3: point lies in Omega");
    const Matrix<S> L = row_basis(h.K.transpose());
    BisecantWitness<S> out{sigma_point(V, L), sigma_point(V, L), {}, true};
    out.line = ProjSubspace<S>(stack(row_matrix(out.p.plucker.coords()), row_matrix(Vec<S>(w.begin(), w.end()))));
    return out;
  }
  const auto root = F.sqrt(h.lambda);
  if (!root) throw Error(ErrorCode::kNotSplit, "lambda is not a square in the base field");
  Matrix<S> Ls[2];
  for (int sgn = 0; sgn < 2; ++sgn) {
    const S mu = sgn == 0 ? *root : -*root;
    Matrix<S> M = h.K;
    for (std::size_t i = 0; i < 6; ++i) M(i, i) -= mu;
    Ls[sgn] = kernel(M, F);
    if (Ls[sgn].rows() != 3) throw Error(ErrorCode::kInvalidArgument, "eigenspace of K is not 3-dimensional");
  }
  BisecantWitness<S> out{sigma_point(V, Ls[0]), sigma_point(V, Ls[1]), {}, false};
  out.line = ProjSubspace<S>(stack(row_matrix(out.p.plucker.coords()), row_matrix(out.q.plucker.coords())));
  return out;
}

// Quadrics through Σ as coefficient vectors over the 105 degree-2 monomials of
// P^13, plus their symmetric matrices (off-diagonal entries halved).
template <class S>
struct QuadricIdeal {
  Matrix<S> coeffs;
  std::vector<Matrix<S>> mats;

  std::size_t size() const { return mats.size(); }
  S eval(std::size_t k, CSpan<S> x) const { return SymplecticSpace<S>::bilinear(mats[k], x, x); }
  bool vanishes_at(CSpan<S> x) const {
    for (std::size_t k = 0; k < mats.size(); ++k)
      if (!eval(k, x).is_zero()) return false;
    return true;
  }
};

template <class S>
Matrix<S> quadric_evaluation_matrix(const std::vector<Vec<S>>& points, const FieldOf<S>& F) {
  const MonomialBasis mons(14, 2);
  Matrix<S> E(points.size(), mons.size());
  for (std::size_t i = 0; i < points.size(); ++i) E.set_row(i, mons.evaluate<S>(points[i], F));
  return E;
}

// Kernel of the evaluation of the 105 quadratic monomials at `points`, checked
// for stability against `extra` further points (kRankUnstable otherwise).
template <class S>
Matrix<S> sigma_quadric_ideal(const SymplecticSpace<S>& V, const std::vector<Vec<S>>& points,
                              const std::vector<Vec<S>>& extra) {
  const auto& F = V.field();
  if (points.size() < 150) throw Error(ErrorCode::kInvalidArgument, "sigma_quadric_ideal needs >= 150 points");
  const Matrix<S> E1 = quadric_evaluation_matrix(points, F);
  const Matrix<S> K1 = row_basis(kernel(E1, F));
  const Matrix<S> K2 = row_basis(kernel(stack(E1, quadric_evaluation_matrix(extra, F)), F));
  if (!(K1 == K2)) throw Error(ErrorCode::kRankUnstable, "quadric ideal changed when adding points");
  return K2;
}

template <class S>
QuadricIdeal<S> make_quadric_ideal(const Matrix<S>& coeffs, const FieldOf<S>& F) {
  const MonomialBasis mons(14, 2);
  const S half = F.from_int(2).inverse();
  QuadricIdeal<S> I{coeffs, {}};
  for (std::size_t k = 0; k < coeffs.rows(); ++k) {
    Matrix<S> Q(14, 14);
    for (std::size_t m = 0; m < mons.size(); ++m) {
      const auto& t = mons.term(m);
      const S c = coeffs(k, m);
      if (c.is_zero()) continue;
      if (t[0] == t[1]) {
        Q(t[0], t[0]) += c;
      } else {
        Q(t[0], t[1]) += c * half;
        Q(t[1], t[0]) += c * half;
      }
    }
    I.mats.push_back(std::move(Q));
  }
  return I;
}

// Random point of Σ: random symmetric B in a random adapted frame.
template <class S>
SigmaPoint<S> sample_sigma(const SymplecticSpace<S>& V, std::uint64_t seed) {
  Rng rng(seed);
  const Matrix<S> L0 = random_lagrangian(V, rng);
  const Matrix<S> U = random_transverse_lagrangian(V, L0, rng);
  const auto fr = adapted_frame(V, L0, U);
  return exp_point(V, fr, random_symmetric<S>(V.field(), rng));
}

// 150 + 20 points from derived seeds; the stabilized ideal (21 quadrics).
template <class S>
QuadricIdeal<S> build_quadric_ideal(const SymplecticSpace<S>& V, std::uint64_t seed) {
  std::vector<Vec<S>> pts, extra;
  for (std::uint64_t i = 0; i < 150; ++i) pts.push_back(sample_sigma(V, derive_seed(seed, i)).plucker.coords());
  for (std::uint64_t i = 150; i < 170; ++i)
    extra.push_back(sample_sigma(V, derive_seed(seed, i)).plucker.coords());
  return make_quadric_ideal(sigma_quadric_ideal(V, pts, extra), V.field());
}

// Random Lagrangian containing the vector x.
template <class S>
Matrix<S> random_lagrangian_through(const SymplecticSpace<S>& V, const Vec<S>& x, Rng& rng) {
  const auto& F = V.field();
  for (int attempt = 0; attempt < 50; ++attempt) {
    Matrix<S> rows = row_matrix(x);
    for (int k = 0; k < 2; ++k) {
      // α-orthogonal complement of the current rows, then a random member.
      const Matrix<S> perp = kernel(rows * V.alpha(), F);
      rows.append_row(random_combination(perp, F, rng));
    }
    if (rank(rows) == 3) return rows;
  }
  throw Error(ErrorCode::kChartFailure, "could not extend vector to a Lagrangian");
}

template <class S>
struct OmegaSample {
  Vec<S> w;                      // W-coordinates
  Vec<S> x;                      // the common point of the three planes
  std::vector<Matrix<S>> planes;  // the Lagrangians used
};

// Random point of the span of three Lagrangians through a common random x.
template <class S>
OmegaSample<S> sample_omega(const SymplecticSpace<S>& V, std::uint64_t seed) {
  const auto& F = V.field();
  Rng rng(seed);
  for (;;) {
    OmegaSample<S> out;
    out.x = random_vec<S>(6, F, rng);
    if (is_zero_vec(out.x)) continue;
    Vec<S> w(V.w_dim());
    for (int k = 0; k < 3; ++k) {
      out.planes.push_back(random_lagrangian_through(V, out.x, rng));
      w = axpy(std::move(w), F.random_nonzero(rng), V.to_w(plucker20(out.planes.back())));
    }
    if (support_space(V, w).rows() != 1) continue;  // landed on Σ by accident
    out.w = std::move(w);
    return out;
  }
}

template <class S>
Vec<S> sample_generic(const SymplecticSpace<S>& V, std::uint64_t seed) {
  Rng rng(seed);
  for (;;) {
    auto w = random_vec<S>(V.w_dim(), V.field(), rng);
    if (!is_zero_vec(w)) return w;
  }
}

template <class S>
struct OmegaWitness {
  Vec<S> x_omega;          // in V
  ProjSubspace<S> p4;      // P⁴_ω in W-coordinates
  Matrix<S> quadric;       // 5x5 symmetric, on the rref coordinates of p4
};

// Restriction of a quadric (symmetric matrix) to the row span of P.
template <class S>
Matrix<S> restrict_quadric(const Matrix<S>& Q, const Matrix<S>& P) {
  return P * Q * P.transpose();
}

// x(ω) is the support line of ω; P⁴_ω = P((x ∧ ∧²V) ∩ W); Q_ω is cut on P⁴_ω
// by the quadrics of Σ (their restrictions span a single quadric).
template <class S>
OmegaWitness<S> omega_witness(const SymplecticSpace<S>& V, const QuadricIdeal<S>& ideal, CSpan<S> w) {
  const auto& F = V.field();
  const Matrix<S> sup = support_space(V, w);
  if (sup.rows() != 1) throw Error(ErrorCode::kNotInOmega, "support of omega is not a single line");
  OmegaWitness<S> out;
  out.x_omega = sup.row(0);
  Matrix<S> X(0, 20);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      Matrix<S> L(3, 6);
      L.set_row(0, out.x_omega);
      L(1, i) = F.one();
      L(2, j) = F.one();
      X.append_row(plucker20(L));
    }
  const Matrix<S> combos = left_kernel(X * V.d_alpha().transpose(), F);
  Matrix<S> P(0, V.w_dim());
  const Matrix<S> in_w = combos * X;
  for (std::size_t r = 0; r < in_w.rows(); ++r) P.append_row(V.to_w(in_w.row(r)));
  out.p4 = ProjSubspace<S>(P);
  if (out.p4.dim() != 4) throw Error(ErrorCode::kNotInOmega, "P4_omega has the wrong dimension");
  Matrix<S> restricted(0, 15);
  for (const auto& Q : ideal.mats) {
    const Matrix<S> R = restrict_quadric(Q, out.p4.basis());
    Vec<S> v;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i; j < 5; ++j) v.push_back(R(i, j));
    restricted.append_row(v);
  }
  const Matrix<S> span = row_basis(restricted);
  if (span.rows() != 1) throw Error(ErrorCode::kNotInOmega, "quadrics of Sigma do not cut a single quadric on P4");
  out.quadric = Matrix<S>(5, 5);
  std::size_t n = 0;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i; j < 5; ++j) out.quadric(i, j) = out.quadric(j, i) = span(0, n++);
  return out;
}

// Points of Q_ω = P⁴_ω ∩ Σ (W-coordinates). One Lagrangian through x(ω) seeds
// the search; every further point is the second intersection of a random line
// through it with the quadric, which stays rational.
template <class S>
std::vector<Vec<S>> sample_q_omega(const SymplecticSpace<S>& V, const OmegaWitness<S>& wit, std::size_t count,
                                   Rng& rng) {
  const auto& F = V.field();
  const Vec<S> q0w = V.to_w(plucker20(random_lagrangian_through(V, wit.x_omega, rng)));
  const Vec<S> q0 = wit.p4.coords_of(q0w);
  std::vector<Vec<S>> out;
  int misses = 0;
  while (out.size() < count) {
    const Vec<S> r = random_vec<S>(5, F, rng);
    const S qr = SymplecticSpace<S>::bilinear(wit.quadric, r, r);
    const S b = SymplecticSpace<S>::bilinear(wit.quadric, q0, r);
    // Q(s q0 + t r) = 2 s t b + t² Q(r) (Q(q0) = 0), second root (s:t) = (Q(r) : -2b).
    Vec<S> c = axpy(scaled(q0, qr), -(b + b), r);
    if (is_zero_vec(c) || qr.is_zero()) {
      if (++misses > 100) throw Error(ErrorCode::kNotSplit, "degenerate quadric sampling");
      continue;
    }
    out.push_back(wit.p4.from_coords(c));
  }
  return out;
}

}  // namespace lg36
