#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lg36/fibration.hpp"
#include "lg36/segre.hpp"

namespace lg36 {

// X = Σ ∩ p10 with a cubic C0 ⊂ X and three tangent hyperplanes (the marks
// x, y, z) through p10. The mark covectors are the basis pX of (P^10)^⊥, so the
// marks are the coordinate points of P²_X.
template <class S>
struct MarkedFano {
  SectionTower<S> tower;  // p10 and a P^9 inside it through three points of C0
  TwistedCubic<S> C0;
  std::array<TangentHyperplaneSample<S>, 3> marks;
  Matrix<S> pX;
  QuadricIdeal<S> ideal;  // quadrics of Σ

  const ProjSubspace<S>& p10() const { return *tower.p10; }
  bool in_x(CSpan<S> w) const { return is_zero_vec(apply(pX, w)); }
  bool curve_in_x(const TwistedCubic<S>& C) const {
    for (std::size_t r = 0; r < 4; ++r)
      if (!in_x(C.span3().basis().row_span(r))) return false;
    return true;
  }
};

inline int mark_index(char c) {
  switch (c) {
    case 'x': return 0;
    case 'y': return 1;
    case 'z': return 2;
    default: throw Error(ErrorCode::kInvalidArgument, std::string("word letters must be x, y, z; got ") + c);
  }
}

// Formal class of C0(w1...wk) in the divisor bookkeeping of the group law:
// (-1)^k C0 + sum (-1)^(k-i) w_i - [k odd] c_inf.
struct FormalClass {
  int curve = 1;
  std::array<int, 3> marks{};
  int c_inf = 0;
  friend bool operator==(const FormalClass&, const FormalClass&) = default;
};

inline FormalClass formal_class(const std::string& word) {
  FormalClass f;
  for (char c : word) {
    // C(w) = -C + w - c_inf
    f.curve = -f.curve;
    for (auto& m : f.marks) m = -m;
    f.c_inf = -f.c_inf - 1;
    f.marks[static_cast<std::size_t>(mark_index(c))] += 1;
  }
  return f;
}

struct Chain {
  std::string letters;
  FormalClass formal;
};

inline Chain make_chain(const std::string& word) { return {word, formal_class(word)}; }

// Residual cubic C' with Y ∩ X = C ∪ C' (Y the Segre threefold of C and the
// mark). Each P^4 of the pencil spanned by span3(C) inside span7(Y) ∩ p10
// meets Σ in one further point y = x + k r (x ∈ span3(C)); quadrics of Σ
// vanishing on span3(C) make the conditions on (x, k) linear.
template <class S>
TwistedCubic<S> residual_cubic(const SymplecticSpace<S>& V, const TwistedCubic<S>& C,
                               const TangentHyperplaneSample<S>& mark, const Matrix<S>& pX,
                               const QuadricIdeal<S>& ideal) {
  const auto& F = V.field();
  const Matrix<S> beta = beta_for_mark(V, C, mark.tangency.lagrangian);
  const Matrix<S> dB = contraction_matrix(beta) * V.w_basis().transpose();
  const Matrix<S> span7 = kernel(dB, F);
  if (span7.rows() != 8) throw Error(ErrorCode::kResidualDegenerate, "Segre span is not a P^7");
  for (std::size_t r = 0; r < 8; ++r)
    if (!dot(mark.h.coords(), span7.row_span(r)).is_zero())
      throw Error(ErrorCode::kResidualDegenerate, "Segre span not inside the mark hyperplane");
  const Matrix<S> Lam = kernel(stack(dB, pX), F);
  const Matrix<S>& Sb = C.span3().basis();
  if (Lam.rows() != 6 || rank(stack(Lam, Sb)) != 6)
    throw Error(ErrorCode::kResidualDegenerate, "span7 ∩ p10 is not a P^5 through span3(C)");
  Matrix<S> comp = Sb;
  std::vector<Vec<S>> extra;
  for (std::size_t r = 0; r < Lam.rows() && extra.size() < 2; ++r) {
    Matrix<S> t = comp;
    t.append_row(Lam.row(r));
    if (rank(t) > comp.rows()) {
      comp = std::move(t);
      extra.push_back(Lam.row(r));
    }
  }
  // Quadrics of Σ vanishing on span3(C).
  Matrix<S> flat(ideal.size(), 10);
  for (std::size_t k = 0; k < ideal.size(); ++k) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i; j < 4; ++j)
        flat(k, n++) = SymplecticSpace<S>::bilinear(ideal.mats[k], Sb.row_span(i), Sb.row_span(j));
  }
  const Matrix<S> combos = kernel(flat.transpose(), F);
  std::vector<Matrix<S>> Qs;
  for (std::size_t c = 0; c < combos.rows(); ++c) {
    Matrix<S> Q(V.w_dim(), V.w_dim());
    for (std::size_t k = 0; k < ideal.size(); ++k)
      if (!combos(c, k).is_zero()) Q += combos(c, k) * ideal.mats[k];
    Qs.push_back(std::move(Q));
  }
  std::vector<SigmaPoint<S>> pts;
  for (std::int64_t s = 1; s <= 40 && pts.size() < 5; ++s) {
    const Vec<S> r = axpy(extra[0], F.from_int(s), extra[1]);
    Matrix<S> eqs(0, 5);
    for (const auto& Q : Qs) {
      Vec<S> row(5);
      const Vec<S> Qr = apply(Q, CSpan<S>(r));
      for (std::size_t i = 0; i < 4; ++i) row[i] = F.from_int(2) * dot(Sb.row_span(i), Qr);
      row[4] = dot(r, Qr);
      eqs.append_row(row);
    }
    const Matrix<S> K = kernel(eqs, F);
    if (K.rows() != 1 || K(0, 4).is_zero()) continue;
    Vec<S> y = scaled(r, K(0, 4));
    for (std::size_t i = 0; i < 4; ++i) y = axpy(std::move(y), K(0, i), Sb.row_span(i));
    const auto L = on_sigma(V, CSpan<S>(y));
    if (!L || on_curve(C, CSpan<S>(y))) continue;
    pts.push_back(sigma_point(V, *L));
  }
  if (pts.size() < 4) throw Error(ErrorCode::kResidualDegenerate, "too few residual points");
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      for (std::size_t c = b + 1; c < pts.size(); ++c) {
        if (!pairwise_transverse(pts[a].lagrangian, pts[b].lagrangian, pts[c].lagrangian)) continue;
        auto C2 = cubic_through_triple(V, pts[a], pts[b], pts[c]);
        for (const auto& q : pts)
          if (!on_curve(C2, CSpan<S>(q.plucker.coords())))
            throw Error(ErrorCode::kResidualDegenerate, "residual points are not on one cubic");
        if (curve_intersection(C, C2, F).length != 2)
          throw Error(ErrorCode::kResidualDegenerate, "residual cubic is not bisecant");
        return C2;
      }
  throw Error(ErrorCode::kResidualDegenerate, "no transverse triple among residual points");
}

template <class S>
TwistedCubic<S> residual_cubic(const SymplecticSpace<S>& V, const MarkedFano<S>& X, const TwistedCubic<S>& C,
                               std::size_t mark) {
  return residual_cubic(V, C, X.marks.at(mark), X.pX, X.ideal);
}

template <class S>
TwistedCubic<S> chain_apply(const SymplecticSpace<S>& V, const MarkedFano<S>& X, const TwistedCubic<S>& start,
                            const std::string& word) {
  TwistedCubic<S> C = start;
  for (char c : word) C = residual_cubic(V, X, C, static_cast<std::size_t>(mark_index(c)));
  return C;
}

// Builds C0 from a random transverse triple, three marks tangent at random
// points of Σ through span3(C0), p10 = their common zero set, and a P^9 ⊂ p10
// through the triple. Resamples (bounded) on unlucky configurations.
template <class S>
MarkedFano<S> marked_fano_setup(const SymplecticSpace<S>& V, std::uint64_t seed, const QuadricIdeal<S>& ideal,
                                int budget = 50, int* resamples = nullptr) {
  const auto& F = V.field();
  for (int attempt = 0; attempt < budget; ++attempt) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    try {
      std::array<SigmaPoint<S>, 3> xi;
      for (auto& p : xi) p = sigma_point(V, random_lagrangian(V, rng));
      if (!pairwise_transverse(xi[0].lagrangian, xi[1].lagrangian, xi[2].lagrangian))
        throw Error(ErrorCode::kNotTransverse, "triple");
      auto C0 = cubic_through_triple(V, xi[0], xi[1], xi[2]);
      std::array<TangentHyperplaneSample<S>, 3> marks;
      Matrix<S> pX(0, V.w_dim());
      for (auto& m : marks) {
        m = tangent_hyperplane_at(V, sigma_point(V, random_lagrangian(V, rng)), C0.span3().basis(), rng);
        pX.append_row(m.h.coords());
      }
      if (rank(pX) != 3) throw Error(ErrorCode::kNotHyperplane, "mark covectors are dependent");
      ProjSubspace<S> p10(kernel(pX, F));
      std::vector<Vec<S>> pts;
      for (const auto& p : xi) pts.push_back(p.plucker.coords());
      auto tower = section_inside(p10, pts, F, derive_seed(seed, 1000 + static_cast<std::uint64_t>(attempt)));
      MarkedFano<S> X{std::move(tower), std::move(C0), std::move(marks), std::move(pX), ideal};
      // Each mark must give a residual (transverse chart, generic Segre).
      for (std::size_t m = 0; m < 3; ++m) (void)residual_cubic(V, X, X.C0, m);
      return X;
    } catch (const Error& e) {
      if (!is_resamplable(e.code())) throw;
      if (resamples) ++*resamples;
    }
  }
  throw Error(ErrorCode::kResidualDegenerate, "marked Fano setup: resample budget exhausted");
}

template <class S>
struct ChainPoint {
  Vec<S> h;           // covector of the hyperplane join(span7, p10)
  ProjPoint<S> coords;  // in P²_X (basis pX)
};

// The 2-forms vanishing on every plane of C1 and C2 (a 3-dim space containing α).
template <class S>
Matrix<S> beta_space(const SymplecticSpace<S>& V, const TwistedCubic<S>& C1, const TwistedCubic<S>& C2) {
  Matrix<S> rows(0, 15);
  for (const auto* C : {&C1, &C2})
    for (std::int64_t t = 1; t <= 5; ++t) {
      const Param<S> p = t == 5 ? Param<S>::infinity() : Param<S>::at(V.field().from_int(t));
      const Matrix<S> R = C->plane(p);
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b) {
          Vec<S> row(15);
          std::size_t n = 0;
          for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = i + 1; j < 6; ++j) row[n++] = R(a, i) * R(b, j) - R(a, j) * R(b, i);
          rows.append_row(row);
        }
    }
  return kernel(rows, V.field());
}

template <class S>
Matrix<S> two_form_from(const Vec<S>& v) {
  Matrix<S> M(6, 6);
  std::size_t n = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      M(i, j) = v[n];
      M(j, i) = -v[n];
      ++n;
    }
  return M;
}

// The mark x with C2 = C1(x), recovered from the Segre threefold through
// C1 ∪ C2: H = join(span7, p10) is the tangent hyperplane of the mark.
template <class S>
ChainPoint<S> find_chain_point(const SymplecticSpace<S>& V, const MarkedFano<S>& X, const TwistedCubic<S>& C1,
                               const TwistedCubic<S>& C2, const QuarticForm<S>* FX = nullptr,
                               std::uint64_t seed = 0) {
  const auto& F = V.field();
  if (curve_intersection(C1, C2, F).length != 2)
    throw Error(ErrorCode::kInvalidArgument, "curves are not a bisecant pair");
  const Matrix<S> K = beta_space(V, C1, C2);
  if (K.rows() < 2) throw Error(ErrorCode::kLineCount, "no Segre threefold through the pair");
  Rng rng(seed);
  for (int attempt = 0; attempt < 10; ++attempt) {
    const Matrix<S> beta = two_form_from(random_combination(K, F, rng));
    const Matrix<S> span7 = kernel(contraction_matrix(beta) * V.w_basis().transpose(), F);
    if (span7.rows() != 8) continue;
    const ProjSubspace<S> H = join(ProjSubspace<S>(span7), X.p10());
    if (H.linear_dim() != 13) throw Error(ErrorCode::kNotHyperplane, "join(span7, p10) is not a hyperplane");
    Vec<S> h = H.orthogonal_complement(F).basis().row(0);
    const auto c = coords_in_rows(X.pX, CSpan<S>(h));
    if (!c) throw Error(ErrorCode::kNotHyperplane, "hyperplane does not contain p10");
    ChainPoint<S> out{std::move(h), ProjPoint<S>(*c)};
    if (FX && !FX->eval(out.coords.coords(), F).is_zero()) throw Error(ErrorCode::kNotOnFx, "point is not on F_X");
    return out;
  }
  throw Error(ErrorCode::kNotHyperplane, "no 2-form with a P^7 Segre span");
}

// Tangency point of a tangent hyperplane h (experimental): ω_h, the W-vector
// dual to h under the wedge pairing, lies on F, and its tangency Lagrangian is
// the point where h touches Σ. kNotOnFx if ω_h is not on the smooth locus of F.
template <class S>
SigmaPoint<S> recover_tangency(const SymplecticSpace<S>& V, CSpan<S> h) {
  const auto& F = V.field();
  const auto w = solve(V.pairing().transpose(), h);
  if (!w) throw Error(ErrorCode::kRankDeficient, "pairing is degenerate");
  const auto st = stratum(V, CSpan<S>(*w));
  if (st.kind != Stratum::kFSmoothLocus) throw Error(ErrorCode::kNotOnFx, "hyperplane is not tangent to Σ");
  auto p = sigma_point(V, *st.tangency);
  Rng rng(0);
  const auto T = tangent_space(V, p, rng);
  for (std::size_t r = 0; r < T.basis().rows(); ++r)
    if (!dot(h, T.basis().row_span(r)).is_zero()) throw Error(ErrorCode::kNotOnFx, "recovered point is not the tangency");
  (void)F;
  return p;
}

// Horizontal lines of V_{C1} contained in V_{C2}, by elimination: a line
// through u ∈ P² lies in V_{C2} iff 9 conics in u vanish. Only base-field
// solutions are returned (as u, in C1's frame).
template <class S>
std::vector<Vec<S>> common_horizontal_lines(const SymplecticSpace<S>& V, const TwistedCubic<S>& C1,
                                            const TwistedCubic<S>& C2, std::uint64_t seed = 0);

// Segre threefold from the common horizontal lines; kLineCount unless exactly 3.
template <class S>
SegreThreefold<S> segre_from_common_lines(const SymplecticSpace<S>& V, const TwistedCubic<S>& C1,
                                          const TwistedCubic<S>& C2, std::uint64_t seed = 0) {
  const auto us = common_horizontal_lines(V, C1, C2, seed);
  if (us.size() != 3) throw Error(ErrorCode::kLineCount, std::to_string(us.size()) + " common horizontal lines");
  ConjugateLines<S> cl;
  for (std::size_t i = 0; i < 3; ++i) cl.L[i] = horizontal_line(C1, CSpan<S>(us[i]));
  return segre_from_lines(V, std::move(cl));
}

namespace detail {

// Conics over MonomialBasis(3, 2): u0², u0u1, u0u2, u1², u1u2, u2².
template <class S>
Vec<S> conic_product(CSpan<S> l1, CSpan<S> l2) {
  static const std::size_t idx[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  Vec<S> q(6);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) q[idx[a][b]] += l1[a] * l2[b];
  return q;
}

// Conic as a quadratic in u2 at (u0, u1) = (x, y): coefficients {c0, c1, c2}.
template <class S>
std::array<S, 3> conic_in_u2(CSpan<S> q, const S& x, const S& y) {
  return {q[0] * x * x + q[1] * x * y + q[3] * y * y, q[2] * x + q[4] * y, q[5]};
}

template <class S>
S res22(const std::array<S, 3>& a, const std::array<S, 3>& b) {
  const S p = a[2] * b[0] - a[0] * b[2], q = a[2] * b[1] - a[1] * b[2], r = a[1] * b[0] - a[0] * b[1];
  return p * p - q * r;
}

}  // namespace detail

template <class S>
std::vector<Vec<S>> common_horizontal_lines(const SymplecticSpace<S>& V, const TwistedCubic<S>& C1,
                                            const TwistedCubic<S>& C2, std::uint64_t seed) {
  const auto& F = V.field();
  // Rows k: the linear maps u ↦ [u | 0] E1 E2⁻¹ and u ↦ [0 | B1 u] E1 E2⁻¹.
  const Matrix<S> G = C1.frame.E * C2.frame.E_inv;
  Matrix<S> A(3, 6), Bm(3, 6);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t c = 0; c < 6; ++c) {
      A(k, c) = G(k, c);
      for (std::size_t j = 0; j < 3; ++j) Bm(k, c) += C1.B(j, k) * G(3 + j, c);
    }
  // y = λ a(u) + μ b(u) in C2's frame; condition y1 ∥ B2⁻¹ y2.
  auto split = [&](const Matrix<S>& M) {
    // columns as linear forms in u: first half y1, second half z = B2⁻¹ y2
    std::array<Vec<S>, 3> y1, z;
    for (std::size_t i = 0; i < 3; ++i) {
      y1[i] = M.col(i);
      z[i] = Vec<S>(3);
      for (std::size_t j = 0; j < 3; ++j) z[i] = axpy(std::move(z[i]), C2.B_inv(i, j), M.col(3 + j));
    }
    return std::make_pair(y1, z);
  };
  const auto [a1, az] = split(A);
  const auto [b1, bz] = split(Bm);
  Matrix<S> conics(0, 6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      using detail::conic_product;
      auto minor = [&](const std::array<Vec<S>, 3>& p1, const std::array<Vec<S>, 3>& pz) {
        return add(conic_product<S>(p1[i], pz[j]), CSpan<S>(scaled(conic_product<S>(p1[j], pz[i]), -F.one())));
      };
      conics.append_row(minor(a1, az));
      conics.append_row(minor(b1, bz));
      Vec<S> mixed = add(add(conic_product<S>(a1[i], bz[j]), CSpan<S>(conic_product<S>(b1[i], az[j]))),
                         CSpan<S>(scaled(add(conic_product<S>(a1[j], bz[i]), CSpan<S>(conic_product<S>(b1[j], az[i]))),
                                         -F.one())));
      conics.append_row(mixed);
    }
  const Matrix<S> net = row_basis(conics);
  std::vector<Vec<S>> out;
  if (net.rows() == 0 || net.rows() >= 6) return out;
  // Random coordinates u = v T to keep special points off the axes.
  Rng rng(seed);
  Matrix<S> T;
  do T = Matrix<S>::random(3, 3, F, rng);
  while (rank(T) != 3);
  auto pull = [&](CSpan<S> q) {
    // conic q(u) with u = v T, as a conic in v
    Vec<S> r(6);
    static const std::size_t idx[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a; b < 3; ++b) {
        const S c = q[idx[a][b]];
        if (c.is_zero()) continue;
        r = add(std::move(r), CSpan<S>(scaled(detail::conic_product<S>(T.col(a), T.col(b)), c)));
      }
    return r;
  };
  std::vector<Vec<S>> qs;
  for (std::size_t k = 0; k < net.rows(); ++k) qs.push_back(pull(net.row_span(k)));
  const Vec<S> g1 = random_combination(Matrix<S>::from_rows(qs), F, rng);
  const Vec<S> g2 = random_combination(Matrix<S>::from_rows(qs), F, rng);
  // Res_{v2}(g1, g2) at (1, y) is a quartic in y; interpolate on 9 nodes.
  std::vector<S> xs, ys;
  for (std::int64_t k = 0; k < 9; ++k) {
    xs.push_back(F.from_int(k));
    ys.push_back(detail::res22(detail::conic_in_u2<S>(g1, F.one(), xs.back()),
                               detail::conic_in_u2<S>(g2, F.one(), xs.back())));
  }
  const auto res = interpolate(xs, ys, F);
  std::vector<std::pair<S, S>> bases;  // (v0, v1)
  if (res.is_zero()) return out;
  for (const auto& r : uniroots(res, F)) bases.emplace_back(F.one(), r);
  if (res.degree() < 4) bases.emplace_back(F.zero(), F.one());
  for (const auto& [x, y] : bases) {
    std::vector<BinaryForm<S>> fs;
    for (const auto& q : qs) {
      const auto c = detail::conic_in_u2<S>(q, x, y);
      fs.push_back({UniPoly<S>(std::vector<S>{c[0], c[1], c[2]}), 2});
    }
    const auto g = binary_gcd(fs);
    if (!g || g->first.degree() != 1) continue;
    const S v2 = -g->first.coeff(0) / g->first.coeff(1);
    const Vec<S> v{x, y, v2};
    Vec<S> u = row_times(CSpan<S>(v), T);
    bool dup = false;
    for (const auto& o : out) dup = dup || ProjPoint<S>(o) == ProjPoint<S>(u);
    if (!dup) out.push_back(std::move(u));
  }
  return out;
}

}  // namespace lg36
