#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lg36/monomials.hpp"
#include "lg36/poly.hpp"
#include "lg36/symplectic.hpp"

namespace lg36 {

// Polynomials in the 4 coordinates of a P^3, as coefficient vectors over
// MonomialBasis(4, d).
namespace p3 {

inline const MonomialBasis& quadrics() {
  static const MonomialBasis b(4, 2);
  return b;
}
inline const MonomialBasis& cubics() {
  static const MonomialBasis b(4, 3);
  return b;
}

template <class S>
Vec<S> linear_times_linear(CSpan<S> l1, CSpan<S> l2) {
  Vec<S> q(10);
  for (std::uint8_t a = 0; a < 4; ++a)
    for (std::uint8_t b = 0; b < 4; ++b) {
      std::vector<std::uint8_t> t{std::min(a, b), std::max(a, b)};
      q[quadrics().index_of(t)] += l1[a] * l2[b];
    }
  return q;
}

template <class S>
Vec<S> quadric_times_linear(CSpan<S> q, CSpan<S> l) {
  Vec<S> c(20);
  for (std::size_t m = 0; m < 10; ++m) {
    if (q[m].is_zero()) continue;
    const auto& t = quadrics().term(m);
    for (std::uint8_t v = 0; v < 4; ++v) {
      std::vector<std::uint8_t> u{t[0], t[1], v};
      std::sort(u.begin(), u.end());
      c[cubics().index_of(u)] += q[m] * l[v];
    }
  }
  return c;
}

template <class S>
S eval_quadric(CSpan<S> q, CSpan<S> x) {
  S s{};
  for (std::size_t m = 0; m < 10; ++m) {
    if (q[m].is_zero()) continue;
    const auto& t = quadrics().term(m);
    s += q[m] * x[t[0]] * x[t[1]];
  }
  return s;
}

}  // namespace p3

// 2x3 matrix of linear forms on P^3 whose 2x2 minors cut out a cubic curve.
template <class S>
struct DeterminantalNet {
  std::array<std::array<Vec<S>, 3>, 2> M;

  Matrix<S> at(CSpan<S> x) const {
    Matrix<S> m(2, 3);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t j = 0; j < 3; ++j) m(r, j) = dot(M[r][j], x);
    return m;
  }
  // The three 2x2 minors as quadrics, on column pairs (1,2), (0,2), (0,1).
  std::array<Vec<S>, 3> minors() const {
    std::array<Vec<S>, 3> out;
    const int pairs[3][2] = {{1, 2}, {0, 2}, {0, 1}};
    for (int n = 0; n < 3; ++n) {
      const auto j = static_cast<std::size_t>(pairs[n][0]), k = static_cast<std::size_t>(pairs[n][1]);
      Vec<S> a = p3::linear_times_linear<S>(M[0][j], M[1][k]);
      const Vec<S> b = p3::linear_times_linear<S>(M[0][k], M[1][j]);
      for (std::size_t m = 0; m < 10; ++m) a[m] -= b[m];
      out[static_cast<std::size_t>(n)] = std::move(a);
    }
    return out;
  }
};

// Line through p (coordinates on P^3, rank M(p) = 2) meeting the cubic in a
// length-2 scheme: a spans ker M(p), and the two forms M·a cut out the line.
// Returns a 2x4 basis. kDegeneratePlane if the forms are dependent.
template <class S>
Matrix<S> net_bisecant_line(const DeterminantalNet<S>& net, CSpan<S> p, const FieldOf<S>& F) {
  const Matrix<S> Mp = net.at(p);
  if (rank(Mp) != 2) throw Error(ErrorCode::kInvalidArgument, "M(p) must have rank 2 (p off the curve)");
  const Vec<S> a = kernel(Mp, F).row(0);
  Matrix<S> forms(2, 4);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t v = 0; v < 4; ++v) forms(r, v) += a[j] * net.M[r][j][v];
  if (rank(forms) < 2) throw Error(ErrorCode::kDegeneratePlane, "M(p) a forms are dependent");
  return kernel(forms, F);
}

// Length of the intersection of the line spanned by l0, l1 with the zero set
// of the net's minors; nullopt if the line lies inside it.
template <class S>
std::optional<int> net_line_length(const DeterminantalNet<S>& net, CSpan<S> l0, CSpan<S> l1, const FieldOf<S>& F) {
  std::vector<BinaryForm<S>> forms;
  for (const auto& q : net.minors()) {
    // q(s l0 + t l1) = s² q(l0) + s t (q(l0+l1) - q(l0) - q(l1)) + t² q(l1)
    const S a = p3::eval_quadric<S>(q, l0), c = p3::eval_quadric<S>(q, l1);
    const S b = p3::eval_quadric<S>(q, add(Vec<S>(l0.begin(), l0.end()), l1)) - a - c;
    forms.push_back({UniPoly<S>(std::vector<S>{a, b, c}), 2});
  }
  (void)F;
  auto g = binary_gcd(forms);
  if (!g) return std::nullopt;
  return g->first.degree() + g->second;
}

// A cubic map P^1 -> P^N, (s:t) ↦ sum s^(3-k) t^k v_k, with its span and a
// determinantal net in the span's coordinates (pivot entries of the rref basis).
template <class S>
struct ParamCubic {
  std::array<Vec<S>, 4> v;
  ProjSubspace<S> span;
  DeterminantalNet<S> net;

  Vec<S> point(const Param<S>& p) const {
    if (p.infinite) return v[3];
    Vec<S> x = v[0];
    S tk = p.t;
    for (std::size_t k = 1; k < 4; ++k) {
      x = axpy(std::move(x), tk, v[k]);
      tk *= p.t;
    }
    return x;
  }
  Vec<S> coords(CSpan<S> x) const { return span.coords_of(x); }
  bool contains(CSpan<S> x) const {
    if (!span.contains(x)) return false;
    return rank(net.at(coords(x))) <= 1;
  }
  // Coordinates of the parametrization in the span, as 4 binary cubics.
  std::array<BinaryForm<S>, 4> coordinate_forms() const {
    std::array<BinaryForm<S>, 4> out;
    std::array<Vec<S>, 4> c;
    for (std::size_t k = 0; k < 4; ++k) c[k] = coords(v[k]);
    for (std::size_t r = 0; r < 4; ++r)
      out[r] = {UniPoly<S>(std::vector<S>{c[0][r], c[1][r], c[2][r], c[3][r]}), 3};
    return out;
  }
};

// Builds span and net; kNetDim / kSyzygyFail on degenerate input.
template <class S>
ParamCubic<S> make_param_cubic(std::array<Vec<S>, 4> v, const FieldOf<S>& F) {
  ParamCubic<S> C;
  C.v = std::move(v);
  Matrix<S> rows(0, C.v[0].size());
  for (const auto& x : C.v) rows.append_row(x);
  C.span = ProjSubspace<S>(rows);
  if (C.span.dim() != 3) throw Error(ErrorCode::kNetDim, "cubic does not span a P^3");
  // Quadrics through 8 curve points.
  Matrix<S> ev(0, 10);
  for (std::int64_t t = 0; t < 8; ++t) {
    const Vec<S> c = C.coords(C.point(Param<S>::at(F.from_int(t))));
    ev.append_row(p3::quadrics().evaluate<S>(c, F));
  }
  const Matrix<S> Q = kernel(ev, F);
  if (Q.rows() != 3) throw Error(ErrorCode::kNetDim, "quadric space through the curve is not 3-dimensional");
  // Linear syzygies sum_j L_j Q_j = 0; unknowns are the 4 coefficients of each L_j.
  Matrix<S> syz(20, 12);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t a = 0; a < 4; ++a) {
      Vec<S> e(4);
      e[a] = F.one();
      const Vec<S> c = p3::quadric_times_linear<S>(Q.row(j), e);
      for (std::size_t m = 0; m < 20; ++m) syz(m, 4 * j + a) = c[m];
    }
  const Matrix<S> K = kernel(syz, F);
  if (K.rows() != 2) throw Error(ErrorCode::kSyzygyFail, "expected a 2-dimensional space of linear syzygies");
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t j = 0; j < 3; ++j) {
      Vec<S> l(4);
      for (std::size_t a = 0; a < 4; ++a) l[a] = K(r, 4 * j + a);
      C.net.M[r][j] = std::move(l);
    }
  return C;
}

// Twisted cubic on Σ: t ↦ exp(tB) in an adapted frame, through U0 (t = 0),
// exp(B) (t = 1) and U∞ (t = ∞).
template <class S>
struct TwistedCubic {
  SymplecticFrame<S> frame;
  Matrix<S> B;
  Matrix<S> B_inv;
  ParamCubic<S> curve;  // in W-coordinates
  FieldOf<S> field;

  const ProjSubspace<S>& span3() const { return curve.span; }
  const DeterminantalNet<S>& net() const { return curve.net; }

  // Plane of V_C at parameter t, in standard coordinates.
  Matrix<S> plane(const Param<S>& p) const {
    if (p.infinite) return frame.Uinf();
    Matrix<S> X(3, 6);
    for (std::size_t i = 0; i < 3; ++i) {
      X(i, i) = field.one();
      for (std::size_t j = 0; j < 3; ++j) X(i, 3 + j) = p.t * B(i, j);
    }
    return X * frame.E;
  }
};

template <class S>
TwistedCubic<S> cubic_from_chart(const SymplecticSpace<S>& V, const SymplecticFrame<S>& fr, const Matrix<S>& B) {
  const auto& F = V.field();
  if (B.rows() != 3 || !is_symmetric(B)) throw Error(ErrorCode::kNotSymmetric, "B must be symmetric 3x3");
  if (rank(B) != 3) throw Error(ErrorCode::kRankDeficient, "B must be invertible");
  TwistedCubic<S> C{fr, B, inverse(B, F), {}, F};
  // Coefficients of the cubic t ↦ plücker([I | tB] E) from its values at t = 0..3.
  std::vector<Vec<S>> vals;
  for (std::int64_t t = 0; t < 4; ++t) vals.push_back(V.to_w(plucker20(exp_lagrangian(V, fr, F.from_int(t) * B))));
  Matrix<S> Vm(4, 4);
  for (std::size_t t = 0; t < 4; ++t)
    for (std::size_t k = 0; k < 4; ++k) Vm(t, k) = F.from_int(static_cast<std::int64_t>(t)).pow(k);
  const Matrix<S> Vinv = inverse(Vm, F);
  std::array<Vec<S>, 4> v;
  for (std::size_t k = 0; k < 4; ++k) {
    v[k] = Vec<S>(V.w_dim());
    for (std::size_t t = 0; t < 4; ++t) v[k] = axpy(std::move(v[k]), Vinv(k, t), vals[t]);
  }
  C.curve = make_param_cubic(std::move(v), F);
  return C;
}

template <class S>
bool pairwise_transverse(const Matrix<S>& a, const Matrix<S>& b, const Matrix<S>& c) {
  return transverse(a, b) && transverse(b, c) && transverse(a, c);
}

// The unique twisted cubic through x (t = 0), y (t = 1), z (t = ∞).
template <class S>
TwistedCubic<S> cubic_through_triple(const SymplecticSpace<S>& V, const SigmaPoint<S>& x, const SigmaPoint<S>& y,
                                     const SigmaPoint<S>& z) {
  if (!pairwise_transverse(x.lagrangian, y.lagrangian, z.lagrangian))
    throw Error(ErrorCode::kNotTransverse, "triple is not pairwise transverse");
  const auto fr = adapted_frame(V, x.lagrangian, z.lagrangian);
  const auto B = chart(V, fr, y.lagrangian);
  return cubic_from_chart(V, fr, *B);
}

template <class S>
SigmaPoint<S> point_at(const SymplecticSpace<S>& V, const TwistedCubic<S>& C, const Param<S>& t) {
  return sigma_point(V, C.plane(t));
}

template <class S>
bool on_curve(const TwistedCubic<S>& C, CSpan<S> w) {
  return C.curve.contains(w);
}

// Equal spans and 7 sample points of C1 on C2's net.
template <class S>
bool curves_equal(const TwistedCubic<S>& C1, const TwistedCubic<S>& C2, const FieldOf<S>& F) {
  if (!(C1.span3() == C2.span3())) return false;
  for (std::int64_t t = 1; t <= 7; ++t)
    if (!C2.curve.contains(C1.curve.point(Param<S>::at(F.from_int(t))))) return false;
  return true;
}

// Bisecant line in span3 through p (W-coordinates), as a line of P^13.
template <class S>
ProjSubspace<S> bisecant_line_in_span(const TwistedCubic<S>& C, CSpan<S> p, const FieldOf<S>& F) {
  if (!C.span3().contains(p)) throw Error(ErrorCode::kInvalidArgument, "point is not in span3");
  const Matrix<S> line = net_bisecant_line(C.net(), C.curve.coords(p), F);
  return ProjSubspace<S>(line * C.span3().basis());
}

template <class S>
struct CurveIntersection {
  int length = 0;
  std::vector<Param<S>> params;  // base-field points, on C1's parameter line
};

// Substitutes C1 into the ideal of C2 (linear forms cutting span3(C2), and the
// net minors on its coordinates) and takes the gcd of the binary forms.
template <class S>
CurveIntersection<S> curve_intersection(const TwistedCubic<S>& C1, const TwistedCubic<S>& C2, const FieldOf<S>& F) {
  if (C1.span3() == C2.span3()) throw Error(ErrorCode::kSameSpan, "curves share their span");
  std::vector<BinaryForm<S>> forms;
  const Matrix<S> ann = C2.span3().orthogonal_complement(F).basis();
  for (std::size_t r = 0; r < ann.rows(); ++r) {
    std::vector<S> c(4);
    for (std::size_t k = 0; k < 4; ++k) c[k] = dot(ann.row_span(r), C1.curve.v[k]);
    forms.push_back({UniPoly<S>(std::move(c)), 3});
  }
  // Coordinates of C1's points in C2's span frame (pivot entries), as cubics.
  std::array<UniPoly<S>, 4> x;
  for (std::size_t r = 0; r < 4; ++r) {
    std::vector<S> c(4);
    for (std::size_t k = 0; k < 4; ++k) c[k] = C2.curve.coords(C1.curve.v[k])[r];
    x[r] = UniPoly<S>(std::move(c));
  }
  for (const auto& q : C2.net().minors()) {
    UniPoly<S> acc;
    for (std::size_t m = 0; m < 10; ++m) {
      if (q[m].is_zero()) continue;
      const auto& t = p3::quadrics().term(m);
      acc = acc + q[m] * (x[t[0]] * x[t[1]]);
    }
    forms.push_back({acc, 6});
  }
  auto g = binary_gcd(forms);
  if (!g) throw Error(ErrorCode::kSameSpan, "C1 lies on C2");
  CurveIntersection<S> out;
  out.length = g->first.degree() + g->second;
  for (const auto& r : uniroots(g->first, F))
    if (out.params.empty() || !(out.params.back() == Param<S>::at(r))) out.params.push_back(Param<S>::at(r));
  if (g->second > 0) out.params.push_back(Param<S>::infinity());
  return out;
}

// --- V_C, the threefold swept by the planes of C -----------------------------

template <class S>
struct VcHit {
  Param<S> t;
  Vec<S> u;      // frame coordinates: the point is (s u, t B u)
  Vec<S> point;  // standard coordinates of V
};

// Points where the plane P (3x6) meets V_C: (s u, t B u) ∈ P  ⇔
// (s Λ1 + t Λ2 B) u = 0 with [Λ1 | Λ2] the equations of P in frame coordinates.
template <class S>
std::vector<VcHit<S>> plane_meets_vc(const SymplecticSpace<S>& V, const TwistedCubic<S>& C, const Matrix<S>& P) {
  const auto& F = V.field();
  const Matrix<S> Pf = P * C.frame.E_inv;
  const Matrix<S> Lam = kernel(Pf, F);  // rows: equations
  if (Lam.rows() != 3) throw Error(ErrorCode::kInvalidArgument, "P must be a plane (rank 3)");
  const Matrix<S> L1 = Lam.block(0, 3, 0, 3), L2B = Lam.block(0, 3, 3, 6) * C.B;
  auto M_at = [&](const Param<S>& p) { return p.infinite ? L2B : L1 + p.t * L2B; };
  std::vector<S> xs, ys;
  for (std::int64_t t = 0; t < 4; ++t) {
    xs.push_back(F.from_int(t));
    ys.push_back(det(M_at(Param<S>::at(xs.back())), F));
  }
  const BinaryForm<S> d{interpolate(xs, ys, F), 3};
  if (d.is_zero()) throw Error(ErrorCode::kInOmegaConfig, "plane meets V_C in a curve");
  std::vector<Param<S>> roots;
  for (const auto& r : uniroots(d.poly, F)) roots.push_back(Param<S>::at(r));
  for (int k = 0; k < d.infinity_multiplicity(); ++k) roots.push_back(Param<S>::infinity());
  if (static_cast<int>(roots.size()) != 3) throw Error(ErrorCode::kNotSplit, "incidence cubic does not split");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (roots[i] == roots[j]) throw Error(ErrorCode::kNotThreePoints, "incidence cubic has a repeated root");
  std::vector<VcHit<S>> out;
  for (const auto& r : roots) {
    const Matrix<S> K = kernel(M_at(r), F);
    if (K.rows() != 1) throw Error(ErrorCode::kInOmegaConfig, "plane meets a plane of V_C in a line");
    VcHit<S> h{r, K.row(0), {}};
    Vec<S> x(6);
    const Vec<S> Bu = apply(C.B, CSpan<S>(h.u));
    for (std::size_t i = 0; i < 3; ++i) {
      x[i] = r.infinite ? F.zero() : h.u[i];
      x[3 + i] = r.infinite ? Bu[i] : r.t * Bu[i];
    }
    h.point = row_times(CSpan<S>(x), C.frame.E);
    out.push_back(std::move(h));
  }
  return out;
}

// Line {λ(u, 0) + μ(0, Bu)} of V_C (2x6, standard coordinates): meets the
// plane at t in (u, tBu).
template <class S>
Matrix<S> horizontal_line(const TwistedCubic<S>& C, CSpan<S> u) {
  if (is_zero_vec(u)) throw Error(ErrorCode::kInvalidArgument, "u must be nonzero");
  Matrix<S> X(2, 6);
  const Vec<S> Bu = apply(C.B, u);
  for (std::size_t i = 0; i < 3; ++i) {
    X(0, i) = u[i];
    X(1, 3 + i) = Bu[i];
  }
  return X * C.frame.E;
}

// x ∈ V_C: in frame coordinates (x1, x2), x1 and B^{-1} x2 are proportional.
template <class S>
bool on_vc(const TwistedCubic<S>& C, CSpan<S> x) {
  const Vec<S> xf = row_times(x, C.frame.E_inv);
  const Vec<S> x1(xf.begin(), xf.begin() + 3), x2(xf.begin() + 3, xf.end());
  const Vec<S> y = apply(C.B_inv, CSpan<S>(x2));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (x1[i] * y[j] != x1[j] * y[i]) return false;
  return true;
}

}  // namespace lg36
