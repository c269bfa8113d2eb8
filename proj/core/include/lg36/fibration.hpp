#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lg36/cubic.hpp"

namespace lg36 {

// S = Σ ∩ p9 inside X = Σ ∩ p10. The rows of ell are a fixed basis of the
// linear forms vanishing on p9; they are the coordinates of P³_S.
template <class S>
struct SectionTower {
  ProjSubspace<S> p9;
  Matrix<S> ell;
  std::optional<ProjSubspace<S>> p10;
};

template <class S>
struct FiberPoint {
  ProjPoint<S> h;
  friend bool operator==(const FiberPoint& a, const FiberPoint& b) { return a.h == b.h; }
};

namespace detail {

template <class S>
ProjSubspace<S> extend_randomly(Matrix<S> rows, std::size_t linear_dim, const ProjSubspace<S>& inside,
                                const FieldOf<S>& F, Rng& rng) {
  if (rank(rows) > linear_dim) throw Error(ErrorCode::kTooManyPoints, "points span more than the target");
  while (rank(rows) < linear_dim) rows.append_row(random_combination(inside.basis(), F, rng));
  return ProjSubspace<S>(rows);
}

template <class S>
SectionTower<S> tower_from(ProjSubspace<S> p9, std::optional<ProjSubspace<S>> p10, const FieldOf<S>& F) {
  SectionTower<S> T{std::move(p9), {}, std::move(p10)};
  T.ell = T.p9.orthogonal_complement(F).basis();
  return T;
}

}  // namespace detail

// Random P^target_dim (9 or 10) of P(W) through the given W-vectors; with
// target 10 the tower also carries a random P^9 inside it through the points.
template <class S>
SectionTower<S> section_through(const SymplecticSpace<S>& V, const std::vector<Vec<S>>& points, int target_dim,
                                std::uint64_t seed) {
  if (target_dim != 9 && target_dim != 10) throw Error(ErrorCode::kInvalidArgument, "target_dim must be 9 or 10");
  const auto& F = V.field();
  Rng rng(seed);
  Matrix<S> rows(0, V.w_dim());
  for (const auto& p : points) rows.append_row(p);
  const auto whole = ProjSubspace<S>(Matrix<S>::identity(V.w_dim(), F));
  if (target_dim == 9) return detail::tower_from(detail::extend_randomly(rows, 10, whole, F, rng), {}, F);
  auto p10 = detail::extend_randomly(rows, 11, whole, F, rng);
  auto p9 = detail::extend_randomly(rows, 10, p10, F, rng);
  return detail::tower_from(std::move(p9), std::optional<ProjSubspace<S>>(std::move(p10)), F);
}

// Random P^9 inside a given P^10 through the given points.
template <class S>
SectionTower<S> section_inside(const ProjSubspace<S>& p10, const std::vector<Vec<S>>& points, const FieldOf<S>& F,
                               std::uint64_t seed) {
  if (p10.dim() != 10) throw Error(ErrorCode::kInvalidArgument, "expected a P^10");
  Rng rng(seed);
  Matrix<S> rows(0, p10.basis().cols());
  for (const auto& p : points) {
    if (!p10.contains(p)) throw Error(ErrorCode::kNotOnSection, "point not in P^10");
    rows.append_row(p);
  }
  return detail::tower_from(detail::extend_randomly(rows, 10, p10, F, rng), std::optional<ProjSubspace<S>>(p10), F);
}

// (ℓ0(q) : ... : ℓ3(q)) as a raw vector.
template <class S>
Vec<S> ell_values(const SectionTower<S>& T, CSpan<S> q) {
  return apply(T.ell, q);
}

// h(C) from the curve point at parameter t; zero vector when that point is in p9.
template <class S>
Vec<S> fibration_value_at(const TwistedCubic<S>& C, const SectionTower<S>& T, const Param<S>& t) {
  return ell_values(T, CSpan<S>(C.curve.point(t)));
}

template <class S>
FiberPoint<S> fibration_value_of_curve(const TwistedCubic<S>& C, const SectionTower<S>& T, const FieldOf<S>& F) {
  // A cubic meeting p9 in 7 points lies in it; four extra tries suffice.
  for (std::int64_t t = 2; t <= 5; ++t) {
    Vec<S> h = fibration_value_at(C, T, Param<S>::at(F.from_int(t)));
    if (!is_zero_vec(h)) return {ProjPoint<S>(std::move(h))};
  }
  throw Error(ErrorCode::kCubicInSection, "curve lies in p9");
}

template <class S>
void require_on_section(const SectionTower<S>& T, const std::array<SigmaPoint<S>, 3>& xi) {
  for (const auto& p : xi)
    if (!T.p9.contains(p.plucker.coords())) throw Error(ErrorCode::kNotOnSection, "triple point not in p9");
}

template <class S>
FiberPoint<S> fibration_value(const SymplecticSpace<S>& V, const std::array<SigmaPoint<S>, 3>& xi,
                              const SectionTower<S>& T) {
  require_on_section(T, xi);
  const auto C = cubic_through_triple(V, xi[0], xi[1], xi[2]);
  return fibration_value_of_curve(C, T, V.field());
}

// σ: C ↦ C ∩ S. The four forms ℓ_i(C(s:t)) are cubics with a common factor of
// degree 3 cutting out the intersection.
template <class S>
std::array<SigmaPoint<S>, 3> intersect_with_section(const SymplecticSpace<S>& V, const TwistedCubic<S>& C,
                                                    const SectionTower<S>& T) {
  const auto& F = V.field();
  std::vector<BinaryForm<S>> forms;
  for (std::size_t r = 0; r < T.ell.rows(); ++r) {
    std::vector<S> c(4);
    for (std::size_t k = 0; k < 4; ++k) c[k] = dot(T.ell.row_span(r), C.curve.v[k]);
    forms.push_back({UniPoly<S>(std::move(c)), 3});
  }
  const auto g = binary_gcd(forms);
  if (!g) throw Error(ErrorCode::kCubicInSection, "curve lies in p9");
  if (g->first.degree() + g->second != 3) throw Error(ErrorCode::kWrongLength, "intersection length is not 3");
  if (g->second > 1) throw Error(ErrorCode::kNonReduced, "multiple point at infinity");
  const auto roots = uniroots(g->first, F);
  if (static_cast<int>(roots.size()) != g->first.degree()) throw Error(ErrorCode::kNotSplit, "intersection not rational");
  for (std::size_t i = 1; i < roots.size(); ++i)
    if (roots[i] == roots[i - 1]) throw Error(ErrorCode::kNonReduced, "multiple intersection point");
  std::vector<Param<S>> ps;
  for (const auto& r : roots) ps.push_back(Param<S>::at(r));
  if (g->second == 1) ps.push_back(Param<S>::infinity());
  return {point_at(V, C, ps[0]), point_at(V, C, ps[1]), point_at(V, C, ps[2])};
}

// span3(C) ∩ p9 is exactly the plane of the triple C ∩ S.
template <class S>
bool span_meet_check(const SymplecticSpace<S>& V, const TwistedCubic<S>& C, const SectionTower<S>& T) {
  const auto xi = intersect_with_section(V, C, T);
  Matrix<S> rows(0, V.w_dim());
  for (const auto& p : xi) rows.append_row(p.plucker.coords());
  const ProjSubspace<S> plane(rows);
  return plane.dim() == 2 && meet(C.span3(), T.p9, V.field()) == plane;
}

template <class S>
bool same_fiber(const SymplecticSpace<S>& V, const std::array<SigmaPoint<S>, 3>& a,
                const std::array<SigmaPoint<S>, 3>& b, const SectionTower<S>& T) {
  return fibration_value(V, a, T) == fibration_value(V, b, T);
}

}  // namespace lg36
