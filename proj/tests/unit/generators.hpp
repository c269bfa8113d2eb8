#pragma once

// Hand-rolled generators for the property tests. Every generator takes an
// explicit Rng so a failing case can be replayed from its seed.

#include <vector>

#include "lg36/cubic.hpp"
#include "lg36/symplectic.hpp"

namespace lg36::testing {

inline constexpr std::uint64_t kP = 10007;

inline PrimeField field() { return PrimeField(kP); }

// Random rows x cols matrix of exactly the given rank (product of two
// full-rank factors).
template <class S>
Matrix<S> random_of_rank(std::size_t rows, std::size_t cols, std::size_t r, const FieldOf<S>& F, Rng& rng) {
  for (;;) {
    const auto A = Matrix<S>::random(rows, r, F, rng);
    const auto B = Matrix<S>::random(r, cols, F, rng);
    Matrix<S> M = A * B;
    if (r == 0) M = Matrix<S>(rows, cols);
    if (rank(M) == r) return M;
  }
}

template <class S>
Matrix<S> random_invertible(std::size_t n, const FieldOf<S>& F, Rng& rng) {
  return random_of_rank<S>(n, n, n, F, rng);
}

template <class S>
std::array<SigmaPoint<S>, 3> transverse_triple(const SymplecticSpace<S>& V, Rng& rng) {
  for (;;) {
    std::array<SigmaPoint<S>, 3> xi;
    for (auto& p : xi) p = sigma_point(V, random_lagrangian(V, rng));
    if (pairwise_transverse(xi[0].lagrangian, xi[1].lagrangian, xi[2].lagrangian)) return xi;
  }
}

template <class S>
std::vector<Vec<S>> pluckers(const std::array<SigmaPoint<S>, 3>& xi) {
  return {xi[0].plucker.coords(), xi[1].plucker.coords(), xi[2].plucker.coords()};
}

template <class S>
bool same_triple(const std::array<SigmaPoint<S>, 3>& a, const std::array<SigmaPoint<S>, 3>& b) {
  for (const auto& p : a) {
    bool hit = false;
    for (const auto& q : b) hit = hit || p.plucker == q.plucker;
    if (!hit) return false;
  }
  return true;
}

}  // namespace lg36::testing
