#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lg36/monomials.hpp"
#include "lg36/poly.hpp"
#include "lg36/strata.hpp"

namespace lg36 {

// Quartic form over the grlex degree-4 monomials of nvars variables.
template <class S>
struct QuarticForm {
  std::size_t nvars = 0;
  Vec<S> coeffs;

  const MonomialBasis& basis() const { return basis_for(nvars); }
  S eval(CSpan<S> x, const FieldOf<S>& F) const { return dot(coeffs, basis().template evaluate<S>(x, F)); }
  bool is_zero() const { return is_zero_vec(coeffs); }

  static const MonomialBasis& basis_for(std::size_t n) {
    static thread_local std::map<std::size_t, MonomialBasis> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, MonomialBasis(n, 4)).first;
    return it->second;
  }
};

// Hyperplane h (a covector on W) tangent to Σ at `tangency`.
template <class S>
struct TangentHyperplaneSample {
  ProjPoint<S> h;
  SigmaPoint<S> tangency;
};

// h is a random covector killing the tangent space at p and every row of
// `contains` (W-vectors the hyperplane must contain).
template <class S>
TangentHyperplaneSample<S> tangent_hyperplane_at(const SymplecticSpace<S>& V, const SigmaPoint<S>& p,
                                                 const Matrix<S>& contains, Rng& rng) {
  const auto& F = V.field();
  Matrix<S> rows = tangent_space(V, p, rng).basis();
  for (std::size_t r = 0; r < contains.rows(); ++r) rows.append_row(contains.row(r));
  const Matrix<S> K = kernel(rows, F);
  if (K.rows() == 0) throw Error(ErrorCode::kNoHyperplane, "no tangent hyperplane satisfies the constraints");
  Vec<S> h;
  do h = random_combination(K, F, rng);
  while (is_zero_vec(h));
  return {ProjPoint<S>(std::move(h)), p};
}

template <class S>
TangentHyperplaneSample<S> sample_tangent_hyperplane(const SymplecticSpace<S>& V, std::uint64_t seed,
                                                     const Matrix<S>& contains = Matrix<S>()) {
  Rng rng(seed);
  const SigmaPoint<S> p = sigma_point(V, random_lagrangian(V, rng));
  const Matrix<S> c = contains.cols() == 0 ? Matrix<S>(0, V.w_dim()) : contains;
  return tangent_hyperplane_at(V, p, c, rng);
}

// Tangent hyperplanes for seeds derive_seed(master, 0..count-1), generated on
// `threads` workers; the result does not depend on the thread count.
std::vector<TangentHyperplaneSample<Fp>> sample_tangent_hyperplanes(const SymplecticSpace<Fp>& V,
                                                                    std::uint64_t master, std::size_t count,
                                                                    unsigned threads = 0);

// Rank of the quartic evaluation matrix on the samples.
std::size_t interpolation_rank(const std::vector<TangentHyperplaneSample<Fp>>& samples);

// The quartic through all samples, normalized so that its first nonzero
// coefficient is 1. kKernelDim unless the kernel is 1-dimensional.
QuarticForm<Fp> interpolate_dual_quartic(const std::vector<TangentHyperplaneSample<Fp>>& samples);

// Q restricted to the subspace spanned by the rows of L (k x nvars): a quartic
// in k variables, y ↦ Q(y L). kZeroRestriction if it vanishes identically.
template <class S>
QuarticForm<S> restrict_quartic(const QuarticForm<S>& Q, const Matrix<S>& L) {
  if (L.cols() != Q.nvars) throw Error(ErrorCode::kInvalidArgument, "parametrization has the wrong width");
  const std::size_t k = L.rows();
  if (k == 0 || k > 255) throw Error(ErrorCode::kInvalidArgument, "bad subspace dimension");
  QuarticForm<S> R{k, Vec<S>(QuarticForm<S>::basis_for(k).size())};
  const MonomialBasis& out = R.basis();
  // index of the sorted 4-tuple (a,b,c,d) in the output basis
  std::vector<std::size_t> idx(k * k * k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t d = 0; d < k; ++d) {
          std::vector<std::uint8_t> t{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                                      static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)};
          std::sort(t.begin(), t.end());
          idx[((a * k + b) * k + c) * k + d] = out.index_of(t);
        }
  const Matrix<S> Lt = L.transpose();  // row i: x_i as a linear form in y
  const MonomialBasis& in = Q.basis();
  for (std::size_t m = 0; m < in.size(); ++m) {
    if (Q.coeffs[m].is_zero()) continue;
    const auto& t = in.term(m);
    for (std::size_t a = 0; a < k; ++a) {
      const S va = Q.coeffs[m] * Lt(t[0], a);
      if (va.is_zero()) continue;
      for (std::size_t b = 0; b < k; ++b) {
        const S vb = va * Lt(t[1], b);
        if (vb.is_zero()) continue;
        for (std::size_t c = 0; c < k; ++c) {
          const S vc = vb * Lt(t[2], c);
          if (vc.is_zero()) continue;
          for (std::size_t d = 0; d < k; ++d) {
            const S& l = Lt(t[3], d);
            if (l.is_zero()) continue;
            R.coeffs[idx[((a * k + b) * k + c) * k + d]] += vc * l;
          }
        }
      }
    }
  }
  if (R.is_zero()) throw Error(ErrorCode::kZeroRestriction, "quartic vanishes on the subspace");
  return R;
}

// Restriction to a line: the binary quartic (s:t) ↦ Q(s a + t b).
template <class S>
BinaryForm<S> restrict_to_line(const QuarticForm<S>& Q, CSpan<S> a, CSpan<S> b) {
  Matrix<S> L(0, Q.nvars);
  L.append_row(Vec<S>(a.begin(), a.end()));
  L.append_row(Vec<S>(b.begin(), b.end()));
  const auto R = restrict_quartic(Q, L);
  // basis order for 2 variables: s^4, s^3 t, ..., t^4
  std::vector<S> c(5);
  for (std::size_t k = 0; k < 5; ++k) c[k] = R.coeffs[k];
  return {UniPoly<S>(std::move(c)), 4};
}

struct HitchinCrosscheck {
  std::size_t samples = 0;
  std::size_t both_zero = 0;        // tangent-hyperplane samples where both vanish
  std::size_t tangent_samples = 0;
  std::size_t ratio_agreements = 0; // generic samples whose ratio Q(h)/λ(ω_h) equals the first
  std::size_t generic_samples = 0;
  bool proportional = false;
  std::string ratio;
};

// Compares Q(h) with λ(ω_h), where ω_h is the W-vector dual to h under the
// wedge pairing.
HitchinCrosscheck crosscheck_hitchin(const SymplecticSpace<Fp>& V, const QuarticForm<Fp>& Q,
                                     const std::vector<TangentHyperplaneSample<Fp>>& tangent, std::size_t generic,
                                     std::uint64_t seed);

// FNV-1a hash of the normalized coefficient list, as 16 hex digits.
std::string quartic_fingerprint(const QuarticForm<Fp>& Q);

template <class S>
QuarticForm<S> normalized(QuarticForm<S> Q) {
  for (const auto& c : Q.coeffs)
    if (!c.is_zero()) {
      const S inv = c.inverse();
      for (auto& x : Q.coeffs) x *= inv;
      break;
    }
  return Q;
}

template <class S>
bool proportional(const QuarticForm<S>& a, const QuarticForm<S>& b) {
  return a.nvars == b.nvars && normalized(a).coeffs == normalized(b).coeffs;
}

}  // namespace lg36
