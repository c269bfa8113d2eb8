#include "lg36/dual_quartic.hpp"

#include <algorithm>
#include <cstdio>
#include <thread>

#include "lg36/fast_kernel.hpp"

namespace lg36 {

std::vector<TangentHyperplaneSample<Fp>> sample_tangent_hyperplanes(const SymplecticSpace<Fp>& V,
                                                                    std::uint64_t master, std::size_t count,
                                                                    unsigned threads) {
  std::vector<std::optional<TangentHyperplaneSample<Fp>>> out(count);
  if (threads == 0) threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < count; i += threads) out[i] = sample_tangent_hyperplane(V, derive_seed(master, i));
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  std::vector<TangentHyperplaneSample<Fp>> res;
  res.reserve(count);
  for (auto& s : out) res.push_back(std::move(*s));
  return res;
}

namespace {

std::vector<std::vector<std::uint64_t>> evaluation_rows(const std::vector<TangentHyperplaneSample<Fp>>& samples,
                                                        std::uint64_t& p) {
  if (samples.empty()) throw Error(ErrorCode::kKernelDim, "no samples");
  const auto& coords = samples.front().h.coords();
  p = coords.front().modulus();
  for (const auto& c : coords) p = std::max(p, c.modulus());
  const PrimeField F(p);
  const MonomialBasis& basis = QuarticForm<Fp>::basis_for(coords.size());
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(samples.size());
  for (const auto& s : samples) {
    const Vec<Fp> m = basis.evaluate<Fp>(s.h.coords(), F);
    std::vector<std::uint64_t> r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = m[i].value();
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

std::size_t interpolation_rank(const std::vector<TangentHyperplaneSample<Fp>>& samples) {
  std::uint64_t p = 0;
  auto rows = evaluation_rows(samples, p);
  const std::size_t cols = rows.front().size();
  return fp_rank(std::move(rows), cols, p);
}

QuarticForm<Fp> interpolate_dual_quartic(const std::vector<TangentHyperplaneSample<Fp>>& samples) {
  std::uint64_t p = 0;
  auto rows = evaluation_rows(samples, p);
  const std::size_t cols = rows.front().size();
  if (rows.size() < cols) throw Error(ErrorCode::kKernelDim, "fewer samples than monomials");
  const auto K = fp_kernel(std::move(rows), cols, p);
  if (K.size() != 1) throw Error(ErrorCode::kKernelDim, "interpolation kernel has dimension " + std::to_string(K.size()));
  QuarticForm<Fp> Q{samples.front().h.coords().size(), Vec<Fp>(cols)};
  for (std::size_t i = 0; i < cols; ++i) Q.coeffs[i] = Fp(K[0][i], p);
  return normalized(std::move(Q));
}

HitchinCrosscheck crosscheck_hitchin(const SymplecticSpace<Fp>& V, const QuarticForm<Fp>& Q,
                                     const std::vector<TangentHyperplaneSample<Fp>>& tangent, std::size_t generic,
                                     std::uint64_t seed) {
  const auto& F = V.field();
  const Matrix<Fp> dual = inverse(V.pairing().transpose(), F);
  auto omega_of = [&](CSpan<Fp> h) { return apply(dual, h); };
  HitchinCrosscheck r;
  for (const auto& s : tangent) {
    ++r.samples;
    ++r.tangent_samples;
    const Vec<Fp> w = omega_of(s.h.coords());
    if (Q.eval(s.h.coords(), F).is_zero() && hitchin_endo(V, CSpan<Fp>(w)).lambda.is_zero()) ++r.both_zero;
  }
  Rng rng(seed);
  std::optional<Fp> first;
  for (std::size_t i = 0; i < generic; ++i) {
    const Vec<Fp> h = random_vec<Fp>(V.w_dim(), F, rng);
    const Vec<Fp> w = omega_of(h);
    const Fp q = Q.eval(h, F), lam = hitchin_endo(V, CSpan<Fp>(w)).lambda;
    ++r.samples;
    ++r.generic_samples;
    if (lam.is_zero()) continue;
    const Fp ratio = q / lam;
    if (!first) first = ratio;
    if (ratio == *first) ++r.ratio_agreements;
  }
  r.proportional = r.both_zero == r.tangent_samples && r.ratio_agreements == r.generic_samples;
  r.ratio = first ? std::to_string(first->value()) : "undefined";
  return r;
}

std::string quartic_fingerprint(const QuarticForm<Fp>& Q) {
  const auto N = normalized(Q);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& c : N.coeffs) {
    feed(std::to_string(c.value()));
    feed(",");
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace lg36
