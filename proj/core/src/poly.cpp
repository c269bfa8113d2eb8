#include "lg36/poly.hpp"

#include <algorithm>
#include <functional>

namespace lg36 {

namespace {

constexpr std::uint64_t kMaxScanPrime = 1000000;

// x^e mod m
UniPoly<Fp> x_pow_mod(std::uint64_t e, const UniPoly<Fp>& m, const PrimeField& F) {
  UniPoly<Fp> result = UniPoly<Fp>::constant(F.one());
  UniPoly<Fp> base(std::vector<Fp>{F.zero(), F.one()});
  base = base.divmod(m).second;
  while (e) {
    if (e & 1) result = (result * base).divmod(m).second;
    base = (base * base).divmod(m).second;
    e >>= 1;
  }
  return result;
}

int sign_of(const Rational& x) { return sgn(x.value()); }

int sign_changes(const std::vector<UniPoly<Rational>>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    const int s = sign_of(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<Fp> roots_fp(const UniPoly<Fp>& f, const PrimeField& F) {
  const std::uint64_t p = F.characteristic();
  if (p > kMaxScanPrime)
    throw Error(ErrorCode::kInvalidArgument, "root scan needs p <= 10^6, got " + std::to_string(p));
  // The distinct linear factors of f are those of gcd(f, x^p - x); scanning
  // against the gcd lets non-split inputs bail out before the scan.
  const UniPoly<Fp> xp = x_pow_mod(p, f, F);
  const UniPoly<Fp> g = gcd(f, xp - UniPoly<Fp>(std::vector<Fp>{F.zero(), F.one()}));
  std::vector<Fp> distinct;
  if (g.degree() <= 0) return {};
  for (std::uint64_t v = 0; v < p && static_cast<int>(distinct.size()) < g.degree(); ++v) {
    const Fp x(v, p);
    if (g(x).is_zero()) distinct.push_back(x);
  }
  std::vector<Fp> out;
  UniPoly<Fp> rest = f;
  for (const auto& r : distinct) {
    const auto lin = UniPoly<Fp>::linear_root(r, F);
    for (;;) {
      auto [q, rem] = rest.divmod(lin);
      if (!rem.is_zero()) break;
      out.push_back(r);
      rest = q;
    }
  }
  return out;
}

std::vector<Rational> roots_q(const UniPoly<Rational>& f, const RationalField& F) {
  // Integer coefficients.
  mpz_class den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.value().get_den().get_mpz_t());
  std::vector<mpz_class> a;
  for (const auto& c : f.coeffs()) a.push_back(mpz_class(c.value() * den));
  const std::size_t n = a.size() - 1;
  // g(y) = a_n^(n-1) f(y / a_n) is monic with integer coefficients; rational
  // roots of f are the integer roots of g divided by a_n.
  std::vector<Rational> g(n + 1);
  mpz_class pw = 1;
  for (std::size_t k = n; k-- > 0;) {
    g[k] = Rational(mpq_class(a[k] * pw));
    pw *= a[n];
  }
  g[n] = F.one();
  const UniPoly<Rational> G(g);
  const UniPoly<Rational> sq = G.divmod(gcd(G, G.derivative())).first;

  std::vector<UniPoly<Rational>> seq{sq, sq.derivative()};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    auto r = seq[seq.size() - 2].divmod(seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(Rational(-1) * r);
  }

  mpz_class bound = 1;
  for (std::size_t k = 0; k < n; ++k) {
    mpz_class v = abs(mpz_class(g[k].value()));
    if (v > bound) bound = v;
  }
  bound += 1;

  std::vector<mpz_class> integer_roots;
  std::function<void(const mpz_class&, const mpz_class&, int, int)> isolate =
      [&](const mpz_class& lo, const mpz_class& hi, int vlo, int vhi) {
        if (vlo - vhi <= 0) return;
        if (hi - lo == 1) {
          if (sq(Rational(mpq_class(hi))).is_zero()) integer_roots.push_back(hi);
          return;
        }
        mpz_class mid = lo + (hi - lo) / 2;
        const int vmid = sign_changes(seq, Rational(mpq_class(mid)));
        isolate(lo, mid, vlo, vmid);
        isolate(mid, hi, vmid, vhi);
      };
  const mpz_class lo = -bound - 1, hi = bound;
  isolate(lo, hi, sign_changes(seq, Rational(mpq_class(lo))), sign_changes(seq, Rational(mpq_class(hi))));

  std::vector<Rational> out;
  UniPoly<Rational> rest = f;
  for (const auto& y : integer_roots) {
    const Rational r(mpq_class(y, a[n]));
    const auto lin = UniPoly<Rational>::linear_root(r, F);
    for (;;) {
      auto [q, rem] = rest.divmod(lin);
      if (!rem.is_zero()) break;
      out.push_back(r);
      rest = q;
    }
  }
  std::sort(out.begin(), out.end(), [](const Rational& x, const Rational& y) { return x.value() < y.value(); });
  return out;
}

}  // namespace

template <>
std::vector<Fp> uniroots<Fp>(const UniPoly<Fp>& f, const PrimeField& F) {
  if (f.degree() <= 0) return {};
  return roots_fp(f, F);
}

template <>
std::vector<Rational> uniroots<Rational>(const UniPoly<Rational>& f, const RationalField& F) {
  if (f.degree() <= 0) return {};
  return roots_q(f, F);
}

}  // namespace lg36
