#pragma once

#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "lg36/linalg.hpp"

namespace lg36 {

// Dense univariate polynomial, coefficients low to high, always trimmed so
// the leading coefficient is nonzero (the zero polynomial has no coefficients).
template <class S>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly constant(const S& a) { return UniPoly(std::vector<S>{a}); }
  // x - a
  static UniPoly linear_root(const S& a, const FieldOf<S>& F) { return UniPoly(std::vector<S>{-a, F.one()}); }

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<S>& coeffs() const { return c_; }
  S coeff(std::size_t k) const { return k < c_.size() ? c_[k] : S{}; }
  const S& lead() const { return c_.back(); }

  S operator()(const S& x) const {
    S acc{};
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    const S inv = lead().inverse();
    UniPoly r = *this;
    for (auto& x : r.c_) x *= inv;
    return r;
  }

  UniPoly derivative() const {
    std::vector<S> d;
    for (std::size_t k = 1; k < c_.size(); ++k) {
      S kk = c_[k];
      S sum{};
      for (std::size_t j = 0; j < k; ++j) sum += kk;  // k * c_k without an integer embedding
      d.push_back(sum);
    }
    return UniPoly(std::move(d));
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<S> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<S> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] -= b.c_[k];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const S& s, const UniPoly& a) {
    UniPoly r = a;
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  // (quotient, remainder); divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    if (d.is_zero()) throw Error(ErrorCode::kInvalidArgument, "polynomial division by zero");
    if (degree() < d.degree()) return {UniPoly(), *this};
    std::vector<S> rem = c_;
    std::vector<S> q(c_.size() - d.c_.size() + 1);
    const S inv = d.lead().inverse();
    for (std::size_t k = q.size(); k-- > 0;) {
      const S f = rem[k + d.c_.size() - 1] * inv;
      q[k] = f;
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= f * d.c_[j];
    }
    rem.resize(d.c_.size() - 1);
    return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<S> c_;
};

// Monic gcd; gcd(0, 0) = 0.
template <class S>
UniPoly<S> gcd(UniPoly<S> a, UniPoly<S> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Polynomial through (xs[i], ys[i]); xs distinct.
template <class S>
UniPoly<S> interpolate(const std::vector<S>& xs, const std::vector<S>& ys, const FieldOf<S>& F) {
  const std::size_t n = xs.size();
  Matrix<S> V(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    S p = F.one();
    for (std::size_t j = 0; j < n; ++j) {
      V(i, j) = p;
      p *= xs[i];
    }
  }
  auto c = solve(V, ys);
  if (!c) throw Error(ErrorCode::kInvalidArgument, "interpolation nodes not distinct");
  return UniPoly<S>(std::move(*c));
}

// Sylvester-matrix resultant. Degrees are the actual degrees; zero input gives 0.
template <class S>
S resultant(const UniPoly<S>& f, const UniPoly<S>& g, const FieldOf<S>& F) {
  if (f.is_zero() || g.is_zero()) return F.zero();
  const std::size_t m = static_cast<std::size_t>(f.degree()), n = static_cast<std::size_t>(g.degree());
  if (m == 0 && n == 0) return F.one();
  if (m == 0) return f.lead().pow(n);
  if (n == 0) return g.lead().pow(m);
  Matrix<S> syl(m + n, m + n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) syl(i, i + k) = f.coeff(m - k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) syl(n + i, i + k) = g.coeff(n - k);
  return det(syl, F);
}

// Roots of f lying in the base field, with multiplicity, ascending by
// representative. F_p: exhaustive scan (p <= 10^6). Q: Sturm isolation of the
// integer roots of the monic integer transform.
template <class S>
std::vector<S> uniroots(const UniPoly<S>& f, const FieldOf<S>& F);

// As uniroots, but throws kRootsNotSplit unless f is a product of linear factors.
template <class S>
std::vector<S> split_roots(const UniPoly<S>& f, const FieldOf<S>& F) {
  auto r = uniroots(f, F);
  if (static_cast<int>(r.size()) != f.degree())
    throw Error(ErrorCode::kRootsNotSplit, "polynomial of degree " + std::to_string(f.degree()) + " has " +
                                               std::to_string(r.size()) + " roots in the base field");
  return r;
}

template <>
std::vector<Fp> uniroots<Fp>(const UniPoly<Fp>& f, const PrimeField& F);
template <>
std::vector<Rational> uniroots<Rational>(const UniPoly<Rational>& f, const RationalField& F);

// Point of P^1 as a parameter: t, or infinity.
template <class S>
struct Param {
  bool infinite = false;
  S t{};

  static Param at(const S& v) { return Param{false, v}; }
  static Param infinity() { return Param{true, S{}}; }
  friend bool operator==(const Param& a, const Param& b) {
    return a.infinite == b.infinite && (a.infinite || a.t == b.t);
  }
};

// Binary form of a declared degree d in (s, t): sum a_k s^(d-k) t^k, stored
// dehomogenized at s = 1. Its multiplicity at infinity (s = 0) is d - deg.
template <class S>
struct BinaryForm {
  UniPoly<S> poly;
  int degree = 0;

  bool is_zero() const { return poly.is_zero(); }
  int infinity_multiplicity() const { return is_zero() ? degree : degree - poly.degree(); }
  S at(const Param<S>& p) const { return p.infinite ? poly.coeff(static_cast<std::size_t>(degree)) : poly(p.t); }
};

// Common factor of a family of binary forms: (finite monic gcd, multiplicity at
// infinity). Forms vanishing identically are ignored; nullopt if all vanish.
template <class S>
std::optional<std::pair<UniPoly<S>, int>> binary_gcd(const std::vector<BinaryForm<S>>& forms) {
  std::optional<UniPoly<S>> g;
  int inf = 0;
  bool any = false;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    inf = any ? std::min(inf, f.infinity_multiplicity()) : f.infinity_multiplicity();
    g = g ? gcd(*g, f.poly) : f.poly.monic();
    any = true;
  }
  if (!any) return std::nullopt;
  return std::make_pair(*g, inf);
}

}  // namespace lg36
