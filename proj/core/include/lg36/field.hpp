#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "lg36/error.hpp"
#include "lg36/random.hpp"

namespace lg36 {

class PrimeField;
class RationalField;

// Element of F_p. Each value carries its modulus; a default-constructed value
// is an unbound zero that adopts the modulus of whatever it is combined with.
class Fp {
 public:
  using Field = PrimeField;

  Fp() = default;
  Fp(std::uint64_t value, std::uint64_t modulus) : v_(value % modulus), p_(modulus) {}

  static Fp from_int(std::int64_t value, std::uint64_t modulus) {
    const auto m = static_cast<std::int64_t>(modulus);
    std::int64_t r = value % m;
    if (r < 0) r += m;
    return Fp(static_cast<std::uint64_t>(r), modulus);
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator-() const { return Fp::raw(v_ == 0 ? 0 : p_ - v_, p_); }

  Fp& operator+=(const Fp& o) {
    p_ = common(o);
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    p_ = common(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + (p_ - o.v_);
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    p_ = common(o);
    v_ = p_ == 0 ? 0 : mulmod(v_, o.v_, p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

  friend bool operator==(const Fp& a, const Fp& b) {
    a.common(b);
    return a.v_ == b.v_;
  }

  Fp inverse() const;
  Fp pow(std::uint64_t e) const;

  std::string to_string() const { return std::to_string(v_); }

  static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    if (p <= 0xffffffffULL) return (a * b) % p;
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
  }

 private:
  static Fp raw(std::uint64_t v, std::uint64_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  std::uint64_t common(const Fp& o) const {
    if (p_ == o.p_ || o.p_ == 0) return p_;
    if (p_ == 0) return o.p_;
    throw Error(ErrorCode::kFieldMismatch,
                "F_" + std::to_string(p_) + " vs F_" + std::to_string(o.p_));
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value(); }

class PrimeField {
 public:
  using Scalar = Fp;

  // Throws kInvalidArgument unless p is a prime with 3 < p < 2^63.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }
  Fp from_int(std::int64_t v) const { return Fp::from_int(v, p_); }
  Fp random(Rng& rng) const { return Fp(rng.below(p_), p_); }
  Fp random_nonzero(Rng& rng) const { return Fp(1 + rng.below(p_ - 1), p_); }
  std::optional<Fp> sqrt(const Fp& a) const;

  // Decimal; negative values are reduced.
  Fp parse(std::string_view text) const;
  std::string name() const { return "F_" + std::to_string(p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

class Rational {
 public:
  using Field = RationalField;

  Rational() = default;
  Rational(std::int64_t n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d) : q_(static_cast<long>(n), static_cast<long>(d)) {
    if (d == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  const mpq_class& value() const { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::kInvalidArgument, "division by zero in Q");
    q_ /= o.q_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }

  Rational inverse() const { return Rational(1) / *this; }
  Rational pow(std::uint64_t e) const;

  // "3/7", "-2", "0".
  std::string to_string() const { return q_.get_str(); }

 private:
  mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

class RationalField {
 public:
  using Scalar = Rational;

  // Random draws are small integers in [-bound, bound]; keeps heights low so
  // exact arithmetic over Q stays cheap for spot checks.
  explicit RationalField(std::int64_t random_bound = 12) : bound_(random_bound) {}

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(std::int64_t v) const { return Rational(v); }
  Rational random(Rng& rng) const { return Rational(rng.in_range(-bound_, bound_)); }
  Rational random_nonzero(Rng& rng) const {
    for (;;) {
      auto r = random(rng);
      if (!r.is_zero()) return r;
    }
  }
  std::optional<Rational> sqrt(const Rational& a) const;
  Rational parse(std::string_view text) const;
  std::string name() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }

 private:
  std::int64_t bound_;
};

template <class S>
using FieldOf = typename S::Field;

template <class S>
concept FieldScalar = requires(S a, const S b) {
  typename S::Field;
  { a + b } -> std::same_as<S>;
  { a - b } -> std::same_as<S>;
  { a * b } -> std::same_as<S>;
  { a / b } -> std::same_as<S>;
  { -a } -> std::same_as<S>;
  { b.is_zero() } -> std::same_as<bool>;
  { b.inverse() } -> std::same_as<S>;
  { b.to_string() } -> std::same_as<std::string>;
};

static_assert(FieldScalar<Fp>);
static_assert(FieldScalar<Rational>);

}  // namespace lg36
