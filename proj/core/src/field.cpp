#include "lg36/field.hpp"

#include <charconv>

namespace lg36 {

std::string_view error_tag(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kFieldMismatch: return "FIELD_MISMATCH";
    case ErrorCode::kRootsNotSplit: return "ROOTS_NOT_SPLIT";
    case ErrorCode::kRankDeficient: return "RANK_DEFICIENT";
    case ErrorCode::kNotSymmetric: return "NOT_SYMMETRIC";
    case ErrorCode::kNotLagrangian: return "NOT_LAGRANGIAN";
    case ErrorCode::kNotTransverse: return "NOT_TRANSVERSE";
    case ErrorCode::kChartFailure: return "CHART_FAILURE";
    case ErrorCode::kNotSplit: return "NOT_SPLIT";
    case ErrorCode::kInOmega: return "IN_OMEGA";
    case ErrorCode::kNotInOmega: return "NOT_IN_OMEGA";
    case ErrorCode::kRankUnstable: return "RANK_UNSTABLE";
    case ErrorCode::kNetDim: return "NET_DIM";
    case ErrorCode::kSyzygyFail: return "SYZYGY_FAIL";
    case ErrorCode::kDegeneratePlane: return "DEGENERATE_PLANE";
    case ErrorCode::kNotThreePoints: return "NOT_THREE_POINTS";
    case ErrorCode::kInOmegaConfig: return "IN_OMEGA_CONFIG";
    case ErrorCode::kSameSpan: return "SAME_SPAN";
    case ErrorCode::kTooManyPoints: return "TOO_MANY_POINTS";
    case ErrorCode::kNotOnSection: return "NOT_ON_SECTION";
    case ErrorCode::kCubicInSection: return "CUBIC_IN_SECTION";
    case ErrorCode::kNonReduced: return "NON_REDUCED";
    case ErrorCode::kWrongLength: return "WRONG_LENGTH";
    case ErrorCode::kNoHyperplane: return "NO_HYPERPLANE";
    case ErrorCode::kKernelDim: return "KERNEL_DIM";
    case ErrorCode::kZeroRestriction: return "ZERO_RESTRICTION";
    case ErrorCode::kEigenDegenerate: return "EIGEN_DEGENERATE";
    case ErrorCode::kConjugacyFail: return "CONJUGACY_FAIL";
    case ErrorCode::kResidualDegenerate: return "RESIDUAL_DEGENERATE";
    case ErrorCode::kLineCount: return "LINE_COUNT";
    case ErrorCode::kNotHyperplane: return "NOT_HYPERPLANE";
    case ErrorCode::kNotOnFx: return "NOT_ON_FX";
    case ErrorCode::kSchemaMismatch: return "SCHEMA_MISMATCH";
  }
  return "UNKNOWN";
}

bool is_resamplable(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotTransverse:
    case ErrorCode::kChartFailure:
    case ErrorCode::kNotSplit:
    case ErrorCode::kRootsNotSplit:
    case ErrorCode::kInOmega:
    case ErrorCode::kNetDim:
    case ErrorCode::kSyzygyFail:
    case ErrorCode::kDegeneratePlane:
    case ErrorCode::kNotThreePoints:
    case ErrorCode::kInOmegaConfig:
    case ErrorCode::kCubicInSection:
    case ErrorCode::kNonReduced:
    case ErrorCode::kWrongLength:
    case ErrorCode::kNoHyperplane:
    case ErrorCode::kZeroRestriction:
    case ErrorCode::kEigenDegenerate:
    case ErrorCode::kConjugacyFail:
    case ErrorCode::kResidualDegenerate:
    case ErrorCode::kLineCount:
    case ErrorCode::kNotHyperplane:
    case ErrorCode::kRankDeficient:
      return true;
    default:
      return false;
  }
}

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = Fp::mulmod(r, b, m);
    b = Fp::mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for all 64-bit n with these bases.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = Fp::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw Error(ErrorCode::kInvalidArgument, "inverse of zero in F_" + std::to_string(p_));
  // Extended Euclid on signed 128-bit to stay exact for p up to 2^63.
  __int128 t = 0, new_t = 1;
  __int128 r = p_, new_r = v_;
  while (new_r != 0) {
    const __int128 q = r / new_r;
    const __int128 tt = t - q * new_t;
    t = new_t;
    new_t = tt;
    const __int128 rr = r - q * new_r;
    r = new_r;
    new_r = rr;
  }
  if (t < 0) t += p_;
  return Fp(static_cast<std::uint64_t>(t), p_);
}

Fp Fp::pow(std::uint64_t e) const {
  if (p_ == 0) throw Error(ErrorCode::kInvalidArgument, "power of an unbound F_p zero");
  return Fp(powmod(v_, e, p_), p_);
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p <= 3 || p >= (1ULL << 63) || !is_prime(p)) {
    throw Error(ErrorCode::kInvalidArgument, "modulus must be a prime with 3 < p < 2^63, got " + std::to_string(p));
  }
}

std::optional<Fp> PrimeField::sqrt(const Fp& a) const {
  if (a.is_zero()) return zero();
  if (a.pow((p_ - 1) / 2) != one()) return std::nullopt;
  // Tonelli-Shanks.
  std::uint64_t q = p_ - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  Fp z = from_int(2);
  while (z.pow((p_ - 1) / 2) == one()) z += one();
  Fp c = z.pow(q);
  Fp x = a.pow((q + 1) / 2);
  Fp t = a.pow(q);
  int m = s;
  while (t != one()) {
    int i = 0;
    Fp t2 = t;
    while (t2 != one()) {
      t2 *= t2;
      ++i;
    }
    Fp b = c;
    for (int j = 0; j < m - i - 1; ++j) b *= b;
    x *= b;
    c = b * b;
    t *= c;
    m = i;
  }
  return x;
}

Fp PrimeField::parse(std::string_view text) const {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kInvalidArgument, "not an F_p scalar: '" + std::string(text) + "'");
  }
  Fp x(v % p_, p_);
  return negative ? -x : x;
}

Rational Rational::pow(std::uint64_t e) const {
  Rational r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::optional<Rational> RationalField::sqrt(const Rational& a) const {
  const mpq_class& q = a.value();
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(mpq_class(rn, rd));
}

Rational RationalField::parse(std::string_view text) const {
  mpq_class q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "not a rational scalar: '" + std::string(text) + "'");
  }
  if (sgn(q.get_den()) == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  return Rational(q);
}

}  // namespace lg36
