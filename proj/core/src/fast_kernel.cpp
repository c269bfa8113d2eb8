#include "lg36/fast_kernel.hpp"

#include "lg36/field.hpp"

namespace lg36 {

namespace {

struct Echelon {
  std::vector<std::vector<std::uint64_t>> rows;  // pivot entry 1, fully reduced
  std::vector<std::size_t> pivots;
};

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return Fp(a, p).inverse().value(); }

Echelon eliminate(std::vector<std::vector<std::uint64_t>>& m, std::size_t cols, std::uint64_t p) {
  const std::size_t R = m.size();
  // Unreduced entries grow by < p^2 per elimination step, at most `cols` steps.
  const unsigned __int128 worst = static_cast<unsigned __int128>(cols + 1) * p * p;
  const bool lazy = p < (1ULL << 32) && worst < (static_cast<unsigned __int128>(1) << 63);

  Echelon e;
  std::vector<std::uint32_t> piv32(cols);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < R; ++c) {
    std::size_t found = R;
    for (std::size_t i = r; i < R; ++i) {
      m[i][c] %= p;
      if (m[i][c] != 0) {
        found = i;
        break;
      }
    }
    if (found == R) continue;
    std::swap(m[r], m[found]);
    auto& piv = m[r];
    const std::uint64_t inv = inv_mod(piv[c] % p, p);
    for (std::size_t j = c; j < cols; ++j) piv[j] = Fp::mulmod(piv[j] % p, inv, p);

    if (lazy) {
      for (std::size_t j = c; j < cols; ++j) piv32[j] = static_cast<std::uint32_t>(piv[j]);
      for (std::size_t i = r + 1; i < R; ++i) {
        const std::uint64_t f = m[i][c] % p;
        if (f == 0) continue;
        const std::uint32_t g = static_cast<std::uint32_t>(p - f);
        std::uint64_t* row = m[i].data();
        const std::uint32_t* pv = piv32.data();
        for (std::size_t j = c; j < cols; ++j) row[j] += static_cast<std::uint64_t>(g) * pv[j];
      }
    } else {
      for (std::size_t i = r + 1; i < R; ++i) {
        const std::uint64_t f = m[i][c] % p;
        if (f == 0) continue;
        const std::uint64_t g = p - f;
        for (std::size_t j = c; j < cols; ++j) {
          std::uint64_t v = m[i][j] % p + Fp::mulmod(g, piv[j], p);
          m[i][j] = v >= p ? v - p : v;
        }
      }
    }
    e.pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = 0; i < r; ++i) e.rows.push_back(std::move(m[i]));
  return e;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> fp_kernel(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols,
                                                  std::uint64_t p) {
  Echelon e = eliminate(rows, cols, p);
  std::vector<char> is_pivot(cols, 0);
  for (auto c : e.pivots) is_pivot[c] = 1;
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint64_t> x(cols, 0);
    x[f] = 1;
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
      const auto& row = e.rows[k];
      std::uint64_t s = 0;
      for (std::size_t j = e.pivots[k] + 1; j < cols; ++j) {
        if (x[j] == 0 || row[j] == 0) continue;
        s += Fp::mulmod(row[j], x[j], p);
        if (s >= p) s -= p;
      }
      x[e.pivots[k]] = s == 0 ? 0 : p - s;
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::size_t fp_rank(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols, std::uint64_t p) {
  return eliminate(rows, cols, p).pivots.size();
}

}  // namespace lg36
