#pragma once

#include <cstdint>
#include <vector>

namespace lg36 {

// Right null space of a dense matrix over F_p given as raw residues (< p).
// Rows of the result are kernel vectors with a 1 at their free column, same
// convention as kernel(). Uses delayed modular reduction: pivot rows are kept
// reduced below 2^32 and the other rows accumulate unreduced in 64 bits, which
// is exact while rank * p^2 < 2^63. Larger p falls back to per-step reduction.
std::vector<std::vector<std::uint64_t>> fp_kernel(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols,
                                                  std::uint64_t p);

// Rank over F_p with the same elimination.
std::size_t fp_rank(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols, std::uint64_t p);

}  // namespace lg36
