#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lg36/matrix.hpp"

namespace lg36 {

// Degree-d monomials in n variables, graded-lex with x0 > x1 > ... . A term is
// stored as its nondecreasing list of variable indices, e.g. x0^2 x3 = {0,0,3};
// lex order on these lists is exactly grlex.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t nvars, std::size_t degree) : n_(nvars), d_(degree) {
    std::vector<std::uint8_t> cur;
    build(cur, 0);
    for (std::size_t i = 0; i < terms_.size(); ++i) index_[terms_[i]] = i;
  }

  std::size_t nvars() const { return n_; }
  std::size_t degree() const { return d_; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<std::uint8_t>& term(std::size_t i) const { return terms_[i]; }
  std::size_t index_of(const std::vector<std::uint8_t>& t) const { return index_.at(t); }

  // All monomial values at x, in basis order.
  template <class S>
  Vec<S> evaluate(CSpan<S> x, const FieldOf<S>& F) const {
    Vec<S> out;
    out.reserve(terms_.size());
    eval_rec(x, F.one(), 0, 0, out);
    return out;
  }

 private:
  void build(std::vector<std::uint8_t>& cur, std::size_t start) {
    if (cur.size() == d_) {
      terms_.push_back(cur);
      return;
    }
    for (std::size_t v = start; v < n_; ++v) {
      cur.push_back(static_cast<std::uint8_t>(v));
      build(cur, v);
      cur.pop_back();
    }
  }
  template <class S>
  void eval_rec(CSpan<S> x, const S& acc, std::size_t depth, std::size_t start, Vec<S>& out) const {
    if (depth == d_) {
      out.push_back(acc);
      return;
    }
    for (std::size_t v = start; v < n_; ++v) eval_rec(x, acc * x[v], depth + 1, v, out);
  }

  std::size_t n_, d_;
  std::vector<std::vector<std::uint8_t>> terms_;
  std::map<std::vector<std::uint8_t>, std::size_t> index_;
};

}  // namespace lg36
