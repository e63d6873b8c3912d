#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "explicit_graph.hpp"

namespace probeclique {

// Concentration point of the clique number of G(n,1/2):
//   2*log2(n) - 2*log2(log2(n)) + 2*log2(e) - 1.
// Needs n >= 3 so the double logarithm is positive.
inline double matula_omega(std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("matula_omega: n must be >= 3");
  double log2n = std::log2(double(n));
  return 2.0 * log2n - 2.0 * std::log2(log2n) + 2.0 * std::numbers::log2e -
         1.0;
}

namespace detail {

// Exact maximum-clique search, two phases:
//   phase 1 computes the clique number with a branch-and-bound over
//   degree-sorted bitset candidate sets, pruned by greedy colouring;
//   phase 2 re-runs a search in original vertex order that accepts the
//   first clique of that size, which is the lexicographically smallest
//   maximum clique.
class clique_search {
public:
  explicit clique_search(const explicit_graph& g)
      : n_(g.vertex_count()), words_(std::max<std::uint32_t>(1, (n_ + 63) / 64)) {
    adj_orig_.assign(std::size_t(n_) * words_, 0);
    for (std::uint32_t v = 0; v < n_; ++v) {
      auto r = g.row(v);
      std::copy(r.begin(), r.end(), adj_orig_.begin() + std::size_t(v) * words_);
    }
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0u);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                       return g.degree(a) > g.degree(b);
                     });
    adj_.assign(std::size_t(n_) * words_, 0);
    for (std::uint32_t v = 0; v < n_; ++v)
      for (std::uint32_t u = v + 1; u < n_; ++u)
        if (g.has_edge(order_[v], order_[u])) {
          adj_[std::size_t(v) * words_ + u / 64] |= 1ull << (u % 64);
          adj_[std::size_t(u) * words_ + v / 64] |= 1ull << (v % 64);
        }
  }

  std::uint32_t omega() {
    if (n_ == 0) return 0;
    best_ = greedy_seed();
    slabs_.assign(std::size_t(n_ + 1) * words_, 0);
    ord_.assign(n_ + 1, {});
    col_.assign(n_ + 1, {});
    scratch_a_.assign(words_, 0);
    scratch_b_.assign(words_, 0);
    std::uint64_t* root = slab(0);
    set_all(root);
    expand(root, 0);
    return best_;
  }

  // Requires omega() first. Finds the lexicographically smallest clique of
  // that size in the original labelling.
  std::vector<std::uint32_t> lex_smallest() {
    if (n_ == 0) return {};
    target_ = best_;
    lex_slabs_.assign(std::size_t(target_ + 1) * 2 * words_, 0);
    stack_.clear();
    std::uint64_t* root = lex_slab(0, 0);
    set_all(root);
    bool ok = extend_lex(root, 0);
    if (!ok) throw std::logic_error("clique_search: lex extraction failed");
    return stack_;
  }

private:
  std::uint64_t* slab(std::uint32_t depth) {
    return slabs_.data() + std::size_t(depth) * words_;
  }
  std::uint64_t* lex_slab(std::uint32_t depth, int which) {
    return lex_slabs_.data() + (std::size_t(depth) * 2 + which) * words_;
  }
  const std::uint64_t* row(std::uint32_t v) const {
    return adj_.data() + std::size_t(v) * words_;
  }
  const std::uint64_t* row_orig(std::uint32_t v) const {
    return adj_orig_.data() + std::size_t(v) * words_;
  }

  void set_all(std::uint64_t* s) const {
    for (std::uint32_t w = 0; w < words_; ++w) s[w] = ~0ull;
    std::uint32_t tail = n_ % 64;
    if (n_ == 0)
      s[0] = 0;
    else if (tail)
      s[words_ - 1] = (1ull << tail) - 1;
  }
  static void clear_bit(std::uint64_t* s, std::uint32_t v) {
    s[v / 64] &= ~(1ull << (v % 64));
  }
  bool any(const std::uint64_t* s) const {
    for (std::uint32_t w = 0; w < words_; ++w)
      if (s[w]) return true;
    return false;
  }
  std::uint32_t popcount(const std::uint64_t* s) const {
    std::uint32_t c = 0;
    for (std::uint32_t w = 0; w < words_; ++w)
      c += std::uint32_t(__builtin_popcountll(s[w]));
    return c;
  }
  std::uint32_t lowest(const std::uint64_t* s) const {
    for (std::uint32_t w = 0; w < words_; ++w)
      if (s[w]) return w * 64 + std::uint32_t(__builtin_ctzll(s[w]));
    return n_;
  }
  void and_rows(std::uint64_t* dst, const std::uint64_t* a,
                const std::uint64_t* b) const {
    for (std::uint32_t w = 0; w < words_; ++w) dst[w] = a[w] & b[w];
  }

  std::uint32_t greedy_seed() {
    std::uint32_t size = 0;
    std::vector<std::uint64_t> cand(words_);
    set_all(cand.data());
    while (any(cand.data())) {
      std::uint32_t v = lowest(cand.data());
      ++size;
      clear_bit(cand.data(), v);
      and_rows(cand.data(), cand.data(), row(v));
    }
    return size;
  }

  void expand(std::uint64_t* P, std::uint32_t depth) {
    auto& ord = ord_[depth];
    auto& col = col_[depth];
    ord.clear();
    col.clear();
    // sequential greedy colouring; vertices come out grouped by colour
    std::uint64_t* uncol = scratch_a_.data();
    std::uint64_t* avail = scratch_b_.data();
    std::copy(P, P + words_, uncol);
    std::uint32_t c = 0;
    while (any(uncol)) {
      ++c;
      std::copy(uncol, uncol + words_, avail);
      while (any(avail)) {
        std::uint32_t v = lowest(avail);
        clear_bit(avail, v);
        clear_bit(uncol, v);
        for (std::uint32_t w = 0; w < words_; ++w) avail[w] &= ~row(v)[w];
        ord.push_back(v);
        col.push_back(c);
      }
    }
    for (std::size_t i = ord.size(); i-- > 0;) {
      if (depth + col[i] <= best_) return;
      std::uint32_t v = ord[i];
      std::uint64_t* next = slab(depth + 1);
      and_rows(next, P, row(v));
      if (any(next)) {
        expand(next, depth + 1);
      } else if (depth + 1 > best_) {
        best_ = depth + 1;
      }
      clear_bit(P, v);
    }
  }

  // Greedy colouring used only as an upper bound on the clique number of
  // the candidate set.
  std::uint32_t colour_bound(const std::uint64_t* P, const std::uint64_t* adj,
                             std::uint32_t cap) {
    std::uint32_t c = 0;
    std::uint64_t* uncol = scratch_a_.data();
    std::uint64_t* avail = scratch_b_.data();
    std::copy(P, P + words_, uncol);
    while (any(uncol)) {
      ++c;
      if (c >= cap) return c;
      std::copy(uncol, uncol + words_, avail);
      while (any(avail)) {
        std::uint32_t v = lowest(avail);
        clear_bit(avail, v);
        clear_bit(uncol, v);
        const std::uint64_t* r = adj + std::size_t(v) * words_;
        for (std::uint32_t w = 0; w < words_; ++w) avail[w] &= ~r[w];
      }
    }
    return c;
  }

  bool extend_lex(const std::uint64_t* P, std::uint32_t depth) {
    if (depth == target_) return true;
    std::uint32_t need = target_ - depth;
    if (popcount(P) < need) return false;
    if (colour_bound(P, adj_orig_.data(), need) < need) return false;
    std::uint64_t* iter = lex_slab(depth, 0);
    std::copy(P, P + words_, iter);
    while (any(iter)) {
      std::uint32_t v = lowest(iter);
      clear_bit(iter, v);
      stack_.push_back(v);
      if (depth + 1 == target_) return true;
      std::uint64_t* rest = lex_slab(depth, 1);
      and_rows(rest, iter, row_orig(v));
      if (popcount(rest) >= need - 1 && extend_lex(rest, depth + 1))
        return true;
      stack_.pop_back();
    }
    return false;
  }

  std::uint32_t n_, words_;
  std::vector<std::uint64_t> adj_;      // degree-sorted labelling
  std::vector<std::uint64_t> adj_orig_; // original labelling
  std::vector<std::uint32_t> order_;
  std::uint32_t best_ = 0, target_ = 0;
  std::vector<std::uint64_t> slabs_, lex_slabs_;
  std::vector<std::uint64_t> scratch_a_, scratch_b_;
  std::vector<std::vector<std::uint32_t>> ord_, col_;
  std::vector<std::uint32_t> stack_;
};

} // namespace detail

inline std::uint32_t clique_number(const explicit_graph& g) {
  detail::clique_search s(g);
  return s.omega();
}

// Exact maximum clique; among all maximum cliques, the lexicographically
// smallest vertex set, so results are deterministic.
inline std::vector<std::uint32_t> max_clique(const explicit_graph& g) {
  detail::clique_search s(g);
  s.omega();
  return s.lex_smallest();
}

} // namespace probeclique
