#pragma once

#include <cstdint>
#include <stdexcept>

namespace probeclique {

// Implicit G(n,p) oracle. Every edge bit is a pure function of
// (seed, i, j), so the adjacency matrix is never materialized and memory
// stays O(1) no matter how large n is. p is restricted to {0, 1/2, 1}:
// 1/2 is the model of interest, 0 and 1 give deterministic graphs that
// make algorithm behaviour checkable by hand.
class hidden_graph {
public:
  hidden_graph(std::uint32_t n, std::uint64_t seed, double p = 0.5)
      : n_(n), seed_(seed), p_(p) {
    if (n == 0) throw std::invalid_argument("hidden_graph: n must be >= 1");
    if (p != 0.0 && p != 0.5 && p != 1.0)
      throw std::invalid_argument("hidden_graph: p must be 0, 1/2 or 1");
    key_ = mix64(seed ^ 0x5bf0363546e17e21ull);
  }

  std::uint32_t vertex_count() const { return n_; }
  std::uint64_t seed() const { return seed_; }
  double edge_probability() const { return p_; }

  bool valid_pair(std::uint32_t i, std::uint32_t j) const {
    return i != j && i < n_ && j < n_;
  }

  // Adjacency bit of an unordered pair; self-loops and out-of-range
  // vertices are rejected.
  bool edge(std::uint32_t i, std::uint32_t j) const {
    if (!valid_pair(i, j))
      throw std::invalid_argument("hidden_graph::edge: invalid vertex pair");
    if (p_ == 0.0) return false;
    if (p_ == 1.0) return true;
    std::uint32_t lo = i < j ? i : j;
    std::uint32_t hi = i < j ? j : i;
    std::uint64_t code = (std::uint64_t(lo) << 32) | hi;
    return (mix64(key_ ^ code) >> 63) != 0;
  }

private:
  // splitmix64 finalizer: integer-only, so bits are identical on every
  // platform for a given (seed, i, j).
  static std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::uint32_t n_;
  std::uint64_t seed_;
  double p_;
  std::uint64_t key_;
};

} // namespace probeclique
