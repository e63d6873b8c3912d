#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace probeclique {

// Dense undirected graph over vertices 0..n-1, adjacency kept as bit rows.
// Symmetric, no self-loops.
class explicit_graph {
public:
  explicit explicit_graph(std::uint32_t n = 0)
      : n_(n), words_((n + 63) / 64), rows_(std::size_t(n) * words_, 0),
        edges_(0) {}

  std::uint32_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_; }
  std::uint32_t words_per_row() const { return words_; }

  void add_edge(std::uint32_t i, std::uint32_t j) {
    check_pair(i, j);
    if (has_edge(i, j)) return;
    rows_[std::size_t(i) * words_ + j / 64] |= 1ull << (j % 64);
    rows_[std::size_t(j) * words_ + i / 64] |= 1ull << (i % 64);
    ++edges_;
  }

  bool has_edge(std::uint32_t i, std::uint32_t j) const {
    check_pair(i, j);
    return (rows_[std::size_t(i) * words_ + j / 64] >> (j % 64)) & 1u;
  }

  std::span<const std::uint64_t> row(std::uint32_t v) const {
    return {rows_.data() + std::size_t(v) * words_, words_};
  }

  std::uint32_t degree(std::uint32_t v) const {
    std::uint32_t d = 0;
    for (std::uint64_t w : row(v)) d += std::uint32_t(__builtin_popcountll(w));
    return d;
  }

  // Number of edges inside a vertex subset.
  std::size_t induced_edges(std::span<const std::uint32_t> subset) const {
    std::vector<std::uint64_t> mask(words_, 0);
    for (std::uint32_t v : subset) mask[v / 64] |= 1ull << (v % 64);
    std::size_t twice = 0;
    for (std::uint32_t v : subset) {
      auto r = row(v);
      for (std::uint32_t w = 0; w < words_; ++w)
        twice += std::size_t(__builtin_popcountll(r[w] & mask[w]));
    }
    return twice / 2;
  }

  bool is_clique(std::span<const std::uint32_t> subset) const {
    for (std::size_t a = 0; a < subset.size(); ++a)
      for (std::size_t b = a + 1; b < subset.size(); ++b)
        if (!has_edge(subset[a], subset[b])) return false;
    return true;
  }

  static explicit_graph complete(std::uint32_t n) {
    explicit_graph g(n);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
  }

  static explicit_graph cycle(std::uint32_t n) {
    explicit_graph g(n);
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    for (std::uint32_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
  }

private:
  void check_pair(std::uint32_t i, std::uint32_t j) const {
    if (i == j || i >= n_ || j >= n_)
      throw std::invalid_argument("explicit_graph: invalid vertex pair");
  }

  std::uint32_t n_;
  std::uint32_t words_;
  std::vector<std::uint64_t> rows_;
  std::size_t edges_;
};

} // namespace probeclique
