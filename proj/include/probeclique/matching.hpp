#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "explicit_graph.hpp"
#include "ratio.hpp"

namespace probeclique {

// Requested enumeration is too large to brute-force.
struct infeasible_scale : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// min(sqrt(beta)/2, 1 - sqrt(1-beta)) * k. Both branches meet at
// beta = 16/25 where they equal 2k/5.
inline double mu(std::uint32_t k, double beta) {
  if (beta < 0.0 || beta > 1.0)
    throw std::invalid_argument("mu: beta must lie in [0,1]");
  return std::min(std::sqrt(beta) / 2.0, 1.0 - std::sqrt(1.0 - beta)) *
         double(k);
}

// floor(mu(k, beta)) computed with integer predicates only:
//   M <= sqrt(beta)/2 * k      <=>  4 M^2 den <= num k^2
//   M <= (1 - sqrt(1-beta)) k  <=>  (k - M)^2 den >= (den - num) k^2
// so the result is exact even when mu lands on an integer.
inline std::uint32_t mu_floor(std::uint32_t k, const ratio& beta) {
  if (beta.num > beta.den) throw std::invalid_argument("mu_floor: beta > 1");
  auto fits = [&](std::uint64_t m) {
    __int128 k2 = __int128(k) * k;
    bool clique_branch = __int128(4) * m * m * beta.den <= __int128(beta.num) * k2;
    bool split_branch =
        m <= k &&
        __int128(k - m) * (k - m) * beta.den >= (__int128(beta.den) - beta.num) * k2;
    return clique_branch && split_branch;
  };
  std::uint32_t m = 0;
  while (fits(m + 1)) ++m;
  return m;
}

// Exact maximum matching on a general graph (Edmonds-style search with
// blossom contraction, O(V^3)).
inline std::uint32_t max_matching(const explicit_graph& g) {
  const std::uint32_t n = g.vertex_count();
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (std::uint32_t v = 0; v < n; ++v)
    for (std::uint32_t u = v + 1; u < n; ++u)
      if (g.has_edge(v, u)) {
        adj[v].push_back(u);
        adj[u].push_back(v);
      }

  constexpr std::uint32_t none = ~0u;
  std::vector<std::uint32_t> match(n, none), parent(n, none), base(n);
  std::vector<char> used(n), blossom(n), path_mark(n);

  auto lca = [&](std::uint32_t a, std::uint32_t b) {
    std::fill(path_mark.begin(), path_mark.end(), 0);
    for (std::uint32_t v = a;;) {
      v = base[v];
      path_mark[v] = 1;
      if (match[v] == none) break;
      v = parent[match[v]];
    }
    for (std::uint32_t v = b;;) {
      v = base[v];
      if (path_mark[v]) return v;
      v = parent[match[v]];
    }
  };

  auto mark_path = [&](std::uint32_t v, std::uint32_t b, std::uint32_t child) {
    while (base[v] != b) {
      blossom[base[v]] = 1;
      blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  };

  auto augment_from = [&](std::uint32_t root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), none);
    for (std::uint32_t i = 0; i < n; ++i) base[i] = i;
    std::vector<std::uint32_t> queue{root};
    used[root] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::uint32_t v = queue[qi];
      for (std::uint32_t to : adj[v]) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != none && parent[match[to]] != none)) {
          std::uint32_t cur = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::uint32_t i = 0; i < n; ++i)
            if (blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                queue.push_back(i);
              }
            }
        } else if (parent[to] == none) {
          parent[to] = v;
          if (match[to] == none) {
            // augment along the alternating path back to the root
            std::uint32_t u = to;
            while (u != none) {
              std::uint32_t pv = parent[u], ppv = match[pv];
              match[u] = pv;
              match[pv] = u;
              u = ppv;
            }
            return true;
          }
          used[match[to]] = 1;
          queue.push_back(match[to]);
        }
      }
    }
    return false;
  };

  std::uint32_t size = 0;
  for (std::uint32_t v = 0; v < n; ++v)
    if (match[v] == none && augment_from(v)) ++size;
  return size;
}

namespace detail {

// Maximum matching on <= 8 vertices given adjacency bitmasks, by
// memoized recursion over the set of still-available vertices.
class tiny_matcher {
public:
  std::uint32_t solve(const std::uint8_t* adj, std::uint32_t k) {
    adj_ = adj;
    memo_.assign(std::size_t(1) << k, -1);
    return std::uint32_t(rec(std::uint8_t((std::uint32_t(1) << k) - 1)));
  }

private:
  int rec(std::uint8_t mask) {
    if (mask == 0) return 0;
    int& m = memo_[mask];
    if (m >= 0) return m;
    std::uint32_t v = std::uint32_t(__builtin_ctz(mask));
    std::uint8_t rest = std::uint8_t(mask & (mask - 1)); // v skipped
    int best = rec(rest);
    std::uint8_t nbrs = std::uint8_t(adj_[v] & rest);
    while (nbrs) {
      std::uint32_t u = std::uint32_t(__builtin_ctz(nbrs));
      nbrs = std::uint8_t(nbrs & (nbrs - 1));
      best = std::max(best, 1 + rec(std::uint8_t(rest & ~(1u << u))));
    }
    return m = best;
  }

  const std::uint8_t* adj_ = nullptr;
  std::vector<int> memo_;
};

inline std::uint64_t binom64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Lexicographic unranking of a t-combination of {0,..,p-1}.
inline void unrank_combination(std::uint64_t rank, std::uint32_t p,
                               std::uint32_t t, std::uint32_t* out) {
  std::uint32_t next = 0;
  for (std::uint32_t slot = 0; slot < t; ++slot) {
    for (std::uint32_t v = next;; ++v) {
      std::uint64_t c = binom64(p - v - 1, t - slot - 1);
      if (rank < c) {
        out[slot] = v;
        next = v + 1;
        break;
      }
      rank -= c;
    }
  }
}

} // namespace detail

struct matching_extremum {
  std::uint32_t k = 0;
  std::uint32_t t = 0;
  std::uint32_t value = 0;       // M(k,t)
  explicit_graph witness;        // k vertices, t edges, maximum matching = value
};

// M(k,t): minimum over all k-vertex graphs with t edges of the maximum
// matching size, by enumerating every t-subset of the pair set in
// lexicographic order. The witness is the first graph attaining the
// minimum. Large enumerations are split across threads; the reduction
// keeps the lexicographically first witness, so the result does not
// depend on scheduling.
inline matching_extremum matching_minmax_bruteforce(std::uint32_t k,
                                                    std::uint32_t t,
                                                    std::uint32_t threads = 0) {
  if (k < 2 || k > 8)
    throw infeasible_scale("matching_minmax_bruteforce: need 2 <= k <= 8");
  const std::uint32_t pair_count = k * (k - 1) / 2;
  if (t < 1 || t > pair_count)
    throw std::invalid_argument("matching_minmax_bruteforce: bad t");

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(pair_count);
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = i + 1; j < k; ++j) pairs.emplace_back(i, j);

  const std::uint64_t total = detail::binom64(pair_count, t);
  if (threads == 0) threads = std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<std::uint32_t>(threads, 8));
  if (total < 65536) threads = 1;

  struct partial {
    std::uint32_t value = ~0u;
    std::uint64_t rank = 0;
  };
  std::vector<partial> results(threads);

  auto scan = [&](std::uint32_t tid) {
    std::uint64_t begin = total * tid / threads;
    std::uint64_t end = total * (tid + 1) / threads;
    if (begin >= end) return;
    std::uint32_t comb[28];
    detail::unrank_combination(begin, pair_count, t, comb);
    detail::tiny_matcher matcher;
    partial best;
    std::uint8_t adj[8];
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      std::fill(adj, adj + k, 0);
      for (std::uint32_t e = 0; e < t; ++e) {
        auto [a, b] = pairs[comb[e]];
        adj[a] |= std::uint8_t(1u << b);
        adj[b] |= std::uint8_t(1u << a);
      }
      std::uint32_t m = matcher.solve(adj, k);
      if (m < best.value) {
        best.value = m;
        best.rank = rank;
      }
      // advance to the next combination in lexicographic order
      if (rank + 1 < end) {
        std::int32_t i = std::int32_t(t) - 1;
        while (i >= 0 && comb[i] == pair_count - t + std::uint32_t(i)) --i;
        ++comb[i];
        for (std::uint32_t j = std::uint32_t(i) + 1; j < t; ++j)
          comb[j] = comb[j - 1] + 1;
      }
    }
    results[tid] = best;
  };

  if (threads == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (std::uint32_t tid = 0; tid < threads; ++tid)
      pool.emplace_back(scan, tid);
    for (auto& th : pool) th.join();
  }

  partial best;
  for (const auto& r : results)
    if (r.value < best.value || (r.value == best.value && r.rank < best.rank))
      best = r;

  matching_extremum out;
  out.k = k;
  out.t = t;
  out.value = best.value;
  out.witness = explicit_graph(k);
  std::uint32_t comb[28];
  detail::unrank_combination(best.rank, pair_count, t, comb);
  for (std::uint32_t e = 0; e < t; ++e)
    out.witness.add_edge(pairs[comb[e]].first, pairs[comb[e]].second);
  return out;
}

} // namespace probeclique
