#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "explicit_graph.hpp"
#include "matching.hpp"
#include "ratio.hpp"

namespace probeclique {

// Construction parameters do not fit together.
struct invalid_construction : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// True iff the subgraph induced by `subset` has at least beta * C(|S|,2)
// edges. The comparison is exact rational arithmetic, never a float
// threshold.
inline bool is_beta_covered(const explicit_graph& g,
                            std::span<const std::uint32_t> subset,
                            const ratio& beta) {
  if (subset.size() < 2)
    throw std::invalid_argument("is_beta_covered: need |subset| >= 2");
  std::int64_t pairs =
      std::int64_t(subset.size()) * std::int64_t(subset.size() - 1) / 2;
  std::int64_t edges = std::int64_t(g.induced_edges(subset));
  return at_least_fraction(edges, beta, pairs);
}

inline bool is_beta_covered(const explicit_graph& g,
                            std::span<const std::uint32_t> subset,
                            double beta) {
  return is_beta_covered(g, subset, ratio::from_double(beta));
}

// log2 of C(n,k); exact integer arithmetic when the value fits in 64
// bits, lgamma otherwise.
inline double log2_binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return -HUGE_VAL;
  k = std::min(k, n - k);
  if (k == 0) return 0.0;
  if (n <= 62) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return std::log2(double(r));
  }
  return (std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) -
          std::lgamma(double(n - k) + 1)) /
         std::log(2.0);
}

// log2 of the encoding bound C(m, M) * C(n, k - 2M) on the number of
// beta-covered k-sets. The true minimum matching size M(k,beta) is
// floor(mu) or floor(mu)+1; both candidates are evaluated and the larger
// product is reported, which is safe whichever one is attained.
inline double n_cover_encoding_bound(std::uint64_t n, std::uint64_t m,
                                     std::uint32_t k, const ratio& beta) {
  if (k >= n) throw std::invalid_argument("n_cover_encoding_bound: need k < n");
  if (beta.num == 0) return log2_binom(n, k); // no matching forced at all
  std::uint32_t m_lo = mu_floor(k, beta);
  std::uint32_t m_hi = std::min(m_lo + 1, k / 2);
  m_hi = std::max(m_hi, m_lo);
  double lo = log2_binom(m, m_lo) + log2_binom(n, k - 2 * m_lo);
  double hi = log2_binom(m, m_hi) + log2_binom(n, k - 2 * m_hi);
  return std::max(lo, hi);
}

inline double n_cover_encoding_bound(std::uint64_t n, std::uint64_t m,
                                     std::uint32_t k, double beta) {
  return n_cover_encoding_bound(n, m, k, ratio::from_double(beta));
}

// log2 of the closed-form bound:
//   m^{(1-sqrt(1-b))k + 1} n^{(2 sqrt(1-b) - 1)k + 2}   for b <= 16/25,
//   m^{sqrt(b)k/2 + 1}     n^{(1-sqrt(b))k + 2}          for b >= 16/25.
// The branches agree at b = 16/25.
inline double n_cover_closed_form(std::uint64_t n, std::uint64_t m,
                                  std::uint32_t k, double beta) {
  if (beta < 0.0 || beta > 1.0)
    throw std::invalid_argument("n_cover_closed_form: beta must be in [0,1]");
  double log2m = std::log2(double(m));
  double log2n = std::log2(double(n));
  if (beta <= 16.0 / 25.0) {
    double root = std::sqrt(1.0 - beta);
    return ((1.0 - root) * k + 1.0) * log2m + ((2.0 * root - 1.0) * k + 2.0) * log2n;
  }
  double root = std::sqrt(beta);
  return (root * k / 2.0 + 1.0) * log2m + ((1.0 - root) * k + 2.0) * log2n;
}

struct cover_count {
  std::uint32_t n = 0;
  std::uint64_t m = 0;
  std::uint32_t k = 0;
  ratio beta;
  std::uint64_t count = 0;            // exact number of beta-covered k-sets
  double encoding_bound_log2 = 0.0;
  double closed_form_bound_log2 = 0.0;
};

// Exact count of beta-covered k-sets by enumerating every k-subset.
inline cover_count count_beta_covered_bruteforce(const explicit_graph& g,
                                                 std::uint32_t k,
                                                 const ratio& beta) {
  const std::uint32_t n = g.vertex_count();
  if (n > 24 || k < 2 || k > 6 || k > n)
    throw infeasible_scale(
        "count_beta_covered_bruteforce: need n <= 24 and 2 <= k <= 6");

  std::vector<std::uint32_t> rows(n, 0);
  for (std::uint32_t v = 0; v < n; ++v)
    for (std::uint32_t u = 0; u < n; ++u)
      if (u != v && g.has_edge(v, u)) rows[v] |= 1u << u;

  const std::int64_t pairs = std::int64_t(k) * (k - 1) / 2;
  std::uint64_t count = 0;
  std::vector<std::uint32_t> comb(k);
  for (std::uint32_t i = 0; i < k; ++i) comb[i] = i;
  while (true) {
    std::uint32_t mask = 0;
    for (std::uint32_t v : comb) mask |= 1u << v;
    std::int64_t edges = 0;
    for (std::uint32_t v : comb)
      edges += __builtin_popcount(rows[v] & mask);
    edges /= 2;
    if (at_least_fraction(edges, beta, pairs)) ++count;
    // next k-combination of {0..n-1}
    std::int32_t i = std::int32_t(k) - 1;
    while (i >= 0 && comb[i] == n - k + std::uint32_t(i)) --i;
    if (i < 0) break;
    ++comb[i];
    for (std::uint32_t j = std::uint32_t(i) + 1; j < k; ++j)
      comb[j] = comb[j - 1] + 1;
  }

  cover_count out;
  out.n = n;
  out.m = g.edge_count();
  out.k = k;
  out.beta = beta;
  out.count = count;
  if (k < n) {
    out.encoding_bound_log2 = n_cover_encoding_bound(n, out.m, k, beta);
    out.closed_form_bound_log2 =
        n_cover_closed_form(n, out.m, k, beta.to_double());
  } else {
    out.encoding_bound_log2 = out.closed_form_bound_log2 = HUGE_VAL;
  }
  return out;
}

inline cover_count count_beta_covered_bruteforce(const explicit_graph& g,
                                                 std::uint32_t k, double beta) {
  return count_beta_covered_bruteforce(g, k, ratio::from_double(beta));
}

namespace detail {

// Largest c >= 0 with c <= sqrt(1 - beta) * k, via the exact predicate
// c^2 * den <= (den - num) * k^2.
inline std::uint32_t floor_sqrt_complement(std::uint32_t k, const ratio& beta) {
  std::uint32_t c = 0;
  while (c < k && __int128(c + 1) * (c + 1) * beta.den <=
                      (__int128(beta.den) - beta.num) * k * k)
    ++c;
  return c;
}

// Smallest q with C(q,2) >= beta * C(k,2), exactly.
inline std::uint32_t min_clique_take(std::uint32_t k, const ratio& beta) {
  std::int64_t pairs = std::int64_t(k) * (k - 1) / 2;
  std::int64_t q = 0;
  while (!at_least_fraction(q * (q - 1) / 2, beta, pairs)) ++q;
  return std::uint32_t(q);
}

} // namespace detail

struct split_example {
  explicit_graph graph;
  std::uint32_t k = 0;
  ratio beta;
  std::uint32_t clique_size = 0;       // |K|, vertices [0, clique_size)
  std::uint32_t independent_size = 0;  // |I|, the next block of vertices
  std::uint32_t pattern_clique_take = 0;
  std::uint32_t pattern_independent_take = 0;
};

// Split graph whose covered k-sets witness the closed-form bound for
// beta <= 16/25: a clique K joined completely to an independent set I,
// sized so that roughly m edges are used. Every set of
// pattern_clique_take clique vertices plus pattern_independent_take
// vertices of I is beta-covered.
inline split_example tight_example_split(std::uint32_t n, std::uint64_t m,
                                         std::uint32_t k, const ratio& beta) {
  if (k < 2 || k >= n) throw invalid_construction("split: need 2 <= k < n");
  if (__int128(beta.num) * 25 > __int128(beta.den) * 16)
    throw invalid_construction("split: construction needs beta <= 16/25");
  if (beta.num == 0) throw invalid_construction("split: need beta > 0");

  std::uint32_t ind_take = detail::floor_sqrt_complement(k, beta);
  std::uint32_t clique_take = k - ind_take;
  if (clique_take == 0)
    throw invalid_construction("split: clique part came out empty");

  std::uint32_t ksize, isize;
  if (m <= std::uint64_t(k) * n) {
    ksize = clique_take;
    std::uint64_t kk_edges = std::uint64_t(ksize) * (ksize - 1) / 2;
    if (m < kk_edges) throw invalid_construction("split: too few edges");
    isize = std::uint32_t(
        std::min<std::uint64_t>(n - ksize, (m - kk_edges) / ksize));
  } else {
    // dense regime: grow the clique until the edge budget is spent
    std::uint32_t best = 0;
    for (std::uint32_t s = 1; s <= n; ++s) {
      std::uint64_t edges =
          std::uint64_t(s) * (s - 1) / 2 + std::uint64_t(s) * (n - s);
      if (edges <= m) best = s;
    }
    ksize = std::max(best, clique_take);
    isize = n - ksize;
  }
  if (ksize < clique_take || isize < ind_take)
    throw invalid_construction("split: sizes do not admit the covered pattern");

  explicit_graph g(n);
  for (std::uint32_t i = 0; i < ksize; ++i)
    for (std::uint32_t j = i + 1; j < ksize; ++j) g.add_edge(i, j);
  for (std::uint32_t i = 0; i < ksize; ++i)
    for (std::uint32_t j = 0; j < isize; ++j) g.add_edge(i, ksize + j);

  split_example out;
  out.graph = std::move(g);
  out.k = k;
  out.beta = beta;
  out.clique_size = ksize;
  out.independent_size = isize;
  out.pattern_clique_take = clique_take;
  out.pattern_independent_take = ind_take;
  return out;
}

inline split_example tight_example_split(std::uint32_t n, std::uint64_t m,
                                         std::uint32_t k, double beta) {
  return tight_example_split(n, m, k, ratio::from_double(beta));
}

struct clique_example {
  explicit_graph graph;
  std::uint32_t k = 0;
  ratio beta;
  std::uint32_t clique_size = 0; // floor(sqrt(2m)), vertices [0, clique_size)
  std::uint32_t pattern_clique_take = 0;
};

// The dense-regime witness for beta >= 16/25: all m edges form one clique
// of size floor(sqrt(2m)). Every set of pattern_clique_take clique
// vertices plus k - pattern_clique_take outside vertices is beta-covered.
inline clique_example tight_example_clique(std::uint64_t m, std::uint32_t k,
                                           const ratio& beta, std::uint32_t n) {
  if (k < 2 || k >= n) throw invalid_construction("clique: need 2 <= k < n");
  if (__int128(beta.num) * 25 < __int128(beta.den) * 16)
    throw invalid_construction("clique: construction needs beta >= 16/25");

  // integer-exact floor(sqrt(2m))
  std::uint32_t s = std::uint32_t(std::floor(std::sqrt(2.0 * double(m))));
  while (std::uint64_t(s + 1) * (s + 1) <= 2 * m) ++s;
  while (s > 0 && std::uint64_t(s) * s > 2 * m) --s;
  s = std::min(s, n);

  std::uint32_t take = detail::min_clique_take(k, beta);
  if (take > s || k - take > n - s)
    throw invalid_construction("clique: sizes do not admit the covered pattern");

  explicit_graph g(n);
  for (std::uint32_t i = 0; i < s; ++i)
    for (std::uint32_t j = i + 1; j < s; ++j) g.add_edge(i, j);

  clique_example out;
  out.graph = std::move(g);
  out.k = k;
  out.beta = beta;
  out.clique_size = s;
  out.pattern_clique_take = take;
  return out;
}

inline clique_example tight_example_clique(std::uint64_t m, std::uint32_t k,
                                           double beta, std::uint32_t n) {
  return tight_example_clique(m, k, ratio::from_double(beta), n);
}

} // namespace probeclique
