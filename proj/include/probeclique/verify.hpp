#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "experiment.hpp"
#include "extremal.hpp"
#include "matching.hpp"
#include "probe_algorithms.hpp"

namespace probeclique {

struct check_result {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline bool all_passed(const std::vector<check_result>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

struct verify_options {
  // matching sandwich
  std::uint32_t matching_kmax = 7;
  std::uint32_t matching_threads = 0;
  // injectable replacement for mu, so a perturbed implementation is caught
  std::function<double(std::uint32_t, double)> mu_override;

  // cover chain
  std::uint32_t cover_exhaustive_n = 5;
  std::uint32_t cover_random_graphs = 2000;
  std::uint32_t cover_random_n = 8;
  std::uint64_t cover_seed = 1;

  // optimizer vs closed form at delta = 1
  std::vector<std::uint32_t> optimizer_ells = {2, 3, 4};
  double optimizer_value_tol = 1e-4;
  double optimizer_beta_tol = 1e-3;
  optimize_options optimizer;

  // verified-clique runs; the greedy needs roughly 2n + C(stop,2) probes
  // with stop = sqrt(c n), so its budget constant sits well above 4
  std::uint32_t algo_n = 4096;
  std::uint32_t algo_seeds = 5;
  double algo_greedy_c = 5.0;
};

namespace detail {

inline std::string fmt(const char* pattern, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

} // namespace detail

// For every k <= kmax and every t, the brute-forced M(k,t) must sit in
// [floor(mu), floor(mu)+1], and floor of the (possibly injected) mu
// implementation must agree with the exact integer floor.
inline check_result check_matching_sandwich(const verify_options& opts = {}) {
  check_result out{"matching-sandwich", true, ""};
  for (std::uint32_t k = 3; k <= opts.matching_kmax; ++k) {
    const std::uint32_t pair_count = k * (k - 1) / 2;
    for (std::uint32_t t = 1; t <= pair_count; ++t) {
      ratio beta(t, pair_count);
      std::uint32_t lo = mu_floor(k, beta);
      double mu_val = opts.mu_override ? opts.mu_override(k, beta.to_double())
                                       : mu(k, beta.to_double());
      if (std::uint32_t(std::floor(mu_val)) != lo) {
        out.passed = false;
        out.detail = detail::fmt("mu floor mismatch at k=%u t=%u: %.6g vs %u",
                                 k, t, mu_val, lo);
        return out;
      }
      std::uint32_t m =
          matching_minmax_bruteforce(k, t, opts.matching_threads).value;
      if (m < lo || m > lo + 1) {
        out.passed = false;
        out.detail = detail::fmt("sandwich violated at k=%u t=%u: M=%u mu=%u",
                                 k, t, m, lo);
        return out;
      }
    }
  }
  out.detail = detail::fmt("k of 3..%u, all t", opts.matching_kmax);
  return out;
}

namespace detail {

// Subset histogram: hist[e] = number of k-subsets whose induced subgraph
// has exactly e edges. Counting beta-covered sets for beta = t/C(k,2) is
// then a suffix sum.
inline std::vector<std::uint64_t> induced_edge_histogram(
    const std::vector<std::uint32_t>& rows, std::uint32_t n, std::uint32_t k) {
  std::vector<std::uint64_t> hist(k * (k - 1) / 2 + 1, 0);
  std::vector<std::uint32_t> comb(k);
  for (std::uint32_t i = 0; i < k; ++i) comb[i] = i;
  while (true) {
    std::uint32_t mask = 0;
    for (std::uint32_t v : comb) mask |= 1u << v;
    std::uint32_t edges = 0;
    for (std::uint32_t v : comb) edges += std::uint32_t(__builtin_popcount(rows[v] & mask));
    ++hist[edges / 2];
    std::int32_t i = std::int32_t(k) - 1;
    while (i >= 0 && comb[i] == n - k + std::uint32_t(i)) --i;
    if (i < 0) break;
    ++comb[i];
    for (std::uint32_t j = std::uint32_t(i) + 1; j < k; ++j)
      comb[j] = comb[j - 1] + 1;
  }
  return hist;
}

// count <= C(m, M) C(n, k-2M) with both matching-size candidates, in
// exact integer arithmetic.
inline bool encoding_holds_exact(std::uint64_t count, std::uint64_t n,
                                 std::uint64_t m, std::uint32_t k,
                                 const ratio& beta) {
  if (beta.num == 0) return count <= binom64(n, k);
  std::uint32_t m_lo = mu_floor(k, beta);
  std::uint32_t m_hi = std::min(m_lo + 1, k / 2);
  m_hi = std::max(m_hi, m_lo);
  unsigned __int128 lo = (unsigned __int128)binom64(m, m_lo) *
                         binom64(n, k - 2 * m_lo);
  unsigned __int128 hi = (unsigned __int128)binom64(m, m_hi) *
                         binom64(n, k - 2 * m_hi);
  return (unsigned __int128)count <= (lo > hi ? lo : hi);
}

inline bool cover_chain_one_graph(const explicit_graph& g, std::uint32_t kmin,
                                  std::uint32_t kmax, std::string& fail) {
  const std::uint32_t n = g.vertex_count();
  const std::uint64_t m = g.edge_count();
  std::vector<std::uint32_t> rows(n, 0);
  for (std::uint32_t v = 0; v < n; ++v)
    for (std::uint32_t u = 0; u < n; ++u)
      if (u != v && g.has_edge(v, u)) rows[v] |= 1u << u;

  for (std::uint32_t k = kmin; k <= kmax && k < n; ++k) {
    auto hist = induced_edge_histogram(rows, n, k);
    const std::uint32_t pair_count = k * (k - 1) / 2;
    std::uint64_t suffix = 0;
    std::vector<std::uint64_t> counts(pair_count + 1, 0);
    for (std::int32_t e = std::int32_t(pair_count); e >= 0; --e) {
      suffix += hist[e];
      counts[e] = suffix;
    }
    for (std::uint32_t t = 0; t <= pair_count; ++t) {
      std::uint64_t count = counts[t];
      ratio beta(t, pair_count);
      if (m == 0) {
        // the bound is defined for graphs with at least one edge
        std::uint64_t expect = t == 0 ? counts[0] : 0;
        if (count != expect) {
          fail = fmt("m=0 count wrong at n=%u k=%u t=%u", n, k, t);
          return false;
        }
        continue;
      }
      if (!encoding_holds_exact(count, n, m, k, beta)) {
        fail = fmt("count above encoding bound: n=%u m=%llu k=%u t=%u count=%llu",
                   n, (unsigned long long)m, k, t, (unsigned long long)count);
        return false;
      }
      double enc = n_cover_encoding_bound(n, m, k, beta);
      double closed = n_cover_closed_form(n, m, k, beta.to_double());
      if (count > 0 && std::log2(double(count)) > enc) {
        fail = fmt("log-scale encoding bound failed: n=%u m=%llu k=%u t=%u", n,
                   (unsigned long long)m, k, t);
        return false;
      }
      if (enc > closed) {
        fail = fmt("encoding bound above closed form: n=%u m=%llu k=%u t=%u "
                   "(%.12g > %.12g)",
                   n, (unsigned long long)m, k, t, enc, closed);
        return false;
      }
    }
  }
  return true;
}

} // namespace detail

// count <= 2^encoding <= 2^closed-form over every graph on up to
// `cover_exhaustive_n` vertices plus seeded random graphs, for
// k in {3,4,5} and every rational threshold t/C(k,2).
inline check_result check_cover_chain(const verify_options& opts = {}) {
  check_result out{"cover-chain", true, ""};
  std::string fail;
  std::uint64_t graphs = 0;

  for (std::uint32_t n = 4; n <= opts.cover_exhaustive_n; ++n) {
    const std::uint32_t pair_count = n * (n - 1) / 2;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    for (std::uint64_t code = 0; code < (std::uint64_t(1) << pair_count);
         ++code) {
      explicit_graph g(n);
      for (std::uint32_t e = 0; e < pair_count; ++e)
        if ((code >> e) & 1) g.add_edge(pairs[e].first, pairs[e].second);
      ++graphs;
      if (!detail::cover_chain_one_graph(g, 3, 5, fail)) {
        out.passed = false;
        out.detail = fail;
        return out;
      }
    }
  }

  for (std::uint64_t i = 0; i < opts.cover_random_graphs; ++i) {
    std::uint32_t n = opts.cover_random_n;
    hidden_graph h(n, opts.cover_seed + i, 0.5);
    explicit_graph g(n);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = a + 1; b < n; ++b)
        if (h.edge(a, b)) g.add_edge(a, b);
    ++graphs;
    if (!detail::cover_chain_one_graph(g, 3, 5, fail)) {
      out.passed = false;
      out.detail = fail;
      return out;
    }
    // spot-check the enumerating operation against the histogram route
    if (i % 997 == 0) {
      ratio beta(1, 2);
      auto cc = count_beta_covered_bruteforce(g, 4, beta);
      std::vector<std::uint32_t> rows(n, 0);
      for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
          if (a != b && g.has_edge(a, b)) rows[a] |= 1u << b;
      auto hist = detail::induced_edge_histogram(rows, n, 4);
      std::uint64_t expect = 0;
      for (std::uint32_t e = 3; e <= 6; ++e) expect += hist[e]; // e >= 6*1/2
      if (cc.count != expect) {
        out.passed = false;
        out.detail = "count_beta_covered_bruteforce disagrees with histogram";
        return out;
      }
    }
  }
  out.detail = detail::fmt("%llu graphs", (unsigned long long)graphs);
  return out;
}

// At delta = 1 the optimizer value must match 2^{1 - 1/(2^ell - 1)} and
// the optimizing vector must match the closed form componentwise.
inline check_result check_optimizer_closed_form(const verify_options& opts = {}) {
  check_result out{"optimizer-closed-form", true, ""};
  for (std::uint32_t ell : opts.optimizer_ells) {
    bound_result r = optimize_beta(1.0, ell, opts.optimizer);
    double want = corollary_bound(ell);
    if (std::abs(r.value - want) > opts.optimizer_value_tol) {
      out.passed = false;
      out.detail = detail::fmt("value off at ell=%u: %.8f vs %.8f", ell,
                               r.value, want);
      return out;
    }
    auto closed = closed_form_beta_delta1(ell);
    for (std::uint32_t i = 0; i < ell; ++i)
      if (std::abs(r.optimizer[i] - closed[i]) > opts.optimizer_beta_tol) {
        out.passed = false;
        out.detail = detail::fmt("optimizer off at ell=%u component %u", ell, i);
        return out;
      }
  }
  out.detail = detail::fmt("ell set of size %zu", opts.optimizer_ells.size());
  return out;
}

// Every algorithm output must verify against its own transcript and stay
// inside its budget and round limit.
inline check_result check_verified_cliques(const verify_options& opts = {}) {
  check_result out{"verified-cliques", true, ""};
  for (std::uint32_t s = 0; s < opts.algo_seeds; ++s) {
    hidden_graph g(opts.algo_n, 1000 + s, 0.5);
    algorithm_params base{1.0, 2.0, 0};
    struct run {
      const char* name;
      clique_report rep;
      std::uint64_t budget;
      std::uint32_t max_rounds;
    };
    algorithm_params greedy_params{1.0, opts.algo_greedy_c, 0};
    std::vector<run> runs;
    runs.push_back({"one", run_one_round(g, base),
                    detail::probe_budget(opts.algo_n, base), 1});
    runs.push_back({"two", run_two_round(g, base),
                    detail::probe_budget(opts.algo_n, base), 2});
    runs.push_back({"three", run_three_round(g, base),
                    detail::probe_budget(opts.algo_n, base), 3});
    runs.push_back({"greedy", run_greedy_adaptive(g, greedy_params),
                    detail::probe_budget(opts.algo_n, greedy_params), ~0u});
    for (const auto& r : runs) {
      if (!r.rep.verified || r.rep.probes_used > r.budget ||
          (r.max_rounds != ~0u && r.rep.rounds_used > r.max_rounds)) {
        out.passed = false;
        out.detail = detail::fmt("%s failed at seed %u", r.name, 1000 + s);
        return out;
      }
    }
  }
  out.detail = detail::fmt("4 algorithms x %u seeds, n=%u", opts.algo_seeds,
                           opts.algo_n);
  return out;
}

// The four standing checks in one list; used by the command-line
// `verify all` and by the tests.
inline std::vector<check_result> verify_all(const verify_options& opts = {}) {
  return {check_matching_sandwich(opts), check_cover_chain(opts),
          check_optimizer_closed_form(opts), check_verified_cliques(opts)};
}

} // namespace probeclique
