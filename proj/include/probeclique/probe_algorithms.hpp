#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hidden_graph.hpp"
#include "max_clique.hpp"
#include "probe_ledger.hpp"

namespace probeclique {

struct algorithm_params {
  double delta = 1.0;           // probe exponent, in [1,2)
  double budget_constant = 2.0; // budget = ceil(c * n^delta)
  std::uint64_t stop_size = 0;  // greedy stop threshold; 0 = floor(sqrt(budget))

  void validate() const {
    if (delta < 1.0 || delta >= 2.0)
      throw std::invalid_argument("algorithm_params: delta must lie in [1,2)");
    if (budget_constant <= 0.0)
      throw std::invalid_argument("algorithm_params: budget constant must be > 0");
  }
};

struct clique_report {
  std::vector<std::uint32_t> vertices; // sorted ascending
  std::uint32_t size = 0;
  double predicted_size = 0.0; // stage-wise Matula composition
  std::uint64_t probes_used = 0;
  std::uint32_t rounds_used = 0;
  bool verified = false;
  bool degenerate = false; // an intermediate stage came out empty
};

namespace detail {

// floor(n^e) with a tiny guard so that exact powers do not fall to the
// integer below through float error.
inline std::uint64_t ipow_floor(std::uint64_t n, double e) {
  return std::uint64_t(std::floor(std::pow(double(n), e) + 1e-9));
}

inline std::uint64_t probe_budget(std::uint64_t n, const algorithm_params& p) {
  return std::uint64_t(
      std::ceil(p.budget_constant * std::pow(double(n), p.delta) - 1e-9));
}

inline double stage_prediction(std::uint64_t subgraph_size) {
  return subgraph_size >= 3 ? matula_omega(subgraph_size)
                            : double(subgraph_size);
}

inline std::vector<std::pair<std::uint32_t, std::uint32_t>>
pairs_within(const std::vector<std::uint32_t>& verts) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(verts.size() * (verts.size() ? verts.size() - 1 : 0) / 2);
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      out.emplace_back(verts[i], verts[j]);
  return out;
}

inline std::vector<std::pair<std::uint32_t, std::uint32_t>>
pairs_between(const std::vector<std::uint32_t>& a,
              const std::vector<std::uint32_t>& b) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(a.size() * b.size());
  for (std::uint32_t x : a)
    for (std::uint32_t y : b) out.emplace_back(x, y);
  return out;
}

// Maximum clique of the revealed subgraph induced by `verts`, mapped back
// to original vertex ids.
inline std::vector<std::uint32_t>
max_clique_revealed(const probe_ledger& ledger,
                    const std::vector<std::uint32_t>& verts) {
  if (verts.empty()) return {};
  explicit_graph g = revealed_graph(ledger).induced(verts);
  std::vector<std::uint32_t> local = max_clique(g);
  std::vector<std::uint32_t> out;
  out.reserve(local.size());
  for (std::uint32_t idx : local) out.push_back(verts[idx]);
  return out;
}

inline std::vector<std::uint32_t> iota_block(std::uint32_t from,
                                             std::uint64_t count) {
  std::vector<std::uint32_t> v(count);
  for (std::uint64_t i = 0; i < count; ++i) v[i] = from + std::uint32_t(i);
  return v;
}

inline void finish_report(clique_report& rep, const probe_ledger& ledger,
                          std::vector<std::uint32_t> vertices) {
  std::sort(vertices.begin(), vertices.end());
  rep.vertices = std::move(vertices);
  rep.size = std::uint32_t(rep.vertices.size());
  rep.probes_used = ledger.probes_used();
  rep.rounds_used = std::uint32_t(ledger.rounds_used());
  rep.verified = ledger.verify_clique(rep.vertices);
}

} // namespace detail

// One round: probe every pair among the floor(sqrt(2q)) lowest-index
// vertices and output the maximum clique of what was revealed.
inline clique_report run_one_round(const hidden_graph& g,
                                   const algorithm_params& params,
                                   probe_ledger* transcript = nullptr) {
  params.validate();
  const std::uint64_t n = g.vertex_count();
  const std::uint64_t budget = detail::probe_budget(n, params);
  probe_ledger ledger(budget, 1);

  std::uint64_t m = std::uint64_t(std::floor(std::sqrt(2.0 * double(budget))));
  while (m * m > 2 * budget) --m;
  while ((m + 1) * (m + 1) <= 2 * budget) ++m;
  m = std::min(m, n);

  auto base = detail::iota_block(0, m);
  ledger.probe_batch(g, detail::pairs_within(base));

  clique_report rep;
  rep.predicted_size = detail::stage_prediction(m);
  detail::finish_report(rep, ledger, detail::max_clique_revealed(ledger, base));
  if (transcript) *transcript = ledger;
  return rep;
}

// Two rounds. Round 1 probes inside a seed set S and between S and a
// larger set T; round 2 keeps the common neighbours T' of the best clique
// S' in S (truncated to ceil(n^{delta/2}) lowest indices so the second
// batch stays near its intended scale) and probes inside T'. Output is
// S' together with the best clique of T'.
inline clique_report run_two_round(const hidden_graph& g,
                                   const algorithm_params& params,
                                   probe_ledger* transcript = nullptr) {
  params.validate();
  const std::uint64_t n = g.vertex_count();
  probe_ledger ledger(detail::probe_budget(n, params), 2);

  std::uint64_t s_size = params.delta <= 1.2
                             ? detail::ipow_floor(n, params.delta / 6.0)
                             : detail::ipow_floor(n, 0.5 - params.delta / 4.0);
  s_size = std::clamp<std::uint64_t>(s_size, 1, n);
  std::uint64_t nd = std::pow(double(n), params.delta) + 1e-9;
  std::uint64_t t_size = std::min(n - s_size, nd / s_size);

  auto set_s = detail::iota_block(0, s_size);
  auto set_t = detail::iota_block(std::uint32_t(s_size), t_size);

  auto round1 = detail::pairs_within(set_s);
  auto between = detail::pairs_between(set_s, set_t);
  round1.insert(round1.end(), between.begin(), between.end());
  ledger.probe_batch(g, round1);

  auto s_prime = detail::max_clique_revealed(ledger, set_s);
  std::vector<std::uint32_t> t_prime;
  const std::uint64_t cap = std::uint64_t(
      std::ceil(std::pow(double(n), params.delta / 2.0) - 1e-9));
  for (std::uint32_t v : set_t) {
    if (t_prime.size() >= cap) break;
    bool all = true;
    for (std::uint32_t s : s_prime)
      if (ledger.status(s, v) != 1) {
        all = false;
        break;
      }
    if (all) t_prime.push_back(v);
  }
  ledger.probe_batch(g, detail::pairs_within(t_prime));

  auto clique2 = detail::max_clique_revealed(ledger, t_prime);
  clique_report rep;
  rep.degenerate = t_prime.empty();
  rep.predicted_size =
      double(s_prime.size()) + detail::stage_prediction(t_prime.size());
  s_prime.insert(s_prime.end(), clique2.begin(), clique2.end());
  detail::finish_report(rep, ledger, std::move(s_prime));
  if (transcript) *transcript = ledger;
  return rep;
}

// Three rounds: round 1 probes inside S, round 2 connects the best clique
// S' of S to a fresh set T of floor(n / log2 n) vertices, round 3 probes
// inside the surviving common neighbours T' (again truncated to
// ceil(n^{delta/2})).
inline clique_report run_three_round(const hidden_graph& g,
                                     const algorithm_params& params,
                                     probe_ledger* transcript = nullptr) {
  params.validate();
  const std::uint64_t n = g.vertex_count();
  probe_ledger ledger(detail::probe_budget(n, params), 3);

  std::uint64_t s_size =
      std::clamp<std::uint64_t>(
          detail::ipow_floor(n, (1.0 - params.delta / 2.0) / 2.0), 1, n);
  auto set_s = detail::iota_block(0, s_size);
  ledger.probe_batch(g, detail::pairs_within(set_s));
  auto s_prime = detail::max_clique_revealed(ledger, set_s);

  std::uint64_t t_size =
      n >= 2 ? std::min<std::uint64_t>(
                   n - s_size,
                   std::uint64_t(double(n) / std::log2(double(n)) + 1e-9))
             : 0;
  auto set_t = detail::iota_block(std::uint32_t(s_size), t_size);
  ledger.probe_batch(g, detail::pairs_between(s_prime, set_t));

  std::vector<std::uint32_t> t_prime;
  const std::uint64_t cap = std::uint64_t(
      std::ceil(std::pow(double(n), params.delta / 2.0) - 1e-9));
  for (std::uint32_t v : set_t) {
    if (t_prime.size() >= cap) break;
    bool all = true;
    for (std::uint32_t s : s_prime)
      if (ledger.status(s, v) != 1) {
        all = false;
        break;
      }
    if (all) t_prime.push_back(v);
  }
  ledger.probe_batch(g, detail::pairs_within(t_prime));

  auto clique3 = detail::max_clique_revealed(ledger, t_prime);
  clique_report rep;
  rep.degenerate = t_prime.empty();
  rep.predicted_size =
      double(s_prime.size()) + detail::stage_prediction(t_prime.size());
  s_prime.insert(s_prime.end(), clique3.begin(), clique3.end());
  detail::finish_report(rep, ledger, std::move(s_prime));
  if (transcript) *transcript = ledger;
  return rep;
}

// Fully adaptive greedy: repeatedly take the lowest-index candidate,
// probe it against every remaining candidate in one batch, and keep its
// neighbours. When at most stop_size candidates remain, probe all pairs
// among them and finish with an exact clique search there. One batch per
// greedy step, so rounds_used = steps + 1.
inline clique_report run_greedy_adaptive(const hidden_graph& g,
                                         const algorithm_params& params,
                                         probe_ledger* transcript = nullptr) {
  params.validate();
  const std::uint64_t n = g.vertex_count();
  const std::uint64_t budget = detail::probe_budget(n, params);
  std::uint64_t stop = params.stop_size;
  if (stop == 0) {
    stop = std::uint64_t(std::floor(std::sqrt(double(budget)) + 1e-9));
    stop = std::max<std::uint64_t>(stop, 1);
  }
  probe_ledger ledger(budget);

  std::vector<std::uint32_t> clique;
  std::vector<std::uint32_t> candidates = detail::iota_block(0, n);
  std::uint32_t steps = 0;
  while (candidates.size() > stop) {
    std::uint32_t v = candidates.front();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> batch;
    batch.reserve(candidates.size() - 1);
    for (std::size_t i = 1; i < candidates.size(); ++i)
      batch.emplace_back(v, candidates[i]);
    const probe_round& round = ledger.probe_batch(g, batch);
    std::vector<std::uint32_t> next;
    next.reserve(round.size());
    for (const probed_pair& p : round)
      if (p.is_edge) next.push_back(p.a == v ? p.b : p.a);
    std::sort(next.begin(), next.end());
    clique.push_back(v);
    candidates = std::move(next);
    ++steps;
  }
  ledger.probe_batch(g, detail::pairs_within(candidates));
  auto tail = detail::max_clique_revealed(ledger, candidates);

  clique_report rep;
  rep.predicted_size =
      double(steps) + detail::stage_prediction(candidates.size());
  clique.insert(clique.end(), tail.begin(), tail.end());
  detail::finish_report(rep, ledger, std::move(clique));
  if (transcript) *transcript = ledger;
  return rep;
}

} // namespace probeclique
