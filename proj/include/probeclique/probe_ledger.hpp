#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "explicit_graph.hpp"
#include "hidden_graph.hpp"

namespace probeclique {

struct probe_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// The batch would push the number of distinct probed pairs past the budget.
struct budget_exceeded : probe_error {
  using probe_error::probe_error;
};
// The batch would start more rounds than the ledger allows.
struct round_limit_exceeded : probe_error {
  using probe_error::probe_error;
};
// Self-loop or out-of-range vertex in a probe request.
struct invalid_pair : probe_error {
  using probe_error::probe_error;
};

struct probed_pair {
  std::uint32_t a, b; // a < b
  bool is_edge;
};

using probe_round = std::vector<probed_pair>;

// Transcript of all probes made against one hidden graph, grouped into
// rounds. Enforces the total probe budget and the round limit. A pair
// probed twice is answered consistently and charged against the budget
// once; probes_used() is the number of distinct pairs ever probed.
class probe_ledger {
public:
  static constexpr std::size_t unlimited_rounds =
      std::numeric_limits<std::size_t>::max();

  explicit probe_ledger(std::uint64_t budget,
                        std::size_t max_rounds = unlimited_rounds)
      : budget_(budget), max_rounds_(max_rounds) {}

  std::uint64_t budget() const { return budget_; }
  std::size_t max_rounds() const { return max_rounds_; }
  std::uint64_t probes_used() const { return revealed_.size(); }
  std::size_t rounds_used() const { return rounds_.size(); }
  const std::vector<probe_round>& rounds() const { return rounds_; }

  // Issues one round of probes. The request is validated and deduplicated
  // up front; if the budget or the round limit would be violated, the
  // ledger is left untouched. Returns the recorded round.
  const probe_round& probe_batch(const hidden_graph& g,
                                 std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs) {
    if (rounds_.size() >= max_rounds_)
      throw round_limit_exceeded("probe_batch: round limit reached");

    probe_round round;
    round.reserve(pairs.size());
    std::uint64_t fresh = 0;
    std::unordered_map<std::uint64_t, bool> batch_seen;
    batch_seen.reserve(pairs.size() * 2);
    for (auto [i, j] : pairs) {
      if (!g.valid_pair(i, j))
        throw invalid_pair("probe_batch: self-loop or out-of-range vertex");
      std::uint32_t a = i < j ? i : j;
      std::uint32_t b = i < j ? j : i;
      std::uint64_t code = key(a, b);
      if (!batch_seen.emplace(code, true).second) continue;
      round.push_back({a, b, false});
      if (!revealed_.count(code)) ++fresh;
    }
    if (probes_used() + fresh > budget_)
      throw budget_exceeded("probe_batch: probe budget exhausted");

    for (auto& p : round) {
      std::uint64_t code = key(p.a, p.b);
      auto it = revealed_.find(code);
      if (it == revealed_.end())
        it = revealed_.emplace(code, g.edge(p.a, p.b)).first;
      p.is_edge = it->second;
    }
    rounds_.push_back(std::move(round));
    return rounds_.back();
  }

  // Revealed status of a pair: true/false once probed, nothing otherwise.
  // Encoded as -1 unknown / 0 non-edge / 1 edge.
  int status(std::uint32_t i, std::uint32_t j) const {
    std::uint32_t a = i < j ? i : j;
    std::uint32_t b = i < j ? j : i;
    auto it = revealed_.find(key(a, b));
    if (it == revealed_.end()) return -1;
    return it->second ? 1 : 0;
  }

  // True iff every pair inside the set has been probed and revealed as an
  // edge. Unprobed pairs make the answer false, never an error.
  bool verify_clique(std::span<const std::uint32_t> vertices) const {
    for (std::size_t x = 0; x < vertices.size(); ++x)
      for (std::size_t y = x + 1; y < vertices.size(); ++y)
        if (status(vertices[x], vertices[y]) != 1) return false;
    return true;
  }

private:
  static std::uint64_t key(std::uint32_t a, std::uint32_t b) {
    return (std::uint64_t(a) << 32) | b;
  }

  std::uint64_t budget_;
  std::size_t max_rounds_;
  std::vector<probe_round> rounds_;
  std::unordered_map<std::uint64_t, bool> revealed_;
};

// Read-only view of what the transcript reveals about the hidden graph.
class revealed_graph {
public:
  explicit revealed_graph(const probe_ledger& ledger) : ledger_(&ledger) {}

  int status(std::uint32_t i, std::uint32_t j) const {
    return ledger_->status(i, j);
  }

  // Induced subgraph on `vertices` (relabelled 0..k-1, in the given
  // order); pairs revealed as edges become edges, everything else is a
  // non-edge.
  explicit_graph induced(std::span<const std::uint32_t> vertices) const {
    explicit_graph g(std::uint32_t(vertices.size()));
    for (std::uint32_t x = 0; x < vertices.size(); ++x)
      for (std::uint32_t y = x + 1; y < vertices.size(); ++y)
        if (ledger_->status(vertices[x], vertices[y]) == 1) g.add_edge(x, y);
    return g;
  }

private:
  const probe_ledger* ledger_;
};

} // namespace probeclique
