#pragma once

#include <json.hpp>

#include "hidden_graph.hpp"
#include "probe_ledger.hpp"

namespace probeclique {

// Transcript export: {n, seed, p, budget, rounds: [[[i,j,bit], ...], ...]}.
inline nlohmann::json transcript_json(const hidden_graph& g,
                                      const probe_ledger& ledger) {
  nlohmann::json rounds = nlohmann::json::array();
  for (const probe_round& round : ledger.rounds()) {
    nlohmann::json batch = nlohmann::json::array();
    for (const probed_pair& p : round)
      batch.push_back({p.a, p.b, p.is_edge ? 1 : 0});
    rounds.push_back(std::move(batch));
  }
  return nlohmann::json{{"n", g.vertex_count()},
                        {"seed", g.seed()},
                        {"p", g.edge_probability()},
                        {"budget", ledger.budget()},
                        {"rounds", std::move(rounds)}};
}

} // namespace probeclique
