#include <catch2/catch_amalgamated.hpp>

#include <probeclique/probe_ledger.hpp>
#include <probeclique/transcript.hpp>

#include <random>
#include <set>

using namespace probeclique;
using pair_list = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

namespace {

pair_list all_pairs(std::uint32_t n) {
  pair_list out;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

} // namespace

TEST_CASE("empty batch returns nothing but still uses a round") {
  hidden_graph g(5, 1);
  probe_ledger ledger(10, 3);
  const probe_round& r = ledger.probe_batch(g, pair_list{});
  CHECK(r.empty());
  CHECK(ledger.rounds_used() == 1);
  CHECK(ledger.probes_used() == 0);
}

TEST_CASE("a full batch on the complete graph reveals all edges") {
  hidden_graph g(5, 1, 1.0);
  probe_ledger ledger(10, 1);
  const probe_round& r = ledger.probe_batch(g, all_pairs(5));
  CHECK(r.size() == 10);
  for (const probed_pair& p : r) CHECK(p.is_edge);
  CHECK(ledger.probes_used() == 10);
}

TEST_CASE("exceeding the budget throws and leaves the ledger unchanged") {
  hidden_graph g(6, 1);
  probe_ledger ledger(8, 4);
  pair_list first{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}};
  ledger.probe_batch(g, first);
  CHECK(ledger.probes_used() == 5);

  pair_list second{{1, 2}, {1, 3}, {1, 4}, {1, 5}};
  CHECK_THROWS_AS(ledger.probe_batch(g, second), budget_exceeded);
  CHECK(ledger.probes_used() == 5);
  CHECK(ledger.rounds_used() == 1);
  CHECK(ledger.status(1, 2) == -1);
}

TEST_CASE("repeated probes are consistent and charged once") {
  hidden_graph g(8, 3);
  probe_ledger ledger(20, 5);
  pair_list batch{{0, 1}, {1, 0}, {2, 3}};
  const probe_round& r1 = ledger.probe_batch(g, batch);
  CHECK(r1.size() == 2); // (0,1) listed twice counts once in the round
  CHECK(ledger.probes_used() == 2);
  bool bit = r1[0].is_edge;

  const probe_round& r2 = ledger.probe_batch(g, pair_list{{0, 1}});
  CHECK(ledger.probes_used() == 2); // no new distinct pair
  CHECK(r2[0].is_edge == bit);
}

TEST_CASE("round limit is enforced before any mutation") {
  hidden_graph g(4, 1);
  probe_ledger ledger(100, 2);
  ledger.probe_batch(g, pair_list{{0, 1}});
  ledger.probe_batch(g, pair_list{{0, 2}});
  CHECK_THROWS_AS(ledger.probe_batch(g, pair_list{{0, 3}}),
                  round_limit_exceeded);
  CHECK(ledger.rounds_used() == 2);
  CHECK(ledger.probes_used() == 2);
}

TEST_CASE("invalid pairs are rejected") {
  hidden_graph g(4, 1);
  probe_ledger ledger(10, 2);
  CHECK_THROWS_AS(ledger.probe_batch(g, pair_list{{1, 1}}), invalid_pair);
  CHECK_THROWS_AS(ledger.probe_batch(g, pair_list{{0, 9}}), invalid_pair);
  CHECK(ledger.rounds_used() == 0);
}

TEST_CASE("probes_used always equals the union of batch pair sets") {
  hidden_graph g(12, 5);
  std::mt19937 rng(42);
  probe_ledger ledger(1000);
  std::set<std::uint64_t> reference;
  for (int round = 0; round < 12; ++round) {
    pair_list batch;
    for (int c = 0; c < 10; ++c) {
      std::uint32_t i = rng() % 12, j = rng() % 12;
      if (i == j) continue;
      batch.emplace_back(i, j);
      std::uint32_t a = std::min(i, j), b = std::max(i, j);
      reference.insert((std::uint64_t(a) << 32) | b);
    }
    std::uint64_t before = ledger.probes_used();
    ledger.probe_batch(g, batch);
    CHECK(ledger.probes_used() >= before); // monotone
    CHECK(ledger.probes_used() == reference.size());
  }
}

TEST_CASE("verify_clique answers from the transcript only") {
  hidden_graph g(6, 1, 0.0); // no edges at all
  probe_ledger ledger(20, 3);
  std::vector<std::uint32_t> single{3};
  CHECK(ledger.verify_clique(single));

  ledger.probe_batch(g, pair_list{{0, 1}});
  std::vector<std::uint32_t> pair{0, 1};
  CHECK_FALSE(ledger.verify_clique(pair)); // probed, revealed non-edge
  std::vector<std::uint32_t> unprobed{2, 3};
  CHECK_FALSE(ledger.verify_clique(unprobed)); // never probed
}

TEST_CASE("revealed view exposes edge / non-edge / unknown") {
  hidden_graph g(6, 9, 1.0);
  probe_ledger ledger(20, 3);
  ledger.probe_batch(g, pair_list{{0, 1}, {2, 3}});
  revealed_graph view(ledger);
  CHECK(view.status(1, 0) == 1);
  CHECK(view.status(4, 5) == -1);
  std::vector<std::uint32_t> verts{0, 1, 4};
  explicit_graph sub = view.induced(verts);
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.has_edge(0, 1));
  CHECK_FALSE(sub.has_edge(0, 2)); // pair (0,4) never probed
}

TEST_CASE("transcript export matches the documented shape") {
  hidden_graph g(5, 11, 0.5);
  probe_ledger ledger(10, 2);
  ledger.probe_batch(g, pair_list{{0, 1}, {2, 4}});
  ledger.probe_batch(g, pair_list{{1, 3}});

  nlohmann::json doc = transcript_json(g, ledger);
  CHECK(doc["n"] == 5);
  CHECK(doc["seed"] == 11);
  CHECK(doc["p"] == 0.5);
  CHECK(doc["budget"] == 10);
  REQUIRE(doc["rounds"].size() == 2);
  REQUIRE(doc["rounds"][0].size() == 2);
  auto entry = doc["rounds"][0][0];
  CHECK(entry[0] == 0);
  CHECK(entry[1] == 1);
  CHECK((entry[2] == 0 || entry[2] == 1));
  CHECK(int(entry[2]) == (g.edge(0, 1) ? 1 : 0));
}
