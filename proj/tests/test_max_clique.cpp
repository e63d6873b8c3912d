#include <catch2/catch_amalgamated.hpp>

#include <probeclique/hidden_graph.hpp>
#include <probeclique/max_clique.hpp>

#include <vector>

using namespace probeclique;

namespace {

explicit_graph random_graph(std::uint32_t n, std::uint64_t seed) {
  hidden_graph h(n, seed, 0.5);
  explicit_graph g(n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (h.edge(i, j)) g.add_edge(i, j);
  return g;
}

// Independent oracle: sweep all 2^n subsets with a clique DP over masks
// and keep the lexicographically smallest maximum clique. Works to n=24.
std::vector<std::uint32_t> oracle_max_clique(const explicit_graph& g) {
  const std::uint32_t n = g.vertex_count();
  std::vector<std::uint32_t> adj(n, 0);
  for (std::uint32_t v = 0; v < n; ++v)
    for (std::uint32_t u = 0; u < n; ++u)
      if (u != v && g.has_edge(v, u)) adj[v] |= 1u << u;

  std::vector<char> is_clique(std::size_t(1) << n, 0);
  is_clique[0] = 1;
  std::uint32_t best_mask = 0;
  int best_size = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::uint32_t v = std::uint32_t(__builtin_ctz(mask));
    std::uint32_t rest = mask & (mask - 1);
    if (!is_clique[rest] || (rest & ~adj[v]) != 0) continue;
    is_clique[mask] = 1;
    int size = __builtin_popcount(mask);
    if (size > best_size) {
      best_size = size;
      best_mask = mask;
    } else if (size == best_size) {
      // lexicographically smaller set owns the lowest bit of the xor
      std::uint32_t diff = mask ^ best_mask;
      if (diff && (best_mask & (diff & -diff)) == 0) best_mask = mask;
    }
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < n; ++v)
    if ((best_mask >> v) & 1) out.push_back(v);
  return out;
}

} // namespace

TEST_CASE("complete graph on five vertices") {
  auto c = max_clique(explicit_graph::complete(5));
  CHECK(c == std::vector<std::uint32_t>{0, 1, 2, 3, 4});
}

TEST_CASE("five-cycle has clique number two") {
  auto c = max_clique(explicit_graph::cycle(5));
  CHECK(c == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("edge cases: empty and tiny graphs") {
  CHECK(max_clique(explicit_graph(0)).empty());
  CHECK(max_clique(explicit_graph(1)) == std::vector<std::uint32_t>{0});
  CHECK(max_clique(explicit_graph(3)) == std::vector<std::uint32_t>{0});
  CHECK(clique_number(explicit_graph(3)) == 1);
}

TEST_CASE("solver matches subset enumeration on random graphs up to n=16") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    explicit_graph g = random_graph(16, seed);
    auto want = oracle_max_clique(g);
    auto got = max_clique(g);
    INFO("seed " << seed);
    CHECK(got == want);
    CHECK(clique_number(g) == want.size());
  }
}

TEST_CASE("solver matches subset enumeration at n=24") {
  explicit_graph g = random_graph(24, 2024);
  auto want = oracle_max_clique(g);
  auto got = max_clique(g);
  CHECK(got == want);
}

TEST_CASE("output is always a clique and is maximal") {
  for (std::uint64_t seed = 50; seed < 56; ++seed) {
    explicit_graph g = random_graph(60, seed);
    auto c = max_clique(g);
    CHECK(g.is_clique(c));
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
      bool inside = std::find(c.begin(), c.end(), v) != c.end();
      if (inside) continue;
      bool adjacent_to_all = true;
      for (std::uint32_t u : c)
        if (!g.has_edge(u, v)) {
          adjacent_to_all = false;
          break;
        }
      CHECK_FALSE(adjacent_to_all);
    }
  }
}

TEST_CASE("matula formula at printed reference points") {
  CHECK(matula_omega(1024) == Catch::Approx(15.2415338920032).epsilon(1e-12));
  CHECK(matula_omega(4) == Catch::Approx(3.8853900817779268).epsilon(1e-12));
  CHECK(matula_omega(362) == Catch::Approx(12.7102084887275).epsilon(1e-10));
}

TEST_CASE("matula formula rejects n below three") {
  CHECK_THROWS_AS(matula_omega(2), std::invalid_argument);
  CHECK_THROWS_AS(matula_omega(0), std::invalid_argument);
}

TEST_CASE("matula formula increases for n >= 8") {
  double prev = matula_omega(8);
  for (std::uint64_t n = 9; n <= 5000; n += 7) {
    double cur = matula_omega(n);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("clique number of modest random graphs sits near the formula") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    explicit_graph g = random_graph(128, seed);
    double w = matula_omega(128);
    auto omega = clique_number(g);
    CHECK(double(omega) > w - 2.5);
    CHECK(double(omega) < w + 2.5);
  }
}
