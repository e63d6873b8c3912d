// Command-line front end: seeded experiment batches, extremal tables,
// bound tables, and the standing verification suite.

#include <CLI11.hpp>

#include <probeclique/probeclique.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

namespace {

using namespace probeclique;

std::unique_ptr<std::ofstream> open_out(const std::string& path,
                                        std::ostream*& os) {
  if (path.empty()) {
    os = &std::cout;
    return nullptr;
  }
  auto file = std::make_unique<std::ofstream>(path);
  if (!*file) throw std::runtime_error("cannot open output file: " + path);
  os = file.get();
  return file;
}

std::string fmt6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

int cmd_simulate(const experiment_config& cfg, const std::string& out_path,
                 const std::string& format, const std::string& transcript_path) {
  auto result = run_experiment(cfg);
  std::ostream* os = nullptr;
  auto file = open_out(out_path, os);
  if (format == "json")
    write_json(*os, cfg, result.records);
  else
    write_csv(*os, result.records);
  std::cerr << "summary: " << format_summary(result.summary) << "\n";

  if (!transcript_path.empty()) {
    // deterministic, so re-running trial 0 reproduces its transcript
    hidden_graph g(cfg.n, cfg.base_seed, cfg.p);
    probe_ledger ledger(1);
    switch (cfg.algorithm) {
      case algorithm_kind::one_round: run_one_round(g, cfg.params(), &ledger); break;
      case algorithm_kind::two_round: run_two_round(g, cfg.params(), &ledger); break;
      case algorithm_kind::three_round:
        run_three_round(g, cfg.params(), &ledger);
        break;
      case algorithm_kind::greedy:
        run_greedy_adaptive(g, cfg.params(), &ledger);
        break;
    }
    std::ofstream tf(transcript_path);
    if (!tf) throw std::runtime_error("cannot open " + transcript_path);
    tf << transcript_json(g, ledger).dump(2) << "\n";
  }
  return result.summary.failed == 0 ? 0 : 1;
}

int cmd_verify_matching(std::uint32_t kmax, const std::string& out_path,
                        std::uint32_t threads) {
  std::ostream* os = nullptr;
  auto file = open_out(out_path, os);
  *os << "k,t,beta,M,mu_floor,witness\n";
  bool ok = true;
  for (std::uint32_t k = 3; k <= kmax; ++k) {
    std::uint32_t pairs = k * (k - 1) / 2;
    for (std::uint32_t t = 1; t <= pairs; ++t) {
      ratio beta(t, pairs);
      auto ext = matching_minmax_bruteforce(k, t, threads);
      std::uint32_t lo = mu_floor(k, beta);
      ok = ok && ext.value >= lo && ext.value <= lo + 1;
      std::string witness;
      for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = i + 1; j < k; ++j)
          if (ext.witness.has_edge(i, j)) {
            if (!witness.empty()) witness += ';';
            witness += std::to_string(i) + "-" + std::to_string(j);
          }
      *os << k << ',' << t << ',' << fmt6(beta.to_double()) << ','
          << ext.value << ',' << lo << ',' << witness << '\n';
    }
  }
  if (!ok) std::cerr << "matching sandwich violated\n";
  return ok ? 0 : 1;
}

int cmd_count_covered(std::uint32_t n, std::uint64_t m, std::uint32_t k,
                      std::int64_t beta_num, std::int64_t beta_den,
                      const std::string& construction, std::uint64_t seed,
                      const std::string& out_path) {
  ratio beta(beta_num, beta_den);
  explicit_graph g(1);
  if (construction == "split") {
    g = tight_example_split(n, m, k, beta).graph;
  } else if (construction == "clique") {
    g = tight_example_clique(m, k, beta, n).graph;
  } else if (construction == "random") {
    hidden_graph h(n, seed, 0.5);
    explicit_graph rnd(n);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j)
        if (h.edge(i, j)) rnd.add_edge(i, j);
    g = std::move(rnd);
  } else {
    throw CLI::ValidationError("--construction must be split, clique or random");
  }
  auto cc = count_beta_covered_bruteforce(g, k, beta);
  std::ostream* os = nullptr;
  auto file = open_out(out_path, os);
  *os << "n,m,k,beta,count,encoding_bound_log2,closed_form_bound_log2\n";
  *os << cc.n << ',' << cc.m << ',' << cc.k << ',' << fmt6(cc.beta.to_double())
      << ',' << cc.count << ',' << fmt6(cc.encoding_bound_log2) << ','
      << fmt6(cc.closed_form_bound_log2) << '\n';
  return 0;
}

int cmd_bounds_table(double delta, std::uint32_t lmax,
                     const std::string& out_path) {
  std::ostream* os = nullptr;
  auto file = open_out(out_path, os);
  *os << "delta,ell,optimized,explicit_bound,corollary,optimizer\n";
  for (std::uint32_t ell = 1; ell <= lmax; ++ell) {
    auto r = optimize_beta(delta, ell);
    std::string components;
    for (double b : r.optimizer) {
      if (!components.empty()) components += ';';
      components += fmt6(b);
    }
    *os << fmt6(delta) << ',' << ell << ',' << fmt6(r.value) << ','
        << fmt6(explicit_bound(delta, ell)) << ','
        << (delta == 1.0 ? fmt6(corollary_bound(ell)) : std::string()) << ','
        << components << '\n';
  }
  return 0;
}

int cmd_verify_all(const verify_options& opts) {
  auto checks = verify_all(opts);
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& c : checks) {
    std::cerr << (c.passed ? "pass" : "FAIL") << "  " << c.name
              << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    if (!c.passed) failures.push_back({{"check", c.name}, {"detail", c.detail}});
  }
  std::cout << nlohmann::json{{"failures", failures}}.dump(2) << "\n";
  return failures.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"probe-model clique finding on hidden random graphs"};
  app.require_subcommand(1);

  // simulate
  experiment_config cfg;
  std::string algorithm = "one", out_path, format = "csv", transcript_path;
  auto* sim = app.add_subcommand("simulate", "run seeded experiment batches");
  sim->add_option("--algorithm", algorithm, "one|two|three|greedy")
      ->envname("PROBECLIQUE_ALGORITHM");
  sim->add_option("--n", cfg.n, "number of vertices")->envname("PROBECLIQUE_N");
  sim->add_option("--delta", cfg.delta, "probe exponent in [1,2)")
      ->envname("PROBECLIQUE_DELTA");
  sim->add_option("--c", cfg.budget_constant, "budget constant")
      ->envname("PROBECLIQUE_C");
  sim->add_option("--trials", cfg.trials, "number of trials")
      ->envname("PROBECLIQUE_TRIALS");
  sim->add_option("--seed", cfg.base_seed, "base seed; trial i uses seed+i")
      ->envname("PROBECLIQUE_SEED");
  sim->add_option("--p", cfg.p, "edge probability (0, 0.5 or 1)")
      ->envname("PROBECLIQUE_P");
  sim->add_option("--stop-size", cfg.stop_size,
                  "greedy stop threshold (0 = sqrt of budget)")
      ->envname("PROBECLIQUE_STOP_SIZE");
  sim->add_option("--threads", cfg.threads, "worker threads (0 = hardware)")
      ->envname("PROBECLIQUE_THREADS");
  sim->add_option("--out", out_path, "output path (default stdout)")
      ->envname("PROBECLIQUE_OUT");
  sim->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->envname("PROBECLIQUE_FORMAT");
  sim->add_option("--transcript", transcript_path,
                  "write the probe transcript of trial 0 as JSON");

  // extremal
  auto* extremal = app.add_subcommand("extremal", "brute-force extremal oracles");
  extremal->require_subcommand(1);
  std::uint32_t kmax = 7, cc_n = 20, cc_k = 5;
  std::uint64_t cc_m = 40, cc_seed = 1;
  std::int64_t beta_num = 1, beta_den = 2;
  std::uint32_t threads = 0;
  std::string ex_out, construction = "split";
  auto* vm = extremal->add_subcommand(
      "verify-matching", "minimum maximum-matching table with mu sandwich");
  vm->add_option("--kmax", kmax, "largest vertex count (<= 8)");
  vm->add_option("--threads", threads, "enumeration threads");
  vm->add_option("--out", ex_out, "output path (default stdout)");
  auto* ccov = extremal->add_subcommand("count-covered",
                                        "count beta-covered k-sets");
  ccov->add_option("--n", cc_n, "vertex count (<= 24)");
  ccov->add_option("--edges", cc_m, "edge budget of the construction");
  ccov->add_option("--k", cc_k, "subset size (<= 6)");
  ccov->add_option("--beta-num", beta_num, "threshold numerator");
  ccov->add_option("--beta-den", beta_den, "threshold denominator");
  ccov->add_option("--construction", construction, "split|clique|random");
  ccov->add_option("--seed", cc_seed, "seed for random construction");
  ccov->add_option("--out", ex_out, "output path (default stdout)");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "upper-bound machinery");
  bounds->require_subcommand(1);
  double table_delta = 1.0;
  std::uint32_t lmax = 5;
  std::string bounds_out;
  auto* table = bounds->add_subcommand("table", "optimized bound table");
  table->add_option("--delta", table_delta, "probe exponent in [1,2)")
      ->envname("PROBECLIQUE_DELTA");
  table->add_option("--lmax", lmax, "largest round count (<= 8)");
  table->add_option("--out", bounds_out, "output path (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "standing verification suite");
  verify->require_subcommand(1);
  verify_options vopts;
  auto* vall = verify->add_subcommand("all", "run every check");
  vall->add_option("--kmax", vopts.matching_kmax, "matching sandwich k limit");
  vall->add_option("--cover-random", vopts.cover_random_graphs,
                   "random graphs in the cover chain");
  vall->add_option("--algo-n", vopts.algo_n, "vertex count for algorithm runs");
  vall->add_option("--threads", vopts.matching_threads, "enumeration threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2; // usage errors exit with 2
  }

  try {
    if (sim->parsed()) {
      cfg.algorithm = parse_algorithm(algorithm);
      return cmd_simulate(cfg, out_path, format, transcript_path);
    }
    if (vm->parsed()) return cmd_verify_matching(kmax, ex_out, threads);
    if (ccov->parsed())
      return cmd_count_covered(cc_n, cc_m, cc_k, beta_num, beta_den,
                               construction, cc_seed, ex_out);
    if (table->parsed()) return cmd_bounds_table(table_delta, lmax, bounds_out);
    if (vall->parsed()) return cmd_verify_all(vopts);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
