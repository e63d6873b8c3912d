#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "probe_algorithms.hpp"

namespace probeclique {

enum class algorithm_kind { one_round, two_round, three_round, greedy };

inline const char* to_string(algorithm_kind a) {
  switch (a) {
    case algorithm_kind::one_round: return "one";
    case algorithm_kind::two_round: return "two";
    case algorithm_kind::three_round: return "three";
    case algorithm_kind::greedy: return "greedy";
  }
  return "?";
}

inline algorithm_kind parse_algorithm(const std::string& s) {
  if (s == "one") return algorithm_kind::one_round;
  if (s == "two") return algorithm_kind::two_round;
  if (s == "three") return algorithm_kind::three_round;
  if (s == "greedy") return algorithm_kind::greedy;
  throw std::invalid_argument("unknown algorithm: " + s);
}

struct experiment_config {
  algorithm_kind algorithm = algorithm_kind::one_round;
  std::uint32_t n = 1 << 12;
  double delta = 1.0;
  double budget_constant = 2.0;
  std::uint32_t trials = 1;
  std::uint64_t base_seed = 1;
  double p = 0.5;
  std::uint64_t stop_size = 0; // greedy only; 0 = default
  std::uint32_t threads = 0;   // 0 = hardware concurrency

  algorithm_params params() const {
    return {delta, budget_constant, stop_size};
  }
};

struct trial_record {
  std::uint64_t seed = 0;
  std::uint32_t n = 0;
  double delta = 1.0;
  algorithm_kind algorithm = algorithm_kind::one_round;
  std::uint32_t clique_size = 0;
  double predicted_size = 0.0;
  std::uint64_t probes_used = 0;
  std::uint32_t rounds_used = 0;
  bool verified = false;
  bool degenerate = false;
  // Diagnostics, deliberately kept out of the serialized record so that
  // emitted files are byte-identical across runs and machines.
  double wall_ms = 0.0;
  std::string error;
};

struct experiment_summary {
  std::uint32_t trials = 0;
  std::uint32_t failed = 0;
  double mean = 0.0, stddev = 0.0;
  std::uint32_t min = 0, max = 0;
  double frac_within_one = 0.0; // |size - predicted| <= 1
  double residual_mean = 0.0, residual_stddev = 0.0;
  double total_wall_ms = 0.0;
};

struct experiment_result {
  std::vector<trial_record> records;
  experiment_summary summary;
};

namespace detail {

inline trial_record run_trial(const experiment_config& cfg,
                              std::uint32_t index) {
  trial_record rec;
  rec.seed = cfg.base_seed + index;
  rec.n = cfg.n;
  rec.delta = cfg.delta;
  rec.algorithm = cfg.algorithm;
  hidden_graph g(cfg.n, rec.seed, cfg.p);
  auto t0 = std::chrono::steady_clock::now();
  try {
    clique_report rep;
    switch (cfg.algorithm) {
      case algorithm_kind::one_round: rep = run_one_round(g, cfg.params()); break;
      case algorithm_kind::two_round: rep = run_two_round(g, cfg.params()); break;
      case algorithm_kind::three_round:
        rep = run_three_round(g, cfg.params());
        break;
      case algorithm_kind::greedy:
        rep = run_greedy_adaptive(g, cfg.params());
        break;
    }
    rec.clique_size = rep.size;
    rec.predicted_size = rep.predicted_size;
    rec.probes_used = rep.probes_used;
    rec.rounds_used = rep.rounds_used;
    rec.verified = rep.verified;
    rec.degenerate = rep.degenerate;
  } catch (const probe_error& e) {
    rec.error = e.what();
    rec.verified = false;
  }
  rec.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rec;
}

inline experiment_summary summarize(const std::vector<trial_record>& records) {
  experiment_summary s;
  s.trials = std::uint32_t(records.size());
  double sum = 0.0, sum2 = 0.0, rsum = 0.0, rsum2 = 0.0;
  std::uint32_t ok = 0, within = 0;
  for (const auto& r : records) {
    s.total_wall_ms += r.wall_ms;
    if (!r.error.empty()) {
      ++s.failed;
      continue;
    }
    double sz = r.clique_size;
    double res = sz - r.predicted_size;
    if (ok == 0) s.min = s.max = r.clique_size;
    s.min = std::min(s.min, r.clique_size);
    s.max = std::max(s.max, r.clique_size);
    sum += sz;
    sum2 += sz * sz;
    rsum += res;
    rsum2 += res * res;
    if (std::abs(res) <= 1.0) ++within;
    ++ok;
  }
  if (ok > 0) {
    s.mean = sum / ok;
    s.stddev = std::sqrt(std::max(0.0, sum2 / ok - s.mean * s.mean));
    s.residual_mean = rsum / ok;
    s.residual_stddev =
        std::sqrt(std::max(0.0, rsum2 / ok - s.residual_mean * s.residual_mean));
    s.frac_within_one = double(within) / ok;
  }
  return s;
}

inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

} // namespace detail

// Runs `trials` independent trials with seeds base, base+1, ... Trials are
// dispatched to a small worker pool; records land in trial order, so the
// output is identical no matter how the pool schedules them. A trial that
// exhausts its probe budget becomes a failed record (verified = false,
// error set), not a crash.
inline experiment_result run_experiment(const experiment_config& cfg) {
  if (cfg.trials < 1)
    throw std::invalid_argument("run_experiment: need trials >= 1");
  experiment_result out;
  out.records.resize(cfg.trials);

  std::uint32_t workers = cfg.threads ? cfg.threads
                                      : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min(workers, cfg.trials));

  if (workers == 1) {
    for (std::uint32_t t = 0; t < cfg.trials; ++t)
      out.records[t] = detail::run_trial(cfg, t);
  } else {
    std::atomic<std::uint32_t> next{0};
    auto work = [&]() {
      for (;;) {
        std::uint32_t t = next.fetch_add(1);
        if (t >= cfg.trials) return;
        out.records[t] = detail::run_trial(cfg, t);
      }
    };
    std::vector<std::thread> pool;
    for (std::uint32_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  out.summary = detail::summarize(out.records);
  return out;
}

// Fixed CSV schema; floats rendered with 6 significant digits. Emitted
// bytes depend only on the records, never on timing.
inline void write_csv(std::ostream& os, std::span<const trial_record> records) {
  os << "seed,n,delta,algorithm,clique_size,predicted_size,probes_used,"
        "rounds_used,verified,degenerate\n";
  for (const auto& r : records) {
    os << r.seed << ',' << r.n << ',' << detail::format_double(r.delta) << ','
       << to_string(r.algorithm) << ',' << r.clique_size << ','
       << detail::format_double(r.predicted_size) << ',' << r.probes_used
       << ',' << r.rounds_used << ',' << (r.verified ? 1 : 0) << ','
       << (r.degenerate ? 1 : 0) << '\n';
  }
}

inline void write_json(std::ostream& os, const experiment_config& cfg,
                       std::span<const trial_record> records) {
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j{{"seed", r.seed},
                     {"n", r.n},
                     {"delta", r.delta},
                     {"algorithm", to_string(r.algorithm)},
                     {"clique_size", r.clique_size},
                     {"predicted_size", r.predicted_size},
                     {"probes_used", r.probes_used},
                     {"rounds_used", r.rounds_used},
                     {"verified", r.verified},
                     {"degenerate", r.degenerate}};
    if (!r.error.empty()) j["error"] = r.error;
    recs.push_back(std::move(j));
  }
  nlohmann::json doc{{"config",
                      {{"algorithm", to_string(cfg.algorithm)},
                       {"n", cfg.n},
                       {"delta", cfg.delta},
                       {"c", cfg.budget_constant},
                       {"trials", cfg.trials},
                       {"seed", cfg.base_seed},
                       {"p", cfg.p},
                       {"stop_size", cfg.stop_size}}},
                     {"records", std::move(recs)}};
  os << doc.dump(2) << '\n';
}

inline std::string format_summary(const experiment_summary& s) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "trials=%u failed=%u size mean=%.6g stddev=%.6g min=%u max=%u "
                "within_one=%.6g residual mean=%.6g stddev=%.6g wall_ms=%.6g",
                s.trials, s.failed, s.mean, s.stddev, s.min, s.max,
                s.frac_within_one, s.residual_mean, s.residual_stddev,
                s.total_wall_ms);
  return buf;
}

} // namespace probeclique
