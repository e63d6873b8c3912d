#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace probeclique {

// Piecewise exponent bound, continuous across the branch point 16/25:
//   (2 - d) sqrt(1 - b) + d - 1   for b <= 16/25,
//   1 - (1 - d/2) sqrt(b)         for b >= 16/25.
inline double f_bound(double beta, double delta) {
  if (beta < 0.0 || beta > 1.0)
    throw std::invalid_argument("f_bound: beta must lie in [0,1]");
  if (delta < 1.0 || delta >= 2.0)
    throw std::invalid_argument("f_bound: delta must lie in [1,2)");
  if (beta <= 16.0 / 25.0)
    return (2.0 - delta) * std::sqrt(1.0 - beta) + delta - 1.0;
  return 1.0 - (1.0 - delta / 2.0) * std::sqrt(beta);
}

// A point of the round-budget optimization: delta, the number of rounds,
// and a probability vector over rounds.
struct bound_spec {
  double delta = 1.0;
  std::uint32_t ell = 1;
  std::vector<double> beta;

  bound_spec(double delta_, std::vector<double> beta_)
      : delta(delta_), ell(std::uint32_t(beta_.size())), beta(std::move(beta_)) {
    if (delta < 1.0 || delta >= 2.0)
      throw std::invalid_argument("bound_spec: delta must lie in [1,2)");
    if (beta.empty()) throw std::invalid_argument("bound_spec: empty beta");
    double sum = 0.0;
    for (double b : beta) {
      if (b < 0.0) throw std::invalid_argument("bound_spec: negative beta");
      sum += b;
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw std::invalid_argument("bound_spec: beta must sum to 1");
  }

  // s_i = beta_1 + ... + beta_i; s_0 = 0.
  double partial_sum(std::uint32_t i) const {
    double s = 0.0;
    for (std::uint32_t j = 0; j < i && j < ell; ++j) s += beta[j];
    return std::min(s, 1.0);
  }
};

enum class bound_method { numeric, closed_form, explicit_point };

struct bound_result {
  double value = 0.0;
  std::uint32_t argmax_round = 0; // 1-based round attaining the max ratio
  std::vector<double> optimizer;
  bound_method method = bound_method::numeric;
  double tolerance = 0.0; // final refinement step (numeric results)
};

namespace detail {

// max_i 2 f(s_i, delta) / (1 - s_{i-1}) on a raw coefficient vector.
inline double bound_objective(const double* beta, std::uint32_t ell,
                              double delta, std::uint32_t* argmax = nullptr) {
  double best = -HUGE_VAL;
  std::uint32_t best_i = 1;
  double prev = 0.0; // s_{i-1}
  double s = 0.0;
  for (std::uint32_t i = 1; i <= ell; ++i) {
    s = std::min(s + beta[i - 1], 1.0);
    double denom = 1.0 - prev;
    double ratio = denom < 1e-15
                       ? std::numeric_limits<double>::infinity()
                       : 2.0 * f_bound(std::clamp(s, 0.0, 1.0), delta) / denom;
    if (ratio > best) {
      best = ratio;
      best_i = i;
    }
    prev = s;
  }
  if (argmax) *argmax = best_i;
  return best;
}

} // namespace detail

// Evaluates max_i 2 f(s_i, delta) / (sum_{j >= i} beta_j). A vanishing
// denominator gives +infinity (f is strictly positive for delta >= 1).
inline bound_result upper_bound_alpha(const bound_spec& spec) {
  bound_result out;
  out.method = bound_method::explicit_point;
  out.optimizer = spec.beta;
  out.value =
      detail::bound_objective(spec.beta.data(), spec.ell, spec.delta, &out.argmax_round);
  return out;
}

// 2 - delta ((2-delta)/2)^ell.
inline double explicit_bound(double delta, std::uint32_t ell) {
  if (delta < 1.0 || delta >= 2.0)
    throw std::invalid_argument("explicit_bound: delta must lie in [1,2)");
  if (ell < 1) throw std::invalid_argument("explicit_bound: ell must be >= 1");
  return 2.0 - delta * std::pow((2.0 - delta) / 2.0, double(ell));
}

// The geometric feasible point beta_i = r^{i-1} eps with r = 2/(2-delta)
// and eps = (r-1)/(r^ell - 1); this point witnesses explicit_bound.
inline std::vector<double> geometric_feasible_beta(double delta,
                                                   std::uint32_t ell) {
  if (delta < 1.0 || delta >= 2.0)
    throw std::invalid_argument("geometric_feasible_beta: bad delta");
  if (ell < 1) throw std::invalid_argument("geometric_feasible_beta: bad ell");
  double r = 2.0 / (2.0 - delta);
  double eps = (r - 1.0) / (std::pow(r, double(ell)) - 1.0);
  std::vector<double> beta(ell);
  double term = eps;
  for (std::uint32_t i = 0; i < ell; ++i) {
    beta[i] = term;
    term *= r;
  }
  return beta;
}

// Optimizer of the round-budget bound at delta = 1, in closed form:
//   beta_1 = 1 - 2^{-2/(2^ell - 1)},
//   beta_i = 2^{-(2^i - 2)/(2^ell - 1)} - 2^{-(2^{i+1} - 2)/(2^ell - 1)},
//   beta_ell = 2^{-(2^ell - 2)/(2^ell - 1)}.
// At this point all ell ratios of the objective are equal to 1/beta_ell.
inline std::vector<double> closed_form_beta_delta1(std::uint32_t ell) {
  if (ell < 2)
    throw std::invalid_argument("closed_form_beta_delta1: need ell >= 2");
  double denom = std::exp2(double(ell)) - 1.0;
  auto pw = [&](std::uint32_t i) {
    return std::exp2(-(std::exp2(double(i)) - 2.0) / denom);
  };
  std::vector<double> beta(ell);
  beta[0] = 1.0 - pw(2);
  for (std::uint32_t i = 2; i + 1 <= ell; ++i) beta[i - 1] = pw(i) - pw(i + 1);
  beta[ell - 1] = pw(ell);
  return beta;
}

// 2^{1 - 1/(2^ell - 1)}.
inline double corollary_bound(std::uint32_t ell) {
  if (ell < 1) throw std::invalid_argument("corollary_bound: need ell >= 1");
  return std::exp2(1.0 - 1.0 / (std::exp2(double(ell)) - 1.0));
}

struct optimize_options {
  std::uint32_t grid_resolution = 0; // 0 = choose by dimension
  bool refine = true;
  double refine_tol = 1e-11;
  bool seed_with_geometric = true;
};

namespace detail {

// Smallest s in [0,1] with f(s, delta) <= target; anything above 1 means
// no such s exists. Piecewise inversion of f.
inline double f_inverse_min(double target, double delta) {
  if (target >= 1.0) return 0.0; // f(0) = 1
  double knee = 0.2 + 0.4 * delta; // f(16/25, delta)
  if (target >= knee) {
    double root = (target - delta + 1.0) / (2.0 - delta);
    return 1.0 - root * root;
  }
  double root = (1.0 - target) / (1.0 - delta / 2.0);
  return root * root; // exceeds 1 exactly when target < f(1) = delta/2
}

// Whether some simplex point keeps every ratio at most v. Since f is
// nonincreasing and a smaller prefix sum only loosens the later
// constraints, taking the minimal feasible s_i at every step is optimal,
// so feasibility reduces to one greedy left-to-right pass.
inline bool value_feasible(double v, double delta, std::uint32_t ell,
                           std::vector<double>* prefix_out = nullptr) {
  double s_prev = 0.0;
  if (prefix_out) prefix_out->assign(ell - 1, 0.0);
  for (std::uint32_t i = 1; i < ell; ++i) {
    double target = v * (1.0 - s_prev) / 2.0;
    double s = std::max(s_prev, f_inverse_min(target, delta));
    if (s > 1.0) return false;
    if (prefix_out) (*prefix_out)[i - 1] = s;
    s_prev = s;
  }
  return delta <= v * (1.0 - s_prev);
}

// min over the simplex of the max ratio, by bisecting on the value and
// rebuilding beta from the greedy prefix sums of the feasible end.
inline double refine_by_bisection(std::vector<double>& beta, double delta,
                                  double hi, double tol) {
  const std::uint32_t ell = std::uint32_t(beta.size());
  double lo = delta; // one round of everything is never beaten
  std::vector<double> prefix;
  for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (value_feasible(mid, delta, ell))
      hi = mid;
    else
      lo = mid;
  }
  value_feasible(hi, delta, ell, &prefix);
  double s_prev = 0.0;
  for (std::uint32_t i = 0; i + 1 < ell; ++i) {
    beta[i] = std::max(0.0, prefix[i] - s_prev);
    s_prev = prefix[i];
  }
  beta[ell - 1] = std::max(0.0, 1.0 - s_prev);
  return bound_objective(beta.data(), ell, delta);
}

// Enumerates every composition of `resolution` into ell nonnegative parts
// and keeps the best grid point.
inline void grid_search(std::uint32_t ell, std::uint32_t resolution,
                        double delta, std::vector<double>& best_beta,
                        double& best_val) {
  std::vector<std::uint32_t> parts(ell, 0);
  std::vector<double> point(ell);
  auto rec = [&](auto&& self, std::uint32_t depth,
                 std::uint32_t remaining) -> void {
    if (depth == ell - 1) {
      parts[depth] = remaining;
      for (std::uint32_t i = 0; i < ell; ++i)
        point[i] = double(parts[i]) / double(resolution);
      double v = bound_objective(point.data(), ell, delta);
      if (v < best_val) {
        best_val = v;
        best_beta = point;
      }
      return;
    }
    for (std::uint32_t c = 0; c <= remaining; ++c) {
      parts[depth] = c;
      self(self, depth + 1, remaining - c);
    }
  };
  rec(rec, 0, resolution);
}

} // namespace detail

// Numeric minimization of upper_bound_alpha over the (ell-1)-simplex: a
// deterministic coarse grid brackets the optimum from above (the
// geometric feasible point is also admitted as a bracket, so the result
// never exceeds explicit_bound(delta, ell) by more than roundoff), then a
// bisection on the value pins it to refine_tol. Coordinate descent is not
// used: on this max-of-ratios objective it stalls at the nonsmooth
// equalization corner well above the tolerances asked of the result.
inline bound_result optimize_beta(double delta, std::uint32_t ell,
                                  const optimize_options& opts = {}) {
  if (delta < 1.0 || delta >= 2.0)
    throw std::invalid_argument("optimize_beta: delta must lie in [1,2)");
  if (ell < 1 || ell > 8)
    throw std::invalid_argument("optimize_beta: need 1 <= ell <= 8");

  bound_result out;
  out.method = bound_method::numeric;
  if (ell == 1) {
    out.value = delta; // single feasible point beta = (1)
    out.optimizer = {1.0};
    out.argmax_round = 1;
    return out;
  }

  std::uint32_t res = opts.grid_resolution;
  if (res == 0) res = ell <= 5 ? 64 : (ell == 6 ? 32 : 16);

  double best_val = HUGE_VAL;
  std::vector<double> best_beta;
  detail::grid_search(ell, res, delta, best_beta, best_val);
  if (opts.seed_with_geometric) {
    auto geo = geometric_feasible_beta(delta, ell);
    double v = detail::bound_objective(geo.data(), ell, delta);
    if (v < best_val) {
      best_val = v;
      best_beta = geo;
    }
  }

  double final_tol = 1.0 / double(2 * res);
  if (opts.refine) {
    std::vector<double> refined_beta = best_beta;
    double refined = detail::refine_by_bisection(refined_beta, delta, best_val,
                                                 opts.refine_tol);
    if (refined < best_val) {
      best_val = refined;
      best_beta = std::move(refined_beta);
    }
    final_tol = opts.refine_tol;
  }

  out.optimizer = best_beta;
  out.value = detail::bound_objective(out.optimizer.data(), ell, delta,
                                      &out.argmax_round);
  out.tolerance = final_tol;
  return out;
}

// The displayed upper bound on log2 P(E_i): with L = log2 n,
//   alpha { f(s_i, delta) - (1 - s_{i-1}) alpha / 2 } L^2
//     + ((1 - s_{i-1}) alpha / 2 + 4) L.
// Everything is kept in log2 scale; the probability itself would
// underflow long before the interesting regime.
inline double log_failure_bound(std::uint64_t n, const bound_spec& spec,
                                double alpha, std::uint32_t round_i) {
  if (round_i < 1 || round_i > spec.ell)
    throw std::invalid_argument("log_failure_bound: round out of range");
  double big_l = std::log2(double(n));
  if (alpha * big_l < 2.0)
    throw std::invalid_argument("log_failure_bound: need alpha*log2(n) >= 2");
  double s_i = spec.partial_sum(round_i);
  double s_prev = spec.partial_sum(round_i - 1);
  double f = f_bound(s_i, spec.delta);
  double lead = alpha * (f - (1.0 - s_prev) * alpha / 2.0);
  return lead * big_l * big_l + ((1.0 - s_prev) * alpha / 2.0 + 4.0) * big_l;
}

} // namespace probeclique
