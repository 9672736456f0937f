/// @file annealer.hpp
/// @brief Simulated annealing over binary assignments: random single-bit
/// proposals, Metropolis acceptance exp(-delta / T), geometric cooling,
/// independent seeded restarts.
///
/// Results are a pure function of (polynomial, config).  Each restart seeds
/// its own engine from (seed, restart index), so scheduling restarts across
/// any number of threads cannot change the outcome.

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hobo/evaluator.hpp"
#include "hobo/polynomial.hpp"
#include "hobo/random.hpp"

namespace hobo {

enum class Schedule { Geometric };

struct AnnealConfig {
  int sweeps = 1000;     ///< one sweep = n proposed flips
  int restarts = 1;
  std::optional<double> t_initial{};  ///< empty = derive from the coefficients
  double t_final = 1e-3;
  std::uint64_t seed = 0;
  Schedule schedule = Schedule::Geometric;
  int threads = 1;  ///< 0 = hardware concurrency; never affects the result
};

struct AnnealResult {
  Assignment best_assignment;
  double best_cost = 0.0;
  std::vector<double> restart_costs;  ///< best cost seen in each restart
  std::uint64_t accepted_moves = 0;
  std::uint64_t seed_used = 0;
};

/// Metropolis rule: min(1, exp(-delta / temperature)); non-positive deltas
/// are always accepted.
inline double acceptance_probability(double delta, double temperature) {
  if (!(temperature > 0.0)) {
    throw std::invalid_argument("temperature must be positive");
  }
  if (delta <= 0.0) return 1.0;
  return std::exp(-delta / temperature);
}

/// Temperature at which most uphill moves are initially accepted:
/// max |coefficient| times the polynomial degree.
inline double auto_initial_temperature(const Polynomial& p) {
  if (p.terms().empty()) {
    throw std::invalid_argument(
        "constant polynomial has no coefficient scale");
  }
  double max_abs = 0.0;
  for (const Term& t : p.terms()) max_abs = std::max(max_abs, std::abs(t.coef));
  return max_abs * static_cast<double>(p.degree());
}

namespace detail {

struct RestartOutcome {
  Assignment best;
  double best_cost = 0.0;
  std::uint64_t accepted = 0;
};

inline RestartOutcome run_restart(const Polynomial& p, const FlipIndex& index,
                                  int sweeps, double t_initial, double t_final,
                                  std::uint64_t seed, std::uint32_t restart) {
  const std::size_t n = static_cast<std::size_t>(p.num_vars());
  auto eng = make_engine(seed, restart);

  Assignment x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x.set(i, next_index(eng, 2) != 0);
  }
  double cost = evaluate(p, x);

  RestartOutcome out;
  out.best = x;
  out.best_cost = cost;

  const double alpha =
      sweeps > 1 ? std::pow(t_final / t_initial,
                            1.0 / static_cast<double>(sweeps - 1))
                 : 1.0;
  double temperature = t_initial;
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    for (std::size_t step = 0; step < n; ++step) {
      const int j = static_cast<int>(next_index(eng, n));
      const double delta = delta_flip(p, index, x, j);
      const double u = next_unit(eng);
      if (u < acceptance_probability(delta, temperature)) {
        x.flip(static_cast<std::size_t>(j));
        cost += delta;
        ++out.accepted;
        if (cost < out.best_cost) {
          const double exact = evaluate(p, x);
          if (exact < out.best_cost) {
            out.best_cost = exact;
            out.best = x;
          }
        }
      }
    }
    cost = evaluate(p, x);  // resync so delta rounding cannot accumulate
    temperature *= alpha;
  }
  return out;
}

}  // namespace detail

/// Runs cfg.restarts independent annealing chains and returns the best
/// result, ties resolved toward the lowest restart index.
inline AnnealResult anneal(const Polynomial& p, const AnnealConfig& cfg) {
  if (p.num_vars() < 1) {
    throw std::invalid_argument("polynomial has no variables to optimize");
  }
  if (cfg.sweeps < 1) throw std::invalid_argument("sweeps must be >= 1");
  if (cfg.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (cfg.threads < 0) throw std::invalid_argument("threads must be >= 0");
  if (!(cfg.t_final > 0.0)) {
    throw std::invalid_argument("t_final must be positive");
  }
  if (cfg.t_initial) {
    if (!(*cfg.t_initial > 0.0)) {
      throw std::invalid_argument("t_initial must be positive");
    }
    if (cfg.t_final > *cfg.t_initial) {
      throw std::invalid_argument("t_final must not exceed t_initial");
    }
  }
  const double t_initial = cfg.t_initial.value_or(
      p.terms().empty() ? 1.0 : auto_initial_temperature(p));

  const FlipIndex index(p);
  std::vector<detail::RestartOutcome> outcomes(
      static_cast<std::size_t>(cfg.restarts));

  int threads = cfg.threads;
  if (threads == 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads == 0) threads = 1;
  }
  threads = std::min(threads, cfg.restarts);

  auto run_range = [&](int begin, int end) {
    for (int r = begin; r < end; ++r) {
      outcomes[static_cast<std::size_t>(r)] = detail::run_restart(
          p, index, cfg.sweeps, t_initial, cfg.t_final, cfg.seed,
          static_cast<std::uint32_t>(r));
    }
  };
  if (threads <= 1) {
    run_range(0, cfg.restarts);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
      // contiguous blocks; assignment of restarts to threads is irrelevant
      const int begin = static_cast<int>(
          static_cast<long long>(cfg.restarts) * w / threads);
      const int end = static_cast<int>(
          static_cast<long long>(cfg.restarts) * (w + 1) / threads);
      pool.emplace_back(run_range, begin, end);
    }
    for (auto& t : pool) t.join();
  }

  AnnealResult result;
  result.seed_used = cfg.seed;
  result.restart_costs.reserve(outcomes.size());
  std::size_t best_index = 0;
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    result.restart_costs.push_back(outcomes[r].best_cost);
    result.accepted_moves += outcomes[r].accepted;
    if (outcomes[r].best_cost < outcomes[best_index].best_cost) best_index = r;
  }
  result.best_assignment = outcomes[best_index].best;
  result.best_cost = outcomes[best_index].best_cost;
  return result;
}

}  // namespace hobo
