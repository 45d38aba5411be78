#pragma once

#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "irshho/levy.hpp"
#include "irshho/rng.hpp"
#include "irshho/types.hpp"

// Harris hawks optimizer: a population-based, gradient-free maximizer over a
// box-bounded real vector space. Hawks (agents) encircle the best solution
// found so far (the rabbit) with a mix of random exploration and four
// energy-dependent besiege strategies, two of which add Levy-flight dives.

namespace irshho {

// A candidate solution: a position inside the search box plus its score.
struct Agent {
  Vector position;
  double fitness = -std::numeric_limits<double>::infinity();
  bool evaluated = false;
};

struct HhoConfig {
  int population_size = 30;  // Q
  int max_iterations = 500;  // T
  Vector lower_bounds;
  Vector upper_bounds;
  double levy_beta = 1.5;
  double levy_scale = 0.01;
  std::uint64_t rng_seed = 0;

  int dimension() const { return static_cast<int>(lower_bounds.size()); }
};

inline void validate(const HhoConfig& cfg) {
  if (cfg.population_size < 2)
    throw std::invalid_argument("HhoConfig: population_size must be >= 2");
  if (cfg.max_iterations < 1)
    throw std::invalid_argument("HhoConfig: max_iterations must be >= 1");
  if (cfg.lower_bounds.size() == 0)
    throw std::invalid_argument("HhoConfig: bounds must be non-empty");
  if (cfg.lower_bounds.size() != cfg.upper_bounds.size())
    throw std::invalid_argument("HhoConfig: bound vectors differ in length");
  for (int i = 0; i < cfg.dimension(); ++i) {
    if (!(cfg.lower_bounds[i] < cfg.upper_bounds[i]))
      throw std::invalid_argument("HhoConfig: lower bound must be below upper bound");
  }
  if (!(cfg.levy_beta > 0.0 && cfg.levy_beta <= 2.0))
    throw std::invalid_argument("HhoConfig: levy_beta must lie in (0, 2]");
}

enum class Branch : int {
  exploration = 0,
  soft_besiege = 1,
  hard_besiege = 2,
  soft_dive = 3,
  hard_dive = 4,
};
inline constexpr std::size_t kBranchCount = 5;

// Which update rule the (energy, escape probability) pair selects. Total over
// all real energies and r in [0, 1]: |E| >= 1 explores, otherwise the four
// besiege strategies partition the (|E|, r) square.
inline Branch select_branch(double energy, double escape_prob) {
  if (std::abs(energy) >= 1.0) return Branch::exploration;
  if (escape_prob >= 0.5)
    return std::abs(energy) >= 0.5 ? Branch::soft_besiege : Branch::hard_besiege;
  return std::abs(energy) >= 0.5 ? Branch::soft_dive : Branch::hard_dive;
}

// Rabbit escaping energy 2*E0*(1 - t/T); decays to 0 at the final iteration.
inline double escaping_energy(double e0, int t, int t_max) {
  return 2.0 * e0 * (1.0 - static_cast<double>(t) / static_cast<double>(t_max));
}

inline Vector clamp_to_box(Vector x, const Vector& lb, const Vector& ub) {
  return x.cwiseMax(lb).cwiseMin(ub);
}

// Scalar draws consumed by one exploration update, exposed so tests can pin them.
struct ExplorationDraws {
  double q = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double r3 = 0.0;
  double r4 = 0.0;
};

// Exploration: perch either near a random family member or on a random site
// inside the home range relative to the rabbit and the population mean.
inline Vector exploration_step(const Vector& x, const Vector& x_rand, const Vector& x_mean,
                               const Vector& rabbit, const Vector& lb, const Vector& ub,
                               const ExplorationDraws& d) {
  Vector next;
  if (d.q >= 0.5) {
    next = x_rand - d.r1 * (x_rand - 2.0 * d.r2 * x).cwiseAbs();
  } else {
    next = (rabbit - x_mean) - d.r3 * (lb + d.r4 * (ub - lb));
  }
  return clamp_to_box(std::move(next), lb, ub);
}

// Soft besiege: the rabbit still has energy, encircle it loosely.
inline Vector soft_besiege(const Vector& x, const Vector& rabbit, double energy, double jump,
                           const Vector& lb, const Vector& ub) {
  return clamp_to_box((rabbit - x) - energy * (jump * rabbit - x).cwiseAbs(), lb, ub);
}

// Hard besiege: the rabbit is exhausted, close in on it directly.
inline Vector hard_besiege(const Vector& x, const Vector& rabbit, double energy,
                           const Vector& lb, const Vector& ub) {
  return clamp_to_box(rabbit - energy * (rabbit - x).cwiseAbs(), lb, ub);
}

struct DiveResult {
  Vector position;
  double fitness = -std::numeric_limits<double>::infinity();
  bool moved = false;
};

// Progressive rapid dive: probe Y (a besiege move toward the rabbit computed
// from `reference`, the hawk's own position for a soft dive or the population
// mean for a hard one), then a Levy-flight jitter Z of it. Adopt the first
// probe that improves on the hawk's current fitness, otherwise stay put.
// Both probes are clamped before evaluation and each counts as an evaluation.
template <class F>
DiveResult dive_step(const Vector& x, double x_fitness, const Vector& rabbit,
                     const Vector& reference, double energy, double jump, F&& objective,
                     std::mt19937_64& g, const Vector& lb, const Vector& ub, double levy_beta,
                     double levy_scale, std::uint64_t& evaluations) {
  const Vector y =
      clamp_to_box(rabbit - energy * (jump * rabbit - reference).cwiseAbs(), lb, ub);
  const double fy = objective(y);
  ++evaluations;
  if (fy > x_fitness) return {y, fy, true};

  const int dim = static_cast<int>(x.size());
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = uniform01(g);
  const Vector z =
      clamp_to_box(y + v.cwiseProduct(levy_flight(dim, levy_beta, levy_scale, g)), lb, ub);
  const double fz = objective(z);
  ++evaluations;
  if (fz > x_fitness) return {z, fz, true};
  return {x, x_fitness, false};
}

struct OptimizerState {
  int iteration = 0;
  std::vector<Agent> population;
  Agent rabbit;                      // best-so-far over everything evaluated
  std::vector<double> trace;         // rabbit fitness after each iteration
  std::uint64_t evaluations = 0;
  std::array<std::uint64_t, kBranchCount> branch_counts{};
};

// Build the starting population: any seed positions verbatim (they must fit
// the box), the rest uniform in the box, all evaluated, rabbit = best agent.
template <class F>
OptimizerState initialize_population(const HhoConfig& cfg, F&& objective,
                                     const std::vector<Vector>& seed_positions = {}) {
  validate(cfg);
  const int dim = cfg.dimension();
  const int q = cfg.population_size;
  if (static_cast<int>(seed_positions.size()) > q)
    throw std::invalid_argument("initialize_population: more seed positions than agents");
  for (const Vector& s : seed_positions) {
    if (s.size() != dim)
      throw std::invalid_argument("initialize_population: seed dimension mismatch");
    for (int i = 0; i < dim; ++i) {
      if (s[i] < cfg.lower_bounds[i] || s[i] > cfg.upper_bounds[i])
        throw std::invalid_argument("initialize_population: seed position outside bounds");
    }
  }

  OptimizerState state;
  state.population.resize(q);
  for (int i = 0; i < q; ++i) {
    Agent& a = state.population[i];
    if (i < static_cast<int>(seed_positions.size())) {
      a.position = seed_positions[i];
    } else {
      auto g = substream(cfg.rng_seed, 0, static_cast<std::uint64_t>(i));
      a.position.resize(dim);
      for (int j = 0; j < dim; ++j)
        a.position[j] = uniform_in(g, cfg.lower_bounds[j], cfg.upper_bounds[j]);
    }
    a.fitness = objective(a.position);
    a.evaluated = true;
    ++state.evaluations;
    if (i == 0 || a.fitness > state.rabbit.fitness) state.rabbit = a;
  }
  state.iteration = 0;
  return state;
}

// One iteration. Every update reads the population as it stood at entry
// (positions, mean, rabbit), so the per-agent substream is the only coupling
// between agents and evaluations may run concurrently without changing the
// sequential result. Per-agent draw order within substream (t+1, i):
//   E0, r5 (jump), then exploration [q, rand index, r1, r2 | r3, r4]
//   or exploitation [r, then dive draws V and Levy lazily].
template <class F>
void step(OptimizerState& state, F&& objective, const HhoConfig& cfg) {
  const int q = cfg.population_size;
  const int t = state.iteration;
  const Vector& lb = cfg.lower_bounds;
  const Vector& ub = cfg.upper_bounds;

  const std::vector<Agent> snapshot = state.population;
  Vector mean = Vector::Zero(cfg.dimension());
  for (const Agent& a : snapshot) mean += a.position;
  mean /= static_cast<double>(q);
  const Vector rabbit_pos = state.rabbit.position;

  for (int i = 0; i < q; ++i) {
    auto g = substream(cfg.rng_seed, static_cast<std::uint64_t>(t) + 1,
                       static_cast<std::uint64_t>(i));
    const double e0 = uniform_in(g, -1.0, 1.0);
    const double jump = 2.0 * (1.0 - uniform01(g));
    const double energy = escaping_energy(e0, t, cfg.max_iterations);

    Agent& agent = state.population[i];
    const Vector& x = snapshot[i].position;
    const double fx = snapshot[i].fitness;

    if (std::abs(energy) >= 1.0) {
      ExplorationDraws d;
      d.q = uniform01(g);
      Vector x_rand;
      if (d.q >= 0.5) {
        x_rand = snapshot[uniform_index(g, static_cast<std::size_t>(q))].position;
        d.r1 = uniform01(g);
        d.r2 = uniform01(g);
      } else {
        x_rand = x;  // unused by this branch
        d.r3 = uniform01(g);
        d.r4 = uniform01(g);
      }
      agent.position = exploration_step(x, x_rand, mean, rabbit_pos, lb, ub, d);
      agent.fitness = objective(agent.position);
      agent.evaluated = true;
      ++state.evaluations;
      ++state.branch_counts[static_cast<int>(Branch::exploration)];
    } else {
      const double r = uniform01(g);
      const Branch branch = select_branch(energy, r);
      switch (branch) {
        case Branch::soft_besiege:
          agent.position = soft_besiege(x, rabbit_pos, energy, jump, lb, ub);
          agent.fitness = objective(agent.position);
          ++state.evaluations;
          break;
        case Branch::hard_besiege:
          agent.position = hard_besiege(x, rabbit_pos, energy, lb, ub);
          agent.fitness = objective(agent.position);
          ++state.evaluations;
          break;
        case Branch::soft_dive:
        case Branch::hard_dive: {
          const Vector& reference = branch == Branch::soft_dive ? x : mean;
          DiveResult dive =
              dive_step(x, fx, rabbit_pos, reference, energy, jump, objective, g, lb, ub,
                        cfg.levy_beta, cfg.levy_scale, state.evaluations);
          agent.position = std::move(dive.position);
          agent.fitness = dive.fitness;
          break;
        }
        case Branch::exploration:
          break;  // unreachable: |energy| < 1 here
      }
      agent.evaluated = true;
      ++state.branch_counts[static_cast<int>(branch)];
    }

    if (agent.fitness > state.rabbit.fitness) state.rabbit = agent;
  }

  state.trace.push_back(state.rabbit.fitness);
  ++state.iteration;
}

struct OptimizeResult {
  Vector best_position;
  double best_fitness = -std::numeric_limits<double>::infinity();
  std::vector<double> trace;
  std::uint64_t evaluations = 0;
  double wall_time_s = 0.0;
  std::array<std::uint64_t, kBranchCount> branch_counts{};
};

template <class F>
OptimizeResult optimize(const HhoConfig& cfg, F&& objective,
                        const std::vector<Vector>& seed_positions = {}) {
  const auto start = std::chrono::steady_clock::now();
  OptimizerState state = initialize_population(cfg, objective, seed_positions);
  for (int t = 0; t < cfg.max_iterations; ++t) step(state, objective, cfg);
  const auto stop = std::chrono::steady_clock::now();

  OptimizeResult result;
  result.best_position = state.rabbit.position;
  result.best_fitness = state.rabbit.fitness;
  result.trace = std::move(state.trace);
  result.evaluations = state.evaluations;
  result.wall_time_s = std::chrono::duration<double>(stop - start).count();
  result.branch_counts = state.branch_counts;
  return result;
}

}  // namespace irshho
