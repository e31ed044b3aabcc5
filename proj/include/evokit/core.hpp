#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <tuple>

#include "evokit/population.hpp"
#include "evokit/problem.hpp"
#include "evokit/rng.hpp"

namespace evokit {

struct OperatorSuite;
struct StrategyConfig;

// Stopping rule; at least one bound must be set.
struct Termination {
  std::optional<int> max_iterations;
  std::optional<int> max_stagnation;        // iterations without a new record
  std::optional<double> target_fitness;     // objective-scale target

  void validate() const;  // throws std::invalid_argument when unbounded
};

struct TrajectoryPoint {
  int t = 0;
  double best_fitness = 0.0;  // running maximum over all evaluations
  double mean_fitness = 0.0;  // current population mean (objective scale)
  int distinct_genotypes = 0;
};

// Per-run trace plus the incumbent (best genotype ever evaluated).
struct RunRecord {
  std::vector<TrajectoryPoint> trajectory;
  Genotype incumbent;
  double incumbent_fitness = 0.0;
  std::uint64_t seed = 0;
  std::optional<int> first_hit_iteration;
};

// Uniform initial population: fair coin per bit, uniform permutation,
// uniform point in the problem's box, or a random grow tree.
Population init_population(const Problem& problem, int n, Rng& rng);

// Index, genotype and fitness of the best member; ties go to the lowest
// index. Uses the objective scale.
std::tuple<int, Genotype, double> best_of(const Population& pop);

RunRecord run_ea(const Problem& problem, const StrategyConfig& strategy,
                 const OperatorSuite& suite, const Termination& term,
                 std::uint64_t seed);

void write_trajectory_csv(std::ostream& os, const RunRecord& record);
void write_summary_header(std::ostream& os);
void write_summary_row(std::ostream& os, const RunRecord& record);

// Shortest text form of a double that still round-trips (%.17g).
std::string format_double(double v);

}  // namespace evokit
