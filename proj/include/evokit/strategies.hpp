#pragma once

#include "evokit/population.hpp"
#include "evokit/problem.hpp"
#include "evokit/rng.hpp"
#include "evokit/selection.hpp"
#include "evokit/variation.hpp"

namespace evokit {

enum class StrategyKind {
  full_replacement,
  elitist,
  steady_state,
  elitist_recombination,
  es_comma,
  es_plus,
};

enum class VictimPolicy { worst, uniform_below_mean };

struct StrategyConfig {
  StrategyKind kind = StrategyKind::full_replacement;
  int population_size = 0;  // N; even for the full-replacement family
  int mu = 0;               // ES parents
  int lambda = 0;           // ES offspring
  VictimPolicy steady_state_victim = VictimPolicy::worst;
  bool reject_duplicates = true;  // steady state only

  void validate() const;
  int initial_size() const;
};

struct EsMutationConfig {
  double sigma = 1.0;  // > 0

  void validate() const;
};

// Selection + variation parameters for one run.
struct OperatorSuite {
  SelectionConfig selection;
  VariationConfig variation;
  EsMutationConfig es_mutation;
};

// Crossover/mutation dispatch on the genotype kind. Crossover applies with
// probability p_c; mutation is Bernoulli per bit for bit strings, one move
// with probability p_m for permutations, and a subtree replacement with
// probability p_m for trees.
std::pair<Genotype, Genotype> cross(const Genotype& a, const Genotype& b,
                                    const Problem& problem,
                                    const VariationConfig& cfg, Rng& rng);
Genotype mutate(const Genotype& g, const Problem& problem,
                const VariationConfig& cfg, Rng& rng);

// One generation of the full-replacement GA: N/2 families of two selected
// parents, crossover, then mutation. No parent survives.
Population step_full_replacement(const Population& pop, const Problem& problem,
                                 const OperatorSuite& suite, Rng& rng);

// Full replacement, then the previous elite replaces one least-fit member
// if every new genotype is worse.
Population step_elitist(const Population& pop, const Problem& problem,
                        const OperatorSuite& suite, Rng& rng);

// Two children replace unpromising members chosen by the victim policy.
Population step_steady_state(const Population& pop, const Problem& problem,
                             const OperatorSuite& suite,
                             const StrategyConfig& cfg, Rng& rng);

// Random pairing; each family of two parents and two children sends its
// best two into the next generation (ties prefer parents, then order).
Population step_elitist_recombination(const Population& pop,
                                      const Problem& problem,
                                      const OperatorSuite& suite, Rng& rng);

RealVector gaussian_mutate(const RealVector& x, double sigma, Rng& rng);

// One (mu,lambda)- or (mu+lambda)-ES generation over real vectors.
Population step_es(const Population& pop, const Problem& problem,
                   const StrategyConfig& cfg, const EsMutationConfig& mut,
                   Rng& rng);

// Dispatch to the configured step function.
Population step_strategy(const Population& pop, const Problem& problem,
                         const StrategyConfig& cfg, const OperatorSuite& suite,
                         Rng& rng);

}  // namespace evokit
