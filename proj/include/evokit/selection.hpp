#pragma once

#include <optional>
#include <vector>

#include "evokit/population.hpp"
#include "evokit/rng.hpp"

namespace evokit {

enum class SelectionKind { roulette, sus, ranking, tournament };

struct SelectionConfig {
  SelectionKind kind = SelectionKind::roulette;
  int tournament_size = 2;  // s >= 1
  double eta = 2.0;         // linear ranking slope, in (1, 2]
  // Explicit ranking function alpha(1..N); must sum to 1. When absent,
  // linear ranking with eta is used.
  std::optional<std::vector<double>> alpha;

  void validate() const;
};

// Cumulative-sum wheel over the cached fitnesses; one draw is a binary
// search, so N selections cost O(N log N). Falls back to the uniform
// distribution when the fitness total is zero.
class RouletteWheel {
 public:
  explicit RouletteWheel(const std::vector<double>& weights);
  int draw(Rng& rng) const;
  bool degenerate() const { return degenerate_; }

 private:
  std::vector<double> cumulative_;
  bool degenerate_ = false;
};

// Proportional (roulette) selection of one parent index.
int roulette_select(const Population& pop, Rng& rng);

// Baker's stochastic universal selection: one spin yields all N parent
// indices, in the order given by a random permutation. Throws
// std::domain_error when the fitness total is zero.
std::vector<int> sus_select_round(const Population& pop, Rng& rng);

// Rank of each member, 1..N, N = fittest. Equal fitness is ordered stably
// so that the lower index receives the higher rank.
std::vector<int> fitness_ranks(const Population& pop);

// alpha(r) = (eta-1)/N * (2(r-N)/(N-1) + eta/(eta-1)) for r = 1..N.
std::vector<double> linear_ranking_alpha(int n, double eta);

int rank_select(const Population& pop, const SelectionConfig& cfg, Rng& rng);

// Best of s uniform draws with replacement; ties go to the lowest index.
int tournament_select(const Population& pop, int s, Rng& rng);

// Probability that s-tournament selection picks the individual of rank r:
// (r/N)^s - ((r-1)/N)^s.
double tournament_rank_pmf(int n, int s, int r);

// Draw `count` parent indices under the configured operator. SUS yields
// whole rounds of N; a shorter request takes the round's prefix.
std::vector<int> select_parents(const Population& pop,
                                const SelectionConfig& cfg, int count,
                                Rng& rng);

}  // namespace evokit
