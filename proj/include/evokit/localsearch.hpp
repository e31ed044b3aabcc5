#pragma once

#include <cstdint>
#include <deque>
#include <functional>

#include "evokit/core.hpp"
#include "evokit/problem.hpp"

namespace evokit {

using Neighborhood =
    std::function<std::vector<Genotype>(const Genotype&)>;

// All bit strings within Hamming distance 1..radius.
Neighborhood hamming_neighborhood(int radius);

struct LocalSearchResult {
  Genotype local_optimum;
  double fitness = 0.0;
  int improving_steps = 0;
};

// Steepest ascent until no neighbor improves; ties go to the first
// enumerated neighbor. Deterministic.
LocalSearchResult local_search(const Problem& problem,
                               const Neighborhood& neighborhood,
                               const Genotype& start);

struct TabuConfig {
  int list_length = 5;        // L >= 1
  double inclusion_prob = 1;  // p in (0, 1]; < 1 gives probabilistic TS
  int radius = 1;             // d, Hamming radius of the neighborhood
  bool keep_list_on_empty = true;

  void validate() const;
};

// Move masks |y - x| of the last L accepted moves, oldest first. The
// initial list holds L zero masks, which forbids only the null move.
using TabuList = std::deque<BitString>;

// True iff the move mask |y - x| equals one of the stored masks.
bool is_tabu(const BitString& x, const BitString& y, const TabuList& list);

// Radius-d neighbors of x, each kept independently with probability p.
std::vector<BitString> pts_subneighborhood(const BitString& x,
                                           const TabuConfig& cfg, Rng& rng);

// Tabu search over a binary problem: move to the best admissible candidate
// (not tabu, or above the record by aspiration), FIFO-update the list, stay
// in place when no candidate is admissible.
RunRecord tabu_search(const Problem& problem, const TabuConfig& cfg,
                      const Termination& term, std::uint64_t seed);

}  // namespace evokit
