#pragma once

#include <vector>

#include "evokit/genotype.hpp"
#include "evokit/problem.hpp"

namespace evokit {

// Fixed-size ordered collection of genotypes with cached fitness. The cache
// is the selection scale: equal to the objective for ordinary problems, the
// per-generation window for windowed ones (raw objectives kept alongside).
struct Population {
  std::vector<Genotype> members;
  std::vector<double> fitness;
  std::vector<double> raw;  // objective values; filled only when windowed
  int generation = 0;

  int size() const { return static_cast<int>(members.size()); }

  // Objective-scale value of member i (comparable across generations).
  double score(int i) const;

  double total_fitness() const;
  double mean_score() const;
  double max_score() const;

  // Recompute the fitness cache from the problem.
  void evaluate(const Problem& problem);
};

// Number of distinct genotypes among the members.
int distinct_count(const std::vector<Genotype>& members);

}  // namespace evokit
