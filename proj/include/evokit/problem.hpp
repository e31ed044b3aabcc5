#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evokit/genotype.hpp"

namespace evokit {

namespace gp {
struct GpConfig;
}

// An optimization problem as seen by the algorithms: a genotype space plus a
// deterministic objective. For every problem except the windowed ILP the
// objective IS the fitness and must be non-negative; windowed problems are
// rescaled per generation by Population::evaluate.
struct Problem {
  GenotypeKind kind = GenotypeKind::bits;
  int length = 0;  // l for bit strings, n for permutations / real vectors

  std::function<double(const Genotype&)> objective;

  // Population-relative fitness window (f - f_min) / (f_avg - f_min); used
  // by the penalized ILP, whose raw score may be negative.
  bool windowed = false;

  // Known optimal objective value, when available (termination and tests).
  std::optional<double> optimum;

  // Bounds for initializing real-vector genotypes, one pair per coordinate.
  std::vector<std::pair<double, double>> real_bounds;

  // Tree problems carry their primitive sets and caps here.
  std::shared_ptr<const gp::GpConfig> gp_config;

  std::string name;

  double score(const Genotype& g) const { return objective(g); }
};

}  // namespace evokit
