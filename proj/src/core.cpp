#include "evokit/core.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "evokit/gp.hpp"
#include "evokit/strategies.hpp"

namespace evokit {

bool is_permutation(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  std::vector<bool> seen(n, false);
  for (int v : p) {
    if (v < 1 || v > n || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

std::string to_string(const Genotype& g) {
  std::ostringstream os;
  switch (g.kind()) {
    case GenotypeKind::bits:
      for (auto b : g.bits()) os << (b ? '1' : '0');
      break;
    case GenotypeKind::permutation: {
      os << '(';
      const auto& p = g.perm();
      for (std::size_t i = 0; i < p.size(); ++i)
        os << (i ? " " : "") << p[i];
      os << ')';
      break;
    }
    case GenotypeKind::real_vector: {
      os << '[';
      const auto& x = g.reals();
      for (std::size_t i = 0; i < x.size(); ++i)
        os << (i ? " " : "") << format_double(x[i]);
      os << ']';
      break;
    }
    case GenotypeKind::tree:
      os << gp::to_text(g.tree());
      break;
  }
  return os.str();
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double Population::score(int i) const {
  return raw.empty() ? fitness[i] : raw[i];
}

double Population::total_fitness() const {
  double total = 0.0;
  for (double f : fitness) total += f;
  return total;
}

double Population::mean_score() const {
  double total = 0.0;
  for (int i = 0; i < size(); ++i) total += score(i);
  return size() ? total / size() : 0.0;
}

double Population::max_score() const {
  double best = score(0);
  for (int i = 1; i < size(); ++i) best = std::max(best, score(i));
  return best;
}

void Population::evaluate(const Problem& problem) {
  const int n = size();
  fitness.resize(n);
  if (!problem.windowed) {
    raw.clear();
    for (int i = 0; i < n; ++i) {
      const double f = problem.objective(members[i]);
      if (f < 0.0)
        throw std::domain_error("fitness must be non-negative: " +
                                problem.name);
      fitness[i] = f;
    }
    return;
  }
  raw.resize(n);
  double f_min = 0.0, f_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    raw[i] = problem.objective(members[i]);
    f_min = (i == 0) ? raw[i] : std::min(f_min, raw[i]);
    f_sum += raw[i];
  }
  const double f_avg = f_sum / n;
  if (f_avg == f_min) {
    // Uniform raw scores: any constant gives the uniform-fallback selection.
    std::fill(fitness.begin(), fitness.end(), 1.0);
    return;
  }
  for (int i = 0; i < n; ++i) fitness[i] = (raw[i] - f_min) / (f_avg - f_min);
}

int distinct_count(const std::vector<Genotype>& members) {
  if (members.empty()) return 0;
  switch (members.front().kind()) {
    case GenotypeKind::bits: {
      std::set<BitString> s;
      for (const auto& m : members) s.insert(m.bits());
      return static_cast<int>(s.size());
    }
    case GenotypeKind::permutation: {
      std::set<Permutation> s;
      for (const auto& m : members) s.insert(m.perm());
      return static_cast<int>(s.size());
    }
    case GenotypeKind::real_vector: {
      std::set<RealVector> s;
      for (const auto& m : members) s.insert(m.reals());
      return static_cast<int>(s.size());
    }
    case GenotypeKind::tree: {
      std::set<std::string> s;
      for (const auto& m : members) s.insert(gp::to_text(m.tree()));
      return static_cast<int>(s.size());
    }
  }
  return 0;
}

void Termination::validate() const {
  if (!max_iterations && !max_stagnation && !target_fitness)
    throw std::invalid_argument("termination: no bound set");
  if (max_iterations && *max_iterations < 0)
    throw std::invalid_argument("termination: negative iteration bound");
  if (max_stagnation && *max_stagnation <= 0)
    throw std::invalid_argument("termination: non-positive stagnation bound");
}

Population init_population(const Problem& problem, int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("population size must be >= 1");
  Population pop;
  pop.members.reserve(n);
  for (int i = 0; i < n; ++i) {
    switch (problem.kind) {
      case GenotypeKind::bits: {
        BitString g(problem.length);
        for (auto& bit : g) bit = rng.bernoulli(0.5) ? 1 : 0;
        pop.members.emplace_back(std::move(g));
        break;
      }
      case GenotypeKind::permutation:
        pop.members.emplace_back(rng.permutation(problem.length));
        break;
      case GenotypeKind::real_vector: {
        RealVector x(problem.length);
        for (int j = 0; j < problem.length; ++j) {
          const auto [lo, hi] = problem.real_bounds.empty()
                                    ? std::pair<double, double>{-1.0, 1.0}
                                    : problem.real_bounds[j];
          x[j] = lo + (hi - lo) * rng.uniform01();
        }
        pop.members.emplace_back(std::move(x));
        break;
      }
      case GenotypeKind::tree: {
        if (!problem.gp_config)
          throw std::invalid_argument("tree problem without a GP config");
        pop.members.emplace_back(gp::random_tree(*problem.gp_config, rng));
        break;
      }
    }
  }
  pop.evaluate(problem);
  return pop;
}

std::tuple<int, Genotype, double> best_of(const Population& pop) {
  if (pop.size() == 0) throw std::invalid_argument("best_of: empty population");
  int best = 0;
  for (int i = 1; i < pop.size(); ++i)
    if (pop.score(i) > pop.score(best)) best = i;
  return {best, pop.members[best], pop.score(best)};
}

RunRecord run_ea(const Problem& problem, const StrategyConfig& strategy,
                 const OperatorSuite& suite, const Termination& term,
                 std::uint64_t seed) {
  strategy.validate();
  suite.selection.validate();
  suite.variation.validate();
  term.validate();
  const bool es = strategy.kind == StrategyKind::es_comma ||
                  strategy.kind == StrategyKind::es_plus;
  if (es && problem.kind != GenotypeKind::real_vector)
    throw std::invalid_argument("evolution strategies need real vectors");
  if (!es && problem.kind == GenotypeKind::real_vector)
    throw std::invalid_argument("GA strategies need a discrete genotype");

  Rng rng(seed);
  RunRecord record;
  record.seed = seed;

  Population pop = init_population(problem, strategy.initial_size(), rng);

  int last_improvement = 0;
  auto absorb = [&](const Population& p, int t) {
    for (int i = 0; i < p.size(); ++i) {
      if (record.trajectory.empty() && i == 0) {
        record.incumbent = p.members[0];
        record.incumbent_fitness = p.score(0);
      } else if (p.score(i) > record.incumbent_fitness) {
        record.incumbent = p.members[i];
        record.incumbent_fitness = p.score(i);
        last_improvement = t;
      }
    }
    record.trajectory.push_back({t, record.incumbent_fitness, p.mean_score(),
                                 distinct_count(p.members)});
    if (!record.first_hit_iteration) {
      const std::optional<double> goal =
          term.target_fitness ? term.target_fitness : problem.optimum;
      if (goal && record.incumbent_fitness >= *goal)
        record.first_hit_iteration = t;
    }
  };

  absorb(pop, 0);
  int t = 0;
  while (true) {
    if (term.max_iterations && t >= *term.max_iterations) break;
    if (term.target_fitness &&
        record.incumbent_fitness >= *term.target_fitness)
      break;
    if (term.max_stagnation && t - last_improvement >= *term.max_stagnation)
      break;
    pop = step_strategy(pop, problem, strategy, suite, rng);
    ++t;
    absorb(pop, t);
  }
  return record;
}

void write_trajectory_csv(std::ostream& os, const RunRecord& record) {
  os << "t,best_fitness,mean_fitness,distinct_genotypes\n";
  for (const auto& p : record.trajectory) {
    os << p.t << ',' << format_double(p.best_fitness) << ','
       << format_double(p.mean_fitness) << ',' << p.distinct_genotypes << '\n';
  }
}

void write_summary_header(std::ostream& os) {
  os << "seed,first_hit_iteration,final_best\n";
}

void write_summary_row(std::ostream& os, const RunRecord& record) {
  os << record.seed << ',';
  if (record.first_hit_iteration) os << *record.first_hit_iteration;
  os << ',' << format_double(record.incumbent_fitness) << '\n';
}

}  // namespace evokit
