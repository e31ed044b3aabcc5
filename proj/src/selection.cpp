#include "evokit/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace evokit {

void SelectionConfig::validate() const {
  if (kind == SelectionKind::tournament && tournament_size < 1)
    throw std::invalid_argument("tournament size must be >= 1");
  if (kind == SelectionKind::ranking && !alpha &&
      (eta <= 1.0 || eta > 2.0))
    throw std::invalid_argument("linear ranking requires eta in (1, 2]");
  if (alpha) {
    double total = 0.0;
    for (double a : *alpha) {
      if (a < 0.0) throw std::invalid_argument("ranking function < 0");
      total += a;
    }
    if (std::abs(total - 1.0) > 1e-12)
      throw std::invalid_argument("ranking function must sum to 1");
  }
}

RouletteWheel::RouletteWheel(const std::vector<double>& weights) {
  cumulative_.resize(weights.size());
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    total += weights[i];
    cumulative_[i] = total;
  }
  degenerate_ = !(total > 0.0);
}

int RouletteWheel::draw(Rng& rng) const {
  if (degenerate_) return static_cast<int>(rng.uniform_index(cumulative_.size()));
  const double spin = rng.uniform01() * cumulative_.back();
  const auto it =
      std::upper_bound(cumulative_.begin(), cumulative_.end(), spin);
  return static_cast<int>(std::min<std::ptrdiff_t>(
      it - cumulative_.begin(),
      static_cast<std::ptrdiff_t>(cumulative_.size()) - 1));
}

int roulette_select(const Population& pop, Rng& rng) {
  if (pop.size() == 0) throw std::invalid_argument("empty population");
  return RouletteWheel(pop.fitness).draw(rng);
}

std::vector<int> sus_select_round(const Population& pop, Rng& rng) {
  const int n = pop.size();
  if (n == 0) throw std::invalid_argument("empty population");
  const double total =
      std::accumulate(pop.fitness.begin(), pop.fitness.end(), 0.0);
  if (!(total > 0.0))
    throw std::domain_error("SUS needs a positive fitness total");

  std::vector<double> cumulative(n);
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    acc += pop.fitness[i] / total;
    cumulative[i] = acc;
  }
  cumulative[n - 1] = 1.0;  // guard against rounding shortfall

  // One offset for the whole round, then the N evenly spaced pointers are
  // visited in the order of a random permutation.
  const double x = rng.uniform01();
  const std::vector<int> order = rng.permutation(n);
  std::vector<int> picks(n);
  for (int k = 0; k < n; ++k) {
    const double pointer =
        std::fmod(static_cast<double>(order[k]) / n + x, 1.0);
    const auto it =
        std::lower_bound(cumulative.begin(), cumulative.end(), pointer);
    picks[k] = static_cast<int>(it - cumulative.begin());
  }
  return picks;
}

std::vector<int> fitness_ranks(const Population& pop) {
  const int n = pop.size();
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  // Ascending fitness; equal fitness sorted by descending index, so the
  // lower index lands later and receives the higher rank.
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (pop.fitness[a] != pop.fitness[b])
      return pop.fitness[a] < pop.fitness[b];
    return a > b;
  });
  std::vector<int> rank(n);
  for (int pos = 0; pos < n; ++pos) rank[idx[pos]] = pos + 1;
  return rank;
}

std::vector<double> linear_ranking_alpha(int n, double eta) {
  if (eta <= 1.0 || eta > 2.0)
    throw std::invalid_argument("eta must lie in (1, 2]");
  if (n < 2) throw std::invalid_argument("linear ranking needs N >= 2");
  std::vector<double> alpha(n);
  for (int r = 1; r <= n; ++r) {
    alpha[r - 1] = (eta - 1.0) / n *
                   (2.0 * (r - n) / (n - 1.0) + eta / (eta - 1.0));
  }
  return alpha;
}

int rank_select(const Population& pop, const SelectionConfig& cfg, Rng& rng) {
  const int n = pop.size();
  const std::vector<double> alpha =
      cfg.alpha ? *cfg.alpha : linear_ranking_alpha(n, cfg.eta);
  if (static_cast<int>(alpha.size()) != n)
    throw std::invalid_argument("ranking function size mismatch");
  const std::vector<int> ranks = fitness_ranks(pop);
  std::vector<int> member_of_rank(n);
  for (int i = 0; i < n; ++i) member_of_rank[ranks[i] - 1] = i;
  const int r = RouletteWheel(alpha).draw(rng);
  return member_of_rank[r];
}

int tournament_select(const Population& pop, int s, Rng& rng) {
  if (s < 1) throw std::invalid_argument("tournament size must be >= 1");
  const int n = pop.size();
  int winner = static_cast<int>(rng.uniform_index(n));
  for (int k = 1; k < s; ++k) {
    const int i = static_cast<int>(rng.uniform_index(n));
    // Higher fitness wins; equal fitness goes to the lower index, which is
    // exactly the member of higher rank.
    if (pop.fitness[i] > pop.fitness[winner] ||
        (pop.fitness[i] == pop.fitness[winner] && i < winner))
      winner = i;
  }
  return winner;
}

double tournament_rank_pmf(int n, int s, int r) {
  return std::pow(static_cast<double>(r) / n, s) -
         std::pow(static_cast<double>(r - 1) / n, s);
}

std::vector<int> select_parents(const Population& pop,
                                const SelectionConfig& cfg, int count,
                                Rng& rng) {
  std::vector<int> parents;
  parents.reserve(count);
  switch (cfg.kind) {
    case SelectionKind::roulette: {
      const RouletteWheel wheel(pop.fitness);
      for (int i = 0; i < count; ++i) parents.push_back(wheel.draw(rng));
      break;
    }
    case SelectionKind::sus: {
      const double total =
          std::accumulate(pop.fitness.begin(), pop.fitness.end(), 0.0);
      while (static_cast<int>(parents.size()) < count) {
        if (total > 0.0) {
          for (int i : sus_select_round(pop, rng)) {
            if (static_cast<int>(parents.size()) == count) break;
            parents.push_back(i);
          }
        } else {
          // Degenerate population: uniform fallback.
          parents.push_back(static_cast<int>(rng.uniform_index(pop.size())));
        }
      }
      break;
    }
    case SelectionKind::ranking:
      for (int i = 0; i < count; ++i)
        parents.push_back(rank_select(pop, cfg, rng));
      break;
    case SelectionKind::tournament:
      for (int i = 0; i < count; ++i)
        parents.push_back(tournament_select(pop, cfg.tournament_size, rng));
      break;
  }
  return parents;
}

}  // namespace evokit
