#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evokit/population.hpp"
#include "evokit/problem.hpp"
#include "evokit/rng.hpp"
#include "evokit/strategies.hpp"

namespace evokit::theory {

// Schema over bit strings of length l: the listed positions are fixed to
// the given values. Order K = number of fixed positions; defining length
// delta = distance between the extreme fixed positions (0 when K <= 1).
struct Schema {
  int length = 0;
  std::vector<std::pair<int, std::uint8_t>> fixed;  // (1-based pos, bit)

  Schema(int length_, std::vector<std::pair<int, std::uint8_t>> fixed_);

  int order() const { return static_cast<int>(fixed.size()); }
  int defining_length() const;
  bool matches(const BitString& g) const;
};

struct SchemaStats {
  int count = 0;                       // N(H, Pi)
  std::optional<double> mean_fitness;  // Phi(H, Pi); empty when count = 0
};

SchemaStats schema_count(const Schema& schema, const Population& pop);

// Right-hand side of the schema theorem:
//   c * (1 - delta(H) P_c / (l-1)) * (1 - P_m)^K * N(H, Pi)
// with c = Phi(H, Pi) / Phi(B, Pi). Requires N(H, Pi) > 0 and l >= 2.
double schema_theorem_bound(const Schema& schema, const Population& pop,
                            double p_c, double p_m);

struct SchemaTheoremReport {
  double empirical_mean = 0.0;
  double bound = 0.0;
  double standard_error = 0.0;
  int trials = 0;
  bool pass = false;
};

// Monte-Carlo check: `trials` independent full-replacement generations from
// the fixed population; passes when the empirical mean count is at least
// the analytic bound minus 3 standard errors. Requires trials >= 100.
SchemaTheoremReport verify_schema_theorem(const Population& pop,
                                          const Problem& problem,
                                          const Schema& schema,
                                          const OperatorSuite& suite,
                                          int trials, Rng& rng);

struct DegenerationProbs {
  double p_all = 0.0;    // P{ N(H_q, Pi^{t+1}) = N }: allele 1 disappears
  double p_none = 0.0;   // P{ N(H_q, Pi^{t+1}) = 0 }: allele 0 disappears
  double p_total = 0.0;  // degeneration of either value
};

// Closed forms (a + (1-2a) P_m)^N and (1 - a + (2a-1) P_m)^N.
DegenerationProbs degeneration_probabilities(double a_q, double p_m, int n);

// Fitness share of allele 0 at 1-based locus q:
// sum of Phi over members with gene 0 divided by the fitness total.
double compute_a_q(const Population& pop, int q);

enum class CopyStatKind { roulette, sus, tournament2, rank_roulette };

struct CopyStats {
  double mean = 0.0;
  double variance = 0.0;
};

// Mean and variance of the per-round copy count of one individual:
// roulette and SUS take the selection probability p, the rank-based kinds
// take the individual's rank r.
CopyStats analytic_copy_stats(CopyStatKind kind, int n, double p_or_r);

// Sizing of the GA-as-local-search lemma.
struct GaLsParams {
  double h = 0.0;    // non-optimal objective values, > 1
  double L = 0.0;    // min mutation probability to any neighbor, > 0
  double eps = 0.0;  // crossover non-degradation probability, in (0, 1]
  double r = 0.0;    // tournament ratio s / N, > 0

  void validate() const;
};

struct GaLsSettings {
  long long population_size = 0;  // N, even by construction
  long long tournament_size = 0;  // s
};

// N = 2 ceil((1 + ln h) / (L eps (1 - e^{-2r}))), s = ceil(r N).
GaLsSettings ga_ls_parameters(const GaLsParams& params);

// Monte-Carlo audit of the EA operator classification at enumerable sizes
// (l <= 4, N <= 4). Verdicts hold at the sampled confidence only.
struct ConvergenceAuditReport {
  bool selection_nondegenerate = false;
  bool reproduce_positive = false;
  bool reproduce_connecting = false;
  bool survive_conservative = false;
  int trials_per_check = 0;
  std::vector<std::string> notes;
};

ConvergenceAuditReport ea_convergence_audit(const OperatorSuite& suite,
                                            StrategyKind survival,
                                            const Problem& tiny_problem,
                                            int budget, Rng& rng);

}  // namespace evokit::theory
