#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace evokit::verify {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // estimates, bounds, standard errors
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  bool all_pass() const;
  Check& add(std::string name, bool pass, std::string detail);
};

void print_report(std::ostream& os, const SuiteReport& report);

// Statistical acceptance suites. Budgets are the spec defaults; every check
// is deterministic given the seed.

// Schema theorem on OneMax l=8, N=16 for five schemata of orders 1..4.
SuiteReport schema_suite(int trials = 10000, std::uint64_t seed = 2024001);

// Degeneration closed forms over the (a_q, P_m, N) grid, plus agreement of
// p_all across P_c in {0, 0.5, 1}.
SuiteReport degeneration_suite(int trials = 100000,
                               std::uint64_t seed = 2024002);

// Roulette pmf, SUS copy-count support/mean/variance, tournament pmf.
SuiteReport selection_suite(int trials = 100000, std::uint64_t seed = 2024003);

// GA-as-local-search lemma at desk scale: OneMax l=16, N=382, s=191.
SuiteReport ga_ls_suite(int runs = 100, std::uint64_t seed = 2024004);

// Optimal recombination vs the exhaustive oracle on random graphs.
SuiteReport optrec_suite(int instances = 200, int max_n = 16,
                         std::uint64_t seed = 2024005);

// Rotation-property consequences on random coordinate-aligned crossovers.
SuiteReport rotation_suite(int trials = 100, std::uint64_t seed = 2024006);

// PTS reaches the global optimum on OneMax n=12 and a two-peak landscape.
SuiteReport pts_suite(int runs = 50, int budget = 10000,
                      std::uint64_t seed = 2024007);

// Operator-classification audit: KGA reproduce positivity/connectivity and
// elitist conservative survival at l=3, N=2.
SuiteReport convergence_audit_suite(int budget = 20000,
                                    std::uint64_t seed = 2024008);

// Non-decreasing best-so-far (and population maxima for the conservative
// strategies) across 50 seeded runs per algorithm.
SuiteReport monotonicity_suite(int runs = 50, std::uint64_t seed = 2024009);

}  // namespace evokit::verify
