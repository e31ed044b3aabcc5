#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "evokit/genotype.hpp"
#include "evokit/graph.hpp"

namespace evokit {

// Two feasible parents for gene-transmitting recombination; bit j of a
// genotype is the indicator of vertex j.
struct RecombinationInstance {
  Graph graph;
  BitString p1;
  BitString p2;

  std::vector<int> diff_positions() const;  // D = { j : p1_j != p2_j }
};

bool is_independent_set(const Graph& g, const BitString& s);
bool is_vertex_cover(const Graph& g, const BitString& s);

// Minimum vertex cover of a bipartite graph via max-flow (source -> side A
// and side B -> sink with unit capacities, original edges capacity n+1) and
// alternating-path cover extraction.
struct BipartiteCoverResult {
  std::vector<std::uint8_t> in_cover;  // per vertex
  int cover_size = 0;
  int max_flow = 0;  // equals the maximum matching size
};

// side[v]: 0 for A, 1 for B. Throws std::invalid_argument when an edge
// joins two vertices of one side.
BipartiteCoverResult min_vertex_cover_bipartite(
    int n, const std::vector<std::array<int, 2>>& edges,
    const std::vector<std::uint8_t>& side);

// Best gene-transmitting offspring for maximum independent set: keep the
// intersection, drop the common complement, and solve the bipartite
// subproblem on the differing positions through the min-cut cover.
BitString optimal_recombination_mis(const RecombinationInstance& inst);

// Same construction for minimum vertex cover (the cover itself is taken
// from the min cut instead of its complement).
BitString optimal_recombination_vc(const RecombinationInstance& inst);

// Exhaustive oracle over all 2^|D| gene-transmitting completions. Maximizes
// `objective` among completions passing `feasible`; ties go to the
// lexicographically smallest genotype. Empty when nothing is feasible.
std::optional<BitString> brute_force_recombination(
    const RecombinationInstance& inst,
    const std::function<bool(const BitString&)>& feasible,
    const std::function<double(const BitString&)>& objective);

}  // namespace evokit
