#pragma once

#include <array>
#include <iosfwd>
#include <vector>

namespace evokit {

// Simple undirected graph, vertices 0..n-1, no self-loops or duplicate
// edges. Weights default to 1 when the list is empty.
struct Graph {
  int n = 0;
  std::vector<std::array<int, 2>> edges;
  std::vector<double> weights;

  Graph() = default;
  Graph(int n_, std::vector<std::array<int, 2>> edges_,
        std::vector<double> weights_ = {});

  int edge_count() const { return static_cast<int>(edges.size()); }
  double weight(int e) const { return weights.empty() ? 1.0 : weights[e]; }
  std::vector<std::vector<int>> adjacency() const;
};

// Edge-list text: header "n m", then m lines "u v [w]" with 1-based
// vertices; omitted weights default to 1.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace evokit
