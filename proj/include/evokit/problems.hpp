#pragma once

#include <functional>
#include <vector>

#include "evokit/graph.hpp"
#include "evokit/problem.hpp"

namespace evokit {

// Fitness = number of ones; optimum l. The standard test bed.
Problem make_onemax(int l);

// Maximization of f over {a, ..., b} in the integer-range code; genotypes
// decoding above b get fitness 0. f must be non-negative on the range.
Problem make_int_function(std::function<double(long long)> f, long long a,
                          long long b);

struct MaxCutInstance {
  Graph graph;  // non-negative weights
};

// Cut-weight fitness over vertex indicators. With `bijective` the code has
// l = n-1 and vertex n is pinned to the complement side, which removes the
// complement degeneracy of the full code.
Problem make_maxcut(const MaxCutInstance& inst, bool bijective = false);

struct IlpInstance {
  std::vector<std::vector<double>> A;  // m x n
  std::vector<double> b;               // m
  std::vector<double> c;               // n
  std::vector<long long> d;            // per-coordinate upper bounds
  double penalty = 0.0;                // C; 0 = use 1 + sum |c_j| d_j

  void validate() const;
};

// Raw score (c,x) when Ax <= b, else -C * (total violation); fitness is the
// per-generation window applied by Population::evaluate.
Problem make_ilp(const IlpInstance& inst);

struct SplInstance {
  std::vector<double> open_cost;                 // c_i > 0, m facilities
  std::vector<std::vector<double>> service_cost; // C_ij >= 0, m x n

  void validate() const;
};

// Facility-vector genotype; fitness 1/F(z) for z != 0 and 0 at z = 0.
Problem make_spl(const SplInstance& inst);

struct TspInstance {
  std::vector<std::vector<double>> dist;  // symmetric, zero diagonal

  void validate() const;
  int size() const { return static_cast<int>(dist.size()); }
};

double tour_length(const TspInstance& inst, const Permutation& tour);

// Permutation genotype; fitness 1 / tour length.
Problem make_tsp(const TspInstance& inst);

// Two-peak binary landscape: global optimum at all-ones (value n), local
// optimum at all-zeros (value n-1) with a deceptive majority-zeros basin.
Problem make_two_peak(int n);

}  // namespace evokit
