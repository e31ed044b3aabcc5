#pragma once

#include <utility>
#include <vector>

#include "evokit/genotype.hpp"
#include "evokit/rng.hpp"

namespace evokit {

using CrossoverMask = BitString;  // m_i = 1: child 1 keeps parent 1's gene

enum class CrossoverKind { one_point, uniform, k_point, pmx, order };
enum class BitMutationKind { bernoulli, one_bit_flip };
enum class PermMutationKind { exchange, shift, two_opt };
enum class MaskKind { uniform, k_point };

struct VariationConfig {
  CrossoverKind crossover = CrossoverKind::one_point;
  double p_c = 1.0;
  double p_m = 0.0;
  int k = 1;  // cut count for k-point crossover, 1 <= k <= l-1
  BitMutationKind bit_mutation = BitMutationKind::bernoulli;
  PermMutationKind perm_mutation = PermMutationKind::exchange;

  void validate() const;
};

// --- binary crossover -------------------------------------------------

// Swap tails after 1-based cut chi in 1..l-1.
std::pair<BitString, BitString> one_point_cross_at(const BitString& a,
                                                   const BitString& b,
                                                   int chi);

// With probability p_c cut at uniform chi, otherwise copy the parents.
std::pair<BitString, BitString> one_point_cross(const BitString& a,
                                                const BitString& b, double p_c,
                                                Rng& rng);

std::pair<BitString, BitString> apply_mask(const BitString& a,
                                           const BitString& b,
                                           const CrossoverMask& mask);

// Mask from k distinct cut points (1-based, strictly increasing, < l):
// m_i = 1 iff the number of cuts before position i is even.
CrossoverMask k_point_mask_from_cuts(int l, const std::vector<int>& cuts);

CrossoverMask build_mask(MaskKind kind, int l, int k, Rng& rng);

// --- binary mutation ---------------------------------------------------

// Independent flip of every bit with probability p_m.
BitString bernoulli_mutate(const BitString& a, double p_m, Rng& rng);

// Uniform single-bit flip (the Hamming-1 neighborhood move).
BitString flip_one_bit(const BitString& a, Rng& rng);

// --- permutation crossover ----------------------------------------------

// Partially mapped crossover; the exchanged segment is 1-based positions
// chi..theta inclusive.
std::pair<Permutation, Permutation> pmx_cross_at(const Permutation& a,
                                                 const Permutation& b, int chi,
                                                 int theta);
std::pair<Permutation, Permutation> pmx_cross(const Permutation& a,
                                              const Permutation& b, Rng& rng);

// Order crossover: the first chi positions stay, the remainder is filled
// with the other parent's missing elements in their relative order.
std::pair<Permutation, Permutation> order_cross_at(const Permutation& a,
                                                   const Permutation& b,
                                                   int chi);
std::pair<Permutation, Permutation> order_cross(const Permutation& a,
                                                const Permutation& b,
                                                Rng& rng);

// --- permutation mutation -----------------------------------------------

// Swap 1-based positions i and j.
Permutation exchange_mutate_at(const Permutation& p, int i, int j);

// Move the gene at 1-based position pos by offset (sign = direction),
// shifting the block in between by one.
Permutation shift_mutate_at(const Permutation& p, int pos, int offset);

// Reverse 1-based positions a..b (a 2-opt move on the cyclic tour).
Permutation two_opt_mutate_at(const Permutation& p, int a, int b);

Permutation perm_mutate(const Permutation& p, PermMutationKind kind, Rng& rng);

// Undirected edge multiset of the cyclic tour; sorted pairs, sorted list.
std::vector<std::pair<int, int>> tour_edges(const Permutation& p);

}  // namespace evokit
