#pragma once

#include <utility>
#include <vector>

#include "evokit/genotype.hpp"

namespace evokit {

// Binary code for an integer range {a, ..., b}: l = ceil(log2(b-a)) bits,
// most significant first. Values above b decode with in_range = false (the
// caller assigns fitness 0 there).
struct IntRangeCode {
  long long a = 0;
  long long b = 0;
  int l = 0;

  IntRangeCode(long long a_, long long b_);
};

struct IntDecodeResult {
  long long value = 0;
  bool in_range = false;
};

IntDecodeResult decode_int_range(const IntRangeCode& code, const BitString& g);

// Regular-grid code for a box in R^n, k bits per coordinate, coordinate i
// stored in positions k(i-1)+1 .. ki (1-based), most significant first:
//   x_i = a_i + d_i / (2^k - 1) * sum_j bits.
struct BoxGridCode {
  int n = 0;
  int k = 0;
  std::vector<std::pair<double, double>> bounds;  // (a_i, b_i)

  BoxGridCode(int n_, int k_, std::vector<std::pair<double, double>> bounds_);
  int length() const { return n * k; }
};

RealVector decode_box_grid(const BoxGridCode& code, const BitString& g);

// Concatenated per-coordinate binary fields for integer boxes
// 0 <= x_j <= d_j, with k_j = ceil(log2(d_j + 1)) bits for coordinate j.
struct IlpCode {
  std::vector<long long> d;
  std::vector<int> widths;  // k_j

  explicit IlpCode(std::vector<long long> d_);
  int length() const;
};

std::vector<long long> decode_ilp(const IlpCode& code, const BitString& g);

// Numeric consequences of the crossover rotation property at a
// coordinate-aligned cut: the parents' phenotype midpoint is fixed and the
// pairwise / radial Euclidean distances are preserved.
struct RotationReport {
  bool midpoint_fixed = false;
  bool distance_preserved = false;
  bool radius_preserved = false;
  bool all() const {
    return midpoint_fixed && distance_preserved && radius_preserved;
  }
};

// chi must be a multiple of k (the cut sits on a coordinate boundary).
RotationReport check_rotation_property(const BoxGridCode& code,
                                       const BitString& a, const BitString& b,
                                       int chi, double rel_tol = 1e-9);

}  // namespace evokit
