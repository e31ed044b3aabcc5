#pragma once

#include <algorithm>
#include <cstdint>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

namespace evokit {

// Seeded random stream. Every stochastic operator in the library takes an
// explicit Rng& so that a run is a pure function of its seed. Distributions
// are derived from the raw 64-bit output by hand, which keeps the byte
// stream identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on {0, ..., n-1} without modulo bias.
  std::size_t uniform_index(std::size_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return static_cast<std::size_t>(x % n);
  }

  // Uniform on {lo, ..., hi} inclusive.
  long long uniform_int(long long lo, long long hi) {
    return lo + static_cast<long long>(
                    uniform_index(static_cast<std::size_t>(hi - lo + 1)));
  }

  bool bernoulli(double p) { return uniform01() < p; }

  // Box-Muller; consumes exactly two uniforms per call.
  double normal(double mean, double sigma) {
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + sigma * r * std::cos(2.0 * std::numbers::pi * u2);
  }

  // Fisher-Yates in place.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[uniform_index(i)]);
    }
  }

  // Random permutation of {1, ..., n}.
  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    shuffle(p);
    return p;
  }

  // k distinct values from {lo, ..., hi}, sorted ascending.
  std::vector<int> distinct_sorted(int k, int lo, int hi);

  // Independent child stream, deterministic given the parent state.
  Rng split() { return Rng(splitmix(next_u64())); }

 private:
  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
};

inline std::vector<int> Rng::distinct_sorted(int k, int lo, int hi) {
  // Floyd's sampling; fine for the small k used by k-point crossover.
  std::vector<int> out;
  out.reserve(k);
  for (int j = hi - k + 1; j <= hi; ++j) {
    const int t = static_cast<int>(uniform_int(lo, j));
    bool seen = false;
    for (int v : out) {
      if (v == t) {
        seen = true;
        break;
      }
    }
    out.push_back(seen ? j : t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace evokit
