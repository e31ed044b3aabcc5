#include "evokit/variation.hpp"

#include <algorithm>
#include <stdexcept>

namespace evokit {

void VariationConfig::validate() const {
  if (p_c < 0.0 || p_c > 1.0)
    throw std::invalid_argument("P_c must lie in [0, 1]");
  if (p_m < 0.0 || p_m > 1.0)
    throw std::invalid_argument("P_m must lie in [0, 1]");
  if (crossover == CrossoverKind::k_point && k < 1)
    throw std::invalid_argument("k-point crossover needs k >= 1");
}

static void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("parent length mismatch");
}

std::pair<BitString, BitString> one_point_cross_at(const BitString& a,
                                                   const BitString& b,
                                                   int chi) {
  require_same_length(a.size(), b.size());
  const int l = static_cast<int>(a.size());
  if (chi < 1 || chi >= l) throw std::invalid_argument("cut out of range");
  BitString c1(a), c2(b);
  for (int i = chi; i < l; ++i) {
    c1[i] = b[i];
    c2[i] = a[i];
  }
  return {std::move(c1), std::move(c2)};
}

std::pair<BitString, BitString> one_point_cross(const BitString& a,
                                                const BitString& b, double p_c,
                                                Rng& rng) {
  require_same_length(a.size(), b.size());
  if (a.size() < 2) throw std::invalid_argument("need length >= 2");
  if (!rng.bernoulli(p_c)) return {a, b};
  const int chi = static_cast<int>(rng.uniform_int(1, a.size() - 1));
  return one_point_cross_at(a, b, chi);
}

std::pair<BitString, BitString> apply_mask(const BitString& a,
                                           const BitString& b,
                                           const CrossoverMask& mask) {
  require_same_length(a.size(), b.size());
  require_same_length(a.size(), mask.size());
  BitString c1(a.size()), c2(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    c1[i] = mask[i] ? a[i] : b[i];
    c2[i] = mask[i] ? b[i] : a[i];
  }
  return {std::move(c1), std::move(c2)};
}

CrossoverMask k_point_mask_from_cuts(int l, const std::vector<int>& cuts) {
  for (std::size_t j = 0; j < cuts.size(); ++j) {
    if (cuts[j] < 1 || cuts[j] >= l ||
        (j > 0 && cuts[j] <= cuts[j - 1]))
      throw std::invalid_argument("invalid cut set");
  }
  CrossoverMask mask(l);
  // m_i = 1 iff the number of cut points below position i is even.
  std::size_t passed = 0;
  for (int i = 1; i <= l; ++i) {
    while (passed < cuts.size() && cuts[passed] < i) ++passed;
    mask[i - 1] = (passed % 2 == 0) ? 1 : 0;
  }
  return mask;
}

CrossoverMask build_mask(MaskKind kind, int l, int k, Rng& rng) {
  if (kind == MaskKind::uniform) {
    CrossoverMask mask(l);
    for (auto& m : mask) m = rng.bernoulli(0.5) ? 1 : 0;
    return mask;
  }
  if (k < 1 || k > l - 1) throw std::invalid_argument("k out of range");
  return k_point_mask_from_cuts(l, rng.distinct_sorted(k, 1, l - 1));
}

BitString bernoulli_mutate(const BitString& a, double p_m, Rng& rng) {
  BitString out(a);
  for (auto& bit : out)
    if (rng.bernoulli(p_m)) bit ^= 1;
  return out;
}

BitString flip_one_bit(const BitString& a, Rng& rng) {
  BitString out(a);
  out[rng.uniform_index(a.size())] ^= 1;
  return out;
}

static void require_perm_pair(const Permutation& a, const Permutation& b) {
  require_same_length(a.size(), b.size());
  if (!is_permutation(a) || !is_permutation(b))
    throw std::invalid_argument("inputs must be permutations of {1..n}");
}

std::pair<Permutation, Permutation> pmx_cross_at(const Permutation& a,
                                                 const Permutation& b, int chi,
                                                 int theta) {
  require_perm_pair(a, b);
  const int n = static_cast<int>(a.size());
  if (chi < 1 || theta > n || chi >= theta)
    throw std::invalid_argument("invalid PMX cuts");

  const int lo = chi - 1, hi = theta - 1;  // 0-based inclusive segment
  Permutation c1(n, 0), c2(n, 0);
  // value -> mapped value across the exchanged segment
  std::vector<int> map1(n + 1, 0), map2(n + 1, 0);
  std::vector<bool> used1(n + 1, false), used2(n + 1, false);
  for (int j = lo; j <= hi; ++j) {
    c1[j] = b[j];
    c2[j] = a[j];
    used1[b[j]] = true;
    used2[a[j]] = true;
    map1[b[j]] = a[j];  // M1(eta_j) = xi_j
    map2[a[j]] = b[j];  // M2(xi_j) = eta_j
  }
  auto resolve = [n](int value, const std::vector<int>& map,
                     const std::vector<bool>& used) {
    int v = value;
    int hops = 0;
    while (used[v]) {
      v = map[v];
      if (++hops > n)
        throw std::logic_error("PMX mapping failed to terminate");
    }
    return v;
  };
  for (int j = 0; j < n; ++j) {
    if (j >= lo && j <= hi) continue;
    c1[j] = resolve(a[j], map1, used1);
    c2[j] = resolve(b[j], map2, used2);
  }
  return {std::move(c1), std::move(c2)};
}

std::pair<Permutation, Permutation> pmx_cross(const Permutation& a,
                                              const Permutation& b, Rng& rng) {
  const int n = static_cast<int>(a.size());
  if (n < 2) throw std::invalid_argument("PMX needs n >= 2");
  // Uniform over pairs 1 <= chi < theta <= n.
  int chi = static_cast<int>(rng.uniform_int(1, n));
  int theta = static_cast<int>(rng.uniform_int(1, n));
  while (chi == theta) theta = static_cast<int>(rng.uniform_int(1, n));
  if (chi > theta) std::swap(chi, theta);
  return pmx_cross_at(a, b, chi, theta);
}

static Permutation order_fill(const Permutation& keeper,
                              const Permutation& donor, int chi) {
  const int n = static_cast<int>(keeper.size());
  Permutation child(keeper.begin(), keeper.begin() + chi);
  child.reserve(n);
  std::vector<bool> taken(n + 1, false);
  for (int j = 0; j < chi; ++j) taken[keeper[j]] = true;
  for (int v : donor)
    if (!taken[v]) child.push_back(v);
  return child;
}

std::pair<Permutation, Permutation> order_cross_at(const Permutation& a,
                                                   const Permutation& b,
                                                   int chi) {
  require_perm_pair(a, b);
  const int n = static_cast<int>(a.size());
  if (chi < 1 || chi >= n) throw std::invalid_argument("invalid OX cut");
  return {order_fill(a, b, chi), order_fill(b, a, chi)};
}

std::pair<Permutation, Permutation> order_cross(const Permutation& a,
                                                const Permutation& b,
                                                Rng& rng) {
  const int n = static_cast<int>(a.size());
  if (n < 2) throw std::invalid_argument("OX needs n >= 2");
  return order_cross_at(a, b, static_cast<int>(rng.uniform_int(1, n - 1)));
}

Permutation exchange_mutate_at(const Permutation& p, int i, int j) {
  const int n = static_cast<int>(p.size());
  if (i < 1 || j < 1 || i > n || j > n)
    throw std::invalid_argument("position out of range");
  Permutation out(p);
  std::swap(out[i - 1], out[j - 1]);
  return out;
}

Permutation shift_mutate_at(const Permutation& p, int pos, int offset) {
  const int n = static_cast<int>(p.size());
  const int target = pos + offset;
  if (pos < 1 || pos > n || target < 1 || target > n || offset == 0)
    throw std::invalid_argument("invalid shift");
  Permutation out(p);
  const int gene = out[pos - 1];
  out.erase(out.begin() + (pos - 1));
  out.insert(out.begin() + (target - 1), gene);
  return out;
}

Permutation two_opt_mutate_at(const Permutation& p, int a, int b) {
  const int n = static_cast<int>(p.size());
  if (a < 1 || b > n || a >= b) throw std::invalid_argument("invalid segment");
  // These three reversals leave the cyclic tour's edge set unchanged or
  // touch adjacent edges, so they are not 2-opt moves.
  if ((a == 1 && b == n) || (a == 1 && b == n - 1) || (a == 2 && b == n))
    throw std::invalid_argument("segment endpoints give adjacent tour edges");
  Permutation out(p);
  std::reverse(out.begin() + (a - 1), out.begin() + b);
  return out;
}

Permutation perm_mutate(const Permutation& p, PermMutationKind kind,
                        Rng& rng) {
  const int n = static_cast<int>(p.size());
  switch (kind) {
    case PermMutationKind::exchange: {
      if (n < 2) throw std::invalid_argument("exchange needs n >= 2");
      const int i = static_cast<int>(rng.uniform_int(1, n));
      int j = static_cast<int>(rng.uniform_int(1, n));
      while (j == i) j = static_cast<int>(rng.uniform_int(1, n));
      return exchange_mutate_at(p, i, j);
    }
    case PermMutationKind::shift: {
      if (n < 2) throw std::invalid_argument("shift needs n >= 2");
      const int pos = static_cast<int>(rng.uniform_int(1, n));
      // Uniform over the n-1 legal nonzero offsets for this position.
      int target = static_cast<int>(rng.uniform_int(1, n));
      while (target == pos) target = static_cast<int>(rng.uniform_int(1, n));
      return shift_mutate_at(p, pos, target - pos);
    }
    case PermMutationKind::two_opt: {
      if (n < 4) throw std::invalid_argument("2-opt needs n >= 4");
      while (true) {
        int a = static_cast<int>(rng.uniform_int(1, n));
        int b = static_cast<int>(rng.uniform_int(1, n));
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if ((a == 1 && b == n) || (a == 1 && b == n - 1) || (a == 2 && b == n))
          continue;
        return two_opt_mutate_at(p, a, b);
      }
    }
  }
  throw std::logic_error("unknown permutation mutation kind");
}

std::vector<std::pair<int, int>> tour_edges(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n);
  for (int i = 0; i < n; ++i) {
    int u = p[i], v = p[(i + 1) % n];
    if (u > v) std::swap(u, v);
    edges.emplace_back(u, v);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace evokit
