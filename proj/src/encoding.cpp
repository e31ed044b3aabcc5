#include "evokit/encoding.hpp"

#include <cmath>
#include <stdexcept>

#include "evokit/variation.hpp"

namespace evokit {

IntRangeCode::IntRangeCode(long long a_, long long b_) : a(a_), b(b_) {
  if (b <= a) throw std::invalid_argument("need a < b");
  l = 1;
  while ((1LL << l) < b - a) ++l;  // ceil(log2(b - a)), at least 1
}

IntDecodeResult decode_int_range(const IntRangeCode& code, const BitString& g) {
  if (static_cast<int>(g.size()) != code.l)
    throw std::invalid_argument("genotype length mismatch");
  long long value = code.a;
  for (int j = 0; j < code.l; ++j)
    if (g[code.l - 1 - j]) value += (1LL << j);
  return {value, value <= code.b};
}

BoxGridCode::BoxGridCode(int n_, int k_,
                         std::vector<std::pair<double, double>> bounds_)
    : n(n_), k(k_), bounds(std::move(bounds_)) {
  if (n < 1 || k < 1) throw std::invalid_argument("need n, k >= 1");
  if (static_cast<int>(bounds.size()) != n)
    throw std::invalid_argument("one bound pair per coordinate");
  for (const auto& [a, b] : bounds)
    if (b < a) throw std::invalid_argument("bound with b < a");
}

RealVector decode_box_grid(const BoxGridCode& code, const BitString& g) {
  if (static_cast<int>(g.size()) != code.length())
    throw std::invalid_argument("genotype length mismatch");
  RealVector x(code.n);
  const double denom = std::pow(2.0, code.k) - 1.0;
  for (int i = 0; i < code.n; ++i) {
    // Coordinate i+1 sits in positions k*i .. k*i + k-1 (0-based), MSB first.
    double field = 0.0;
    for (int j = 0; j < code.k; ++j)
      if (g[code.k * i + (code.k - 1 - j)]) field += std::pow(2.0, j);
    const auto& [a, b] = code.bounds[i];
    x[i] = a + (b - a) / denom * field;
  }
  return x;
}

IlpCode::IlpCode(std::vector<long long> d_) : d(std::move(d_)) {
  widths.reserve(d.size());
  for (long long dj : d) {
    if (dj < 0) throw std::invalid_argument("bound d_j must be >= 0");
    int k = 0;
    while ((1LL << k) < dj + 1) ++k;  // ceil(log2(d_j + 1))
    widths.push_back(k);
  }
}

int IlpCode::length() const {
  int total = 0;
  for (int k : widths) total += k;
  return total;
}

std::vector<long long> decode_ilp(const IlpCode& code, const BitString& g) {
  if (static_cast<int>(g.size()) != code.length())
    throw std::invalid_argument("genotype length mismatch");
  std::vector<long long> x(code.d.size(), 0);
  int offset = 0;
  for (std::size_t j = 0; j < code.d.size(); ++j) {
    const int k = code.widths[j];
    for (int i = 0; i < k; ++i)
      if (g[offset + k - 1 - i]) x[j] += (1LL << i);
    offset += k;
  }
  return x;
}

static double sq_distance(const RealVector& u, const RealVector& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += (u[i] - v[i]) * (u[i] - v[i]);
  return s;
}

RotationReport check_rotation_property(const BoxGridCode& code,
                                       const BitString& a, const BitString& b,
                                       int chi, double rel_tol) {
  if (chi < 1 || chi >= code.length() || chi % code.k != 0)
    throw std::invalid_argument(
        "cut must sit on a coordinate boundary inside the genotype");
  const auto [c1, c2] = one_point_cross_at(a, b, chi);

  const RealVector xa = decode_box_grid(code, a);
  const RealVector xb = decode_box_grid(code, b);
  const RealVector y1 = decode_box_grid(code, c1);
  const RealVector y2 = decode_box_grid(code, c2);

  RotationReport report;
  report.midpoint_fixed = true;
  for (int i = 0; i < code.n; ++i) {
    // Children coordinates are a permutation of the parents' per axis, so
    // the midpoint must match without any tolerance.
    if ((xa[i] + xb[i]) / 2.0 != (y1[i] + y2[i]) / 2.0) {
      report.midpoint_fixed = false;
      break;
    }
  }

  auto close = [rel_tol](double u, double v) {
    const double scale = std::max({std::abs(u), std::abs(v), 1.0});
    return std::abs(u - v) <= rel_tol * scale;
  };
  report.distance_preserved =
      close(std::sqrt(sq_distance(xa, xb)), std::sqrt(sq_distance(y1, y2)));

  RealVector mid(code.n);
  for (int i = 0; i < code.n; ++i) mid[i] = (xa[i] + xb[i]) / 2.0;
  report.radius_preserved =
      close(std::sqrt(sq_distance(xa, mid)), std::sqrt(sq_distance(y1, mid))) &&
      close(std::sqrt(sq_distance(xb, mid)), std::sqrt(sq_distance(y2, mid)));
  return report;
}

}  // namespace evokit
