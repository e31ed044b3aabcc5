#pragma once

#include <cassert>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace evokit {

namespace gp {
struct Node;
using TreePtr = std::shared_ptr<const Node>;
bool equal(const TreePtr& a, const TreePtr& b);
std::string to_text(const TreePtr& t);
}  // namespace gp

// Binary string over {0,1}; bit i of the paper's 1-based genotype lives at
// index i-1.
using BitString = std::vector<std::uint8_t>;

// Permutation of {1, ..., n}, stored by value.
using Permutation = std::vector<int>;

using RealVector = std::vector<double>;

enum class GenotypeKind { bits, permutation, real_vector, tree };

// Unit of variation: one of the four payloads used across the toolkit.
struct Genotype {
  std::variant<BitString, Permutation, RealVector, gp::TreePtr> payload;

  Genotype() : payload(BitString{}) {}
  explicit Genotype(BitString b) : payload(std::move(b)) {}
  explicit Genotype(Permutation p) : payload(std::move(p)) {}
  explicit Genotype(RealVector r) : payload(std::move(r)) {}
  explicit Genotype(gp::TreePtr t) : payload(std::move(t)) {}

  GenotypeKind kind() const {
    return static_cast<GenotypeKind>(payload.index());
  }

  const BitString& bits() const { return std::get<BitString>(payload); }
  BitString& bits() { return std::get<BitString>(payload); }
  const Permutation& perm() const { return std::get<Permutation>(payload); }
  Permutation& perm() { return std::get<Permutation>(payload); }
  const RealVector& reals() const { return std::get<RealVector>(payload); }
  RealVector& reals() { return std::get<RealVector>(payload); }
  const gp::TreePtr& tree() const { return std::get<gp::TreePtr>(payload); }

  bool operator==(const Genotype& other) const {
    if (payload.index() != other.payload.index()) return false;
    if (kind() == GenotypeKind::tree)
      return gp::equal(tree(), other.tree());
    return payload == other.payload;
  }
};

bool is_permutation(const Permutation& p);

// Human-readable form: "0110", "(3 1 2)", "[0.5 1]", or prefix tree text.
std::string to_string(const Genotype& g);

}  // namespace evokit
