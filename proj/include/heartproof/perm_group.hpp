#pragma once

/**
 * @file perm_group.hpp
 * @brief Permutation groups with a stabilizer chain built at construction.
 *
 * The chain follows the deterministic Schreier-Sims scheme: every point of a
 * fixed base ordering is a level, levels with trivial orbits are kept, and
 * strong generators are added only when a sift fails.
 */

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "heartproof/bigint.hpp"
#include "heartproof/permutation.hpp"

namespace heartproof {

class PermGroup {
 public:
  /// Base points in increasing order.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);
  /// Explicit base ordering (a permutation of all points), for cross-checks.
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::vector<std::uint32_t> base_order);

  std::size_t degree() const noexcept { return n_; }
  const std::vector<Permutation>& generators() const noexcept { return gens_; }
  const std::vector<std::uint32_t>& base() const noexcept { return base_; }

  const BigInt& order() const noexcept { return order_; }
  /// Order as a machine integer; throws TooLarge above 2^63.
  std::uint64_t order_u64() const;

  bool contains(const Permutation& g) const;
  /// Uniformly random element.
  Permutation random_element(std::mt19937_64& rng) const;

  /// Mixed-radix index of g among all elements; g must be a member.
  std::uint64_t rank(const Permutation& g) const;
  Permutation unrank(std::uint64_t index) const;
  /// All elements in rank order; throws TooLarge above `limit`.
  std::vector<Permutation> elements(std::uint64_t limit = 1u << 20) const;

  std::vector<std::vector<std::uint32_t>> orbits() const;
  std::vector<std::uint32_t> orbit(std::uint32_t point) const;
  bool is_transitive() const;
  bool is_doubly_transitive() const;
  /// Stabilizer of the first base point, from the strong generators.
  PermGroup point_stabilizer() const;
  /// Generators of the stabilizer of `point` (Schreier generators, reduced).
  std::vector<Permutation> stabilizer_generators(std::uint32_t point) const;

  /// Orbit sizes along the chain; their product is the order.
  std::vector<std::size_t> transversal_sizes() const;

 private:
  struct Level {
    std::uint32_t point;
    std::vector<Permutation> strong;
    std::vector<std::int32_t> rep_index;  // point -> index into reps, or -1
    std::vector<Permutation> reps;
    std::vector<std::uint32_t> orbit;
  };

  void build();
  bool sift_from(std::size_t k, Permutation g) const;
  void insert(std::size_t k, const Permutation& g);
  void extend_orbit(std::size_t k, const Permutation& u);

  std::size_t n_;
  std::vector<Permutation> gens_;
  std::vector<std::uint32_t> base_;
  std::vector<Level> levels_;
  BigInt order_;
};

/// Orbits of a generator set without building a chain.
std::vector<std::vector<std::uint32_t>> orbits_of(std::size_t degree, const std::vector<Permutation>& gens);

}  // namespace heartproof
