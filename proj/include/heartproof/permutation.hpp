#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace heartproof {

/// A bijection of {0, ..., n-1}. Products compose right to left:
/// (a * b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidPermutation unless images is a bijection.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t n);
  /// Parses 0-indexed cycle notation such as "(0 1 2)(3 4)"; commas are
  /// accepted as separators. "()" is the identity.
  static Permutation from_cycles(std::size_t n, std::string_view text);

  std::size_t degree() const noexcept { return img_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return img_[x]; }
  const std::vector<std::uint32_t>& images() const noexcept { return img_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(std::int64_t e) const;
  bool is_identity() const noexcept;
  std::uint64_t order() const;
  /// Cycle lengths (including fixed points) in decreasing order.
  std::vector<std::uint32_t> cycle_type() const;
  std::size_t fixed_points() const noexcept;
  /// Smallest moved point, or degree() if the identity.
  std::uint32_t first_moved() const noexcept;

  std::string to_string() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> img_;
};

struct GeneratorSet {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

/// Parses a group file: one generator per line in cycle notation, '#'
/// comments, and an optional "degree N" line. Without it the degree is one
/// more than the largest point mentioned.
GeneratorSet parse_generator_file(std::string_view text);

}  // namespace heartproof
