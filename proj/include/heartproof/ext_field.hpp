#pragma once

/**
 * @file ext_field.hpp
 * @brief Small finite fields F_q with q = l^r, used to build PSL(2,q).
 *
 * An element is encoded as the integer sum c_i l^i of its coefficients in
 * the polynomial basis. The modulus is the monic irreducible of degree r
 * whose encoding is smallest.
 */

#include <cstdint>
#include <vector>

namespace heartproof::gf {

class ExtField {
 public:
  /// Throws InvalidField if l is not prime or q exceeds 2^16.
  ExtField(std::uint32_t ell, std::uint32_t r);

  std::uint32_t characteristic() const noexcept { return ell_; }
  std::uint32_t degree() const noexcept { return r_; }
  std::uint32_t order() const noexcept { return q_; }
  /// Ascending coefficients of the monic modulus (length r + 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  /// Throws ZeroInverse for a = 0.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  /// Smallest encoding generating the multiplicative group.
  std::uint32_t primitive_element() const noexcept { return exp_[1 % exp_.size()]; }

 private:
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t ell_;
  std::uint32_t r_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // exp_[k] = g^k, k < q - 1
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
};

}  // namespace heartproof::gf
