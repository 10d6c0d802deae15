#pragma once

/**
 * @file polyz.hpp
 * @brief Integer polynomials with arbitrary-precision coefficients.
 */

#include <string>
#include <string_view>
#include <vector>

#include "heartproof/bigint.hpp"
#include "heartproof/poly_fp.hpp"

namespace heartproof {

class PolyZ {
 public:
  PolyZ() = default;
  explicit PolyZ(std::vector<BigInt> coeffs_ascending);

  /// Accepts "x^5 - x - 1", "3*x^2 + 2x", or a bracketed ascending
  /// coefficient list "[-1, -1, 0, 0, 0, 1]". Throws ParseError.
  static PolyZ parse(std::string_view text);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const BigInt& coeff(std::size_t i) const;
  const BigInt& leading() const;
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }

  PolyZ derivative() const;
  PolyZ operator+(const PolyZ& o) const;
  PolyZ operator-(const PolyZ& o) const;
  PolyZ operator*(const PolyZ& o) const;
  bool operator==(const PolyZ& o) const { return c_ == o.c_; }

  BigInt eval(const BigInt& x) const;
  /// Reduction modulo a prime.
  gf::PolyFp mod(std::uint64_t p) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Resultant by the Bareiss fraction-free determinant of the Sylvester matrix.
BigInt resultant(const PolyZ& f, const PolyZ& g);
/// disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f).
BigInt discriminant(const PolyZ& f);
/// The same discriminant reconstructed by CRT from its residues modulo
/// many primes, within a Hadamard bound.
BigInt discriminant_crt(const PolyZ& f);

/// gcd(f, f') over Q has degree 0.
bool is_squarefree(const PolyZ& f);

bool is_perfect_square(const BigInt& v);

}  // namespace heartproof
