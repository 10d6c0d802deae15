#pragma once

/**
 * @file poly_fp.hpp
 * @brief Univariate polynomials over Z/pZ and their factorization.
 *
 * Works for any prime p below 2^62, including p = 2 (the Galois probe reduces
 * integer polynomials modulo small primes). Factorization is the classical
 * pipeline: square-free decomposition, distinct-degree factorization, and
 * Cantor-Zassenhaus equal-degree splitting with a caller-supplied seed.
 */

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "heartproof/bigint.hpp"

namespace heartproof::gf {

class PolyFp {
 public:
  PolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs_ascending = {});

  static PolyFp x(std::uint64_t p);
  static PolyFp constant(std::uint64_t p, std::uint64_t c);

  std::uint64_t modulus() const noexcept { return p_; }
  /// Degree of the zero polynomial is -1.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  std::uint64_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }

  std::uint64_t eval(std::uint64_t x) const;
  PolyFp monic() const;
  PolyFp derivative() const;

  PolyFp operator+(const PolyFp& o) const;
  PolyFp operator-(const PolyFp& o) const;
  PolyFp operator*(const PolyFp& o) const;
  PolyFp operator%(const PolyFp& o) const;
  PolyFp operator/(const PolyFp& o) const;
  bool operator==(const PolyFp& o) const { return p_ == o.p_ && c_ == o.c_; }

  std::string to_string() const;

 private:
  void trim();

  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

struct DivMod {
  PolyFp quotient;
  PolyFp remainder;
};

DivMod divmod(const PolyFp& a, const PolyFp& b);
/// Monic gcd (zero if both inputs are zero).
PolyFp gcd(PolyFp a, PolyFp b);
PolyFp powmod(const PolyFp& base, const BigInt& exponent, const PolyFp& modulus);

bool is_squarefree(const PolyFp& f);
bool is_irreducible(const PolyFp& f);

/// Pairs (d, g_d) where g_d is the product of all degree-d irreducible
/// factors of the square-free monic polynomial f.
std::vector<std::pair<int, PolyFp>> distinct_degree_factorization(const PolyFp& f);

/// Splits a square-free monic g whose irreducible factors all have degree d.
std::vector<PolyFp> equal_degree_factorization(const PolyFp& g, int d, std::mt19937_64& rng);

/// Monic irreducible factors of a square-free polynomial, sorted by
/// (degree, coefficients).
std::vector<PolyFp> factor_squarefree(const PolyFp& f, std::uint64_t seed);

/// Distinct monic irreducible factors of an arbitrary nonzero polynomial.
std::vector<PolyFp> distinct_irreducible_factors(const PolyFp& f, std::uint64_t seed);

}  // namespace heartproof::gf
