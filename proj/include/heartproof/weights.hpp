#pragma once

/**
 * @file weights.hpp
 * @brief Closed-form arithmetic of superelliptic jacobians: genus, weight
 * multiplicities, cyclotomic factorization and h_E.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heartproof/bigint.hpp"
#include "heartproof/polyz.hpp"

namespace heartproof {

struct CurveParams {
  std::uint32_t n = 0;
  std::uint32_t p = 0;
  std::uint32_t r = 1;

  /// Throws InvalidField unless p is an odd prime and r >= 1.
  static CurveParams make(std::uint32_t n, std::uint32_t p, std::uint32_t r = 1);
  std::uint64_t q() const { return ipow(p, r); }
  /// p does not divide n, or q divides n.
  bool standing_hypothesis() const { return n % p != 0 || n % q() == 0; }
};

std::uint64_t euler_phi_prime_power(std::uint64_t p, unsigned r);

/// Throws HypothesisViolated if p | n but q does not divide n.
BigInt genus(const CurveParams& params);

struct WeightProfile {
  CurveParams params;
  /// (i, floor(n i / q)) for 1 <= i < q with p not dividing i.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> mults;
  /// Genus of y^q = f(x).
  BigInt genus;
  /// Dimension of the part of the jacobian on which delta_q acts through a
  /// primitive q-th root of unity: phi(q)(n-1)/2, the sum of the mults.
  /// Equal to the genus when r = 1.
  BigInt dimension;
  std::uint64_t gcd = 0;
  std::uint64_t support = 0;
  std::optional<BigInt> h_E;
};

/// Throws NotApplicable if p | n.
WeightProfile weight_profile(const CurveParams& params);
/// Rows "i, n_sigma_i" and a footer with genus, dimension, gcd and support.
std::string format_profile(const WeightProfile& profile);

/// d divides every nonzero multiplicity and d * support <= dimension.
bool csa_constraints(const WeightProfile& profile, std::uint64_t candidate_d);

struct CyclotomicData {
  std::uint64_t p = 0;
  unsigned r = 0;
  /// Phi_{p^i} for i = 1..r.
  std::vector<PolyZ> factors;
  std::vector<std::uint64_t> degrees;
  PolyZ product;
  /// (t^q - 1) / (t - 1).
  PolyZ geometric;
  std::uint64_t total_degree = 0;
};

CyclotomicData cyclotomic_data(std::uint64_t p, unsigned r);
/// Phi_{p^i}(t) = sum_{j<p} t^{j p^{i-1}}.
PolyZ cyclotomic_prime_power(std::uint64_t p, unsigned i);

/// 2 dim_Z / phi(p^r). Throws NotDivisible.
BigInt h_E(const BigInt& dim_Z, std::uint64_t p, unsigned r);

}  // namespace heartproof
