#pragma once

/**
 * @file galois_probe.hpp
 * @brief Frobenius cycle-type evidence for the Galois group of an integer
 * polynomial, with certificates only for the sound S_n / A_n criteria.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heartproof/bigint.hpp"
#include "heartproof/polyz.hpp"

namespace heartproof {

enum class GaloisConclusion { ProvenSn, ProvenAnOrSn, ContainsTag, Heuristic, Unknown };
std::string to_string(GaloisConclusion c);

struct CyclePattern {
  std::uint64_t prime = 0;
  /// Factor degrees in increasing order.
  std::vector<std::uint32_t> degrees;
};

struct GaloisEvidence {
  PolyZ f;
  std::uint32_t n = 0;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  BigInt disc;
  std::optional<bool> disc_is_square;
  std::vector<CyclePattern> patterns;
  std::optional<std::uint64_t> irreducible_witness;
  /// Prime whose pattern powers to a transposition.
  std::optional<std::uint64_t> transposition_witness;
  /// Prime with an (n-1)-cycle pattern (two-point transitivity).
  std::optional<std::uint64_t> two_transitive_witness;
  /// Prime whose pattern powers to an l-cycle with l <= n-3 or l = 3.
  std::optional<std::uint64_t> prime_cycle_witness;
  bool primitive = false;
  GaloisConclusion conclusion = GaloisConclusion::Unknown;
  /// "S_n", "A_n", "2-transitive", or a heuristic guess.
  std::string tag;
};

/// Degrees of the irreducible factors of f mod p, increasing. Throws
/// BadReduction if p divides lc(f) or f mod p is not squarefree.
std::vector<std::uint32_t> factor_degrees_mod_p(const PolyZ& f, std::uint64_t p, std::uint64_t seed = 0);

/// Deterministic in (f, budget, seed). Samples the first `budget` primes
/// p >= 3 not dividing lc(f) disc(f).
GaloisEvidence classify_galois(const PolyZ& f, std::uint64_t budget = 40, std::uint64_t seed = 0);

/// Re-derives every ingredient the conclusion relies on. Returns an empty
/// string on success, otherwise a description of the first failure.
std::string verify_evidence(const GaloisEvidence& e);

}  // namespace heartproof
