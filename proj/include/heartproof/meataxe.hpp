#pragma once

/**
 * @file meataxe.hpp
 * @brief Irreducibility testing of matrix modules (Holt-Rees MeatAxe with
 * Norton's criterion).
 */

#include <cstdint>
#include <string>
#include <vector>

#include "heartproof/modrep.hpp"
#include "heartproof/poly_fp.hpp"

namespace heartproof {

inline constexpr std::size_t kMeatAxeBudget = 200;

struct IrreducibilityResult {
  bool irreducible = false;
  /// Basis of a proper nonzero invariant subspace when reducible.
  std::vector<gf::Vec> invariant_subspace;
  /// Number of algebra elements examined.
  std::size_t attempts = 0;
  /// For irreducible modules: the factor f with nullity(f(theta)) = deg f.
  std::string certificate;
};

/// Throws RandomnessExhausted when the budget runs out undecided.
IrreducibilityResult is_irreducible(const GModule& m, std::uint64_t seed = 0,
                                    std::size_t budget = kMeatAxeBudget);

/// Characteristic polynomial via reduction to Hessenberg form.
gf::PolyFp characteristic_polynomial(const gf::Matrix& a);
gf::Matrix evaluate(const gf::PolyFp& f, const gf::Matrix& a);

}  // namespace heartproof
