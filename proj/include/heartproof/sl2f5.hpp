#pragma once

/**
 * @file sl2f5.hpp
 * @brief The two inequivalent 2-dimensional representations of SL(2,F_5)
 * over F_p for p = +-1 mod 5, and their tensor product against the heart of
 * A_5 pulled back along SL(2,F_5) -> A_5.
 */

#include <memory>

#include "heartproof/modrep.hpp"

namespace heartproof {

struct SL2F5Reps {
  std::uint32_t p = 0;
  /// The abstract group as its regular permutation representation on 120
  /// points; its generators correspond to s and t.
  std::shared_ptr<const PermGroup> gamma;
  GModule v1;
  GModule v2;
  /// The image of gamma in A_5 on 5 points (generators = images of s, t).
  PermGroup a5;
  /// heart(A_5, p) regarded as a gamma-module.
  GModule pulled_heart;
  /// Rank in gamma of the central element -1.
  std::uint64_t central_rank = 0;
};

/// Throws BadCongruence unless p = +-1 mod 5 and p > 5.
SL2F5Reps sl2f5_two_dim_reps(std::uint32_t p);

/// Checks that conj(rho(g)) maps the subalgebra spanned by `basis` into
/// itself for every generator of `m`.
bool subalgebra_is_normal(const GModule& m, const std::vector<gf::Matrix>& basis);

/// Basis of End(V1) (x) 1 or 1 (x) End(V2) inside End(V1 (x) V2).
std::vector<gf::Matrix> tensor_factor_subalgebra(const gf::PrimeField& F, std::size_t d1, std::size_t d2, bool left);

}  // namespace heartproof
