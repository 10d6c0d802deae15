#pragma once

/**
 * @file modrep.hpp
 * @brief Matrix representations over F_p: permutation modules, hearts,
 * tensor products, commutants and isomorphism tests.
 *
 * Matrices act on column vectors. The permutation module sends e_i to
 * e_{g(i)}.
 */

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "heartproof/gf.hpp"
#include "heartproof/perm_group.hpp"

namespace heartproof {

class GModule {
 public:
  /// `group` may be null for modules of an abstract group given only by
  /// generator images. Throws InvalidField on dimension mismatch.
  GModule(const gf::PrimeField& field, std::size_t dim, std::vector<gf::Matrix> generators,
          std::shared_ptr<const PermGroup> group = nullptr);

  const gf::PrimeField& field() const noexcept { return field_; }
  std::uint32_t p() const noexcept { return field_.p(); }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<gf::Matrix>& generators() const noexcept { return gens_; }
  std::size_t num_generators() const noexcept { return gens_.size(); }
  const std::shared_ptr<const PermGroup>& group() const noexcept { return group_; }

  /// Image of a word; entries are generator indices, negative k meaning the
  /// inverse of generator -k-1.
  gf::Matrix word_image(const std::vector<int>& word) const;

  /// Header "p dim ngens", then each matrix row by row.
  std::string dump() const;

 private:
  gf::PrimeField field_;
  std::size_t dim_;
  std::vector<gf::Matrix> gens_;
  std::vector<gf::Matrix> inverses_;
  std::shared_ptr<const PermGroup> group_;
};

enum class HeartKind { FullHyperplane, Quotient };

struct HeartModule {
  GModule module;
  std::size_t n;
  HeartKind kind;
};

gf::Matrix permutation_matrix(const gf::PrimeField& field, const Permutation& g);
/// Action of g on the heart in the fixed basis: e_i - e_{n-1} (i < n-1),
/// reduced modulo the constants when p | n.
gf::Matrix heart_matrix(const gf::PrimeField& field, const Permutation& g);
std::size_t heart_dimension(std::size_t n, std::uint32_t p);

GModule permutation_module(const PermGroup& G, std::uint32_t p);
HeartModule heart(const PermGroup& G, std::uint32_t p);
GModule trivial_module(const gf::PrimeField& field, std::size_t num_generators, std::size_t dim = 1);

/// Throws GroupMismatch unless both modules share field and generators.
GModule tensor(const GModule& a, const GModule& b);
GModule direct_sum(const GModule& a, const GModule& b);

/// Basis of {X : X rho(g) = rho(g) X for every generator g}.
std::vector<gf::Matrix> commutant_basis(const GModule& m);
std::size_t commutant_dim(const GModule& m);

/// Basis of {X : X rho1(g) = rho2(g) X}, X of shape dim2 x dim1.
std::vector<gf::Matrix> hom_basis(const GModule& a, const GModule& b);
/// An invertible intertwiner from a to b, if one is found.
std::optional<gf::Matrix> module_iso(const GModule& a, const GModule& b, std::uint64_t seed = 0);
bool is_intertwiner(const gf::Matrix& X, const GModule& a, const GModule& b);

/// Smallest subspace containing the seed vectors and stable under `gens`.
gf::SubspaceBasis spin(const std::vector<gf::Matrix>& gens, const std::vector<gf::Vec>& seeds);
bool is_invariant_subspace(const GModule& m, const std::vector<gf::Vec>& basis);

}  // namespace heartproof
