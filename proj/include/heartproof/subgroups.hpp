#pragma once

/**
 * @file subgroups.hpp
 * @brief Subgroup searches up to conjugacy and coset actions.
 *
 * Enumeration works bottom-up: every subgroup is generated by its cyclic
 * subgroups of prime-power order, so each class is reached by adjoining one
 * such cyclic subgroup to a smaller class representative.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "heartproof/bigint.hpp"
#include "heartproof/families.hpp"
#include "heartproof/perm_group.hpp"

namespace heartproof {

/// Groups of at most this order may be enumerated.
inline constexpr std::uint64_t kSubgroupEnumerationLimit = 20000;

struct SubgroupClass {
  std::uint64_t order = 0;
  std::uint64_t class_size = 0;
  std::vector<Permutation> generators;
};

struct SubgroupSearchOptions {
  /// Classes of subgroups whose order fails this test are not explored.
  std::function<bool(std::uint64_t)> admissible;
  /// Enumeration stops as soon as a class satisfying this is found.
  std::function<bool(std::uint64_t)> stop_at;
};

/// Conjugacy classes of subgroups (the trivial group first). Throws TooLarge
/// above kSubgroupEnumerationLimit.
std::vector<SubgroupClass> subgroup_classes(const PermGroup& G, const SubgroupSearchOptions& options = {});

enum class IndexMethod { Trivial, Table, Enumeration };

struct IndexSearchResult {
  bool exists = false;
  IndexMethod method = IndexMethod::Trivial;
  std::optional<std::uint64_t> index;  // witness index when exists
  std::string witness;
};

/// Is there a proper subgroup whose index d satisfies d > 1 and d | N?
/// Uses the family table when it decides the question, else enumeration.
/// Throws TooLarge when neither applies.
IndexSearchResult exists_subgroup_of_index_dividing(const PermGroup* G, const std::optional<GroupTag>& tag,
                                                    const BigInt& N);
IndexSearchResult exists_subgroup_of_index_dividing(const PermGroup& G, const BigInt& N);

/// Action of G on the left cosets of H. Throws NotSubgroup unless H <= G.
PermGroup coset_action(const PermGroup& G, const PermGroup& H);

}  // namespace heartproof
