#pragma once

/**
 * @file simplicity.hpp
 * @brief Decision procedures for the simplicity hierarchy of hearts:
 * simple, absolutely simple, central simple, very simple.
 *
 * Every verdict carries the ordered evidence that produced it. Unknown is
 * returned whenever no criterion applies.
 */

#include <optional>
#include <string>
#include <vector>

#include "heartproof/families.hpp"
#include "heartproof/gf.hpp"
#include "heartproof/perm_group.hpp"

namespace heartproof {

enum class SimplicityLevel { Unknown, NotSimple, Simple, AbsolutelySimple, CentralSimple, VerySimple };
enum class EvidenceKind { Computation, TableFact, Obstruction };

std::string to_string(SimplicityLevel level);
std::string to_string(EvidenceKind kind);

struct Evidence {
  EvidenceKind kind;
  std::string anchor;
  std::string detail;
};

struct SimplicityVerdict {
  SimplicityLevel level = SimplicityLevel::Unknown;
  std::vector<Evidence> evidence;
  /// Set when the only possible normal subalgebras besides the obvious ones
  /// are copies of Mat_2.
  bool mat2_flag = false;
  std::vector<gf::Vec> witness_subspace;

  /// Hierarchy test: VerySimple implies CentralSimple implies
  /// AbsolutelySimple implies Simple. Unknown implies nothing.
  bool at_least(SimplicityLevel l) const;
};

std::optional<SimplicityVerdict> abs_irred_shortcut(const PermGroup& G, std::uint32_t p);

/// Requires the heart to be absolutely simple already. Propagates TooLarge.
std::optional<SimplicityVerdict> central_simple_by_index(const PermGroup* G, const std::optional<GroupTag>& tag,
                                                         std::uint32_t p, std::uint64_t N);

SimplicityVerdict very_simple_alt(std::uint32_t n, std::uint32_t p);

enum class EmbeddingTarget { PSL2, PGL2, PSL3 };
std::string to_string(EmbeddingTarget t);
BigInt target_order(EmbeddingTarget t, std::uint64_t p);
/// True iff order_G divides the order of the target group over F_p.
bool embedding_obstruction(const BigInt& order_G, EmbeddingTarget target, std::uint64_t p);

/// The heart simplicity verdict for G (may be null for table-only tags).
SimplicityVerdict decide_heart_simplicity(const PermGroup* G, const std::optional<GroupTag>& tag, std::uint32_t p,
                                          std::uint64_t seed = 0);

/// Direct computation: MeatAxe, commutant, then the index criterion.
SimplicityVerdict compute_heart_simplicity(const PermGroup& G, const std::optional<GroupTag>& tag, std::uint32_t p,
                                           std::uint64_t seed = 0);

}  // namespace heartproof
