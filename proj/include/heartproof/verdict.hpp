#pragma once

/**
 * @file verdict.hpp
 * @brief Theorem dispatcher: evaluates each route's hypotheses for a
 * scenario and emits an evidence-carrying certificate.
 *
 * Routes are tried in a fixed order, family routes first. The first route
 * whose hypotheses all pass wins. Otherwise the certificate is Inconclusive
 * and reports the most specific applicable route up to its first failure.
 */

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "heartproof/bigint.hpp"
#include "heartproof/families.hpp"
#include "heartproof/galois_probe.hpp"
#include "heartproof/perm_group.hpp"

namespace heartproof {

enum class GroupSource { Tag, ConcreteGroup, PolynomialEvidence };

struct Scenario {
  std::uint32_t n = 0;
  std::uint32_t p = 0;
  std::uint32_t r = 1;
  GroupSource source = GroupSource::Tag;
  /// Family tag (Custom for concrete groups without one).
  GroupTag tag;
  /// Generators for ConcreteGroup scenarios.
  std::shared_ptr<const PermGroup> group;
  std::optional<GaloisEvidence> evidence;
  bool zeta_q_in_K = false;
  std::uint64_t seed = 0;
  /// Display name of the group (tag name or file label).
  std::string group_label;

  std::uint64_t q() const { return ipow(p, r); }
};

/// Throws InvalidScenario when n < 5, p is not an odd prime, r = 0, the
/// standing hypothesis fails, or the group degree differs from n.
void validate(const Scenario& s);

enum class CheckKind { Arithmetic, Computed, Table, Assumed };
std::string to_string(CheckKind k);
CheckKind check_kind_from_string(const std::string& s);

struct HypothesisCheck {
  std::string anchor;
  CheckKind kind = CheckKind::Arithmetic;
  bool pass = false;
  std::string detail;
};

enum class ConclusionKind { RingEqualsZZetaP, AlgebraEqualsProductCyclotomic, Inconclusive };
std::string to_string(ConclusionKind k);
ConclusionKind conclusion_kind_from_string(const std::string& s);

struct EndoConclusion {
  ConclusionKind kind = ConclusionKind::Inconclusive;
  /// "Z[ζ_p]" for the ring conclusion.
  std::string ring;
  /// Q(ζ_{p^i}) for 1 <= i <= r.
  std::vector<std::string> fields;
  std::optional<BigInt> dimension;
};

struct Certificate {
  std::string theorem;
  std::uint32_t n = 0, p = 0, r = 1;
  std::string group;
  std::vector<HypothesisCheck> checks;
  std::vector<std::string> notes;
  EndoConclusion conclusion;

  bool all_checks_pass() const;
  /// Index of the first failed check, if any.
  std::optional<std::size_t> first_failure() const;
};

Certificate dispatch(const Scenario& s);

/// Hypothesis checklist of the generic central-simplicity route.
std::vector<HypothesisCheck> check_generic_route(const Scenario& s, const PermGroup& H);

/// Stable text report.
std::string explain(const Certificate& c);

}  // namespace heartproof
