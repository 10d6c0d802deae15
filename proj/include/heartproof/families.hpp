#pragma once

/**
 * @file families.hpp
 * @brief Named group families: constructors, order formulas, and the
 * minimal-index facts used when a group is too large to enumerate.
 */

#include <cstdint>
#include <optional>
#include <string>

#include "heartproof/bigint.hpp"
#include "heartproof/perm_group.hpp"

namespace heartproof {

enum class Family { Symmetric, Alternating, Mathieu, PSL2, PSU3, Custom };

struct GroupTag {
  Family family = Family::Custom;
  std::uint32_t n = 0;    // degree for S, A, M
  std::uint32_t ell = 0;  // characteristic for PSL2
  std::uint32_t r = 0;    // extension degree for PSL2
  std::uint32_t q = 0;    // field size for PSL2 and PSU3

  static GroupTag symmetric(std::uint32_t n) { return {Family::Symmetric, n, 0, 0, 0}; }
  static GroupTag alternating(std::uint32_t n) { return {Family::Alternating, n, 0, 0, 0}; }
  /// Throws UnsupportedDegree for degrees other than 11, 12, 22, 23, 24.
  static GroupTag mathieu(std::uint32_t n);
  /// Throws InvalidField if ell is not prime.
  static GroupTag psl2(std::uint32_t ell, std::uint32_t r);
  /// Throws InvalidField if q is not a prime power.
  static GroupTag psu3(std::uint32_t q);
  static GroupTag custom() { return {}; }

  /// Accepts "S", "A" (degree from `n`), "S7", "A5", "M11", "L2(13)",
  /// "U3(3)", "Custom". Throws ParseError otherwise.
  static GroupTag parse(const std::string& text, std::uint32_t n = 0);

  /// Degree of the natural action (q+1 for PSL2, q^3+1 for PSU3).
  std::uint32_t degree() const;
  BigInt order() const;
  std::string name() const;
  /// True for the families that are simple nonabelian at this size.
  bool is_simple_nonabelian() const;

  bool operator==(const GroupTag&) const = default;
};

PermGroup symmetric_group(std::uint32_t n);
PermGroup alternating_group(std::uint32_t n);
PermGroup cyclic_group(std::uint32_t n);
PermGroup mathieu_group(std::uint32_t n);
/// PSL(2,q) acting on the projective line. Points 0..q-1 are field element
/// codes and point q is infinity.
PermGroup psl2_group(std::uint32_t ell, std::uint32_t r);
/// Concrete group for the tag, absent for PSU3 and Custom.
std::optional<PermGroup> concrete_group(const GroupTag& tag);

BigInt psl2_order(std::uint64_t q);
BigInt pgl2_order(std::uint64_t q);
BigInt psl3_order(std::uint64_t q);
BigInt psu3_order(std::uint64_t q);

/// Lower bound on the index of proper subgroups, with the stated exception
/// of a single index-2 subgroup for S_n.
struct MinIndexFact {
  BigInt min_index;
  bool index_two_exists = false;
  std::string statement;
};

/// Absent when no table fact is recorded for this tag.
std::optional<MinIndexFact> min_index_fact(const GroupTag& tag);

/// Returns (ell, r) when q = ell^r with ell prime.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

}  // namespace heartproof
