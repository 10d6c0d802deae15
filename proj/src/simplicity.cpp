#include "heartproof/simplicity.hpp"

#include "heartproof/error.hpp"
#include "heartproof/meataxe.hpp"
#include "heartproof/modrep.hpp"
#include "heartproof/subgroups.hpp"

namespace heartproof {

std::string to_string(SimplicityLevel level) {
  switch (level) {
    case SimplicityLevel::Unknown: return "Unknown";
    case SimplicityLevel::NotSimple: return "NotSimple";
    case SimplicityLevel::Simple: return "Simple";
    case SimplicityLevel::AbsolutelySimple: return "AbsolutelySimple";
    case SimplicityLevel::CentralSimple: return "CentralSimple";
    case SimplicityLevel::VerySimple: return "VerySimple";
  }
  return "Unknown";
}

std::string to_string(EvidenceKind kind) {
  switch (kind) {
    case EvidenceKind::Computation: return "computation";
    case EvidenceKind::TableFact: return "table-fact";
    case EvidenceKind::Obstruction: return "obstruction";
  }
  return "computation";
}

std::string to_string(EmbeddingTarget t) {
  switch (t) {
    case EmbeddingTarget::PSL2: return "PSL2";
    case EmbeddingTarget::PGL2: return "PGL2";
    case EmbeddingTarget::PSL3: return "PSL3";
  }
  return "PSL2";
}

bool SimplicityVerdict::at_least(SimplicityLevel l) const {
  if (level == SimplicityLevel::Unknown || l == SimplicityLevel::Unknown) return false;
  if (l == SimplicityLevel::NotSimple) return true;
  return static_cast<int>(level) >= static_cast<int>(l);
}

std::optional<SimplicityVerdict> abs_irred_shortcut(const PermGroup& G, std::uint32_t p) {
  if (G.order() % p == 0 || !G.is_doubly_transitive()) return std::nullopt;
  SimplicityVerdict v;
  v.level = SimplicityLevel::AbsolutelySimple;
  v.evidence.push_back({EvidenceKind::Computation, "doubly transitive group of order prime to p",
                        "|G| = " + G.order().str() + " is prime to p = " + std::to_string(p) +
                            " and G is doubly transitive, so the heart is absolutely simple"});
  return v;
}

std::optional<SimplicityVerdict> central_simple_by_index(const PermGroup* G, const std::optional<GroupTag>& tag,
                                                         std::uint32_t p, std::uint64_t N) {
  auto res = exists_subgroup_of_index_dividing(G, tag, N);
  if (res.exists) return std::nullopt;
  SimplicityVerdict v;
  v.level = SimplicityLevel::CentralSimple;
  v.evidence.push_back({res.method == IndexMethod::Enumeration ? EvidenceKind::Computation : EvidenceKind::TableFact,
                        "no subgroup index divides the heart dimension",
                        "N = " + std::to_string(N) + " at p = " + std::to_string(p) + ": " + res.witness});
  return v;
}

SimplicityVerdict very_simple_alt(std::uint32_t n, std::uint32_t p) {
  SimplicityVerdict v;
  const bool very = n > 5 || p <= 5 || (p % 5 != 1 && p % 5 != 4);
  if (very) {
    v.level = SimplicityLevel::VerySimple;
    v.evidence.push_back({EvidenceKind::TableFact, "alternating heart very simple when n > 5 or p != +-1 mod 5",
                          "n = " + std::to_string(n) + ", p = " + std::to_string(p)});
  } else {
    v.level = SimplicityLevel::CentralSimple;
    v.mat2_flag = true;
    v.evidence.push_back({EvidenceKind::TableFact, "A5 heart central simple, exotic normal subalgebras are Mat_2",
                          "n = 5, p = " + std::to_string(p) + " = +-1 mod 5: the heart splits as a tensor product of two 2-dimensional SL(2,5)-modules"});
  }
  return v;
}

BigInt target_order(EmbeddingTarget t, std::uint64_t p) {
  switch (t) {
    case EmbeddingTarget::PSL2: return psl2_order(p);
    case EmbeddingTarget::PGL2: return pgl2_order(p);
    case EmbeddingTarget::PSL3: return psl3_order(p);
  }
  return 0;
}

bool embedding_obstruction(const BigInt& order_G, EmbeddingTarget target, std::uint64_t p) {
  return target_order(target, p) % order_G == 0;
}

SimplicityVerdict compute_heart_simplicity(const PermGroup& G, const std::optional<GroupTag>& tag, std::uint32_t p,
                                           std::uint64_t seed) {
  SimplicityVerdict v;
  const std::size_t n = G.degree();
  const std::size_t N = heart_dimension(n, p);
  if (auto s = abs_irred_shortcut(G, p)) {
    v = *s;
  } else {
    auto h = heart(G, p);
    auto irr = is_irreducible(h.module, seed);
    if (!irr.irreducible) {
      v.level = SimplicityLevel::NotSimple;
      v.witness_subspace = irr.invariant_subspace;
      v.evidence.push_back({EvidenceKind::Computation, "invariant subspace found",
                            "MeatAxe found an invariant subspace of dimension " + std::to_string(irr.invariant_subspace.size()) +
                                " in the " + std::to_string(N) + "-dimensional heart"});
      return v;
    }
    const auto cd = commutant_dim(h.module);
    v.evidence.push_back({EvidenceKind::Computation, "heart irreducible", "MeatAxe: " + irr.certificate});
    v.evidence.push_back({EvidenceKind::Computation, "commutant dimension", "dim End_G(V) = " + std::to_string(cd)});
    if (cd != 1) {
      v.level = SimplicityLevel::Simple;
      return v;
    }
    v.level = SimplicityLevel::AbsolutelySimple;
  }
  try {
    if (auto cs = central_simple_by_index(&G, tag, p, N)) {
      v.level = SimplicityLevel::CentralSimple;
      v.evidence.insert(v.evidence.end(), cs->evidence.begin(), cs->evidence.end());
    } else {
      v.evidence.push_back({EvidenceKind::Computation, "no subgroup index divides the heart dimension",
                            "a proper subgroup has index dividing N = " + std::to_string(N) + "; criterion does not apply"});
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLarge) throw;
    v.evidence.push_back({EvidenceKind::Computation, "no subgroup index divides the heart dimension", e.what()});
  }
  return v;
}

namespace {

struct MathieuException {
  std::uint32_t n, p;
  EmbeddingTarget target;
};

constexpr MathieuException kMathieuExceptions[] = {
    {11, 5, EmbeddingTarget::PSL2},
    {22, 3, EmbeddingTarget::PSL3},
    {22, 7, EmbeddingTarget::PSL3},
    {23, 11, EmbeddingTarget::PSL2},
};

}  // namespace

SimplicityVerdict decide_heart_simplicity(const PermGroup* G, const std::optional<GroupTag>& tag, std::uint32_t p,
                                          std::uint64_t seed) {
  if (G && !G->is_doubly_transitive()) {
    if (tag && tag->family != Family::Custom)
      throw Error(ErrorCode::HypothesisViolated, "group is not doubly transitive");
    return compute_heart_simplicity(*G, tag, p, seed);
  }
  const Family fam = tag ? tag->family : Family::Custom;
  SimplicityVerdict v;
  switch (fam) {
    case Family::Symmetric:
      if (tag->n < 5) break;
      v.level = SimplicityLevel::VerySimple;
      v.evidence.push_back({EvidenceKind::TableFact, "symmetric heart very simple",
                            "the heart of S" + std::to_string(tag->n) + " over F_" + std::to_string(p) + " is very simple"});
      return v;
    case Family::Alternating:
      if (tag->n < 5) break;
      return very_simple_alt(tag->n, p);
    case Family::Mathieu: {
      const std::uint32_t n = tag->n;
      if (n == 11 && p == 3) {
        if (!G) break;
        return compute_heart_simplicity(*G, tag, p, seed);
      }
      v.level = SimplicityLevel::CentralSimple;
      v.evidence.push_back({EvidenceKind::TableFact, "Mathieu heart absolutely simple",
                            "the heart of M" + std::to_string(n) + " over F_" + std::to_string(p) + " is absolutely simple"});
      v.evidence.push_back({EvidenceKind::TableFact, "no subgroup index divides the heart dimension",
                            "the minimal index of a proper subgroup of M" + std::to_string(n) + " is " + std::to_string(n) +
                                ", larger than the heart dimension"});
      if (n != p + 1 && (n - 1) % p == 0) {
        for (const auto& ex : kMathieuExceptions) {
          if (ex.n != n || ex.p != p) continue;
          const BigInt order = tag->order();
          const bool divides = embedding_obstruction(order, ex.target, p);
          v.evidence.push_back({EvidenceKind::Obstruction, "no embedding into a small linear group",
                                "|M" + std::to_string(n) + "| = " + order.str() + (divides ? " divides " : " does not divide ") +
                                    "|" + to_string(ex.target) + "(" + std::to_string(p) + ")| = " + target_order(ex.target, p).str()});
          if (!divides) v.level = SimplicityLevel::VerySimple;
        }
      }
      return v;
    }
    case Family::PSL2:
      if (tag->q > 11) {
        v.level = SimplicityLevel::CentralSimple;
        v.evidence.push_back({EvidenceKind::TableFact, "L2(q) heart central simple for q > 11",
                              "every proper subgroup of L2(" + std::to_string(tag->q) + ") has index at least " +
                                  std::to_string(tag->q + 1) + ", so the heart is central simple"});
        return v;
      }
      if (G) return compute_heart_simplicity(*G, tag, p, seed);
      break;
    case Family::PSU3:
      if (tag->q != 2 && tag->q != 5 && p != tag->ell && (tag->q + 1) % p != 0) {
        v.level = SimplicityLevel::CentralSimple;
        v.evidence.push_back({EvidenceKind::TableFact, "U3(q) heart central simple",
                              "p = " + std::to_string(p) + " differs from the characteristic and does not divide q + 1 = " +
                                  std::to_string(tag->q + 1) + "; every proper subgroup has index at least q^3 + 1"});
        return v;
      }
      break;
    case Family::Custom:
      if (G) return compute_heart_simplicity(*G, tag, p, seed);
      break;
  }
  v.level = SimplicityLevel::Unknown;
  v.evidence.push_back({EvidenceKind::TableFact, "no criterion applies", "no table fact and no concrete group to compute with"});
  return v;
}

}  // namespace heartproof
