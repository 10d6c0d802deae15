#include <doctest.h>

#include <map>
#include <set>

#include "heartproof/error.hpp"
#include "heartproof/families.hpp"
#include "heartproof/subgroups.hpp"

using namespace heartproof;

namespace {

// Every subgroup of A5 and S4 is generated by two elements, so closures of
// all pairs enumerate the full subgroup lattice.
std::map<std::uint64_t, std::size_t> brute_subgroup_counts(const PermGroup& G) {
  auto elems = G.elements();
  std::set<std::set<std::uint64_t>> subgroups;
  for (const auto& a : elems)
    for (const auto& b : elems) {
      PermGroup H(G.degree(), {a, b});
      std::set<std::uint64_t> ranks;
      for (const auto& h : H.elements()) ranks.insert(G.rank(h));
      subgroups.insert(ranks);
    }
  std::map<std::uint64_t, std::size_t> counts;
  for (const auto& s : subgroups) ++counts[s.size()];
  return counts;
}

}  // namespace

TEST_SUITE("perm-groups") {
  TEST_CASE("subgroup classes of A5 and S4 match brute force") {
    for (const auto& G : {alternating_group(5), symmetric_group(4)}) {
      auto brute = brute_subgroup_counts(G);
      std::map<std::uint64_t, std::size_t> counted;
      for (const auto& c : subgroup_classes(G)) counted[c.order] += c.class_size;
      CHECK(counted == brute);
    }
  }

  TEST_CASE("A5 has nine conjugacy classes of subgroups") {
    auto classes = subgroup_classes(alternating_group(5));
    CHECK(classes.size() == 9);
    CHECK(classes.front().order == 1);
    std::set<std::uint64_t> indices;
    for (const auto& c : classes) indices.insert(60 / c.order);
    CHECK(indices == std::set<std::uint64_t>{1, 5, 6, 10, 12, 15, 20, 30, 60});
  }

  TEST_CASE("index search") {
    auto A5 = alternating_group(5);
    CHECK_FALSE(exists_subgroup_of_index_dividing(A5, 4).exists);
    auto r5 = exists_subgroup_of_index_dividing(A5, 5);
    CHECK(r5.exists);
    CHECK(r5.index == std::optional<std::uint64_t>(5));
    CHECK(exists_subgroup_of_index_dividing(symmetric_group(4), 3).exists);
    auto psl = psl2_group(13, 1);
    CHECK_FALSE(exists_subgroup_of_index_dividing(psl, 13).exists);
    CHECK_FALSE(exists_subgroup_of_index_dividing(psl, 12).exists);
    CHECK(exists_subgroup_of_index_dividing(psl, 14).exists);
  }

  TEST_CASE("index search uses tables above the enumeration limit") {
    auto tag = GroupTag::alternating(9);
    auto r = exists_subgroup_of_index_dividing(nullptr, tag, 8);
    CHECK_FALSE(r.exists);
    CHECK(r.method == IndexMethod::Table);
    auto s = exists_subgroup_of_index_dividing(nullptr, GroupTag::symmetric(9), 8);
    CHECK(s.exists);
    CHECK(s.index == std::optional<std::uint64_t>(2));
    auto S8 = symmetric_group(8);
    CHECK_THROWS_AS(exists_subgroup_of_index_dividing(S8, 7), Error);
  }

  TEST_CASE("coset actions") {
    auto A5 = alternating_group(5);
    PermGroup A4(5, A5.stabilizer_generators(4));
    auto act = coset_action(A5, A4);
    CHECK(act.degree() == 5);
    CHECK(act.order() == 60);
    CHECK(act.is_doubly_transitive());
    PermGroup outsider(5, {Permutation::from_cycles(5, "(0 1)")});
    CHECK_THROWS_AS(coset_action(A5, outsider), Error);
  }
}
