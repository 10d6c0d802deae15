#include <doctest.h>

#include <random>

#include "heartproof/certificate_io.hpp"
#include "heartproof/error.hpp"
#include "heartproof/families.hpp"
#include "heartproof/verdict.hpp"

using namespace heartproof;

namespace {

Scenario tag_scenario(const std::string& tag, std::uint32_t n, std::uint32_t p, std::uint32_t r = 1) {
  Scenario s;
  s.tag = GroupTag::parse(tag, n);
  s.n = n ? n : s.tag.degree();
  s.p = p;
  s.r = r;
  s.group_label = s.tag.name();
  return s;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t c = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++c;
  return c;
}

}  // namespace

TEST_SUITE("verdict") {
  TEST_CASE("scenario validation") {
    CHECK_THROWS_AS(validate(tag_scenario("S", 4, 5)), Error);
    CHECK_THROWS_AS(validate(tag_scenario("S", 6, 3, 2)), Error);
    auto s = tag_scenario("S", 7, 11);
    s.p = 2;
    CHECK_THROWS_AS(validate(s), Error);
    auto m = tag_scenario("M11", 0, 5);
    m.n = 12;
    CHECK_THROWS_AS(validate(m), Error);
    CHECK_NOTHROW(validate(tag_scenario("S", 9, 3, 2)));
  }

  TEST_CASE("symmetric route") {
    auto c = dispatch(tag_scenario("S", 7, 11));
    CHECK(c.theorem == "alternating-or-symmetric");
    CHECK(c.conclusion.kind == ConclusionKind::RingEqualsZZetaP);
    CHECK(c.conclusion.ring == "Z[ζ_11]");
    CHECK(c.conclusion.dimension == std::optional<BigInt>(10));
  }

  TEST_CASE("product conclusion lists every cyclotomic field") {
    auto c = dispatch(tag_scenario("A", 5, 7, 2));
    CHECK(c.conclusion.kind == ConclusionKind::AlgebraEqualsProductCyclotomic);
    CHECK(c.conclusion.fields == std::vector<std::string>{"Q(ζ_7)", "Q(ζ_49)"});
    CHECK(c.conclusion.dimension == std::optional<BigInt>(48));
    auto text = explain(c);
    CHECK(text.find("Q(ζ_7)") != std::string::npos);
    CHECK(text.find("Q(ζ_49)") != std::string::npos);
  }

  TEST_CASE("family route failures") {
    auto l2 = dispatch(tag_scenario("L2(11)", 0, 5));
    CHECK(l2.conclusion.kind == ConclusionKind::Inconclusive);
    REQUIRE(l2.first_failure().has_value());
    CHECK(l2.checks[*l2.first_failure()].anchor == "q > 11");
    auto u3 = dispatch(tag_scenario("U3(5)", 0, 11));
    CHECK(u3.conclusion.kind == ConclusionKind::Inconclusive);
    CHECK(u3.theorem == "psu3-borel");
  }

  TEST_CASE("M11 at p = 3 fails the Mathieu route") {
    auto c = dispatch(tag_scenario("M11", 0, 3));
    CHECK(c.theorem != "mathieu");
    bool noted = false;
    for (const auto& n : c.notes) noted |= n.find("p > 3 when n = 11") != std::string::npos;
    CHECK(noted);
    CHECK(c.all_checks_pass() == (c.conclusion.kind != ConclusionKind::Inconclusive));
  }

  TEST_CASE("generic route on a concrete group") {
    Scenario s;
    s.n = 14;
    s.p = 7;
    s.source = GroupSource::ConcreteGroup;
    s.group = std::make_shared<const PermGroup>(psl2_group(13, 1));
    s.zeta_q_in_K = true;
    auto checks = check_generic_route(s, *s.group);
    for (const auto& h : checks) CHECK_MESSAGE(h.pass, h.anchor);
    auto c = dispatch(s);
    CHECK(c.theorem == "central-simple-heart");
    s.zeta_q_in_K = false;
    auto without = dispatch(s);
    CHECK(without.conclusion.kind == ConclusionKind::Inconclusive);
  }

  TEST_CASE("mixed moduli are flagged") {
    // n = 11, q = 25: 5 divides n - 1 but 25 does not, so only the q form holds.
    auto c = dispatch(tag_scenario("M11", 0, 5, 2));
    CHECK(c.theorem == "central-simple-heart-algebra");
    CHECK(c.conclusion.kind == ConclusionKind::AlgebraEqualsProductCyclotomic);
    bool flagged = false;
    for (const auto& n : c.notes) flagged |= n.find("side condition") != std::string::npos;
    CHECK(flagged);
    auto plain = dispatch(tag_scenario("M12", 0, 7, 2));
    for (const auto& n : plain.notes) CHECK(n.find("side condition") == std::string::npos);
  }

  TEST_CASE("report names anchors once and the first failure only") {
    auto c = dispatch(tag_scenario("L2(11)", 0, 5));
    auto text = explain(c);
    for (const auto& h : c.checks) CHECK(count(text, h.anchor) >= 1);
    CHECK(text.find("first failed hypothesis: q > 11") != std::string::npos);
    CHECK(count(text, "first failed hypothesis") == 1);
  }

  TEST_CASE("certificates round-trip through JSON") {
    for (auto s : {tag_scenario("S", 7, 11), tag_scenario("A", 5, 7, 2), tag_scenario("L2(11)", 0, 5),
                   tag_scenario("U3(3)", 0, 5)}) {
      auto c = dispatch(s);
      auto json = certificate_to_json(c);
      auto back = certificate_from_json(json);
      CHECK(explain(back) == explain(c));
      CHECK(certificate_to_json(back) == json);
    }
    CHECK_THROWS_AS(certificate_from_json("{\"schema\": \"other\"}"), Error);
    CHECK_THROWS_AS(certificate_from_json("not json"), Error);
  }

  TEST_CASE("dispatch is deterministic") {
    auto s = tag_scenario("M11", 0, 3);
    CHECK(certificate_to_json(dispatch(s)) == certificate_to_json(dispatch(s)));
  }

  TEST_CASE("soundness and monotonicity over random scenarios") {
    std::mt19937_64 rng(2024);
    const std::vector<std::string> tags{"S", "A", "M11", "M12", "M22", "M23", "M24", "L2(13)", "L2(16)",
                                        "L2(11)", "L2(17)", "U3(3)", "U3(4)", "U3(5)"};
    const std::vector<std::uint32_t> primes{3, 5, 7, 11, 13, 17, 19, 23};
    int checked = 0;
    for (int t = 0; t < 200; ++t) {
      const auto& tag = tags[rng() % tags.size()];
      const std::uint32_t n = (tag == "S" || tag == "A") ? 5 + rng() % 20 : 0;
      Scenario s;
      try {
        s = tag_scenario(tag, n, primes[rng() % primes.size()], 1 + rng() % 2);
        validate(s);
      } catch (const Error&) {
        continue;
      }
      auto c = dispatch(s);
      if (c.conclusion.kind != ConclusionKind::Inconclusive) CHECK(c.all_checks_pass());
      s.zeta_q_in_K = true;
      auto z = dispatch(s);
      if (c.conclusion.kind != ConclusionKind::Inconclusive) CHECK(z.conclusion.kind != ConclusionKind::Inconclusive);
      ++checked;
    }
    CHECK(checked > 50);
  }

  TEST_CASE("kind names") {
    for (auto k : {CheckKind::Arithmetic, CheckKind::Computed, CheckKind::Table, CheckKind::Assumed})
      CHECK(check_kind_from_string(to_string(k)) == k);
    for (auto k : {ConclusionKind::RingEqualsZZetaP, ConclusionKind::AlgebraEqualsProductCyclotomic,
                   ConclusionKind::Inconclusive})
      CHECK(conclusion_kind_from_string(to_string(k)) == k);
  }
}
