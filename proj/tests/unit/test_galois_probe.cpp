#include <doctest.h>

#include "heartproof/error.hpp"
#include "heartproof/galois_probe.hpp"
#include "heartproof/polyz.hpp"

using namespace heartproof;

TEST_SUITE("galois-probe") {
  TEST_CASE("polynomial parsing") {
    auto f = PolyZ::parse("x^5 - x - 1");
    CHECK(f == PolyZ({-1, -1, 0, 0, 0, 1}));
    CHECK(PolyZ::parse("[-1, -1, 0, 0, 0, 1]") == f);
    CHECK(PolyZ::parse("2*x^2+3x") == PolyZ({0, 3, 2}));
    CHECK(PolyZ::parse("x^5 \xe2\x88\x92 x \xe2\x88\x92 1") == f);
    CHECK(f.to_string() == "x^5 - x - 1");
    CHECK_THROWS_AS(PolyZ::parse("x^^2"), Error);
  }

  TEST_CASE("discriminants of trinomials") {
    // disc(x^5 + a x + b) = 5^5 b^4 + 4^4 a^5.
    for (int a = -6; a <= 6; ++a)
      for (int b = -6; b <= 6; ++b) {
        PolyZ f({b, a, 0, 0, 0, 1});
        BigInt expect = BigInt(3125) * b * b * b * b + BigInt(256) * a * a * a * a * a;
        CHECK(discriminant(f) == expect);
        if (expect != 0) CHECK(discriminant_crt(f) == expect);
      }
    // disc(a x^2 + b x + c) = b^2 - 4ac.
    CHECK(discriminant(PolyZ({3, 5, 7})) == 25 - 84);
    // disc(x^3 + p x + q) = -4 p^3 - 27 q^2.
    CHECK(discriminant(PolyZ({2, -3, 0, 1})) == 108 - 108);
    CHECK(discriminant(PolyZ({1, 1, 0, 1})) == -4 - 27);
  }

  TEST_CASE("resultant vanishes on a common root") {
    PolyZ a = PolyZ({-2, 1}) * PolyZ({1, 0, 1});
    PolyZ b = PolyZ({-2, 1}) * PolyZ({5, 1});
    CHECK(resultant(a, b) == 0);
    // res(x - u, x - v) = u - v up to sign convention res(f, g) = prod g(roots of f).
    CHECK(resultant(PolyZ({-3, 1}), PolyZ({-7, 1})) == -4);
  }

  TEST_CASE("squarefreeness and squares") {
    CHECK(is_squarefree(PolyZ::parse("x^5 - x - 1")));
    CHECK_FALSE(is_squarefree(PolyZ({1, 2, 1})));
    CHECK(is_perfect_square(BigInt(1024000000)));
    CHECK_FALSE(is_perfect_square(BigInt(2869)));
    CHECK_FALSE(is_perfect_square(BigInt(-4)));
    CHECK(is_perfect_square(BigInt(0)));
  }

  TEST_CASE("factor degrees mod p count the roots") {
    auto f = PolyZ::parse("x^5 - x - 1");
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL}) {
      auto deg = factor_degrees_mod_p(f, p);
      std::uint32_t sum = 0, linear = 0;
      for (auto d : deg) {
        sum += d;
        linear += d == 1;
      }
      CHECK(sum == 5);
      std::uint32_t roots = 0;
      for (std::uint64_t x = 0; x < p; ++x)
        if (f.mod(p).eval(x) == 0) ++roots;
      CHECK(linear == roots);
    }
    CHECK_THROWS_AS(factor_degrees_mod_p(PolyZ({0, 0, 1, 1, 0, 1}), 2), Error);
  }

  TEST_CASE("symmetric quintic") {
    auto e = classify_galois(PolyZ::parse("x^5 - x - 1"), 40, 0);
    CHECK(e.conclusion == GaloisConclusion::ProvenSn);
    CHECK(e.disc == 2869);
    CHECK(e.disc_is_square == std::optional<bool>(false));
    CHECK(verify_evidence(e).empty());
  }

  TEST_CASE("alternating quintic") {
    auto e = classify_galois(PolyZ::parse("x^5 + 20x + 16"), 40, 0);
    CHECK(e.conclusion == GaloisConclusion::ProvenAnOrSn);
    CHECK(e.tag == "A_n");
    CHECK(e.disc_is_square == std::optional<bool>(true));
    CHECK(verify_evidence(e).empty());
    for (const auto& p : e.patterns) {
      // Even permutations only: the number of even-length cycles is even.
      int even = 0;
      for (auto d : p.degrees) even += d % 2 == 0;
      CHECK(even % 2 == 0);
    }
  }

  TEST_CASE("reducible and small groups are not certified") {
    CHECK_THROWS_AS(classify_galois(PolyZ({-1, 0, 0, 0, 1}) * PolyZ({1, 1}), 40, 0), Error);
    auto red = classify_galois(PolyZ({-2, 0, 0, 0, 1}) * PolyZ({-3, 1}), 40, 0);
    CHECK(red.conclusion != GaloisConclusion::ProvenSn);
    CHECK(red.conclusion != GaloisConclusion::ProvenAnOrSn);
    // x^5 - 2 has a Frobenius group of order 20.
    auto fr = classify_galois(PolyZ({-2, 0, 0, 0, 0, 1}), 40, 0);
    CHECK(fr.conclusion != GaloisConclusion::ProvenSn);
    CHECK(fr.conclusion != GaloisConclusion::ProvenAnOrSn);
  }

  TEST_CASE("tampered evidence is rejected") {
    auto e = classify_galois(PolyZ::parse("x^5 - x - 1"), 40, 0);
    auto bad = e;
    bad.disc = 2870;
    CHECK_FALSE(verify_evidence(bad).empty());
    bad = e;
    bad.patterns.front().degrees = {5};
    bad.irreducible_witness = bad.patterns.front().prime;
    bad.transposition_witness = bad.patterns.front().prime;
    CHECK_FALSE(verify_evidence(bad).empty());
  }

  TEST_CASE("determinism") {
    auto a = classify_galois(PolyZ::parse("x^6 + x + 3"), 40, 7);
    auto b = classify_galois(PolyZ::parse("x^6 + x + 3"), 40, 7);
    CHECK(a.conclusion == b.conclusion);
    REQUIRE(a.patterns.size() == b.patterns.size());
    for (std::size_t i = 0; i < a.patterns.size(); ++i) CHECK(a.patterns[i].degrees == b.patterns[i].degrees);
  }
}
