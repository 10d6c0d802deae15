#include <doctest.h>

#include <random>

#include "heartproof/error.hpp"
#include "heartproof/ext_field.hpp"
#include "heartproof/gf.hpp"

using namespace heartproof;
using namespace heartproof::gf;

namespace {

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Matrix random_matrix(const PrimeField& F, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(F, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Elem>(rng() % F.p());
  return m;
}

// Leibniz expansion, usable for n <= 5.
Elem leibniz_det(const Matrix& m) {
  const auto& F = m.field();
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Elem total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Elem term = 1;
    for (std::size_t i = 0; i < n; ++i) term = F.mul(term, m(i, perm[i]));
    total = inversions % 2 ? F.sub(total, term) : F.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_SUITE("gf-core") {
  TEST_CASE("primality agrees with trial division") {
    for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime(n) == trial_division_prime(n));
    CHECK(is_prime(2147483647ULL));
    CHECK_FALSE(is_prime(2147483647ULL * 3));
  }

  TEST_CASE("field inverses match exhaustive search") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 101u}) {
      PrimeField F(p);
      for (Elem a = 1; a < p; ++a) {
        Elem brute = 0;
        for (Elem b = 1; b < p; ++b)
          if (a * b % p == 1) brute = b;
        CHECK(F.inv(a) == brute);
      }
      CHECK_THROWS_AS(F.inv(0), Error);
    }
  }

  TEST_CASE("field constructor rejects composites and 2") {
    CHECK_THROWS_AS(PrimeField(9), Error);
    CHECK_THROWS_AS(PrimeField(2), Error);
  }

  TEST_CASE("square roots are the smaller representative") {
    for (std::uint64_t p : {3ULL, 5ULL, 13ULL, 17ULL, 97ULL, 1000003ULL}) {
      for (std::uint64_t a = 0; a < std::min<std::uint64_t>(p, 200); ++a) {
        auto r = sqrt_mod_p(a, p);
        bool residue = a == 0 || powmod(a, (p - 1) / 2, p) == 1;
        CHECK(r.has_value() == residue);
        if (r) {
          CHECK(mulmod(*r, *r, p) == a);
          CHECK(*r <= p - *r);
        }
      }
    }
  }

  TEST_CASE("determinant agrees with the Leibniz formula") {
    std::mt19937_64 rng(7);
    PrimeField F(11);
    for (int t = 0; t < 50; ++t) {
      const std::size_t n = 1 + rng() % 5;
      auto m = random_matrix(F, n, n, rng);
      CHECK(determinant(m) == leibniz_det(m));
      CHECK((rank(m) == n) == (leibniz_det(m) != 0));
    }
  }

  TEST_CASE("rank plus nullity equals column count") {
    std::mt19937_64 rng(11);
    PrimeField F(5);
    for (int t = 0; t < 40; ++t) {
      const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
      auto a = random_matrix(F, r, 2, rng) * random_matrix(F, 2, c, rng);
      auto ker = kernel_basis(a);
      CHECK(rank(a) + ker.size() == c);
      CHECK(rank(a) <= 2);
      for (const auto& v : ker) {
        auto img = a.apply(v);
        CHECK(std::all_of(img.begin(), img.end(), [](Elem e) { return e == 0; }));
      }
    }
  }

  TEST_CASE("inverse and solve") {
    std::mt19937_64 rng(3);
    PrimeField F(13);
    for (int t = 0; t < 30; ++t) {
      auto m = random_matrix(F, 4, 4, rng);
      auto inv = inverse(m);
      CHECK(inv.has_value() == (determinant(m) != 0));
      if (inv) {
        CHECK((m * *inv).is_identity());
        Vec b{1, 2, 3, 4};
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        CHECK(m.apply(*x) == b);
      }
    }
    Matrix singular = Matrix::from_rows(F, {{1, 2}, {2, 4}});
    CHECK_FALSE(solve(singular, Vec{1, 0}).has_value());
  }

  TEST_CASE("kronecker product is multiplicative") {
    std::mt19937_64 rng(5);
    PrimeField F(7);
    auto a = random_matrix(F, 2, 2, rng), b = random_matrix(F, 3, 3, rng);
    auto c = random_matrix(F, 2, 2, rng), d = random_matrix(F, 3, 3, rng);
    CHECK(kronecker(a, b) * kronecker(c, d) == kronecker(a * c, b * d));
    CHECK(kronecker(a, b).trace() == F.mul(a.trace(), b.trace()));
  }

  TEST_CASE("matrix power matches repeated products") {
    std::mt19937_64 rng(9);
    PrimeField F(3);
    auto a = random_matrix(F, 3, 3, rng);
    Matrix acc = Matrix::identity(F, 3);
    for (std::uint64_t e = 0; e < 12; ++e) {
      CHECK(power(a, e) == acc);
      acc = acc * a;
    }
  }

  TEST_CASE("subspace basis membership") {
    PrimeField F(7);
    SubspaceBasis S(F, 3);
    CHECK(S.insert({1, 2, 3}));
    CHECK_FALSE(S.insert({2, 4, 6}));
    CHECK(S.insert({0, 1, 1}));
    CHECK(S.contains({1, 3, 4}));
    CHECK_FALSE(S.contains({0, 0, 1}));
    CHECK(S.dimension() == 2);
  }

  TEST_CASE("extension field multiplicative group is cyclic") {
    for (auto [ell, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {2, 4}, {3, 2}, {5, 2}, {7, 1}}) {
      ExtField E(ell, r);
      const std::uint32_t q = E.order();
      const std::uint32_t g = E.primitive_element();
      std::vector<bool> seen(q, false);
      std::uint32_t x = 1;
      for (std::uint32_t k = 0; k + 1 < q; ++k) {
        CHECK_FALSE(seen[x]);
        seen[x] = true;
        x = E.mul(x, g);
      }
      CHECK(x == 1);
      for (std::uint32_t a = 1; a < q; ++a) CHECK(E.mul(a, E.inv(a)) == 1);
      for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b) {
          CHECK(E.add(a, E.neg(a)) == 0);
          CHECK(E.mul(a, E.add(b, 1)) == E.add(E.mul(a, b), a));
        }
    }
  }
}
