#include <doctest.h>

#include "heartproof/error.hpp"
#include "heartproof/meataxe.hpp"
#include "heartproof/modrep.hpp"
#include "heartproof/sl2f5.hpp"

using namespace heartproof;

TEST_SUITE("modrep") {
  TEST_CASE("two-dimensional representations of the binary icosahedral group") {
    auto reps = sl2f5_two_dim_reps(11);
    CHECK(reps.gamma->order() == 120);
    CHECK(reps.a5.order() == 60);
    CHECK(reps.a5.degree() == 5);
    CHECK(reps.v1.dim() == 2);
    CHECK(reps.v2.dim() == 2);
    CHECK(reps.pulled_heart.dim() == 4);
    CHECK(is_irreducible(reps.v1, 0).irreducible);
    CHECK(is_irreducible(reps.v2, 0).irreducible);
    CHECK_FALSE(module_iso(reps.v1, reps.v2, 0).has_value());
  }

  TEST_CASE("the center acts as minus one on both factors") {
    auto reps = sl2f5_two_dim_reps(19);
    auto z = reps.gamma->unrank(reps.central_rank);
    CHECK(z.order() == 2);
    for (const auto& g : reps.gamma->generators()) CHECK(g * z == z * g);
  }

  TEST_CASE("the pulled-back heart is the tensor product") {
    for (std::uint32_t p : {11u, 19u}) {
      auto reps = sl2f5_two_dim_reps(p);
      auto t = tensor(reps.v1, reps.v2);
      auto X = module_iso(t, reps.pulled_heart, 0);
      REQUIRE(X.has_value());
      CHECK(is_intertwiner(*X, t, reps.pulled_heart));
      gf::PrimeField F(p);
      CHECK(subalgebra_is_normal(t, tensor_factor_subalgebra(F, 2, 2, true)));
      CHECK(subalgebra_is_normal(t, tensor_factor_subalgebra(F, 2, 2, false)));
    }
  }

  TEST_CASE("a non-normal subalgebra is rejected") {
    auto reps = sl2f5_two_dim_reps(11);
    gf::PrimeField F(11);
    gf::Matrix e00(F, 4, 4);
    e00(0, 0) = 1;
    CHECK_FALSE(subalgebra_is_normal(tensor(reps.v1, reps.v2), {gf::Matrix::identity(F, 4), e00}));
  }

  TEST_CASE("primes not congruent to plus or minus one mod five are rejected") {
    CHECK_THROWS_AS(sl2f5_two_dim_reps(7), Error);
    CHECK_THROWS_AS(sl2f5_two_dim_reps(13), Error);
    CHECK_THROWS_AS(sl2f5_two_dim_reps(5), Error);
  }
}
