#include <numeric>

#include "doctest.h"
#include "levi_slope/stability.hpp"

using namespace levi_slope;

TEST_CASE("GL_n stability follows gcd(n, d)") {
  for (int n = 1; n <= 6; ++n)
    for (long d = 0; d < n; ++d) {
      IntVector lift(static_cast<std::size_t>(n), 0);
      lift.back() = d;
      const auto v = stable_exists_typeA(build_gl(n), lift);
      CHECK(v.exists_stable == (std::gcd(static_cast<long>(n), d) == 1));
      CHECK(v.route_minimal == v.route_typeA);
    }
  CHECK(stable_exists_minimal(build_gl(1), IntVector{7}));
}

TEST_CASE("adjoint factors") {
  const auto v = stable_exists_typeA(build_simple('A', 3, Isogeny::adjoint), IntVector{1, 0, 0});
  REQUIRE(v.all_type_a);
  REQUIRE(v.adjoint_factors.size() == 1);
  CHECK(v.adjoint_factors[0].n == 4);
  CHECK(v.exists_stable);
  // w1 + w3 is the trivial class of PGL_4.
  CHECK_FALSE(stable_exists_typeA(build_simple('A', 3, Isogeny::adjoint), IntVector{1, 0, 1}).exists_stable);
}

TEST_CASE("non type A groups have no stable bundles") {
  CHECK_FALSE(stable_exists_typeA(build_simple('B', 3, Isogeny::adjoint), IntVector{1, 0, 0}).exists_stable);
  CHECK_FALSE(stable_exists_minimal(build_simple('E', 7, Isogeny::adjoint), IntVector{0, 0, 0, 0, 0, 0, 1}));
  CHECK_FALSE(stable_exists_typeA(build_simple('G', 2, Isogeny::adjoint), IntVector{0, 0}).all_type_a);
}

TEST_CASE("products need coprime classes on every factor") {
  const RootDatum p = product(build_gl(2), build_gl(3));
  CHECK(stable_exists_typeA(p, IntVector{0, 1, 0, 0, 1}).exists_stable);
  CHECK_FALSE(stable_exists_typeA(p, IntVector{0, 2, 0, 0, 1}).exists_stable);
}

TEST_CASE("type A inverse Cartan closed form") {
  for (int k = 2; k <= 12; ++k)
    CHECK(type_a_inverse_closed_form(k) == inverse(to_rational(standard_cartan('A', k - 1))));
  CHECK(type_a_inverse_closed_form(3)(0, 0) == Rat(2, 3));
  CHECK(inverse_cartan(build_simple('A', 2, Isogeny::adjoint)) == type_a_inverse_closed_form(3));
}
