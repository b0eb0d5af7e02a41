#include "doctest.h"
#include "levi_slope/parabolic.hpp"

using namespace levi_slope;

namespace {
Parabolic nodes(std::vector<std::size_t> one_based) { return Parabolic::from_one_based(one_based); }
}  // namespace

TEST_CASE("GL_6 minimal parabolics") {
  const RootDatum g = build_gl(6);
  const std::vector<std::vector<std::size_t>> want = {
      {}, {1, 2, 3, 4, 5}, {1, 2, 4, 5}, {1, 3, 5}, {1, 2, 4, 5}, {1, 2, 3, 4, 5}};
  for (long d = 0; d < 6; ++d) {
    IntVector lift(6, 0);
    lift[5] = d;
    const auto mr = minimal_admissible(g, lift);
    CHECK(mr.parabolic == nodes(want[d]));
    CHECK(mr.g_slope == RatVector(6, Rat(d) / 6));
  }
  const auto two = minimal_admissible(g, IntVector{0, 0, 0, 0, 0, 2});
  CHECK(levi_quotient(g, two.parabolic).equivalent(two.degree.lift, IntVector{0, 0, 1, 0, 0, 1}));
  const auto three = minimal_admissible(g, IntVector{0, 0, 0, 0, 0, 3});
  CHECK(levi_quotient(g, three.parabolic).equivalent(three.degree.lift, IntVector{0, 1, 0, 1, 0, 1}));
}

TEST_CASE("slope coefficients") {
  const RootDatum a2 = build_simple('A', 2, Isogeny::adjoint);
  CHECK(slope_coefficients(a2, IntVector{1, 0}) == RatVector{Rat(2, 3), Rat(1, 3)});
  const RootDatum e7 = build_simple('E', 7, Isogeny::adjoint);
  const IntVector lift{0, 0, 0, 0, 0, 0, 1};
  CHECK(slope_coefficients_via_weights(e7, lift, fundamental_weights(e7)) == slope_coefficients(e7, lift));
}

TEST_CASE("exceptional and classical minimal parabolics") {
  const RootDatum e7 = build_simple('E', 7, Isogeny::adjoint);
  CHECK(minimal_admissible(e7, IntVector{0, 0, 0, 0, 0, 0, 1}).parabolic == nodes({2, 5, 7}));
  const RootDatum e6 = build_simple('E', 6, Isogeny::adjoint);
  CHECK(minimal_admissible(e6, IntVector{1, 0, 0, 0, 0, 0}).parabolic == nodes({1, 3, 5, 6}));
  const RootDatum b5 = build_simple('B', 5, Isogeny::adjoint);
  CHECK(minimal_admissible(b5, IntVector{1, 0, 0, 0, 0}).parabolic == nodes({5}));
  const RootDatum c6 = build_simple('C', 6, Isogeny::adjoint);
  CHECK(minimal_admissible(c6, IntVector{0, 0, 0, 0, 0, 1}).parabolic == nodes({1, 3, 5}));
  const RootDatum d5 = build_simple('D', 5, Isogeny::adjoint);
  CHECK(minimal_admissible(d5, IntVector{0, 0, 0, 0, 1}).parabolic == nodes({1, 3, 4, 5}));
  CHECK(minimal_admissible(d5, IntVector{0, 0, 0, 0, 2}).parabolic == nodes({4, 5}));
}

TEST_CASE("trivial classes give the Borel, simply connected data always do") {
  const RootDatum e8 = build_simple('E', 8, Isogeny::adjoint);
  CHECK(minimal_admissible(e8, IntVector(8, 0)).parabolic == Parabolic::borel());
  const RootDatum sc = build_simple('B', 4, Isogeny::simply_connected);
  CHECK(minimal_admissible(sc, IntVector{3, -1, 4, 1}).parabolic == Parabolic::borel());
}

TEST_CASE("brute-force oracle agrees and its family is a filter") {
  const RootDatum d = build_simple('D', 5, Isogeny::adjoint);
  for (long k = 0; k < 4; ++k) {
    const IntVector lift{0, 0, 0, 0, k};
    const auto fast = minimal_admissible(d, lift);
    const auto slow = brute_force_minimal(d, lift);
    CHECK(fast.parabolic == slow.parabolic);
    CHECK(levi_quotient(d, fast.parabolic).equivalent(fast.degree.lift, slow.degree.lift));
    for (const auto& p : admissible_family(d, lift)) CHECK(fast.parabolic.subset_of(p));
  }
  const RootDatum big = build_simple('A', 10, Isogeny::adjoint);
  CHECK_THROWS_AS(brute_force_minimal(big, IntVector(10, 0)), CapExceeded);
}

TEST_CASE("uniqueness certificate and type A Levis") {
  const RootDatum d = build_simple('D', 4, Isogeny::adjoint);
  CHECK(uniqueness_certificate(d, nodes({1, 3})));
  CHECK(uniqueness_certificate(d, Parabolic::borel()));
  CHECK(levi_is_type_a(d, nodes({1, 3})));
  CHECK_FALSE(levi_is_type_a(d, nodes({1, 2, 3, 4})));
  CHECK_FALSE(levi_is_type_a(build_simple('B', 3, Isogeny::adjoint), nodes({2, 3})));
}
