#include "doctest.h"
#include "levi_slope/root_datum.hpp"

using namespace levi_slope;

TEST_CASE("pairing convention") {
  const IntMatrix b3 = standard_cartan('B', 3);
  CHECK(b3(1, 2) == -2);
  CHECK(b3(2, 1) == -1);
  CHECK(standard_cartan('G', 2) == IntMatrix{{2, -1}, {-3, 2}});
  const RootDatum d = build_simple('B', 3, Isogeny::adjoint);
  CHECK(d.cartan() == b3);
  CHECK(d.roots() * d.coroots() == d.cartan());
}

TEST_CASE("isogeny conventions") {
  const RootDatum ad = build_simple('C', 3, Isogeny::adjoint);
  const RootDatum sc = build_simple('C', 3, Isogeny::simply_connected);
  CHECK(ad.roots() == IntMatrix::identity(3));
  CHECK(sc.coroots() == IntMatrix::identity(3));
  CHECK(ad.name() == "C3(adjoint)");
}

TEST_CASE("fundamental groups") {
  CHECK(pi1(build_simple('D', 4, Isogeny::adjoint)).torsion_invariants() == std::vector<Int>{2, 2});
  CHECK(pi1(build_simple('D', 5, Isogeny::adjoint)).torsion_invariants() == std::vector<Int>{4});
  CHECK(pi1(build_simple('E', 7, Isogeny::adjoint)).torsion_invariants() == std::vector<Int>{2});
  CHECK(pi1(build_simple('E', 6, Isogeny::adjoint)).torsion_invariants() == std::vector<Int>{3});
  CHECK(pi1(build_simple('A', 5, Isogeny::adjoint)).torsion_invariants() == std::vector<Int>{6});
  CHECK(pi1(build_simple('E', 8, Isogeny::adjoint)).torsion_invariants().empty());
  const QuotientLattice sc = pi1(build_simple('E', 7, Isogeny::simply_connected));
  CHECK(sc.torsion_invariants().empty());
  CHECK(sc.free_rank() == 0);
  const QuotientLattice gl = pi1(build_gl(6));
  CHECK(gl.torsion_invariants().empty());
  CHECK(gl.free_rank() == 1);
}

TEST_CASE("GL_n coroots") {
  const RootDatum g = build_gl(3);
  CHECK(g.coroot(0) == IntVector{1, -1, 0});
  CHECK(g.coroot(1) == IntVector{0, 1, -1});
  CHECK(g.dynkin_label() == "A2");
  CHECK(g.name() == "GL3");
  CHECK_THROWS_AS(build_gl(0), InvalidInput);
}

TEST_CASE("positive roots and Weyl orders") {
  CHECK(positive_roots(build_simple('E', 7, Isogeny::adjoint)).size() == 63);
  CHECK(positive_roots(build_simple('B', 3, Isogeny::adjoint)).size() == 9);
  CHECK(positive_roots(build_simple('G', 2, Isogeny::adjoint)).size() == 6);
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 4}, {'B', 4}, {'D', 5}, {'F', 4}, {'E', 6}})
    CHECK(positive_roots(build_simple(t, r, Isogeny::adjoint)).size() == positive_root_count_formula(t, r));
  CHECK(weyl_order_formula('E', 7) == 2903040);
  CHECK(weyl_order_formula('B', 3) == 48);
  CHECK(weyl_order_formula('A', 3) == 24);
}

TEST_CASE("fundamental weights are dual to the coroots") {
  for (const auto& d : {build_simple('F', 4, Isogeny::adjoint), build_simple('D', 5, Isogeny::simply_connected),
                        build_gl(4)}) {
    const RatMatrix w = fundamental_weights(d);
    CHECK(w * to_rational(d.coroots()) == RatMatrix::identity(d.num_simple()));
  }
}

TEST_CASE("products and classification") {
  const RootDatum p = product(build_gl(2), build_simple('G', 2, Isogeny::adjoint));
  CHECK(p.rank() == 4);
  CHECK(p.num_simple() == 3);
  CHECK(p.dynkin_label() == "A1xG2");
  const auto comps = classify_cartan(standard_cartan('D', 5), {0, 2, 3, 4});
  CHECK(levi_label(comps) == "A1xA3");
  CHECK(levi_label({}) == "torus");
}

TEST_CASE("validation names the violated invariant") {
  IntMatrix roots = standard_cartan('A', 3);
  roots(0, 1) = 1;
  const auto bad = validate_root_datum(IntMatrix::identity(3), roots);
  CHECK(std::find(bad.begin(), bad.end(), "cartan_offdiagonal_nonpositive") != bad.end());
  CHECK_THROWS_AS(RootDatum("broken", IntMatrix::identity(3), roots), InvalidInput);
  CHECK_THROWS_AS(standard_cartan('E', 5), InvalidInput);
  CHECK(validate_root_datum(IntMatrix::identity(3), standard_cartan('A', 3)).empty());
}
