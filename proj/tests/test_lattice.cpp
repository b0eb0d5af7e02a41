#include "doctest.h"
#include "levi_slope/lattice.hpp"

using namespace levi_slope;

TEST_CASE("smith normal form of a 2x2 matrix") {
  const IntMatrix m{{2, 4}, {6, 8}};
  const SmithForm s = smith_normal_form(m);
  CHECK(s.diagonal() == std::vector<Int>{2, 4});
  CHECK(s.u * m * s.v == s.d);
  CHECK(abs(determinant(s.u)) == 1);
  CHECK(abs(determinant(s.v)) == 1);
}

TEST_CASE("smith normal form of a rank-deficient rectangular matrix") {
  const IntMatrix m{{1, 2, 3}, {2, 4, 6}};
  const SmithForm s = smith_normal_form(m);
  CHECK(s.diagonal() == std::vector<Int>{1, 0});
  CHECK(s.u * m * s.v == s.d);
}

TEST_CASE("rational solve of the A2 Cartan system") {
  const IntMatrix c{{2, -1}, {-1, 2}};
  const auto x = solve_rational(c, RatVector{Rat(1), Rat(0)});
  REQUIRE(x);
  CHECK(*x == RatVector{Rat(2, 3), Rat(1, 3)});
  CHECK_FALSE(solve_rational(IntMatrix{{1, 1}, {1, 1}}, RatVector{Rat(1), Rat(2)}));
}

TEST_CASE("integer kernel is a basis of the solutions") {
  const IntMatrix m{{1, 1, 1}};
  const IntMatrix k = integer_kernel(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());
  CHECK(rank(k) == 2);
}

TEST_CASE("column echelon spans the same lattice") {
  const IntMatrix m{{2, 4}, {0, 6}};
  const ColumnEchelon e = column_echelon(m);
  CHECK(e.basis.cols() == 2);
  CHECK(abs(determinant(e.transform)) == 1);
  CHECK(abs(determinant(e.basis)) == 12);
}

TEST_CASE("inverse and unimodular inverse") {
  const IntMatrix u{{2, 1}, {1, 1}};
  CHECK(inverse_unimodular(u) * u == IntMatrix::identity(2));
  CHECK(inverse(to_rational(u)) == to_rational(inverse_unimodular(u)));
  CHECK(determinant(IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}) == 4);
}

TEST_CASE("quotient lattice Z^2 / <(2,0),(0,2)>") {
  const QuotientLattice q(2, IntMatrix{{2, 0}, {0, 2}});
  CHECK(q.torsion_invariants() == std::vector<Int>{2, 2});
  CHECK(q.free_rank() == 0);
  CHECK(q.torsion_elements().size() == 4);
  CHECK(q.equivalent(IntVector{3, 1}, IntVector{1, -1}));
  CHECK_FALSE(q.equivalent(IntVector{1, 0}, IntVector{0, 1}));
  CHECK(q.canonical(IntVector{5, -3}) == q.canonical(IntVector{1, 1}));
}

TEST_CASE("quotient lattice with a free part") {
  const QuotientLattice q(3, IntMatrix{{1, 0}, {-1, 1}, {0, -1}});
  CHECK(q.torsion_invariants().empty());
  CHECK(q.free_rank() == 1);
  CHECK(q.coordinates(IntVector{0, 0, 2}) == q.coordinates(IntVector{1, 1, 0}));
  CHECK(q.contains(IntVector{1, -1, 0}));
  const auto gens = q.generator_lifts();
  REQUIRE(gens.size() == 1);
  CHECK(abs(q.coordinates(gens[0])[0]) == 1);
}

TEST_CASE("contract violations") {
  const IntMatrix row{{1, 2}};
  CHECK_THROWS_AS(row * row, ContractViolation);
  CHECK_THROWS_AS(to_integral(RatVector{Rat(1, 2)}), ContractViolation);
}
