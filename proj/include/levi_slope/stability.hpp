#pragma once

#include <vector>

#include "levi_slope/parabolic.hpp"

namespace levi_slope {

struct AdjointFactor {
  int n = 0;  // the factor is PGL_n, i.e. a component of type A_{n-1}
  Int d;      // degree class in Z/n
};

struct StabilityVerdict {
  bool exists_stable = false;
  bool route_minimal = false;  // minimal admissible parabolic is G
  bool route_typeA = false;    // every component type A with gcd(d_k, n_k) = 1
  bool all_type_a = false;
  std::vector<AdjointFactor> adjoint_factors;  // filled when all_type_a
};

/// True iff the minimal admissible parabolic is G itself.
bool stable_exists_minimal(const RootDatum& d, const IntVector& lift);

/// Both criteria; throws InvariantViolation if they disagree. For a type-A
/// component with chain nodes j = 1..n-1 the degree class is
/// d = sum_j j <alpha_j, lift> mod n.
StabilityVerdict stable_exists_typeA(const RootDatum& d, const IntVector& lift);

RatMatrix inverse_cartan(const RootDatum& d);

/// Inverse of the A_{k-1} Cartan matrix from c_ij = i(k-j)/k (i <= j),
/// j(k-i)/k (i > j).
RatMatrix type_a_inverse_closed_form(int k);

}  // namespace levi_slope
