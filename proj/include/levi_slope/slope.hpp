#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "levi_slope/root_datum.hpp"
#include "levi_slope/weyl_group.hpp"

namespace levi_slope {

/// Standard parabolic, given by the set I_P of simple-root indices of its Levi
/// (0-based internally; reports print them 1-based). Empty = Borel, all = G.
struct Parabolic {
  std::vector<std::size_t> nodes;  // sorted, unique

  static Parabolic of(std::vector<std::size_t> nodes);
  static Parabolic from_one_based(const std::vector<std::size_t>& nodes);
  static Parabolic full(const RootDatum& d);
  static Parabolic borel() { return {}; }

  std::size_t size() const { return nodes.size(); }
  bool contains(std::size_t i) const;
  bool subset_of(const Parabolic& other) const;
  std::vector<std::size_t> one_based() const;

  friend bool operator==(const Parabolic&, const Parabolic&) = default;
  friend auto operator<=>(const Parabolic&, const Parabolic&) = default;
};

/// Throws ContractViolation when p names an index outside d.
void check_parabolic(const RootDatum& d, const Parabolic& p);
Parabolic complement(const RootDatum& d, const Parabolic& p);
Parabolic intersection(const Parabolic& a, const Parabolic& b);

/// An element of Lambda / span{coroot_i : i in parabolic}, given by a lift.
struct Degree {
  Parabolic parabolic;
  IntVector lift;
};

/// Lambda modulo the coroots of the Levi of p.
QuotientLattice levi_quotient(const RootDatum& d, const Parabolic& p);

/// q with C_P q = b_P, b_j = <alpha_j, lift> for j in p (ordered as p.nodes).
RatVector levi_coefficients(const RootDatum& d, const Parabolic& p, const RatVector& lift);

/// phi_P(lift) = lift - sum_{i in P} q_i coroot_i. Accepts rational lifts.
RatVector slope(const RootDatum& d, const Parabolic& p, const RatVector& lift);
RatVector slope(const RootDatum& d, const Degree& deg);

/// True iff y - x is a nonnegative rational combination of simple coroots.
bool leq_pos_cone(const RootDatum& d, const RatVector& x, const RatVector& y);

/// Same lift viewed in the larger parabolic's quotient.
Degree project_degree(const RootDatum& d, const Degree& deg, const Parabolic& larger);

/// Equality in Lambda_{G,P}; requires equal parabolics.
bool degrees_equal(const RootDatum& d, const Degree& a, const Degree& b);

/// deg projects to target and has the same slope. target must live at P = G.
bool is_admissible(const RootDatum& d, const Degree& deg, const Degree& target);

/// <lambda, phi_P> = <lambda, lift> for a Z-basis of the characters vanishing
/// on the Levi coroots, and <alpha_i, phi_P> = 0 for i in P.
bool check_slope_scalar(const RootDatum& d, const Degree& deg);

/// phi_P applied to the rational lift phi_{P'}(deg) returns phi_{P'}(deg).
bool check_slope_proj(const RootDatum& d, const Degree& deg_larger, const Parabolic& smaller);

/// I1' = {i in I1 : w(alpha_j) = alpha_i for some j in I2} and
/// I2' = {i in I2 : w^{-1}(alpha_j) = alpha_i for some j in I1}, with w acting
/// on roots contragrediently.
std::pair<Parabolic, Parabolic> deeper_reduction_sets(const RootDatum& d, const WeylMatrix& w,
                                                      const Parabolic& i1, const Parabolic& i2);

/// Inverse of a Weyl group element (integral and unimodular).
WeylMatrix inverse(const WeylMatrix& w);

}  // namespace levi_slope
