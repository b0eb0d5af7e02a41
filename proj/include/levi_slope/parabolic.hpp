#pragma once

#include <vector>

#include "levi_slope/slope.hpp"

namespace levi_slope {

struct MinimalReduction {
  Parabolic parabolic;  // I_P = {i : s_i not integral}
  Degree degree;        // canonical lift of the admissible P-degree
  RatVector g_slope;    // phi_G of the input degree
  RatVector s_coeffs;   // phi_G = lift - sum_i s_i coroot_i, for the input lift
};

/// s with phi_G(lift) = lift - sum_i s_i coroot_i, i.e. s = C^{-1} b.
RatVector slope_coefficients(const RootDatum& d, const IntVector& lift);

/// The same coefficients computed as -<phi_G(lift) - lift, omega_i> from a
/// given family of fundamental weights (rows of `omegas`).
RatVector slope_coefficients_via_weights(const RootDatum& d, const IntVector& lift,
                                         const RatMatrix& omegas);

/// The smallest parabolic admitting an admissible reduction of the G-degree of
/// `lift`, with its unique degree.
MinimalReduction minimal_admissible(const RootDatum& d, const IntVector& lift);

inline constexpr std::size_t kBruteForceMaxSimple = 9;

/// Independent oracle: tests every subset J for the existence of a degree over
/// the class of `lift` with phi_J = phi_G. Asserts the admissible family is
/// upward closed and closed under intersection. Throws CapExceeded above
/// kBruteForceMaxSimple simple roots.
MinimalReduction brute_force_minimal(const RootDatum& d, const IntVector& lift);

/// Every admissible subset found by the oracle, sorted.
std::vector<Parabolic> admissible_family(const RootDatum& d, const IntVector& lift);

/// True iff span{coroot_j : j not in P} injects into Lambda_{G,P} with image
/// meeting the torsion subgroup only in 0.
bool uniqueness_certificate(const RootDatum& d, const Parabolic& p);

/// Type-A decomposition of the Levi (the structural shadow of the Levi being a
/// product of type-A groups).
bool levi_is_type_a(const RootDatum& d, const Parabolic& p);

}  // namespace levi_slope
