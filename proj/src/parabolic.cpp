#include "levi_slope/parabolic.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace levi_slope {

RatVector slope_coefficients(const RootDatum& d, const IntVector& lift) {
  if (lift.size() != d.rank()) throw ContractViolation("lift length does not match datum rank");
  return levi_coefficients(d, Parabolic::full(d), to_rational(lift));
}

RatVector slope_coefficients_via_weights(const RootDatum& d, const IntVector& lift,
                                         const RatMatrix& omegas) {
  if (omegas.rows() != d.num_simple() || omegas.cols() != d.rank())
    throw ContractViolation("fundamental weight matrix has the wrong shape");
  const RatVector l = to_rational(lift);
  const RatVector phi = slope(d, Parabolic::full(d), l);
  RatVector diff(l.size());
  for (std::size_t a = 0; a < l.size(); ++a) diff[a] = phi[a] - l[a];
  RatVector s(d.num_simple());
  for (std::size_t i = 0; i < d.num_simple(); ++i) s[i] = -dot(omegas.row(i), diff);
  return s;
}

MinimalReduction minimal_admissible(const RootDatum& d, const IntVector& lift) {
  const RatVector s = slope_coefficients(d, lift);
  MinimalReduction mr;
  mr.s_coeffs = s;
  RatVector g = to_rational(lift);
  RatVector adjusted = g;
  for (std::size_t i = 0; i < d.num_simple(); ++i) {
    if (s[i] == 0) continue;
    for (std::size_t a = 0; a < d.rank(); ++a) g[a] -= s[i] * d.coroots()(a, i);
    if (is_integral(s[i])) {
      for (std::size_t a = 0; a < d.rank(); ++a) adjusted[a] -= s[i] * d.coroots()(a, i);
    }
  }
  for (std::size_t i = 0; i < d.num_simple(); ++i)
    if (!is_integral(s[i])) mr.parabolic.nodes.push_back(i);
  mr.g_slope = g;
  mr.degree = Degree{mr.parabolic,
                     levi_quotient(d, mr.parabolic).canonical(to_integral(adjusted))};
  return mr;
}

namespace {

struct OracleResult {
  bool admissible = false;
  IntVector degree;
};

/// Admissibility of J decided from the definition: degrees over the class of
/// `lift` are lift + sum_{j not in J} k_j coroot_j modulo the J-coroots, and
/// phi_J is linear, so we need an integral k with
/// sum_j k_j phi_J(coroot_j) = phi_G - phi_J(lift).
OracleResult oracle_subset(const RootDatum& d, const Parabolic& j, const RatVector& lift,
                           const RatVector& phi_g) {
  const Parabolic out = complement(d, j);
  const RatVector phi_lift = slope(d, j, lift);
  RatVector rhs(lift.size());
  for (std::size_t a = 0; a < lift.size(); ++a) rhs[a] = phi_g[a] - phi_lift[a];
  OracleResult res;
  if (out.nodes.empty()) {
    res.admissible = is_zero(rhs);
    if (res.admissible) res.degree = to_integral(lift);
    return res;
  }
  RatMatrix m(d.rank(), out.nodes.size());
  for (std::size_t c = 0; c < out.nodes.size(); ++c) {
    const RatVector col = slope(d, j, to_rational(d.coroot(out.nodes[c])));
    for (std::size_t a = 0; a < d.rank(); ++a) m(a, c) = col[a];
  }
  if (rank(m) != out.nodes.size())
    throw InvariantViolation("projected coroots are dependent in the Levi quotient");
  auto k = solve_rational(m, rhs);
  if (!k || !is_integral(*k)) return res;
  res.admissible = true;
  IntVector deg = to_integral(lift);
  for (std::size_t c = 0; c < out.nodes.size(); ++c)
    for (std::size_t a = 0; a < d.rank(); ++a)
      deg[a] += (*k)[c].get_num() * d.coroots()(a, out.nodes[c]);
  res.degree = deg;
  return res;
}

Parabolic from_mask(std::uint32_t mask, std::size_t r) {
  Parabolic p;
  for (std::size_t i = 0; i < r; ++i)
    if (mask & (1u << i)) p.nodes.push_back(i);
  return p;
}

std::map<std::uint32_t, IntVector> oracle_sweep(const RootDatum& d, const IntVector& lift) {
  const std::size_t r = d.num_simple();
  if (r > kBruteForceMaxSimple)
    throw CapExceeded("brute-force oracle supports at most " +
                      std::to_string(kBruteForceMaxSimple) + " simple roots");
  if (lift.size() != d.rank()) throw ContractViolation("lift length does not match datum rank");
  const RatVector l = to_rational(lift);
  const RatVector phi_g = slope(d, Parabolic::full(d), l);
  std::map<std::uint32_t, IntVector> family;
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    auto res = oracle_subset(d, from_mask(mask, r), l, phi_g);
    if (res.admissible) family.emplace(mask, std::move(res.degree));
  }
  const std::uint32_t all = (1u << r) - 1;
  if (!family.contains(all)) throw InvariantViolation("G itself is not admissible");
  for (const auto& [a, _] : family) {
    for (std::size_t i = 0; i < r; ++i)
      if (!family.contains(a | (1u << i)))
        throw InvariantViolation("admissible family is not upward closed");
    for (const auto& [b, __] : family)
      if (!family.contains(a & b))
        throw InvariantViolation("admissible family is not closed under intersection");
  }
  return family;
}

}  // namespace

std::vector<Parabolic> admissible_family(const RootDatum& d, const IntVector& lift) {
  std::vector<Parabolic> out;
  for (const auto& [mask, _] : oracle_sweep(d, lift)) out.push_back(from_mask(mask, d.num_simple()));
  std::sort(out.begin(), out.end());
  return out;
}

MinimalReduction brute_force_minimal(const RootDatum& d, const IntVector& lift) {
  const auto family = oracle_sweep(d, lift);
  std::uint32_t minimal = (1u << d.num_simple()) - 1;
  for (const auto& [mask, _] : family) minimal &= mask;
  const Parabolic p = from_mask(minimal, d.num_simple());
  MinimalReduction mr;
  mr.parabolic = p;
  mr.degree = Degree{p, levi_quotient(d, p).canonical(family.at(minimal))};
  mr.g_slope = slope(d, Parabolic::full(d), to_rational(lift));
  mr.s_coeffs = slope_coefficients(d, lift);
  return mr;
}

bool uniqueness_certificate(const RootDatum& d, const Parabolic& p) {
  const QuotientLattice q = levi_quotient(d, p);
  const Parabolic out = complement(d, p);
  if (out.nodes.empty()) return true;
  const auto torsion = q.torsion_invariants();
  const std::size_t t = torsion.size();
  const std::size_t f = q.free_rank();
  IntMatrix tor(t, out.nodes.size()), fr(f, out.nodes.size());
  for (std::size_t c = 0; c < out.nodes.size(); ++c) {
    const IntVector coords = q.coordinates(d.coroot(out.nodes[c]));
    for (std::size_t k = 0; k < t; ++k) tor(k, c) = coords[k];
    for (std::size_t k = 0; k < f; ++k) fr(k, c) = coords[t + k];
  }
  // Combinations with vanishing free part must vanish in the torsion part too.
  const IntMatrix ker = f == 0 ? IntMatrix::identity(out.nodes.size()) : integer_kernel(fr);
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    const IntVector image = tor * ker.column(c);
    for (std::size_t k = 0; k < t; ++k)
      if (image[k] % torsion[k] != 0) return false;
  }
  return true;
}

bool levi_is_type_a(const RootDatum& d, const Parabolic& p) {
  check_parabolic(d, p);
  for (const auto& c : classify_cartan(d.cartan(), p.nodes))
    if (c.type != 'A') return false;
  return true;
}

}  // namespace levi_slope
