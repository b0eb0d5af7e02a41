#include "levi_slope/stability.hpp"

namespace levi_slope {

bool stable_exists_minimal(const RootDatum& d, const IntVector& lift) {
  return minimal_admissible(d, lift).parabolic == Parabolic::full(d);
}

StabilityVerdict stable_exists_typeA(const RootDatum& d, const IntVector& lift) {
  if (lift.size() != d.rank()) throw ContractViolation("lift length does not match datum rank");
  StabilityVerdict v;
  v.route_minimal = stable_exists_minimal(d, lift);
  v.all_type_a = true;
  for (const auto& c : d.components())
    if (c.type != 'A') v.all_type_a = false;
  if (v.all_type_a) {
    v.route_typeA = true;
    for (const auto& c : d.components()) {
      const int n = c.rank + 1;
      Int sum = 0;
      for (std::size_t j = 0; j < c.nodes.size(); ++j)
        sum += Int(static_cast<long>(j + 1)) * d.pair_root(c.nodes[j], lift);
      Int cls = sum % n;
      if (cls < 0) cls += n;
      v.adjoint_factors.push_back({n, cls});
      if (gcd(cls, Int(n)) != 1) v.route_typeA = false;
    }
  }
  if (v.route_minimal != v.route_typeA)
    throw InvariantViolation("stability criteria disagree for " + d.name());
  v.exists_stable = v.route_minimal;
  return v;
}

RatMatrix inverse_cartan(const RootDatum& d) { return inverse(to_rational(d.cartan())); }

RatMatrix type_a_inverse_closed_form(int k) {
  if (k < 2) throw ContractViolation("type A inverse needs k >= 2");
  const std::size_t m = static_cast<std::size_t>(k - 1);
  RatMatrix c(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const long i = static_cast<long>(a + 1), j = static_cast<long>(b + 1);
      c(a, b) = i <= j ? Rat(i * (k - j), k) : Rat(j * (k - i), k);
      c(a, b).canonicalize();
    }
  return c;
}

}  // namespace levi_slope
