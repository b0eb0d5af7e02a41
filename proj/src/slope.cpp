#include "levi_slope/slope.hpp"

#include <algorithm>

namespace levi_slope {

Parabolic Parabolic::of(std::vector<std::size_t> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return Parabolic{std::move(nodes)};
}

Parabolic Parabolic::from_one_based(const std::vector<std::size_t>& nodes) {
  std::vector<std::size_t> z;
  for (auto i : nodes) {
    if (i == 0) throw ContractViolation("node indices are 1-based");
    z.push_back(i - 1);
  }
  return of(std::move(z));
}

Parabolic Parabolic::full(const RootDatum& d) {
  Parabolic p;
  for (std::size_t i = 0; i < d.num_simple(); ++i) p.nodes.push_back(i);
  return p;
}

bool Parabolic::contains(std::size_t i) const {
  return std::binary_search(nodes.begin(), nodes.end(), i);
}

bool Parabolic::subset_of(const Parabolic& other) const {
  return std::includes(other.nodes.begin(), other.nodes.end(), nodes.begin(), nodes.end());
}

std::vector<std::size_t> Parabolic::one_based() const {
  std::vector<std::size_t> out;
  for (auto i : nodes) out.push_back(i + 1);
  return out;
}

void check_parabolic(const RootDatum& d, const Parabolic& p) {
  for (auto i : p.nodes)
    if (i >= d.num_simple())
      throw ContractViolation("parabolic node " + std::to_string(i + 1) + " out of range");
}

Parabolic complement(const RootDatum& d, const Parabolic& p) {
  Parabolic c;
  for (std::size_t i = 0; i < d.num_simple(); ++i)
    if (!p.contains(i)) c.nodes.push_back(i);
  return c;
}

Parabolic intersection(const Parabolic& a, const Parabolic& b) {
  Parabolic c;
  std::set_intersection(a.nodes.begin(), a.nodes.end(), b.nodes.begin(), b.nodes.end(),
                        std::back_inserter(c.nodes));
  return c;
}

QuotientLattice levi_quotient(const RootDatum& d, const Parabolic& p) {
  check_parabolic(d, p);
  return QuotientLattice(d.rank(), d.coroots().select_columns(p.nodes));
}

namespace {

void check_lift(const RootDatum& d, std::size_t size) {
  if (size != d.rank())
    throw ContractViolation("lift has length " + std::to_string(size) + ", datum rank is " +
                            std::to_string(d.rank()));
}

}  // namespace

RatVector levi_coefficients(const RootDatum& d, const Parabolic& p, const RatVector& lift) {
  check_parabolic(d, p);
  check_lift(d, lift.size());
  if (p.nodes.empty()) return {};
  RatVector b;
  for (auto j : p.nodes) b.push_back(d.pair_root(j, lift));
  auto q = solve_rational(to_rational(d.cartan().select(p.nodes, p.nodes)), b);
  if (!q) throw InvariantViolation("Levi Cartan matrix is singular");
  return *q;
}

RatVector slope(const RootDatum& d, const Parabolic& p, const RatVector& lift) {
  const RatVector q = levi_coefficients(d, p, lift);
  RatVector phi = lift;
  for (std::size_t k = 0; k < p.nodes.size(); ++k) {
    if (q[k] == 0) continue;
    const std::size_t i = p.nodes[k];
    for (std::size_t a = 0; a < d.rank(); ++a) phi[a] -= q[k] * d.coroots()(a, i);
  }
  return phi;
}

RatVector slope(const RootDatum& d, const Degree& deg) {
  return slope(d, deg.parabolic, to_rational(deg.lift));
}

bool leq_pos_cone(const RootDatum& d, const RatVector& x, const RatVector& y) {
  check_lift(d, x.size());
  check_lift(d, y.size());
  RatVector diff(x.size());
  for (std::size_t a = 0; a < x.size(); ++a) diff[a] = y[a] - x[a];
  if (is_zero(diff)) return true;
  auto c = solve_rational(d.coroots(), diff);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](const Rat& v) { return v >= 0; });
}

Degree project_degree(const RootDatum& d, const Degree& deg, const Parabolic& larger) {
  check_parabolic(d, larger);
  check_lift(d, deg.lift.size());
  if (!deg.parabolic.subset_of(larger))
    throw ContractViolation("project_degree: target parabolic does not contain the source");
  return Degree{larger, deg.lift};
}

bool degrees_equal(const RootDatum& d, const Degree& a, const Degree& b) {
  if (a.parabolic != b.parabolic)
    throw ContractViolation("degrees_equal: degrees live on different parabolics");
  return levi_quotient(d, a.parabolic).equivalent(a.lift, b.lift);
}

bool is_admissible(const RootDatum& d, const Degree& deg, const Degree& target) {
  const Parabolic g = Parabolic::full(d);
  if (target.parabolic != g)
    throw ContractViolation("is_admissible: target must be a degree of G");
  if (!degrees_equal(d, project_degree(d, deg, g), target)) return false;
  return slope(d, deg) == slope(d, target);
}

bool check_slope_scalar(const RootDatum& d, const Degree& deg) {
  const RatVector phi = slope(d, deg);
  const RatVector lift = to_rational(deg.lift);
  // Characters of the Levi quotient torus: covectors vanishing on P-coroots.
  const IntMatrix chars = integer_kernel(d.coroots().select_columns(deg.parabolic.nodes).transpose());
  for (std::size_t c = 0; c < chars.cols(); ++c) {
    const RatVector lambda = to_rational(chars.column(c));
    if (dot(lambda, phi) != dot(lambda, lift)) return false;
  }
  for (auto i : deg.parabolic.nodes)
    if (d.pair_root(i, phi) != 0) return false;
  return true;
}

bool check_slope_proj(const RootDatum& d, const Degree& deg_larger, const Parabolic& smaller) {
  check_parabolic(d, smaller);
  if (!smaller.subset_of(deg_larger.parabolic))
    throw ContractViolation("check_slope_proj: parabolic is not contained in the degree's");
  const RatVector phi = slope(d, deg_larger);
  return slope(d, smaller, phi) == phi;
}

WeylMatrix inverse(const WeylMatrix& w) {
  return WeylMatrix::from_int_matrix(inverse_unimodular(w.to_int_matrix()));
}

std::pair<Parabolic, Parabolic> deeper_reduction_sets(const RootDatum& d, const WeylMatrix& w,
                                                      const Parabolic& i1, const Parabolic& i2) {
  check_parabolic(d, i1);
  check_parabolic(d, i2);
  if (w.dim() != d.rank()) throw ContractViolation("Weyl element has the wrong size");
  const WeylMatrix w_inv = inverse(w);
  auto root_row = [&](std::size_t i) {
    std::vector<std::int64_t> r(d.rank());
    for (std::size_t a = 0; a < d.rank(); ++a) r[a] = d.roots()(i, a).get_si();
    return r;
  };
  // Covector action: (w.alpha)(v) = alpha(w^{-1} v), i.e. the row alpha * w^{-1}.
  Parabolic out1, out2;
  for (auto i : i1.nodes)
    for (auto j : i2.nodes)
      if (w_inv.apply_row(root_row(j)) == root_row(i)) {
        out1.nodes.push_back(i);
        break;
      }
  for (auto i : i2.nodes)
    for (auto j : i1.nodes)
      if (w.apply_row(root_row(j)) == root_row(i)) {
        out2.nodes.push_back(i);
        break;
      }
  return {out1, out2};
}

}  // namespace levi_slope
