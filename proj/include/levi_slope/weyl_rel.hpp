#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "levi_slope/parabolic.hpp"
#include "levi_slope/weyl_group.hpp"

namespace levi_slope {

/// Setwise stabilizer in W of {alpha_i : i in J}, acting on roots
/// contragrediently. Elements are stored with their matrices.
struct RelativeWeylGroup {
  Parabolic levi;
  std::vector<WeylMatrix> generators;  // Schreier generators kept after sifting
  std::shared_ptr<const ElementTable> table;
  std::uint64_t orbit_size = 0;  // |W-orbit of the root set|

  std::size_t order() const { return table ? table->size() : 0; }
  WeylMatrix element(std::size_t idx) const { return table->matrix(idx); }
};

inline constexpr std::uint64_t kDefaultOrbitCap = 1'000'000;

/// Orbit-stabilizer with Schreier generators. Throws CapExceeded when the
/// orbit exceeds `orbit_cap` or the stabilizer exceeds `group_cap`.
RelativeWeylGroup relative_weyl(const RootDatum& d, const Parabolic& j,
                                std::uint64_t orbit_cap = kDefaultOrbitCap,
                                std::uint64_t group_cap = kDefaultWeylCap);

/// One irreducible Coxeter component, e.g. ('B', 3), ('I', 2, m = 5).
struct CoxeterComponent {
  char type = 'A';  // A B D E F G H I
  int rank = 0;
  int m = 0;  // dihedral order parameter, only for type I

  std::string label() const;

  friend bool operator==(const CoxeterComponent&, const CoxeterComponent&) = default;
  friend auto operator<=>(const CoxeterComponent&, const CoxeterComponent&) = default;
};

struct CoxeterType {
  /// Components sorted; empty for the trivial group.
  std::vector<CoxeterComponent> components;
  bool generated_by_reflections = true;
  bool classified = true;
  std::size_t reflection_count = 0;
  std::size_t rank_on_quotient = 0;  // dimension of the space W_{M,G} acts on
  std::vector<std::vector<int>> coxeter_matrix;  // between the simple reflections
  std::string failure;  // why classification or generation failed

  /// "trivial", "A1", "B3", "A1xG2"; B/C written as B.
  std::string abstract_label() const;
  /// Same group with B_k (k >= 2) written C_k.
  std::string c_convention_label() const;
  /// Product of component orders.
  Int order() const;
};

CoxeterType identify_coxeter_type(const RelativeWeylGroup& rw, const RootDatum& d);

/// Normalizes a label of the form above (also accepting C_k, A_0, C_1, "1")
/// to the abstract label: C_k -> B_k, rank-1 B/C -> A1, rank 0 -> trivial.
std::string normalize_coxeter_label(const std::string& label);

Int coxeter_component_order(const CoxeterComponent& c);

/// No non-identity element acts trivially on Lambda (x) Q / span{coroot_i : i in J}.
bool acts_faithfully_on_quotient(const RootDatum& d, const RelativeWeylGroup& rw);

/// Every element fixes deg in Lambda_{G,P}.
bool degree_invariance_condition(const RootDatum& d, const RelativeWeylGroup& rw,
                                 const Degree& deg);

/// w(lambda_P) = lambda_P for every w in W_{M,G}.
bool w_fixes_minimal_degree(const RootDatum& d, const MinimalReduction& mr,
                            const RelativeWeylGroup& rw);

}  // namespace levi_slope
