#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "levi_slope/lattice.hpp"

namespace levi_slope {

enum class Isogeny { adjoint, simply_connected };

std::optional<Isogeny> parse_isogeny(std::string_view s);
std::string to_string(Isogeny iso);

/// One irreducible block of a Cartan matrix.
struct DynkinComponent {
  char type = 'A';  // 'A'..'G'
  int rank = 0;
  /// Datum indices of the nodes. Type A components are listed in chain order
  /// starting from the leaf with the smaller index; others ascending.
  std::vector<std::size_t> nodes;

  std::string label() const;  // e.g. "A2", "E7"

  friend bool operator==(const DynkinComponent&, const DynkinComponent&) = default;
};

/// "A1xA1xA3" (components sorted by type then rank), "torus" when empty.
std::string levi_label(const std::vector<DynkinComponent>& components);

/// Based root datum: a lattice of cocharacters Z^n with r simple coroots
/// (columns of an n x r matrix) and r simple roots (rows of an r x n matrix).
///
/// Pairing convention, used everywhere: cartan(i, j) = <alpha_i, coroot_j>,
/// row = root index, column = coroot index. With this convention B_n has
/// cartan(n-1, n) = -2 and G_2 is [[2,-1],[-3,2]].
class RootDatum {
 public:
  /// Validates every invariant; throws InvalidInput listing the violations.
  RootDatum(std::string name, IntMatrix coroots, IntMatrix roots);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return coroots_.rows(); }
  std::size_t num_simple() const { return coroots_.cols(); }
  const IntMatrix& coroots() const { return coroots_; }
  const IntMatrix& roots() const { return roots_; }
  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<DynkinComponent>& components() const { return components_; }

  IntVector coroot(std::size_t j) const { return coroots_.column(j); }
  IntVector root(std::size_t i) const { return roots_.row(i); }

  /// <alpha_i, v>
  Int pair_root(std::size_t i, const IntVector& v) const;
  Rat pair_root(std::size_t i, const RatVector& v) const;

  /// Dynkin type of the whole datum, e.g. "A5" or "A1xA2"; "torus" if r = 0.
  std::string dynkin_label() const { return levi_label(components_); }

 private:
  std::string name_;
  IntMatrix coroots_;
  IntMatrix roots_;
  IntMatrix cartan_;
  std::vector<DynkinComponent> components_;
};

/// Names of violated RootDatum invariants; empty when the data are valid.
std::vector<std::string> validate_root_datum(const IntMatrix& coroots,
                                             const IntMatrix& roots);

/// Splits the principal submatrix on `nodes` into irreducible blocks and
/// identifies each as a finite type. Throws InvalidInput if some block is not
/// of finite type.
std::vector<DynkinComponent> classify_cartan(const IntMatrix& cartan,
                                             const std::vector<std::size_t>& nodes);

IntMatrix standard_cartan(char type, int rank);

RootDatum build_simple(char type, int rank, Isogeny isogeny);
RootDatum build_gl(int n);
RootDatum product(const RootDatum& a, const RootDatum& b);

IntMatrix cartan_matrix(const RootDatum& d);

struct PositiveRoot {
  IntVector coefficients;  // in the simple roots
  IntVector covector;      // on the cocharacter lattice
};

/// Sorted by height, then lexicographically by coefficients.
std::vector<PositiveRoot> positive_roots(const RootDatum& d);

/// Row i is omega_i, with <omega_i, coroot_j> = delta_ij. When the coroots do
/// not span, omega_i additionally vanishes on the common kernel of the roots.
RatMatrix fundamental_weights(const RootDatum& d);

/// Cocharacters modulo the coroot lattice.
QuotientLattice pi1(const RootDatum& d);

Int weyl_order_formula(char type, int rank);
Int weyl_order_formula(const RootDatum& d);
std::size_t positive_root_count_formula(char type, int rank);

}  // namespace levi_slope
