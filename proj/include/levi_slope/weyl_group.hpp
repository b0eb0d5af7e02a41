#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "levi_slope/root_datum.hpp"

namespace levi_slope {

/// A Weyl group element as an n x n integer matrix acting on cocharacters
/// (column vectors). Entries are small, so fixed-width storage is used; any
/// overflow raises InvariantViolation.
class WeylMatrix {
 public:
  WeylMatrix() = default;
  explicit WeylMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}

  static WeylMatrix identity(std::size_t n);
  static WeylMatrix from_int_matrix(const IntMatrix& m);
  IntMatrix to_int_matrix() const;

  std::size_t dim() const { return n_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }
  const std::vector<std::int64_t>& data() const { return a_; }

  bool is_identity() const;
  WeylMatrix transpose() const;

  /// M v
  std::vector<std::int64_t> apply(std::span<const std::int64_t> v) const;
  IntVector apply(const IntVector& v) const;
  RatVector apply(const RatVector& v) const;
  /// lambda M (row vector); for a covector this is the action of M^{-1}.
  std::vector<std::int64_t> apply_row(std::span<const std::int64_t> row) const;

  friend WeylMatrix operator*(const WeylMatrix& a, const WeylMatrix& b);
  friend bool operator==(const WeylMatrix& a, const WeylMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> a_;
};

/// s_i(v) = v - <alpha_i, v> coroot_i
WeylMatrix simple_reflection(const RootDatum& d, std::size_t i);
std::vector<WeylMatrix> simple_reflections(const RootDatum& d);

/// An integral vector in the span of the coroots with <alpha_i, x> > 0 for
/// every i. Its W-orbit is free, so w(x) identifies w.
std::vector<std::int64_t> regular_vector(const RootDatum& d);

/// Hash-indexed set of group elements, each identified by its image of a
/// regular vector. Built by breadth-first closure under left multiplication by
/// a generator list.
class ElementTable {
 public:
  ElementTable(std::vector<std::int64_t> regular, bool store_matrices);

  /// Replaces the contents with the group generated by `gens`.
  /// Throws CapExceeded if more than `cap` elements appear.
  void close(const std::vector<WeylMatrix>& gens, std::uint64_t cap);
  /// Adds one generator and closes again, reusing the existing elements.
  void extend(const WeylMatrix& gen, std::uint64_t cap);
  const std::vector<WeylMatrix>& generators() const { return gens_; }

  std::size_t size() const { return parent_.size(); }
  std::size_t dim() const { return dim_; }
  bool stores_matrices() const { return store_matrices_; }

  std::optional<std::size_t> find(const WeylMatrix& m) const;
  bool contains(const WeylMatrix& m) const { return find(m).has_value(); }

  /// Image of the regular vector under element idx.
  std::span<const std::int32_t> key(std::size_t idx) const;
  WeylMatrix matrix(std::size_t idx) const;
  const std::vector<std::int64_t>& regular() const { return regular_; }

 private:
  std::optional<std::size_t> find_key(std::span<const std::int32_t> key) const;
  std::uint64_t hash_key(std::span<const std::int32_t> key) const;
  void insert_slot(std::size_t idx);
  void grow();
  void set_cap(std::uint64_t cap);
  void push(std::span<const std::int64_t> key, std::uint32_t parent, std::uint16_t via,
            const WeylMatrix* m);
  void expand(std::size_t old_size, std::size_t first_new);

  std::size_t dim_;
  std::vector<std::int64_t> regular_;
  bool store_matrices_;
  std::uint64_t cap_ = 0;
  std::vector<WeylMatrix> gens_;
  std::vector<std::int32_t> keys_;
  std::vector<std::int16_t> mats_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint16_t> via_;
  std::vector<std::uint32_t> slots_;
};

class WeylGroup {
 public:
  WeylGroup(std::vector<WeylMatrix> generators, Int formula_order,
            std::shared_ptr<const ElementTable> table);

  const std::vector<WeylMatrix>& generators() const { return generators_; }
  bool enumerated() const { return table_ != nullptr; }
  /// Enumerated count when enumerated, else the classical product formula.
  Int order() const;
  Int formula_order() const { return formula_order_; }
  /// Requires enumerated().
  std::vector<WeylMatrix> elements() const;
  const ElementTable& table() const;

 private:
  std::vector<WeylMatrix> generators_;
  Int formula_order_;
  std::shared_ptr<const ElementTable> table_;
};

inline constexpr std::uint64_t kDefaultWeylCap = 10'000'000;

WeylGroup weyl_group(const RootDatum& d, bool enumerate,
                     std::uint64_t cap = kDefaultWeylCap);

}  // namespace levi_slope
