#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "levi_slope/errors.hpp"

namespace levi_slope {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

/// Dense row-major matrix over an exact ring (Int or Rat).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<T>>& rows,
                          std::size_t cols = 0);
  static Matrix from_columns(const std::vector<std::vector<T>>& cols,
                             std::size_t rows = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<T> row(std::size_t i) const;
  std::vector<T> column(std::size_t j) const;
  Matrix transpose() const;
  Matrix select(const std::vector<std::size_t>& row_idx,
                const std::vector<std::size_t>& col_idx) const;
  Matrix select_columns(const std::vector<std::size_t>& col_idx) const;
  Matrix select_rows(const std::vector<std::size_t>& row_idx) const;

  bool is_zero() const;
  bool is_diagonal() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v);
/// Row vector times matrix.
template <class T>
std::vector<T> operator*(const std::vector<T>& v, const Matrix<T>& a);

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);
IntVector to_int_vector(const std::vector<long>& v);

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b);

bool is_integral(const Rat& q);
bool is_integral(const RatVector& v);
/// Requires is_integral(v).
IntVector to_integral(const RatVector& v);
bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

// ---------------------------------------------------------------------------
// Normal forms

/// U * m * V = D, U and V unimodular, D diagonal with d_i | d_{i+1},
/// non-negative diagonal, zeros last.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  /// Diagonal of D (length min(rows, cols)).
  std::vector<Int> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Column echelon form of the lattice spanned by the columns of m:
/// m * transform = basis | 0, with basis columns having strictly increasing
/// pivot rows, positive pivots and zeros above each pivot.
struct ColumnEchelon {
  IntMatrix basis;                    // n x k
  std::vector<std::size_t> pivot_rows;  // size k
  IntMatrix transform;                // cols(m) x cols(m), unimodular
};

ColumnEchelon column_echelon(const IntMatrix& m);

/// Z-basis (as columns) of {x in Z^cols : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

// ---------------------------------------------------------------------------
// Rational linear algebra

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Some x with a*x = b over Q (the unique one when a has full column rank),
/// or nothing when the system is inconsistent.
std::optional<RatVector> solve_rational(const IntMatrix& a, const RatVector& b);
std::optional<RatVector> solve_rational(const RatMatrix& a, const RatVector& b);
/// Column-wise solve of a*X = B.
std::optional<RatMatrix> solve_rational(const RatMatrix& a, const RatMatrix& b);

/// Requires a square invertible matrix.
RatMatrix inverse(const RatMatrix& m);
IntMatrix inverse_unimodular(const IntMatrix& m);
Int determinant(const IntMatrix& m);

// ---------------------------------------------------------------------------

/// Z^n modulo the span of the columns of a relation matrix.
class QuotientLattice {
 public:
  QuotientLattice(std::size_t ambient_rank, IntMatrix relations);

  std::size_t ambient_rank() const { return n_; }
  const IntMatrix& relations() const { return relations_; }
  const SmithForm& smith() const { return snf_; }

  /// Unique representative of the coset of v.
  IntVector canonical(const IntVector& v) const;
  bool equivalent(const IntVector& a, const IntVector& b) const;
  bool contains(const IntVector& v) const;

  /// Invariant factors > 1; empty means torsion-free.
  std::vector<Int> torsion_invariants() const;
  std::size_t free_rank() const;

  /// Coordinates in Z/d_1 x ... x Z/d_t x Z^f (torsion entries reduced into
  /// [0, d_k)); generator_lifts() lists lifts of the matching generators.
  IntVector coordinates(const IntVector& v) const;
  std::vector<IntVector> generator_lifts() const;
  /// Every element of the torsion subgroup, as lifts (free coordinates 0).
  std::vector<IntVector> torsion_elements() const;

 private:
  std::size_t n_;
  IntMatrix relations_;
  ColumnEchelon echelon_;
  SmithForm snf_;
  IntMatrix u_inverse_;
  std::vector<std::size_t> torsion_index_;
  std::vector<std::size_t> free_index_;
};

}  // namespace levi_slope
