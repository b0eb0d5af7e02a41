#include "levi_slope/lattice.hpp"

#include <algorithm>
#include <utility>

namespace levi_slope {

// ---------------------------------------------------------------------------
// Matrix

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ContractViolation("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

template <class T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows,
                               std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ContractViolation("ragged row list");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

template <class T>
Matrix<T> Matrix<T>::from_columns(const std::vector<std::vector<T>>& cols,
                                  std::size_t rows) {
  if (!cols.empty()) rows = cols.front().size();
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw ContractViolation("ragged column list");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

template <class T>
std::vector<T> Matrix<T>::row(std::size_t i) const {
  return std::vector<T>(data_.begin() + i * cols_,
                        data_.begin() + (i + 1) * cols_);
}

template <class T>
std::vector<T> Matrix<T>::column(std::size_t j) const {
  std::vector<T> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template <class T>
Matrix<T> Matrix<T>::select(const std::vector<std::size_t>& row_idx,
                            const std::vector<std::size_t>& col_idx) const {
  Matrix s(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      s(i, j) = (*this)(row_idx[i], col_idx[j]);
  return s;
}

template <class T>
Matrix<T> Matrix<T>::select_columns(
    const std::vector<std::size_t>& col_idx) const {
  std::vector<std::size_t> all(rows_);
  for (std::size_t i = 0; i < rows_; ++i) all[i] = i;
  return select(all, col_idx);
}

template <class T>
Matrix<T> Matrix<T>::select_rows(
    const std::vector<std::size_t>& row_idx) const {
  std::vector<std::size_t> all(cols_);
  for (std::size_t j = 0; j < cols_; ++j) all[j] = j;
  return select(row_idx, all);
}

template <class T>
bool Matrix<T>::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const T& x) { return x == 0; });
}

template <class T>
bool Matrix<T>::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

template <class T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j)
    std::swap((*this)(a, j), (*this)(b, j));
}

template <class T>
void Matrix<T>::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i)
    std::swap((*this)(i, a), (*this)(i, b));
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw ContractViolation("matrix product shape");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ContractViolation("matrix sum shape");
  Matrix<T> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ContractViolation("matrix difference shape");
  Matrix<T> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v) {
  if (a.cols() != v.size()) throw ContractViolation("matrix-vector shape");
  std::vector<T> r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
  return r;
}

template <class T>
std::vector<T> operator*(const std::vector<T>& v, const Matrix<T>& a) {
  if (a.rows() != v.size()) throw ContractViolation("vector-matrix shape");
  std::vector<T> r(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) r[j] += v[i] * a(i, j);
  }
  return r;
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw ContractViolation("dot product length");
  T s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template class Matrix<Int>;
template class Matrix<Rat>;
template IntMatrix operator*(const IntMatrix&, const IntMatrix&);
template RatMatrix operator*(const RatMatrix&, const RatMatrix&);
template IntMatrix operator+(const IntMatrix&, const IntMatrix&);
template RatMatrix operator+(const RatMatrix&, const RatMatrix&);
template IntMatrix operator-(const IntMatrix&, const IntMatrix&);
template RatMatrix operator-(const RatMatrix&, const RatMatrix&);
template IntVector operator*(const IntMatrix&, const IntVector&);
template RatVector operator*(const RatMatrix&, const RatVector&);
template IntVector operator*(const IntVector&, const IntMatrix&);
template RatVector operator*(const RatVector&, const RatMatrix&);
template Int dot(const IntVector&, const IntVector&);
template Rat dot(const RatVector&, const RatVector&);

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

RatVector to_rational(const IntVector& v) {
  return RatVector(v.begin(), v.end());
}

IntVector to_int_vector(const std::vector<long>& v) {
  return IntVector(v.begin(), v.end());
}

bool is_integral(const Rat& q) { return q.get_den() == 1; }

bool is_integral(const RatVector& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rat& q) { return is_integral(q); });
}

IntVector to_integral(const RatVector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_integral(v[i])) throw ContractViolation("vector is not integral");
    r[i] = v[i].get_num();
  }
  return r;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

std::string to_string(const Int& v) { return v.get_str(); }
std::string to_string(const Rat& v) { return v.get_str(); }

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int floor_mod(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// row dst -= q * row src
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

// col dst -= q * col src
void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

}  // namespace

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> diag(std::min(d.rows(), d.cols()));
  for (std::size_t i = 0; i < diag.size(); ++i) diag[i] = d(i, i);
  return diag;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    bool any_left = true;
    while (true) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 &&
              (pi == rows || abs(d(i, j)) < abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) {
        any_left = false;
        break;
      }
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_columns(t, pj);
      v.swap_columns(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);
        row_axpy(d, i, t, q);
        row_axpy(u, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        col_axpy(d, j, t, q);
        col_axpy(v, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      // pull the offending row up; the next pass shrinks the pivot
      row_axpy(d, t, bad, Int(-1));
      row_axpy(u, t, bad, Int(-1));
    }
    if (!any_left) break;
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }
  return SmithForm{std::move(u), std::move(d), std::move(v)};
}

// ---------------------------------------------------------------------------
// Column echelon form

ColumnEchelon column_echelon(const IntMatrix& m) {
  const std::size_t n = m.rows();
  const std::size_t k = m.cols();
  IntMatrix h = m;
  IntMatrix t = IntMatrix::identity(k);
  std::vector<std::size_t> pivots;
  std::size_t c = 0;
  for (std::size_t p = 0; p < n && c < k; ++p) {
    while (true) {
      std::size_t best = k;
      for (std::size_t j = c; j < k; ++j)
        if (h(p, j) != 0 && (best == k || abs(h(p, j)) < abs(h(p, best))))
          best = j;
      if (best == k) break;
      h.swap_columns(c, best);
      t.swap_columns(c, best);
      bool done = true;
      for (std::size_t j = c + 1; j < k; ++j) {
        if (h(p, j) == 0) continue;
        Int q = h(p, j) / h(p, c);
        col_axpy(h, j, c, q);
        col_axpy(t, j, c, q);
        if (h(p, j) != 0) done = false;
      }
      if (done) break;
    }
    if (h(p, c) == 0) continue;
    if (h(p, c) < 0) {
      for (std::size_t i = 0; i < n; ++i) h(i, c) = -h(i, c);
      for (std::size_t i = 0; i < k; ++i) t(i, c) = -t(i, c);
    }
    pivots.push_back(p);
    ++c;
  }
  std::vector<std::size_t> first(c);
  for (std::size_t j = 0; j < c; ++j) first[j] = j;
  return ColumnEchelon{h.select_columns(first), std::move(pivots), std::move(t)};
}

IntMatrix integer_kernel(const IntMatrix& m) {
  ColumnEchelon e = column_echelon(m);
  std::vector<std::size_t> tail;
  for (std::size_t j = e.pivot_rows.size(); j < m.cols(); ++j) tail.push_back(j);
  return e.transform.select_columns(tail);
}

// ---------------------------------------------------------------------------
// Rational linear algebra

namespace {

// In-place reduced row echelon form on the first `ncols` columns; returns the
// pivot columns.
std::vector<std::size_t> rref(RatMatrix& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    const Rat inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rat f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return rref(a, a.cols()).size();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

std::optional<RatMatrix> solve_rational(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows())
    throw ContractViolation("solve_rational: row count mismatch");
  const std::size_t n = a.cols();
  const std::size_t k = b.cols();
  RatMatrix aug(a.rows(), n + k);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
  }
  const auto pivots = rref(aug, n);
  for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (aug(i, n + j) != 0) return std::nullopt;
  RatMatrix x(n, k);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < k; ++j) x(pivots[r], j) = aug(r, n + j);
  return x;
}

std::optional<RatVector> solve_rational(const RatMatrix& a, const RatVector& b) {
  auto x = solve_rational(a, RatMatrix::from_columns({b}, b.size()));
  if (!x) return std::nullopt;
  return x->column(0);
}

std::optional<RatVector> solve_rational(const IntMatrix& a, const RatVector& b) {
  return solve_rational(to_rational(a), b);
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw ContractViolation("inverse: not square");
  if (rank(m) != m.rows()) throw ContractViolation("inverse: singular matrix");
  return *solve_rational(m, RatMatrix::identity(m.rows()));
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  RatMatrix inv = inverse(to_rational(m));
  IntMatrix r(inv.rows(), inv.cols());
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t j = 0; j < inv.cols(); ++j) {
      if (!is_integral(inv(i, j)))
        throw ContractViolation("inverse_unimodular: not unimodular");
      r(i, j) = inv(i, j).get_num();
    }
  return r;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ContractViolation("determinant: not square");
  RatMatrix a = to_rational(m);
  Rat det = 1;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      const Rat f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det.get_num();
}

// ---------------------------------------------------------------------------
// QuotientLattice

QuotientLattice::QuotientLattice(std::size_t ambient_rank, IntMatrix relations)
    : n_(ambient_rank), relations_(std::move(relations)) {
  if (relations_.rows() != n_) {
    if (relations_.rows() == 0 && relations_.cols() == 0)
      relations_ = IntMatrix(n_, 0);
    else
      throw ContractViolation("QuotientLattice: relation rows != ambient rank");
  }
  echelon_ = column_echelon(relations_);
  snf_ = smith_normal_form(relations_);
  u_inverse_ = inverse_unimodular(snf_.u);
  const auto diag = snf_.diagonal();
  std::size_t nonzero = 0;
  for (const auto& x : diag)
    if (x != 0) ++nonzero;
  for (std::size_t t = 0; t < nonzero; ++t)
    if (diag[t] > 1) torsion_index_.push_back(t);
  for (std::size_t t = nonzero; t < n_; ++t) free_index_.push_back(t);
}

IntVector QuotientLattice::canonical(const IntVector& v) const {
  if (v.size() != n_) throw ContractViolation("canonical: length mismatch");
  IntVector w = v;
  for (std::size_t j = 0; j < echelon_.pivot_rows.size(); ++j) {
    const std::size_t p = echelon_.pivot_rows[j];
    const Int& piv = echelon_.basis(p, j);
    Int q = floor_div(w[p], piv);
    if (q == 0) continue;
    for (std::size_t i = p; i < n_; ++i) w[i] -= q * echelon_.basis(i, j);
  }
  return w;
}

bool QuotientLattice::equivalent(const IntVector& a, const IntVector& b) const {
  return canonical(a) == canonical(b);
}

bool QuotientLattice::contains(const IntVector& v) const {
  return is_zero(canonical(v));
}

std::vector<Int> QuotientLattice::torsion_invariants() const {
  std::vector<Int> r;
  for (auto t : torsion_index_) r.push_back(snf_.d(t, t));
  return r;
}

std::size_t QuotientLattice::free_rank() const { return free_index_.size(); }

IntVector QuotientLattice::coordinates(const IntVector& v) const {
  if (v.size() != n_) throw ContractViolation("coordinates: length mismatch");
  const IntVector w = snf_.u * v;
  IntVector c;
  for (auto t : torsion_index_) c.push_back(floor_mod(w[t], snf_.d(t, t)));
  for (auto t : free_index_) c.push_back(w[t]);
  return c;
}

std::vector<IntVector> QuotientLattice::generator_lifts() const {
  std::vector<IntVector> g;
  for (auto t : torsion_index_) g.push_back(u_inverse_.column(t));
  for (auto t : free_index_) g.push_back(u_inverse_.column(t));
  return g;
}

std::vector<IntVector> QuotientLattice::torsion_elements() const {
  const auto gens = generator_lifts();
  const auto orders = torsion_invariants();
  std::vector<IntVector> out;
  std::vector<Int> counter(orders.size(), 0);
  while (true) {
    IntVector lift(n_, 0);
    for (std::size_t k = 0; k < orders.size(); ++k)
      for (std::size_t i = 0; i < n_; ++i) lift[i] += counter[k] * gens[k][i];
    out.push_back(lift);
    std::size_t k = 0;
    while (k < orders.size()) {
      if (++counter[k] < orders[k]) break;
      counter[k] = 0;
      ++k;
    }
    if (k == orders.size()) break;
  }
  return out;
}

}  // namespace levi_slope
