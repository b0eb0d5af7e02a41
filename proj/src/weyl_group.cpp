#include "levi_slope/weyl_group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace levi_slope {

namespace {

std::int64_t to_i64(const Int& v) {
  if (!v.fits_slong_p())
    throw InvariantViolation("Weyl matrix entry exceeds 64-bit range");
  return v.get_si();
}

std::int64_t checked_mul_add(std::int64_t acc, std::int64_t a, std::int64_t b) {
  std::int64_t prod = 0, sum = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &sum))
    throw InvariantViolation("Weyl matrix arithmetic overflow");
  return sum;
}

template <class Narrow>
Narrow narrow(std::int64_t v, const char* what) {
  if (v < std::numeric_limits<Narrow>::min() || v > std::numeric_limits<Narrow>::max())
    throw InvariantViolation(std::string(what) + " does not fit compact storage");
  return static_cast<Narrow>(v);
}

}  // namespace

// ---------------------------------------------------------------------------
// WeylMatrix

WeylMatrix WeylMatrix::identity(std::size_t n) {
  WeylMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

WeylMatrix WeylMatrix::from_int_matrix(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ContractViolation("Weyl matrix must be square");
  WeylMatrix w(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) w(i, j) = to_i64(m(i, j));
  return w;
}

IntMatrix WeylMatrix::to_int_matrix() const {
  IntMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = static_cast<long>((*this)(i, j));
  return m;
}

bool WeylMatrix::is_identity() const { return *this == identity(n_); }

WeylMatrix WeylMatrix::transpose() const {
  WeylMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<std::int64_t> WeylMatrix::apply(std::span<const std::int64_t> v) const {
  if (v.size() != n_) throw ContractViolation("WeylMatrix::apply: size mismatch");
  std::vector<std::int64_t> out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < n_; ++j)
      if (a_[i * n_ + j] != 0) acc = checked_mul_add(acc, a_[i * n_ + j], v[j]);
    out[i] = acc;
  }
  return out;
}

IntVector WeylMatrix::apply(const IntVector& v) const {
  if (v.size() != n_) throw ContractViolation("WeylMatrix::apply: size mismatch");
  IntVector out(n_, Int(0));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (a_[i * n_ + j] != 0) out[i] += Int(static_cast<long>(a_[i * n_ + j])) * v[j];
  return out;
}

RatVector WeylMatrix::apply(const RatVector& v) const {
  if (v.size() != n_) throw ContractViolation("WeylMatrix::apply: size mismatch");
  RatVector out(n_, Rat(0));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (a_[i * n_ + j] != 0) out[i] += Rat(static_cast<long>(a_[i * n_ + j])) * v[j];
  return out;
}

std::vector<std::int64_t> WeylMatrix::apply_row(std::span<const std::int64_t> row) const {
  if (row.size() != n_) throw ContractViolation("WeylMatrix::apply_row: size mismatch");
  std::vector<std::int64_t> out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (row[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (a_[i * n_ + j] != 0) out[j] = checked_mul_add(out[j], row[i], a_[i * n_ + j]);
  }
  return out;
}

WeylMatrix operator*(const WeylMatrix& a, const WeylMatrix& b) {
  if (a.n_ != b.n_) throw ContractViolation("WeylMatrix product: size mismatch");
  const std::size_t n = a.n_;
  WeylMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t x = a.a_[i * n + k];
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        c.a_[i * n + j] = checked_mul_add(c.a_[i * n + j], x, b.a_[k * n + j]);
    }
  return c;
}

// ---------------------------------------------------------------------------

WeylMatrix simple_reflection(const RootDatum& d, std::size_t i) {
  if (i >= d.num_simple()) throw ContractViolation("simple_reflection: index out of range");
  const std::size_t n = d.rank();
  WeylMatrix s = WeylMatrix::identity(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      s(a, b) -= to_i64(d.coroots()(a, i)) * to_i64(d.roots()(i, b));
  return s;
}

std::vector<WeylMatrix> simple_reflections(const RootDatum& d) {
  std::vector<WeylMatrix> gens;
  for (std::size_t i = 0; i < d.num_simple(); ++i) gens.push_back(simple_reflection(d, i));
  return gens;
}

std::vector<std::int64_t> regular_vector(const RootDatum& d) {
  const std::size_t r = d.num_simple();
  const std::size_t n = d.rank();
  std::vector<std::int64_t> x(n, 0);
  if (r == 0) return x;
  // c = C^{-1} (1,...,1), scaled to clear denominators; x = coroots * c.
  auto c = solve_rational(d.cartan(), RatVector(r, Rat(1)));
  if (!c) throw InvariantViolation("Cartan matrix is singular");
  Int den = 1;
  for (const auto& q : *c) den = lcm(den, Int(q.get_den()));
  IntVector ci(r);
  for (std::size_t j = 0; j < r; ++j) ci[j] = Int((*c)[j] * den);
  const IntVector xv = d.coroots() * ci;
  for (std::size_t a = 0; a < n; ++a) x[a] = to_i64(xv[a]);
  return x;
}

// ---------------------------------------------------------------------------
// ElementTable

ElementTable::ElementTable(std::vector<std::int64_t> regular, bool store_matrices)
    : dim_(regular.size()), regular_(std::move(regular)), store_matrices_(store_matrices) {}

std::uint64_t ElementTable::hash_key(std::span<const std::int32_t> key) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto v : key) {
    h ^= static_cast<std::uint32_t>(v);
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return h;
}

std::span<const std::int32_t> ElementTable::key(std::size_t idx) const {
  return {keys_.data() + idx * dim_, dim_};
}

std::optional<std::size_t> ElementTable::find_key(std::span<const std::int32_t> key) const {
  if (slots_.empty()) return std::nullopt;
  const std::size_t mask = slots_.size() - 1;
  std::size_t pos = hash_key(key) & mask;
  while (slots_[pos] != 0) {
    const std::size_t idx = slots_[pos] - 1;
    if (std::equal(key.begin(), key.end(), keys_.begin() + idx * dim_)) return idx;
    pos = (pos + 1) & mask;
  }
  return std::nullopt;
}

void ElementTable::insert_slot(std::size_t idx) {
  const std::size_t mask = slots_.size() - 1;
  std::size_t pos = hash_key(key(idx)) & mask;
  while (slots_[pos] != 0) pos = (pos + 1) & mask;
  slots_[pos] = static_cast<std::uint32_t>(idx + 1);
}

void ElementTable::grow() {
  std::size_t cap = std::max<std::size_t>(64, slots_.size() * 2);
  slots_.assign(cap, 0);
  for (std::size_t i = 0; i < size(); ++i) insert_slot(i);
}

void ElementTable::push(std::span<const std::int64_t> k, std::uint32_t parent,
                        std::uint16_t via, const WeylMatrix* m) {
  if (size() + 1 > cap_) throw CapExceeded("group order exceeds cap of " + std::to_string(cap_));
  for (auto v : k) keys_.push_back(narrow<std::int32_t>(v, "orbit key"));
  if (store_matrices_)
    for (auto v : m->data()) mats_.push_back(narrow<std::int16_t>(v, "matrix entry"));
  parent_.push_back(parent);
  via_.push_back(via);
  if (2 * size() > slots_.size())
    grow();
  else
    insert_slot(size() - 1);
}

void ElementTable::set_cap(std::uint64_t cap) {
  cap_ = std::min<std::uint64_t>(cap, std::numeric_limits<std::uint32_t>::max() - 1);
}

void ElementTable::close(const std::vector<WeylMatrix>& gens, std::uint64_t cap) {
  if (gens.size() > std::numeric_limits<std::uint16_t>::max())
    throw ContractViolation("too many generators");
  set_cap(cap);
  gens_ = gens;
  keys_.clear();
  mats_.clear();
  parent_.clear();
  via_.clear();
  slots_.clear();
  WeylMatrix id = WeylMatrix::identity(dim_);
  push(regular_, 0, std::numeric_limits<std::uint16_t>::max(), &id);
  expand(0, 0);
}

void ElementTable::extend(const WeylMatrix& gen, std::uint64_t cap) {
  if (size() == 0) throw ContractViolation("extend requires a closed table");
  if (gens_.size() + 1 >= std::numeric_limits<std::uint16_t>::max())
    throw ContractViolation("too many generators");
  if (gen.dim() != dim_) throw ContractViolation("generator has the wrong size");
  set_cap(cap);
  gens_.push_back(gen);
  expand(size(), gens_.size() - 1);
}

// Elements below old_size are already closed under gens_[0, first_new); they
// only need the new generators. Everything added later needs all of them.
void ElementTable::expand(std::size_t old_size, std::size_t first_new) {
  const std::size_t n = dim_;
  const std::size_t nn = n * n;
  std::vector<std::int64_t> cur(n), next(n);
  std::vector<std::int32_t> next32(n);
  for (std::size_t idx = 0; idx < size(); ++idx) {
    for (std::size_t a = 0; a < n; ++a) cur[a] = keys_[idx * n + a];
    for (std::size_t g = idx < old_size ? first_new : 0; g < gens_.size(); ++g) {
      const auto& gm = gens_[g];
      bool fits = true;
      for (std::size_t a = 0; a < n; ++a) {
        std::int64_t acc = 0;
        for (std::size_t b = 0; b < n; ++b)
          if (gm(a, b) != 0) acc = checked_mul_add(acc, gm(a, b), cur[b]);
        next[a] = acc;
        if (acc < std::numeric_limits<std::int32_t>::min() ||
            acc > std::numeric_limits<std::int32_t>::max())
          fits = false;
        else
          next32[a] = static_cast<std::int32_t>(acc);
      }
      if (fits && find_key(next32)) continue;
      if (store_matrices_) {
        WeylMatrix pm(n);
        for (std::size_t e = 0; e < nn; ++e) pm(e / n, e % n) = mats_[idx * nn + e];
        WeylMatrix nm = gm * pm;
        push(next, static_cast<std::uint32_t>(idx), static_cast<std::uint16_t>(g), &nm);
      } else {
        push(next, static_cast<std::uint32_t>(idx), static_cast<std::uint16_t>(g), nullptr);
      }
    }
  }
}

std::optional<std::size_t> ElementTable::find(const WeylMatrix& m) const {
  if (m.dim() != dim_) throw ContractViolation("ElementTable::find: size mismatch");
  const auto k = m.apply(regular_);
  std::vector<std::int32_t> k32(dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    if (k[a] < std::numeric_limits<std::int32_t>::min() ||
        k[a] > std::numeric_limits<std::int32_t>::max())
      return std::nullopt;
    k32[a] = static_cast<std::int32_t>(k[a]);
  }
  return find_key(k32);
}

WeylMatrix ElementTable::matrix(std::size_t idx) const {
  if (idx >= size()) throw ContractViolation("ElementTable::matrix: index out of range");
  const std::size_t nn = dim_ * dim_;
  if (store_matrices_) {
    WeylMatrix m(dim_);
    for (std::size_t e = 0; e < nn; ++e) m(e / dim_, e % dim_) = mats_[idx * nn + e];
    return m;
  }
  // element(idx) = gens[via(idx)] * element(parent(idx)); walk to the root.
  WeylMatrix m = WeylMatrix::identity(dim_);
  while (idx != 0) {
    m = m * gens_[via_[idx]];
    idx = parent_[idx];
  }
  return m;
}

// ---------------------------------------------------------------------------
// WeylGroup

WeylGroup::WeylGroup(std::vector<WeylMatrix> generators, Int formula_order,
                     std::shared_ptr<const ElementTable> table)
    : generators_(std::move(generators)),
      formula_order_(std::move(formula_order)),
      table_(std::move(table)) {}

Int WeylGroup::order() const {
  if (table_) return Int(static_cast<unsigned long>(table_->size()));
  return formula_order_;
}

const ElementTable& WeylGroup::table() const {
  if (!table_) throw ContractViolation("Weyl group was not enumerated");
  return *table_;
}

std::vector<WeylMatrix> WeylGroup::elements() const {
  const auto& t = table();
  std::vector<WeylMatrix> out;
  out.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out.push_back(t.matrix(i));
  return out;
}

WeylGroup weyl_group(const RootDatum& d, bool enumerate, std::uint64_t cap) {
  auto gens = simple_reflections(d);
  Int formula = weyl_order_formula(d);
  if (!enumerate) return WeylGroup(std::move(gens), formula, nullptr);
  if (formula > Int(static_cast<unsigned long>(std::min<std::uint64_t>(cap, 1ULL << 62))))
    throw CapExceeded("Weyl group order " + formula.get_str() + " exceeds cap of " +
                      std::to_string(cap));
  auto table = std::make_shared<ElementTable>(regular_vector(d), false);
  table->close(gens, cap);
  return WeylGroup(std::move(gens), formula, std::move(table));
}

}  // namespace levi_slope
