#include "levi_slope/weyl_rel.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>

namespace levi_slope {

namespace {

using Row = std::vector<std::int64_t>;

Row root_row(const RootDatum& d, std::size_t i) {
  Row r(d.rank());
  for (std::size_t a = 0; a < d.rank(); ++a) r[a] = d.roots()(i, a).get_si();
  return r;
}

Row coroot_col(const RootDatum& d, std::size_t j) {
  Row c(d.rank());
  for (std::size_t a = 0; a < d.rank(); ++a) c[a] = d.coroots()(a, j).get_si();
  return c;
}

}  // namespace

namespace {

/// Orbit of a set of roots, each root stored as an index into the full root
/// list and each set as its sorted index tuple.
class RootSetOrbit {
 public:
  explicit RootSetOrbit(std::size_t set_size) : m_(set_size) {}

  std::size_t size() const { return parent_.size(); }
  std::span<const std::uint16_t> at(std::size_t k) const { return {sets_.data() + k * m_, m_}; }
  std::uint32_t parent(std::size_t k) const { return parent_[k]; }
  std::uint16_t via(std::size_t k) const { return via_[k]; }

  std::optional<std::size_t> find(std::span<const std::uint16_t> set) const {
    if (slots_.empty()) return std::nullopt;
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t pos = hash(set) & mask; slots_[pos] != 0; pos = (pos + 1) & mask) {
      const std::size_t idx = slots_[pos] - 1;
      if (std::equal(set.begin(), set.end(), sets_.begin() + idx * m_)) return idx;
    }
    return std::nullopt;
  }

  void add(std::span<const std::uint16_t> set, std::uint32_t parent, std::uint16_t via) {
    sets_.insert(sets_.end(), set.begin(), set.end());
    parent_.push_back(parent);
    via_.push_back(via);
    if (2 * size() > slots_.size()) {
      slots_.assign(std::max<std::size_t>(64, slots_.size() * 2), 0);
      for (std::size_t i = 0; i < size(); ++i) insert(i);
    } else {
      insert(size() - 1);
    }
  }

 private:
  std::uint64_t hash(std::span<const std::uint16_t> set) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto x : set) {
      h ^= x;
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return h;
  }
  void insert(std::size_t idx) {
    const std::size_t mask = slots_.size() - 1;
    std::size_t pos = hash(at(idx)) & mask;
    while (slots_[pos] != 0) pos = (pos + 1) & mask;
    slots_[pos] = static_cast<std::uint32_t>(idx + 1);
  }

  std::size_t m_;
  std::vector<std::uint16_t> sets_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint16_t> via_;
  std::vector<std::uint32_t> slots_;
};

}  // namespace

RelativeWeylGroup relative_weyl(const RootDatum& d, const Parabolic& j, std::uint64_t orbit_cap,
                                std::uint64_t group_cap) {
  check_parabolic(d, j);
  const std::size_t n = d.rank();
  const auto gens = simple_reflections(d);
  const Int w_order = weyl_order_formula(d);
  RelativeWeylGroup rw;
  rw.levi = j;

  auto table = std::make_shared<ElementTable>(regular_vector(d), true);
  table->close({}, group_cap);
  if (j.size() == d.num_simple() && !j.nodes.empty()) {
    // W acts simply transitively on bases, so only 1 fixes the whole base.
    if (!w_order.fits_ulong_p()) throw CapExceeded("Weyl group order too large");
    rw.orbit_size = w_order.get_ui();
    rw.table = std::move(table);
    return rw;
  }

  // All roots as covectors, and each simple reflection as a permutation of them.
  std::vector<Row> roots;
  for (const auto& pr : positive_roots(d)) {
    Row r(n), neg(n);
    for (std::size_t a = 0; a < n; ++a) {
      r[a] = pr.covector[a].get_si();
      neg[a] = -r[a];
    }
    roots.push_back(r);
    roots.push_back(neg);
  }
  if (roots.size() >= std::numeric_limits<std::uint16_t>::max())
    throw CapExceeded("too many roots for the orbit representation");
  std::map<Row, std::uint16_t> root_index;
  for (std::size_t x = 0; x < roots.size(); ++x)
    root_index.emplace(roots[x], static_cast<std::uint16_t>(x));
  std::vector<std::vector<std::uint16_t>> perm(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (const auto& r : roots) perm[g].push_back(root_index.at(gens[g].apply_row(r)));

  // Orbit of S = {alpha_i : i in J} under w.lambda = lambda w^{-1}; for a
  // reflection s this is lambda s. Point k is reached as u_k.S with
  // u_k = s_{via(k)} u_{parent(k)}.
  const std::size_t m = j.size();
  RootSetOrbit orbit(m);
  std::vector<std::uint16_t> s0;
  for (auto i : j.nodes) s0.push_back(root_index.at(root_row(d, i)));
  std::sort(s0.begin(), s0.end());
  orbit.add(s0, 0, 0);
  std::vector<std::uint16_t> image(m);
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const auto cur = orbit.at(k);
      for (std::size_t x = 0; x < m; ++x) image[x] = perm[g][cur[x]];
      std::sort(image.begin(), image.end());
      if (orbit.find(image)) continue;
      if (orbit.size() + 1 > orbit_cap)
        throw CapExceeded("root-set orbit exceeds cap of " + std::to_string(orbit_cap));
      orbit.add(image, static_cast<std::uint32_t>(k), static_cast<std::uint16_t>(g));
    }

  rw.orbit_size = orbit.size();
  const Int orbit_size(static_cast<unsigned long>(orbit.size()));
  if (w_order % orbit_size != 0) throw InvariantViolation("orbit size does not divide |W|");
  const Int target = w_order / orbit_size;
  if (target > Int(static_cast<unsigned long>(group_cap)))
    throw CapExceeded("relative Weyl group order " + target.get_str() + " exceeds cap of " +
                      std::to_string(group_cap));

  auto transversal = [&](std::size_t k, bool inverse) {
    WeylMatrix u = WeylMatrix::identity(n);
    for (std::size_t cur = k; cur != 0; cur = orbit.parent(cur))
      u = inverse ? gens[orbit.via(cur)] * u : u * gens[orbit.via(cur)];
    return u;
  };

  // Schreier generators u_m^{-1} s u_k for non-tree edges; only those outside
  // the current subgroup are kept. Stops once |H| reaches |W| / |orbit|.
  auto reached = [&] { return Int(static_cast<unsigned long>(table->size())) == target; };
  for (std::size_t k = 0; k < orbit.size() && !reached(); ++k) {
    const WeylMatrix uk = transversal(k, false);
    for (std::size_t g = 0; g < gens.size() && !reached(); ++g) {
      const auto cur = orbit.at(k);
      for (std::size_t x = 0; x < m; ++x) image[x] = perm[g][cur[x]];
      std::sort(image.begin(), image.end());
      const std::size_t to = *orbit.find(image);
      if (to != 0 && orbit.parent(to) == k && orbit.via(to) == g) continue;
      WeylMatrix sg = transversal(to, true) * gens[g] * uk;
      if (sg.is_identity() || table->contains(sg)) continue;
      table->extend(sg, group_cap);
      rw.generators.push_back(std::move(sg));
    }
  }
  if (!reached()) throw InvariantViolation("orbit-stabilizer mismatch: |orbit| * |H| != |W|");
  rw.table = std::move(table);
  return rw;
}

// ---------------------------------------------------------------------------
// Coxeter types

std::string CoxeterComponent::label() const {
  if (type == 'I') return "I2(" + std::to_string(m) + ")";
  return std::string(1, type) + std::to_string(rank);
}

Int coxeter_component_order(const CoxeterComponent& c) {
  auto fact = [](int k) {
    Int f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (c.type) {
    case 'A': return fact(c.rank + 1);
    case 'B':
    case 'C': return (Int(1) << c.rank) * fact(c.rank);
    case 'D': return (Int(1) << (c.rank - 1)) * fact(c.rank);
    case 'E':
      return c.rank == 6 ? Int(51840) : c.rank == 7 ? Int(2903040) : Int(696729600);
    case 'F': return 1152;
    case 'G': return 12;
    case 'H': return c.rank == 3 ? Int(120) : Int(14400);
    case 'I': return Int(2 * c.m);
    default: throw ContractViolation("unknown Coxeter type");
  }
}

namespace {

std::string join_labels(const std::vector<CoxeterComponent>& comps, bool c_convention) {
  if (comps.empty()) return "trivial";
  std::string out;
  for (const auto& c : comps) {
    if (!out.empty()) out += "x";
    if (c_convention && c.type == 'B' && c.rank >= 2)
      out += "C" + std::to_string(c.rank);
    else
      out += c.label();
  }
  return out;
}

}  // namespace

std::string CoxeterType::abstract_label() const {
  if (!classified) return "unclassified";
  const std::string base = join_labels(components, false);
  return generated_by_reflections ? base : "non-reflection(" + base + ")";
}

std::string CoxeterType::c_convention_label() const {
  if (!classified) return "unclassified";
  const std::string base = join_labels(components, true);
  return generated_by_reflections ? base : "non-reflection(" + base + ")";
}

Int CoxeterType::order() const {
  Int o = 1;
  for (const auto& c : components) o *= coxeter_component_order(c);
  return o;
}

std::string normalize_coxeter_label(const std::string& label) {
  std::vector<CoxeterComponent> comps;
  std::string cleaned;
  for (char ch : label)
    if (ch != '_' && ch != ' ' && ch != '{' && ch != '}') cleaned += ch;
  if (cleaned.empty() || cleaned == "trivial" || cleaned == "1") return "trivial";
  std::stringstream ss(cleaned);
  std::string tok;
  while (std::getline(ss, tok, 'x')) {
    if (tok.empty()) throw InvalidInput("bad Coxeter label: " + label);
    CoxeterComponent c;
    c.type = tok[0];
    if (c.type == 'I') {
      auto open = tok.find('(');
      if (open == std::string::npos) throw InvalidInput("bad Coxeter label: " + label);
      c.rank = 2;
      c.m = std::stoi(tok.substr(open + 1));
      if (c.m == 3) c = {'A', 2, 0};
      else if (c.m == 4) c = {'B', 2, 0};
      else if (c.m == 6) c = {'G', 2, 0};
      else if (c.m == 2) {
        comps.push_back({'A', 1, 0});
        c = {'A', 1, 0};
      }
    } else {
      if (tok.size() < 2 || std::string("ABCDEFGH").find(c.type) == std::string::npos)
        throw InvalidInput("bad Coxeter label: " + label);
      c.rank = std::stoi(tok.substr(1));
    }
    if (c.type == 'C') c.type = 'B';
    if (c.rank == 0) continue;
    if (c.type == 'B' && c.rank == 1) c.type = 'A';
    if (c.type == 'D' && c.rank == 2) {
      comps.push_back({'A', 1, 0});
      c = {'A', 1, 0};
    }
    if (c.type == 'D' && c.rank == 3) c = {'A', 3, 0};
    comps.push_back(c);
  }
  std::sort(comps.begin(), comps.end());
  return join_labels(comps, false);
}

namespace {

Int content(const IntVector& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

int element_order(const WeylMatrix& w, std::size_t bound) {
  WeylMatrix p = w;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (p.is_identity()) return static_cast<int>(k);
    p = p * w;
  }
  throw InvariantViolation("element order exceeds group order");
}

/// 4 cos^2(pi / m) for the crystallographic values, -1 otherwise.
int four_cos_sq(int m) {
  switch (m) {
    case 2: return 0;
    case 3: return 1;
    case 4: return 2;
    case 6: return 3;
    default: return -1;
  }
}

bool classify_component(const std::vector<std::size_t>& nodes,
                        const std::vector<std::vector<int>>& m, CoxeterComponent& out,
                        std::string& why) {
  const std::size_t c = nodes.size();
  if (c == 1) {
    out = {'A', 1, 0};
    return true;
  }
  if (c == 2) {
    const int mm = m[nodes[0]][nodes[1]];
    if (mm == 3) out = {'A', 2, 0};
    else if (mm == 4) out = {'B', 2, 0};
    else if (mm == 6) out = {'G', 2, 0};
    else out = {'I', 2, mm};
    return true;
  }
  std::map<std::size_t, std::vector<std::size_t>> adj;
  std::size_t edges = 0, e4 = 0, e5 = 0;
  for (auto a : nodes)
    for (auto b : nodes)
      if (a < b && m[a][b] >= 3) {
        adj[a].push_back(b);
        adj[b].push_back(a);
        ++edges;
        if (m[a][b] == 4) ++e4;
        else if (m[a][b] == 5) ++e5;
        else if (m[a][b] != 3) {
          why = "edge label " + std::to_string(m[a][b]) + " in a component of rank >= 3";
          return false;
        }
      }
  if (edges != c - 1) {
    why = "Coxeter graph is not a tree";
    return false;
  }
  std::vector<std::size_t> branch, leaves;
  for (auto a : nodes) {
    if (adj[a].size() >= 3) branch.push_back(a);
    if (adj[a].size() == 1) leaves.push_back(a);
  }
  const int rank = static_cast<int>(c);
  if (e4 + e5 == 0) {
    if (branch.empty()) {
      out = {'A', rank, 0};
      return true;
    }
    if (branch.size() == 1 && adj[branch[0]].size() == 3) {
      std::vector<int> arms;
      for (auto start : adj[branch[0]]) {
        int len = 1;
        std::size_t prev = branch[0], cur = start;
        while (adj[cur].size() == 2) {
          std::size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
          prev = cur;
          cur = nxt;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1) {
        out = {'D', rank, 0};
        return true;
      }
      if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
        out = {'E', rank, 0};
        return true;
      }
    }
    why = "simply laced graph of unknown shape";
    return false;
  }
  if (!branch.empty() || e4 + e5 != 1) {
    why = "graph with several labelled edges or a branch point";
    return false;
  }
  // A path with one labelled edge.
  std::size_t a = 0, b = 0;
  for (auto x : nodes)
    for (auto y : nodes)
      if (x < y && m[x][y] >= 4) a = x, b = y;
  const bool at_end = adj[a].size() == 1 || adj[b].size() == 1;
  if (e4 == 1) {
    if (at_end) {
      out = {'B', rank, 0};
      return true;
    }
    if (c == 4) {
      out = {'F', 4, 0};
      return true;
    }
  } else if (at_end && (c == 3 || c == 4)) {
    out = {'H', rank, 0};
    return true;
  }
  why = "path with a labelled edge in an unsupported position";
  return false;
}

}  // namespace

CoxeterType identify_coxeter_type(const RelativeWeylGroup& rw, const RootDatum& d) {
  CoxeterType ct;
  const std::size_t n = d.rank();
  const std::size_t r = d.num_simple();
  const auto& jn = rw.levi.nodes;
  const std::size_t k = r - jn.size();
  ct.rank_on_quotient = k;
  const std::size_t order = rw.order();
  if (order <= 1) return ct;

  // V = {v in coroot span : <alpha_j, v> = 0, j in J}, basis columns of B.
  IntMatrix basis = k == 0 ? IntMatrix(n, 0)
                           : d.coroots() * integer_kernel(d.cartan().select_rows(jn));
  std::vector<Row> jcoroots;
  for (auto j : jn) jcoroots.push_back(coroot_col(d, j));

  // Reflections on V: involutions with trace k - 2 there. The trace on V is the
  // full trace minus the central part (n - r) minus the fixed J-coroots.
  struct Reflection {
    WeylMatrix w;
    IntVector root;
  };
  std::vector<Reflection> refl;
  const long long central = static_cast<long long>(n - r);
  for (std::size_t idx = 1; idx < order; ++idx) {
    const WeylMatrix w = rw.element(idx);
    if (!(w * w).is_identity()) continue;
    long long tr = 0;
    for (std::size_t a = 0; a < n; ++a) tr += w(a, a);
    long long fixed = 0;
    for (const auto& c : jcoroots)
      if (w.apply(c) == c) ++fixed;
    if (tr - central - fixed != static_cast<long long>(k) - 2) continue;
    const IntMatrix diff = w.to_int_matrix() - IntMatrix::identity(n);
    const IntMatrix img = diff * basis;
    IntVector root;
    for (std::size_t c = 0; c < img.cols() && root.empty(); ++c) {
      IntVector col = img.column(c);
      if (!is_zero(col)) root = col;
    }
    if (root.empty()) throw InvariantViolation("reflection with no root on the quotient");
    const Int g = content(root);
    for (auto& x : root) x /= g;
    refl.push_back({w, root});
  }
  ct.reflection_count = refl.size();

  // Orientation: f(v) = sum v_a N^a with N beyond twice every |entry|.
  Int big = 1;
  for (const auto& t : refl)
    for (const auto& x : t.root) big = std::max(big, Int(abs(x)));
  const Int base = 2 * big + 1;
  auto functional = [&](const IntVector& v) {
    Int f = 0, p = 1;
    for (const auto& x : v) {
      f += x * p;
      p *= base;
    }
    return f;
  };
  for (auto& t : refl)
    if (functional(t.root) < 0)
      for (auto& x : t.root) x = -x;

  // Simple reflections: those making only their own positive root negative.
  std::vector<std::size_t> simple;
  for (std::size_t a = 0; a < refl.size(); ++a) {
    const WeylMatrix& w = refl[a].w;
    bool ok = true;
    for (std::size_t b = 0; b < refl.size() && ok; ++b)
      if (b != a && functional(w.apply(refl[b].root)) < 0) ok = false;
    if (ok) simple.push_back(a);
  }

  const std::size_t s = simple.size();
  ct.coxeter_matrix.assign(s, std::vector<int>(s, 1));
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = a + 1; b < s; ++b) {
      const WeylMatrix prod = refl[simple[a]].w * refl[simple[b]].w;
      const int mm = element_order(prod, order);
      ct.coxeter_matrix[a][b] = ct.coxeter_matrix[b][a] = mm;
    }

  // Cross-check the Coxeter matrix against a W_{M,G}-invariant form on V.
  if (s > 0) {
    const std::size_t kk = basis.cols();
    std::vector<__int128> acc(kk * kk, 0);
    std::vector<std::vector<std::int64_t>> bcols(kk, std::vector<std::int64_t>(n));
    for (std::size_t c = 0; c < kk; ++c)
      for (std::size_t a = 0; a < n; ++a) bcols[c][a] = basis(a, c).get_si();
    for (std::size_t idx = 0; idx < order; ++idx) {
      const WeylMatrix w = rw.element(idx);
      std::vector<std::vector<std::int64_t>> wb;
      for (std::size_t c = 0; c < kk; ++c) wb.push_back(w.apply(bcols[c]));
      for (std::size_t x = 0; x < kk; ++x)
        for (std::size_t y = 0; y < kk; ++y) {
          __int128 sum = 0;
          for (std::size_t a = 0; a < n; ++a) sum += static_cast<__int128>(wb[x][a]) * wb[y][a];
          acc[x * kk + y] += sum;
        }
    }
    RatMatrix form(kk, kk);
    for (std::size_t e = 0; e < kk * kk; ++e) {
      if (acc[e] > std::numeric_limits<long>::max() || acc[e] < std::numeric_limits<long>::min())
        throw InvariantViolation("invariant form entry exceeds 64 bits");
      form(e / kk, e % kk) = Rat(static_cast<long>(acc[e]));
    }
    std::vector<RatVector> coords;
    for (auto a : simple) {
      auto c = solve_rational(to_rational(basis), to_rational(refl[a].root));
      if (!c) throw InvariantViolation("reflection root outside the quotient space");
      coords.push_back(*c);
    }
    auto inner = [&](const RatVector& x, const RatVector& y) { return dot(x, form * y); };
    for (std::size_t a = 0; a < s && ct.classified; ++a)
      for (std::size_t b = a + 1; b < s; ++b) {
        const Rat ab = inner(coords[a], coords[b]);
        const int mm = ct.coxeter_matrix[a][b];
        if (ab > 0) {
          ct.classified = false;
          ct.failure = "two simple roots form an acute angle";
          break;
        }
        const int expect = four_cos_sq(mm);
        if (expect < 0) continue;
        const Rat c2 = 4 * ab * ab / (inner(coords[a], coords[a]) * inner(coords[b], coords[b]));
        if (c2 != Rat(expect)) {
          ct.classified = false;
          ct.failure = "invariant form disagrees with element orders";
          break;
        }
      }
  }

  // Components of the Coxeter graph.
  std::vector<int> comp(s, -1);
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t a = 0; a < s; ++a) {
    if (comp[a] >= 0) continue;
    std::vector<std::size_t> stack{a}, members;
    comp[a] = static_cast<int>(groups.size());
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (std::size_t y = 0; y < s; ++y)
        if (comp[y] < 0 && ct.coxeter_matrix[x][y] >= 3) {
          comp[y] = comp[a];
          stack.push_back(y);
        }
    }
    std::sort(members.begin(), members.end());
    groups.push_back(members);
  }
  for (const auto& g : groups) {
    CoxeterComponent c;
    std::string why;
    if (!classify_component(g, ct.coxeter_matrix, c, why)) {
      ct.classified = false;
      ct.failure = why;
      continue;
    }
    ct.components.push_back(c);
  }
  std::sort(ct.components.begin(), ct.components.end());
  if (ct.classified) {
    ct.generated_by_reflections = ct.order() == Int(static_cast<unsigned long>(order));
    if (!ct.generated_by_reflections)
      ct.failure = "reflections generate a proper subgroup of order " + ct.order().get_str();
  } else {
    ct.generated_by_reflections = false;
  }
  return ct;
}

// ---------------------------------------------------------------------------

bool acts_faithfully_on_quotient(const RootDatum& d, const RelativeWeylGroup& rw) {
  const IntMatrix ann =
      integer_kernel(d.coroots().select_columns(rw.levi.nodes).transpose());
  std::vector<Row> chars;
  for (std::size_t c = 0; c < ann.cols(); ++c) {
    Row row(d.rank());
    for (std::size_t a = 0; a < d.rank(); ++a) row[a] = ann(a, c).get_si();
    chars.push_back(row);
  }
  for (std::size_t idx = 1; idx < rw.order(); ++idx) {
    const WeylMatrix w = rw.element(idx);
    bool trivial = true;
    for (const auto& lam : chars)
      if (w.apply_row(lam) != lam) {
        trivial = false;
        break;
      }
    if (trivial) return false;
  }
  return true;
}

bool degree_invariance_condition(const RootDatum& d, const RelativeWeylGroup& rw,
                                 const Degree& deg) {
  if (deg.parabolic != rw.levi)
    throw ContractViolation("degree and relative Weyl group use different Levis");
  const QuotientLattice q = levi_quotient(d, rw.levi);
  // Fixing a point is closed under products, so the generators decide it.
  for (const auto& g : rw.generators)
    if (!q.equivalent(g.apply(deg.lift), deg.lift)) return false;
  return true;
}

bool w_fixes_minimal_degree(const RootDatum& d, const MinimalReduction& mr,
                            const RelativeWeylGroup& rw) {
  return degree_invariance_condition(d, rw, mr.degree);
}

}  // namespace levi_slope
