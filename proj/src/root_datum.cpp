#include "levi_slope/root_datum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace levi_slope {

std::optional<Isogeny> parse_isogeny(std::string_view s) {
  if (s == "adjoint" || s == "ad") return Isogeny::adjoint;
  if (s == "simply_connected" || s == "sc") return Isogeny::simply_connected;
  return std::nullopt;
}

std::string to_string(Isogeny iso) {
  return iso == Isogeny::adjoint ? "adjoint" : "simply_connected";
}

std::string DynkinComponent::label() const {
  return std::string(1, type) + std::to_string(rank);
}

std::string levi_label(const std::vector<DynkinComponent>& components) {
  if (components.empty()) return "torus";
  std::vector<std::pair<char, int>> parts;
  for (const auto& c : components) parts.emplace_back(c.type, c.rank);
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& [t, r] : parts) {
    if (!out.empty()) out += "x";
    out += std::string(1, t) + std::to_string(r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cartan classification

namespace {

[[noreturn]] void not_finite(const std::string& why) {
  throw InvalidInput("Cartan matrix is not of finite type: " + why);
}

DynkinComponent classify_block(const IntMatrix& c,
                               const std::vector<std::size_t>& nodes) {
  const std::size_t k = nodes.size();
  DynkinComponent comp;
  comp.rank = static_cast<int>(k);
  comp.nodes = nodes;
  if (k == 1) {
    comp.type = 'A';
    return comp;
  }

  std::map<std::size_t, std::vector<std::size_t>> adj;
  std::size_t edges = 0;
  int doubles = 0;
  int triples = 0;
  std::pair<std::size_t, std::size_t> multi_edge{0, 0};
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      const std::size_t i = nodes[a], j = nodes[b];
      if (c(i, j) == 0) continue;
      ++edges;
      adj[i].push_back(j);
      adj[j].push_back(i);
      const Int p = c(i, j) * c(j, i);
      if (p == 2) {
        ++doubles;
        multi_edge = {i, j};
      } else if (p == 3) {
        ++triples;
        multi_edge = {i, j};
      } else if (p != 1) {
        not_finite("edge weight " + p.get_str());
      }
    }
  if (edges != k - 1) not_finite("Dynkin diagram has a cycle");

  std::size_t max_degree = 0;
  for (auto n : nodes) max_degree = std::max(max_degree, adj[n].size());

  // leading principal minors must be positive
  for (std::size_t m = 1; m <= k; ++m) {
    std::vector<std::size_t> lead(nodes.begin(), nodes.begin() + m);
    if (determinant(c.select(lead, lead)) <= 0)
      not_finite("non-positive leading principal minor");
  }

  auto leaf_path = [&](std::size_t start) {
    std::vector<std::size_t> path{start};
    std::size_t prev = start, cur = start;
    while (true) {
      std::size_t next = cur;
      for (auto x : adj[cur])
        if (x != prev) next = x;
      if (next == cur) break;
      prev = cur;
      cur = next;
      path.push_back(cur);
    }
    return path;
  };

  if (triples) {
    if (k != 2 || doubles) not_finite("triple bond outside G2");
    comp.type = 'G';
    return comp;
  }
  if (doubles) {
    if (doubles > 1 || max_degree > 2) not_finite("bad double bond");
    const auto [i, j] = multi_edge;
    if (k == 2) {
      comp.type = c(i, j) == -2 ? 'B' : 'C';
      return comp;
    }
    const bool i_leaf = adj[i].size() == 1;
    const bool j_leaf = adj[j].size() == 1;
    if (i_leaf || j_leaf) {
      const std::size_t leaf = j_leaf ? j : i;
      const std::size_t inner = j_leaf ? i : j;
      // B: the leaf is the short root, i.e. <alpha_inner, coroot_leaf> = -2
      comp.type = c(inner, leaf) == -2 ? 'B' : 'C';
      return comp;
    }
    if (k == 4) {
      comp.type = 'F';
      return comp;
    }
    not_finite("double bond in the middle of a long chain");
  }

  if (max_degree <= 2) {
    comp.type = 'A';
    std::size_t start = nodes.back();
    for (auto n : nodes)
      if (adj[n].size() == 1) {
        start = n;
        break;
      }
    comp.nodes = leaf_path(start);
    return comp;
  }
  std::size_t branch = k;
  for (auto n : nodes)
    if (adj[n].size() == 3) {
      if (branch != k) not_finite("two branch nodes");
      branch = n;
    } else if (adj[n].size() > 3) {
      not_finite("node of degree > 3");
    }
  std::vector<std::size_t> arms;
  for (auto start : adj[branch]) {
    std::size_t len = 1, prev = branch, cur = start;
    while (adj[cur].size() == 2) {
      std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) {
    comp.type = 'D';
  } else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
    comp.type = 'E';
  } else {
    not_finite("branched diagram of infinite type");
  }
  return comp;
}

}  // namespace

std::vector<DynkinComponent> classify_cartan(
    const IntMatrix& cartan, const std::vector<std::size_t>& nodes) {
  std::vector<DynkinComponent> out;
  std::set<std::size_t> remaining(nodes.begin(), nodes.end());
  while (!remaining.empty()) {
    std::vector<std::size_t> block;
    std::queue<std::size_t> q;
    q.push(*remaining.begin());
    remaining.erase(remaining.begin());
    while (!q.empty()) {
      auto i = q.front();
      q.pop();
      block.push_back(i);
      for (auto it = remaining.begin(); it != remaining.end();) {
        if (cartan(i, *it) != 0 || cartan(*it, i) != 0) {
          q.push(*it);
          it = remaining.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(block.begin(), block.end());
    out.push_back(classify_block(cartan, block));
  }
  return out;
}

std::vector<std::string> validate_root_datum(const IntMatrix& coroots,
                                             const IntMatrix& roots) {
  std::vector<std::string> bad;
  if (roots.rows() != coroots.cols() || roots.cols() != coroots.rows()) {
    bad.push_back("shape");
    return bad;
  }
  const std::size_t r = coroots.cols();
  if (rank(coroots) != r) bad.push_back("coroots_independent");
  if (rank(roots) != r) bad.push_back("roots_independent");
  const IntMatrix c = roots * coroots;
  bool diag_ok = true, sign_ok = true, zero_ok = true;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) {
        if (c(i, j) != 2) diag_ok = false;
      } else {
        if (c(i, j) > 0) sign_ok = false;
        if ((c(i, j) == 0) != (c(j, i) == 0)) zero_ok = false;
      }
    }
  if (!diag_ok) bad.push_back("cartan_diagonal");
  if (!sign_ok) bad.push_back("cartan_offdiagonal_nonpositive");
  if (!zero_ok) bad.push_back("cartan_zero_pattern");
  if (diag_ok && sign_ok && zero_ok) {
    std::vector<std::size_t> all(r);
    std::iota(all.begin(), all.end(), 0);
    try {
      classify_cartan(c, all);
    } catch (const InvalidInput&) {
      bad.push_back("cartan_finite_type");
    }
  }
  return bad;
}

RootDatum::RootDatum(std::string name, IntMatrix coroots, IntMatrix roots)
    : name_(std::move(name)),
      coroots_(std::move(coroots)),
      roots_(std::move(roots)) {
  if (roots_.rows() == 0 && roots_.cols() == 0)
    roots_ = IntMatrix(0, coroots_.rows());
  const auto bad = validate_root_datum(coroots_, roots_);
  if (!bad.empty()) {
    std::string msg = "invalid root datum '" + name_ + "':";
    for (const auto& b : bad) msg += " " + b;
    throw InvalidInput(msg);
  }
  cartan_ = roots_ * coroots_;
  std::vector<std::size_t> all(num_simple());
  std::iota(all.begin(), all.end(), 0);
  components_ = classify_cartan(cartan_, all);
}

Int RootDatum::pair_root(std::size_t i, const IntVector& v) const {
  if (v.size() != rank()) throw ContractViolation("pair_root: length mismatch");
  Int s = 0;
  for (std::size_t k = 0; k < rank(); ++k) s += roots_(i, k) * v[k];
  return s;
}

Rat RootDatum::pair_root(std::size_t i, const RatVector& v) const {
  if (v.size() != rank()) throw ContractViolation("pair_root: length mismatch");
  Rat s = 0;
  for (std::size_t k = 0; k < rank(); ++k) s += roots_(i, k) * v[k];
  return s;
}

// ---------------------------------------------------------------------------
// Constructors

IntMatrix standard_cartan(char type, int rank) {
  auto bad = [&] {
    throw InvalidInput("invalid simple type " + std::string(1, type) +
                       std::to_string(rank));
  };
  if (rank < 1) bad();
  switch (type) {
    case 'A': break;
    case 'B':
    case 'C':
      if (rank < 2) bad();
      break;
    case 'D':
      if (rank < 3) bad();
      break;
    case 'E':
      if (rank < 6 || rank > 8) bad();
      break;
    case 'F':
      if (rank != 4) bad();
      break;
    case 'G':
      if (rank != 2) bad();
      break;
    default: bad();
  }
  const auto n = static_cast<std::size_t>(rank);
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
  auto link = [&](std::size_t a, std::size_t b) {  // 1-based
    c(a - 1, b - 1) = -1;
    c(b - 1, a - 1) = -1;
  };
  switch (type) {
    case 'A':
      for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
      c(n - 2, n - 1) = -2;
      break;
    case 'C':
      for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
      c(n - 1, n - 2) = -2;
      break;
    case 'D':
      for (std::size_t i = 1; i + 1 < n; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case 'E':
      link(1, 3);
      link(2, 4);
      for (std::size_t i = 3; i < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(1, 2);
      link(2, 3);
      link(3, 4);
      c(1, 2) = -2;
      break;
    case 'G':
      c(0, 1) = -1;
      c(1, 0) = -3;
      break;
  }
  return c;
}

RootDatum build_simple(char type, int rank, Isogeny isogeny) {
  IntMatrix c = standard_cartan(type, rank);
  const std::string name = std::string(1, type) + std::to_string(rank) + "(" +
                           to_string(isogeny) + ")";
  const auto id = IntMatrix::identity(c.rows());
  if (isogeny == Isogeny::adjoint) return RootDatum(name, c, id);
  return RootDatum(name, id, c);
}

RootDatum build_gl(int n) {
  if (n < 1) throw InvalidInput("GL_n needs n >= 1");
  const auto m = static_cast<std::size_t>(n);
  IntMatrix coroots(m, m - 1);
  IntMatrix roots(m - 1, m);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    coroots(i, i) = 1;
    coroots(i + 1, i) = -1;
    roots(i, i) = 1;
    roots(i, i + 1) = -1;
  }
  return RootDatum("GL" + std::to_string(n), coroots, roots);
}

RootDatum product(const RootDatum& a, const RootDatum& b) {
  const std::size_t n = a.rank() + b.rank();
  const std::size_t r = a.num_simple() + b.num_simple();
  IntMatrix coroots(n, r);
  IntMatrix roots(r, n);
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.num_simple(); ++j) {
      coroots(i, j) = a.coroots()(i, j);
      roots(j, i) = a.roots()(j, i);
    }
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.num_simple(); ++j) {
      coroots(a.rank() + i, a.num_simple() + j) = b.coroots()(i, j);
      roots(a.num_simple() + j, a.rank() + i) = b.roots()(j, i);
    }
  return RootDatum(a.name() + " x " + b.name(), coroots, roots);
}

IntMatrix cartan_matrix(const RootDatum& d) { return d.roots() * d.coroots(); }

// ---------------------------------------------------------------------------

std::vector<PositiveRoot> positive_roots(const RootDatum& d) {
  const std::size_t r = d.num_simple();
  const IntMatrix& c = d.cartan();
  std::vector<IntVector> found;
  std::set<IntVector> seen;
  for (std::size_t i = 0; i < r; ++i) {
    IntVector e(r, 0);
    e[i] = 1;
    found.push_back(e);
    seen.insert(e);
  }
  for (std::size_t idx = 0; idx < found.size(); ++idx) {
    const IntVector beta = found[idx];
    for (std::size_t i = 0; i < r; ++i) {
      IntVector down = beta;
      int p = 0;
      while (true) {
        down[i] -= 1;
        if (!seen.count(down)) break;
        ++p;
      }
      Int pairing = 0;  // <beta, coroot_i>
      for (std::size_t j = 0; j < r; ++j) pairing += beta[j] * c(j, i);
      if (p - pairing > 0) {
        IntVector up = beta;
        up[i] += 1;
        if (seen.insert(up).second) found.push_back(up);
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const IntVector& a, const IntVector& b) {
    const Int ha = std::accumulate(a.begin(), a.end(), Int(0));
    const Int hb = std::accumulate(b.begin(), b.end(), Int(0));
    if (ha != hb) return ha < hb;
    return a < b;
  });
  std::vector<PositiveRoot> out;
  for (auto& coeff : found) {
    IntVector cov = coeff * d.roots();
    out.push_back(PositiveRoot{coeff, cov});
  }
  return out;
}

RatMatrix fundamental_weights(const RootDatum& d) {
  const std::size_t n = d.rank();
  const std::size_t r = d.num_simple();
  const IntMatrix central = integer_kernel(d.roots());  // n x (n - r)
  RatMatrix basis(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) basis(i, j) = d.coroots()(i, j);
    for (std::size_t j = 0; j < central.cols(); ++j)
      basis(i, r + j) = central(i, j);
  }
  // omega * basis = [I | 0]
  RatMatrix rhs(n, r);
  for (std::size_t j = 0; j < r; ++j) rhs(j, j) = 1;
  auto sol = solve_rational(basis.transpose(), rhs);
  if (!sol) throw InvariantViolation("fundamental weights: singular basis");
  return sol->transpose();
}

QuotientLattice pi1(const RootDatum& d) {
  return QuotientLattice(d.rank(), d.coroots());
}

Int weyl_order_formula(char type, int rank) {
  Int fact = 1;
  for (int i = 2; i <= rank; ++i) fact *= i;
  Int two_pow = 1;
  for (int i = 0; i < rank; ++i) two_pow *= 2;
  switch (type) {
    case 'A': return fact * (rank + 1);
    case 'B':
    case 'C': return two_pow * fact;
    case 'D': return two_pow * fact / 2;
    case 'E':
      if (rank == 6) return 51840;
      if (rank == 7) return 2903040;
      if (rank == 8) return Int(696729600);
      break;
    case 'F': return 1152;
    case 'G': return 12;
  }
  throw InvalidInput("no Weyl order formula for " + std::string(1, type) +
                     std::to_string(rank));
}

Int weyl_order_formula(const RootDatum& d) {
  Int o = 1;
  for (const auto& c : d.components()) o *= weyl_order_formula(c.type, c.rank);
  return o;
}

std::size_t positive_root_count_formula(char type, int rank) {
  const auto k = static_cast<std::size_t>(rank);
  switch (type) {
    case 'A': return k * (k + 1) / 2;
    case 'B':
    case 'C': return k * k;
    case 'D': return k * (k - 1);
    case 'E': return k == 6 ? 36 : k == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  throw InvalidInput("unknown type");
}

}  // namespace levi_slope
