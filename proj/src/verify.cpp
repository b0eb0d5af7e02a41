#include "levi_slope/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

#include "levi_slope/group_spec.hpp"

namespace levi_slope {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kMaxReportedFailures = 20;

std::string vec_text(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

std::string nodes_text(const Parabolic& p) {
  std::string s = "{";
  const auto n = p.one_based();
  for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
  return s + "}";
}

/// (type, rank) pairs of every simple type with at most k simple roots.
std::vector<std::pair<char, int>> simple_types(int k) {
  std::vector<std::pair<char, int>> out;
  for (int r = 1; r <= k; ++r) out.push_back({'A', r});
  for (int r = 2; r <= k; ++r) out.push_back({'B', r});
  for (int r = 2; r <= k; ++r) out.push_back({'C', r});
  for (int r = 4; r <= k; ++r) out.push_back({'D', r});
  for (int r = 6; r <= std::min(k, 8); ++r) out.push_back({'E', r});
  if (k >= 4) out.push_back({'F', 4});
  if (k >= 2) out.push_back({'G', 2});
  return out;
}

template <class F>
CheckResult timed(const std::string& name, F&& body) {
  CheckResult r;
  r.name = name;
  const auto t0 = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

IntVector random_lift(std::mt19937_64& rng, std::size_t n, long bound) {
  IntVector v(n);
  for (auto& x : v) x = uniform(rng, -bound, bound);
  return v;
}

Parabolic random_subset(std::mt19937_64& rng, const std::vector<std::size_t>& pool) {
  std::vector<std::size_t> out;
  for (auto i : pool)
    if (uniform(rng, 0, 1)) out.push_back(i);
  return Parabolic::of(out);
}

IntVector add_coroots(const RootDatum& d, IntVector lift, const std::vector<long>& c) {
  for (std::size_t j = 0; j < d.num_simple(); ++j)
    for (std::size_t a = 0; a < d.rank(); ++a) lift[a] += Int(c[j]) * d.coroots()(a, j);
  return lift;
}

}  // namespace

void CheckResult::fail(const std::string& what) {
  passed = false;
  if (failures.size() < kMaxReportedFailures) failures.push_back(what);
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<CatalogueEntry> verification_catalogue(int max_simple) {
  std::vector<CatalogueEntry> out;
  for (auto [t, r] : simple_types(max_simple))
    for (auto iso : {Isogeny::adjoint, Isogeny::simply_connected}) {
      RootDatum d = build_simple(t, r, iso);
      for (const auto& lift : pi1(d).torsion_elements())
        out.push_back({d, lift, d.name() + " class " + vec_text(pi1(d).coordinates(lift))});
    }
  for (int n = 1; n <= max_simple; ++n) {
    RootDatum g = build_gl(n);
    for (long dd = 0; dd < n; ++dd) out.push_back({g, degree_lift(g, {dd}), g.name() + " d=" + std::to_string(dd)});
  }
  return out;
}

std::vector<RootDatum> catalogue_data(int max_simple) {
  std::vector<RootDatum> out;
  for (auto [t, r] : simple_types(max_simple))
    for (auto iso : {Isogeny::adjoint, Isogeny::simply_connected}) out.push_back(build_simple(t, r, iso));
  for (int n = 1; n <= max_simple; ++n) out.push_back(build_gl(n));
  if (max_simple >= 3) out.push_back(product(build_gl(2), build_simple('B', 2, Isogeny::adjoint)));
  return out;
}

CheckResult check_gl6_examples() {
  return timed("gl6_examples", [](CheckResult& r) {
    const RootDatum g = build_gl(6);
    const std::vector<std::vector<std::size_t>> expected = {
        {}, {1, 2, 3, 4, 5}, {1, 2, 4, 5}, {1, 3, 5}, {1, 2, 4, 5}, {1, 2, 3, 4, 5}};
    for (long dd = 0; dd < 6; ++dd) {
      ++r.cases;
      const auto mr = minimal_admissible(g, degree_lift(g, {dd}));
      if (mr.parabolic != Parabolic::from_one_based(expected[dd]))
        r.fail("GL6 d=" + std::to_string(dd) + ": nodes " + nodes_text(mr.parabolic));
      // Block degrees of the Levi are d/e on each of the e blocks.
      if (dd == 2 || dd == 3 || dd == 4) {
        const long e = std::gcd(6L, dd);
        IntVector blocks;
        Int acc = 0;
        for (std::size_t a = 0; a < 6; ++a) {
          acc += mr.degree.lift[a];
          if (a == 5 || !mr.parabolic.contains(a)) {
            blocks.push_back(acc);
            acc = 0;
          }
        }
        if (blocks != IntVector(static_cast<std::size_t>(e), Int(dd / e)))
          r.fail("GL6 d=" + std::to_string(dd) + ": block degrees " + vec_text(blocks));
      }
    }
  });
}

CheckResult check_gl_family_law(int max_n, const VerifyOptions& opts) {
  return timed("gl_family_law", [&](CheckResult& r) {
    std::vector<std::pair<int, long>> cases;
    for (int n = 1; n <= max_n; ++n)
      for (long dd = 0; dd < n; ++dd) cases.push_back({n, dd});
    std::vector<std::string> errors(cases.size());
    AnalysisOptions aopts;
    aopts.orbit_cap = opts.orbit_cap;
    aopts.weyl_cap = opts.weyl_cap;
    parallel_for(cases.size(), opts.jobs, [&](std::size_t i) {
      const auto [n, dd] = cases[i];
      const RootDatum g = build_gl(n);
      const Analysis a = analyze(g, degree_lift(g, {dd}), aopts);
      const long e = std::gcd(static_cast<long>(n), dd);
      const int block = static_cast<int>(n / e) - 1;
      std::string levi;
      for (long k = 0; k < e && block > 0; ++k) levi += (k ? "x" : "") + ("A" + std::to_string(block));
      if (levi.empty()) levi = "torus";
      Int fact = 1;
      for (long k = 2; k <= e; ++k) fact *= k;
      const std::string want_w = normalize_coxeter_label("A" + std::to_string(e - 1));
      std::string err;
      if (a.levi != levi) err += " levi " + a.levi + " (want " + levi + ")";
      if (a.weyl_type.abstract_label() != want_w)
        err += " W " + a.weyl_type.abstract_label() + " (want " + want_w + ")";
      if (Int(a.relative_weyl.order()) != fact) err += " |W| " + std::to_string(a.relative_weyl.order());
      if (!err.empty()) errors[i] = "GL" + std::to_string(n) + " d=" + std::to_string(dd) + ":" + err;
    });
    for (const auto& e : errors) {
      ++r.cases;
      if (!e.empty()) r.fail(e);
    }
  });
}

CheckResult check_oracle_equivalence(const std::vector<CatalogueEntry>& cat, unsigned jobs) {
  return timed("oracle_equivalence", [&](CheckResult& r) {
    std::vector<std::string> errors(cat.size());
    parallel_for(cat.size(), jobs, [&](std::size_t i) {
      const auto& c = cat[i];
      const auto fast = minimal_admissible(c.datum, c.lift);
      const auto slow = brute_force_minimal(c.datum, c.lift);
      if (fast.parabolic != slow.parabolic)
        errors[i] = c.label + ": " + nodes_text(fast.parabolic) + " vs oracle " + nodes_text(slow.parabolic);
      else if (!levi_quotient(c.datum, fast.parabolic).equivalent(fast.degree.lift, slow.degree.lift))
        errors[i] = c.label + ": degrees differ " + vec_text(fast.degree.lift) + " vs " +
                    vec_text(slow.degree.lift);
    });
    for (const auto& e : errors) {
      ++r.cases;
      if (!e.empty()) r.fail(e);
    }
  });
}

CheckResult check_uniqueness_exhaustive(int max_simple) {
  return timed("uniqueness_certificate", [&](CheckResult& r) {
    for (const auto& d : catalogue_data(max_simple)) {
      const std::size_t s = d.num_simple();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
        std::vector<std::size_t> nodes;
        for (std::size_t i = 0; i < s; ++i)
          if (mask >> i & 1) nodes.push_back(i);
        const Parabolic p = Parabolic::of(nodes);
        ++r.cases;
        if (!uniqueness_certificate(d, p)) r.fail(d.name() + " P=" + nodes_text(p));
      }
    }
  });
}

CheckResult check_table_invariance(const std::vector<TableRow>& rows) {
  return timed("table_invariance", [&](CheckResult& r) {
    for (const auto& row : rows) {
      ++r.cases;
      const std::string id = row.group + " deg " + row.degree;
      if (!row.faithful) r.fail(id + ": not faithful on the quotient");
      if (!row.fixes_degree) r.fail(id + ": does not fix the minimal degree");
      if (!row.generated_by_reflections) r.fail(id + ": not generated by reflections");
      if (normalize_coxeter_label(row.weyl_c_label) != row.weyl_abstract)
        r.fail(id + ": labels disagree " + row.weyl_c_label + " / " + row.weyl_abstract);
      if (!row.mirror_of.empty()) {
        auto it = std::find_if(rows.begin(), rows.end(), [&](const TableRow& o) {
          return o.group == row.group && o.degree == row.mirror_of;
        });
        if (it == rows.end())
          r.fail(id + ": mirror row missing");
        else if (it->levi != row.levi || it->weyl_abstract != row.weyl_abstract ||
                 it->weyl_order != row.weyl_order)
          r.fail(id + ": differs from its mirror row " + row.mirror_of);
      }
    }
  });
}

CheckResult check_choice_independence(const std::vector<RootDatum>& data, int trials,
                                      std::uint64_t seed) {
  return timed("choice_independence", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    for (const auto& d : data) {
      const RatMatrix omegas = fundamental_weights(d);
      // Covectors vanishing on every coroot; adding them keeps omega_i dual.
      const IntMatrix null = integer_kernel(d.coroots().transpose());
      for (int t = 0; t < trials; ++t) {
        ++r.cases;
        const IntVector lift = random_lift(rng, d.rank(), 6);
        std::vector<long> c(d.num_simple());
        for (auto& x : c) x = uniform(rng, -5, 5);
        const IntVector shifted = add_coroots(d, lift, c);
        const auto a = minimal_admissible(d, lift);
        const auto b = minimal_admissible(d, shifted);
        if (a.parabolic != b.parabolic ||
            !levi_quotient(d, a.parabolic).equivalent(a.degree.lift, b.degree.lift)) {
          r.fail(d.name() + " lift " + vec_text(lift) + " shifted " + vec_text(shifted));
          continue;
        }
        RatMatrix perturbed = omegas;
        for (std::size_t i = 0; i < perturbed.rows(); ++i)
          for (std::size_t k = 0; k < null.cols(); ++k) {
            const long m = uniform(rng, -3, 3);
            for (std::size_t a2 = 0; a2 < d.rank(); ++a2) perturbed(i, a2) += Rat(m) * Rat(null(a2, k));
          }
        if (slope_coefficients_via_weights(d, lift, perturbed) != a.s_coeffs)
          r.fail(d.name() + " lift " + vec_text(lift) + ": weight perturbation changes s");
      }
    }
  });
}

CheckResult check_slope_properties(const std::vector<RootDatum>& data, int instances,
                                   std::uint64_t seed) {
  return timed("slope_scalar_and_projection", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < instances; ++t) {
      const RootDatum& d = data[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(data.size()) - 1))];
      const Parabolic larger = random_subset(rng, Parabolic::full(d).nodes);
      const Parabolic smaller = random_subset(rng, larger.nodes);
      const IntVector lift = random_lift(rng, d.rank(), 7);
      ++r.cases;
      const std::string id = d.name() + " " + nodes_text(smaller) + " in " + nodes_text(larger) +
                             " lift " + vec_text(lift);
      if (!check_slope_scalar(d, Degree{smaller, lift}) || !check_slope_scalar(d, Degree{larger, lift}))
        r.fail(id + ": scalar property");
      if (!check_slope_proj(d, Degree{larger, lift}, smaller)) r.fail(id + ": projection property");
    }
  });
}

CheckResult check_slope_order(const std::vector<RootDatum>& data, int pairs, std::uint64_t seed) {
  return timed("slope_order", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < pairs; ++t) {
      const RootDatum& d = data[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(data.size()) - 1))];
      const Parabolic p = random_subset(rng, Parabolic::full(d).nodes);
      const RatVector x = to_rational(random_lift(rng, d.rank(), 7));
      // y - x: nonnegative rational on coroots outside P, arbitrary inside P.
      RatVector y = x;
      for (std::size_t j = 0; j < d.num_simple(); ++j) {
        const long num = p.contains(j) ? uniform(rng, -6, 6) : uniform(rng, 0, 6);
        const Rat c = Rat(num) / uniform(rng, 1, 3);
        for (std::size_t a = 0; a < d.rank(); ++a) y[a] += c * Rat(d.coroots()(a, j));
      }
      ++r.cases;
      if (!leq_pos_cone(d, slope(d, p, x), slope(d, p, y)))
        r.fail(d.name() + " P=" + nodes_text(p) + ": order not preserved");
    }
  });
}

CheckResult check_weyl_invariance(int max_simple) {
  return timed("weyl_invariance", [&](CheckResult& r) {
    std::mt19937_64 rng(7);
    for (const auto& d : catalogue_data(max_simple)) {
      if (d.num_simple() == 0) continue;
      const WeylGroup w = weyl_group(d, true);
      std::vector<IntVector> lifts = pi1(d).torsion_elements();
      for (int k = 0; k < 3; ++k) lifts.push_back(random_lift(rng, d.rank(), 5));
      for (const auto& lift : lifts) {
        const RatVector phi = slope(d, Parabolic::full(d), to_rational(lift));
        for (std::size_t e = 0; e < w.table().size(); ++e) {
          const WeylMatrix m = w.table().matrix(e);
          ++r.cases;
          if (slope(d, Parabolic::full(d), to_rational(m.apply(lift))) != phi || m.apply(phi) != phi) {
            r.fail(d.name() + " lift " + vec_text(lift) + ": slope not W-invariant");
            break;
          }
        }
      }
    }
  });
}

CheckResult check_stability_equivalence(const std::vector<CatalogueEntry>& cat) {
  return timed("stability_equivalence", [&](CheckResult& r) {
    for (const auto& c : cat) {
      ++r.cases;
      try {
        const auto v = stable_exists_typeA(c.datum, c.lift);
        if (v.exists_stable != stable_exists_minimal(c.datum, c.lift) || v.route_minimal != v.route_typeA)
          r.fail(c.label + ": routes disagree");
      } catch (const InvariantViolation& e) {
        r.fail(c.label + ": " + e.what());
      }
    }
  });
}

CheckResult check_type_a_inverse(int max_k) {
  return timed("type_a_inverse", [&](CheckResult& r) {
    for (int k = 2; k <= max_k; ++k) {
      ++r.cases;
      if (type_a_inverse_closed_form(k) != inverse(to_rational(standard_cartan('A', k - 1))))
        r.fail("k=" + std::to_string(k));
    }
  });
}

CheckResult check_injected_fault(const std::string& fault) {
  if (fault != "finite_type" && fault != "offdiagonal" && fault != "diagonal" && fault != "zero_pattern")
    throw InvalidInput("unknown fault '" + fault + "' (finite_type, offdiagonal, diagonal, zero_pattern)");
  return timed("injected_fault", [&](CheckResult& r) {
    const RootDatum base = build_simple('A', 3, Isogeny::simply_connected);
    IntMatrix coroots = base.coroots();
    IntMatrix roots = base.roots();  // equals the Cartan matrix for this datum
    if (fault == "finite_type")
      roots(0, 1) = -4;
    else if (fault == "offdiagonal")
      roots(0, 1) = 1;
    else if (fault == "diagonal")
      roots(1, 1) = 3;
    else
      roots(0, 2) = -1;
    ++r.cases;
    const auto bad = validate_root_datum(coroots, roots);
    for (const auto& b : bad) r.fail("A3 with mutated Cartan entry violates " + b);
    if (bad.empty()) r.fail("mutation went undetected");
  });
}

VerifyReport run_verify(const VerifyOptions& opts) {
  if (opts.max_rank < 1) throw InvalidInput("--max-rank must be at least 1");
  const int k = opts.max_rank;
  const auto cat = verification_catalogue(std::min<int>(k, kBruteForceMaxSimple));
  const auto data = catalogue_data(k);
  VerifyReport rep;
  rep.checks.push_back(check_gl6_examples());
  rep.checks.push_back(check_gl_family_law(k, opts));
  rep.checks.push_back(check_oracle_equivalence(cat, opts.jobs));
  rep.checks.push_back(check_uniqueness_exhaustive(std::min(k, 5)));
  if (opts.include_table) {
    TableOptions t;
    t.max_rank = k;
    t.orbit_cap = opts.orbit_cap;
    t.weyl_cap = opts.weyl_cap;
    t.jobs = opts.jobs;
    rep.checks.push_back(timed("table_rows", [&](CheckResult& r) {
      const auto rows = build_table(t);
      r.cases = rows.size();
      const auto inv = check_table_invariance(rows);
      r.passed = inv.passed;
      r.failures = inv.failures;
    }));
  }
  rep.checks.push_back(check_choice_independence(data, 100, opts.seed));
  rep.checks.push_back(check_slope_properties(data, 500, opts.seed + 1));
  rep.checks.push_back(check_slope_order(data, 500, opts.seed + 2));
  rep.checks.push_back(check_weyl_invariance(std::min(k, 3)));
  rep.checks.push_back(check_stability_equivalence(cat));
  rep.checks.push_back(check_type_a_inverse(12));
  return rep;
}

nlohmann::json verify_json(const VerifyReport& r, bool timing) {
  nlohmann::json checks = nlohmann::json::array();
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json j = {{"name", c.name}, {"passed", c.passed}, {"cases", c.cases},
                        {"failures", c.failures}};
    if (timing) j["seconds"] = c.seconds;
    checks.push_back(j);
    for (const auto& f : c.failures) failures.push_back({{"check", c.name}, {"detail", f}});
  }
  return {{"schema", 1}, {"passed", r.passed()}, {"checks", checks}, {"failures", failures}};
}

}  // namespace levi_slope
