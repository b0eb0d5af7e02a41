#include "levi_slope/report.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <exception>
#include <sstream>
#include <thread>

#include "levi_slope/group_spec.hpp"

namespace levi_slope {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

nlohmann::json int_json(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

nlohmann::json int_vector_json(const IntVector& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

nlohmann::json rat_vector_json(const RatVector& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

nlohmann::json nodes_json(const Parabolic& p) {
  nlohmann::json a = nlohmann::json::array();
  for (auto i : p.one_based()) a.push_back(i);
  return a;
}

std::string nodes_text(const Parabolic& p) {
  std::string s = "{";
  const auto nodes = p.one_based();
  for (std::size_t i = 0; i < nodes.size(); ++i) s += (i ? "," : "") + std::to_string(nodes[i]);
  return s + "}";
}

/// Determinant degrees of the diagonal blocks of a standard GL_n Levi.
IntVector gl_block_degrees(const RootDatum& d, const Degree& deg) {
  IntVector blocks;
  Int acc = 0;
  for (std::size_t a = 0; a < d.rank(); ++a) {
    acc += deg.lift[a];
    if (a + 1 == d.rank() || !deg.parabolic.contains(a)) {
      blocks.push_back(acc);
      acc = 0;
    }
  }
  return blocks;
}

/// "A1xA3" -> "A_1\times A_3", "I2(5)" -> "I_2(5)".
std::string latex_label(const std::string& label) {
  if (label == "trivial" || label == "torus" || label == "unclassified") return "\\text{" + label + "}";
  std::string out;
  for (std::size_t i = 0; i < label.size(); ++i) {
    const char c = label[i];
    if (c == 'x') {
      out += "\\times ";
    } else if (std::isdigit(static_cast<unsigned char>(c)) && i > 0 &&
               std::isalpha(static_cast<unsigned char>(label[i - 1]))) {
      std::size_t j = i;
      while (j < label.size() && std::isdigit(static_cast<unsigned char>(label[j]))) ++j;
      out += "_{" + label.substr(i, j - i) + "}";
      i = j - 1;
    } else {
      out += c;
    }
  }
  return out;
}

std::string escape_latex(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#' || c == '{' || c == '}') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "md") return Format::md;
  if (s == "latex") return Format::latex;
  throw InvalidInput("unknown format '" + s + "' (json, md, latex)");
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

Analysis analyze(const RootDatum& d, const IntVector& lift, const AnalysisOptions& opts) {
  Analysis a;
  a.reduction = minimal_admissible(d, lift);
  a.levi = levi_label(classify_cartan(d.cartan(), a.reduction.parabolic.nodes));
  a.relative_weyl = relative_weyl(d, a.reduction.parabolic, opts.orbit_cap, opts.weyl_cap);
  a.weyl_type = identify_coxeter_type(a.relative_weyl, d);
  a.faithful = acts_faithfully_on_quotient(d, a.relative_weyl);
  a.fixes_degree = w_fixes_minimal_degree(d, a.reduction, a.relative_weyl);
  a.unique = uniqueness_certificate(d, a.reduction.parabolic);
  a.stability = stable_exists_typeA(d, lift);
  return a;
}

nlohmann::json analysis_report(const RootDatum& d, const IntVector& lift,
                               const AnalysisOptions& opts) {
  if (lift.size() != d.rank())
    throw InvalidInput("degree lift has " + std::to_string(lift.size()) + " entries, expected " +
                       std::to_string(d.rank()));
  const auto t0 = Clock::now();
  const Analysis a = analyze(d, lift, opts);
  const double total = seconds_since(t0);

  nlohmann::json j;
  j["schema"] = 1;

  const QuotientLattice fundamental = pi1(d);
  nlohmann::json torsion = nlohmann::json::array();
  for (const auto& t : fundamental.torsion_invariants()) torsion.push_back(int_json(t));
  nlohmann::json cartan = nlohmann::json::array();
  for (std::size_t i = 0; i < d.num_simple(); ++i) cartan.push_back(int_vector_json(d.cartan().row(i)));
  j["group"] = {{"name", d.name()},
                {"rank", d.rank()},
                {"num_simple", d.num_simple()},
                {"dynkin_type", d.dynkin_label()},
                {"cartan", cartan},
                {"pairing", "cartan[i][j] = <alpha_i, coroot_j>"},
                {"pi1", {{"torsion", torsion}, {"free_rank", fundamental.free_rank()}}}};

  j["degree"] = {{"lift", int_vector_json(lift)},
                 {"pi1_class", int_vector_json(fundamental.coordinates(lift))}};

  const auto& mr = a.reduction;
  j["minimal_parabolic"] = {{"nodes", nodes_json(mr.parabolic)},
                            {"levi", a.levi},
                            {"is_group", mr.parabolic.size() == d.num_simple()},
                            {"is_borel", mr.parabolic.size() == 0}};
  nlohmann::json degp = {{"lift", int_vector_json(mr.degree.lift)},
                         {"coordinates",
                          int_vector_json(levi_quotient(d, mr.parabolic).coordinates(mr.degree.lift))}};
  if (is_standard_gl(d)) degp["block_degrees"] = int_vector_json(gl_block_degrees(d, mr.degree));
  j["degree_P"] = degp;
  j["slope"] = rat_vector_json(mr.g_slope);
  j["s_coefficients"] = rat_vector_json(mr.s_coeffs);

  const auto& ct = a.weyl_type;
  nlohmann::json rw = {{"order", a.relative_weyl.order()},
                       {"orbit_size", a.relative_weyl.orbit_size},
                       {"type", ct.abstract_label()},
                       {"c_convention_label", ct.c_convention_label()},
                       {"classified", ct.classified},
                       {"generated_by_reflections", ct.generated_by_reflections},
                       {"reflections", ct.reflection_count},
                       {"rank_on_quotient", ct.rank_on_quotient},
                       {"coxeter_matrix", ct.coxeter_matrix},
                       {"faithful", a.faithful},
                       {"fixes_degree", a.fixes_degree}};
  if (!ct.failure.empty()) rw["failure"] = ct.failure;
  j["relative_weyl"] = rw;

  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : a.stability.adjoint_factors)
    factors.push_back({{"n", f.n}, {"d", int_json(f.d)}});
  j["stability"] = {{"exists_stable", a.stability.exists_stable},
                    {"route_minimal", a.stability.route_minimal},
                    {"route_typeA", a.stability.route_typeA},
                    {"all_type_a", a.stability.all_type_a},
                    {"adjoint_factors", factors}};
  j["uniqueness_certificate"] = a.unique;
  if (opts.timing) j["timing_seconds"] = total;
  return j;
}

std::string render_report(const nlohmann::json& r, Format f) {
  if (f == Format::json) return dump_json(r);
  auto str = [](const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  const auto& rw = r.at("relative_weyl");
  std::vector<std::pair<std::string, std::string>> rows = {
      {"group", str(r["group"]["name"])},
      {"Dynkin type", str(r["group"]["dynkin_type"])},
      {"degree lift", str(r["degree"]["lift"])},
      {"pi1 class", str(r["degree"]["pi1_class"])},
      {"minimal parabolic", str(r["minimal_parabolic"]["nodes"])},
      {"Levi", str(r["minimal_parabolic"]["levi"])},
      {"degree on P", str(r["degree_P"]["lift"])},
      {"slope", str(r["slope"])},
      {"W_{M,G} type", str(rw["type"])},
      {"W_{M,G} C-convention label", str(rw["c_convention_label"])},
      {"W_{M,G} order", str(rw["order"])},
      {"stable bundles exist", str(r["stability"]["exists_stable"])},
  };
  if (r["degree_P"].contains("block_degrees"))
    rows.insert(rows.begin() + 7, {"block degrees", str(r["degree_P"]["block_degrees"])});
  std::ostringstream out;
  if (f == Format::md) {
    out << "| field | value |\n|---|---|\n";
    for (const auto& [k, v] : rows) out << "| " << k << " | " << v << " |\n";
  } else {
    out << "\\begin{tabular}{|l|l|}\n\\hline\n";
    for (const auto& [k, v] : rows) out << escape_latex(k) << " & " << escape_latex(v) << " \\\\\n";
    out << "\\hline\n\\end{tabular}\n";
  }
  return out.str();
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& f) {
  if (jobs == 0) jobs = std::clamp(std::thread::hardware_concurrency(), 1u, 4u);
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(n, 1)));
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

namespace {

struct RowSpec {
  char family;
  int rank;
  std::string degree;
  std::string mirror_of;
  std::vector<long> coords;
};

std::vector<RowSpec> table_specs(const TableOptions& opts) {
  std::vector<RowSpec> specs;
  auto want = [&](char f) { return opts.families.find(f) != std::string::npos; };
  const int k = opts.max_rank;
  if (want('A'))
    for (int r = 1; r <= k; ++r)
      for (long dd = 1; dd <= r; ++dd) specs.push_back({'A', r, std::to_string(dd), "", {dd}});
  if (want('B'))
    for (int r = 2; r <= k; ++r) specs.push_back({'B', r, "1", "", {1}});
  if (want('C'))
    for (int r = 2; r <= k; ++r) specs.push_back({'C', r, "1", "", {1}});
  if (want('D'))
    for (int r = 4; r <= k; ++r) {
      if (r % 2 == 1) {
        specs.push_back({'D', r, "1", "", {1}});
        specs.push_back({'D', r, "2", "", {2}});
        specs.push_back({'D', r, "3", "1", {3}});
      } else {
        specs.push_back({'D', r, "(1,0)", "", {1, 0}});
        specs.push_back({'D', r, "(0,1)", "", {0, 1}});
        specs.push_back({'D', r, "(1,1)", "", {1, 1}});
      }
    }
  if (want('E')) {
    if (k >= 6) {
      specs.push_back({'E', 6, "1", "", {1}});
      specs.push_back({'E', 6, "2", "1", {2}});
    }
    if (k >= 7) specs.push_back({'E', 7, "1", "", {1}});
  }
  return specs;
}

}  // namespace

std::vector<TableRow> build_table(const TableOptions& opts) {
  for (char f : opts.families)
    if (std::string("ABCDE").find(f) == std::string::npos)
      throw InvalidInput(std::string("unknown family '") + f + "' (families are A B C D E)");
  const auto specs = table_specs(opts);
  std::vector<TableRow> rows(specs.size());
  AnalysisOptions aopts;
  aopts.orbit_cap = opts.orbit_cap;
  aopts.weyl_cap = opts.weyl_cap;
  parallel_for(specs.size(), opts.jobs, [&](std::size_t i) {
    const auto& s = specs[i];
    const RootDatum d = build_simple(s.family, s.rank, Isogeny::adjoint);
    TableRow row;
    row.family = s.family;
    row.rank = s.rank;
    row.group = std::string(1, s.family) + std::to_string(s.rank);
    row.degree = s.degree;
    row.mirror_of = s.mirror_of;
    row.lift = degree_lift(d, s.coords);
    const Analysis a = analyze(d, row.lift, aopts);
    row.parabolic = a.reduction.parabolic;
    row.levi = a.levi;
    row.weyl_abstract = a.weyl_type.abstract_label();
    row.weyl_c_label = a.weyl_type.c_convention_label();
    row.weyl_order = a.relative_weyl.order();
    row.orbit_size = a.relative_weyl.orbit_size;
    row.reflections = a.weyl_type.reflection_count;
    row.generated_by_reflections = a.weyl_type.generated_by_reflections;
    row.faithful = a.faithful;
    row.fixes_degree = a.fixes_degree;
    rows[i] = std::move(row);
  });
  return rows;
}

nlohmann::json table_json(const std::vector<TableRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"family", std::string(1, r.family)},
                   {"rank", r.rank},
                   {"group", r.group},
                   {"degree", r.degree},
                   {"mirror_of", r.mirror_of},
                   {"lift", int_vector_json(r.lift)},
                   {"nodes", nodes_json(r.parabolic)},
                   {"levi", r.levi},
                   {"weyl_type", r.weyl_abstract},
                   {"weyl_c_label", r.weyl_c_label},
                   {"weyl_order", int_json(r.weyl_order)},
                   {"orbit_size", r.orbit_size},
                   {"reflections", r.reflections},
                   {"generated_by_reflections", r.generated_by_reflections},
                   {"faithful", r.faithful},
                   {"fixes_degree", r.fixes_degree}});
  }
  return {{"schema", 1}, {"rows", arr}};
}

std::string render_table(const std::vector<TableRow>& rows, Format f) {
  if (f == Format::json) return dump_json(table_json(rows));
  std::ostringstream out;
  if (f == Format::md) {
    out << "| G | deg | Levi | nodes | W (C convention) | W (abstract) | order |\n"
        << "|---|---|---|---|---|---|---|\n";
    for (const auto& r : rows)
      out << "| " << r.group << " | " << r.degree << " | " << r.levi << " | "
          << nodes_text(r.parabolic) << " | " << r.weyl_c_label << " | " << r.weyl_abstract
          << " | " << r.weyl_order.get_str() << " |\n";
    return out.str();
  }
  out << "\\begin{tabular}{|c|c|c|c|c|c|}\n\\hline\n"
      << "$G$ & deg & Type of $M$ & nodes & Type of $W_{M,G}$ & $|W_{M,G}|$ \\\\\n\\hline\n";
  for (const auto& r : rows)
    out << "$" << latex_label(r.group) << "$ & $" << r.degree << "$ & $" << latex_label(r.levi)
        << "$ & $\\{" << nodes_text(r.parabolic).substr(1, nodes_text(r.parabolic).size() - 2)
        << "\\}$ & $" << latex_label(r.weyl_c_label) << "$ & " << r.weyl_order.get_str()
        << " \\\\\n";
  out << "\\hline\n\\end{tabular}\n";
  return out.str();
}

}  // namespace levi_slope
