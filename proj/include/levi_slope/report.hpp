#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "levi_slope/stability.hpp"
#include "levi_slope/weyl_rel.hpp"

namespace levi_slope {

enum class Format { json, md, latex };

/// Throws InvalidInput for anything but json, md, latex.
Format parse_format(const std::string& s);

/// Orbit cap used for table rows and sweeps; D_9 in degree 1 needs ~1.9e6.
inline constexpr std::uint64_t kTableOrbitCap = 4'000'000;

struct AnalysisOptions {
  std::uint64_t orbit_cap = kDefaultOrbitCap;
  std::uint64_t weyl_cap = kDefaultWeylCap;
  bool timing = false;  // timing makes the output run-dependent, so it is opt-in
};

/// Everything the analysis computes for one (datum, lift) pair.
struct Analysis {
  MinimalReduction reduction;
  std::string levi;  // Dynkin label of the Levi, "torus" for the Borel
  RelativeWeylGroup relative_weyl;
  CoxeterType weyl_type;
  bool faithful = false;
  bool fixes_degree = false;
  bool unique = false;
  StabilityVerdict stability;
};

Analysis analyze(const RootDatum& d, const IntVector& lift, const AnalysisOptions& opts = {});

/// Versioned report ("schema": 1). Keys are sorted, lifts canonical.
nlohmann::json analysis_report(const RootDatum& d, const IntVector& lift,
                               const AnalysisOptions& opts = {});
std::string render_report(const nlohmann::json& report, Format f);

/// Serialization used for every JSON document the tool prints.
std::string dump_json(const nlohmann::json& j);

struct TableRow {
  char family = 'A';
  int rank = 0;           // number of simple roots
  std::string group;      // e.g. "D5"
  std::string degree;     // "1", "(0,1)", ...
  std::string mirror_of;  // degree of the row related by a diagram symmetry, or ""
  IntVector lift;
  Parabolic parabolic;
  std::string levi;
  std::string weyl_abstract;
  std::string weyl_c_label;
  Int weyl_order;
  std::uint64_t orbit_size = 0;
  std::size_t reflections = 0;
  bool generated_by_reflections = false;
  bool faithful = false;
  bool fixes_degree = false;
};

struct TableOptions {
  int max_rank = 8;
  std::string families = "ABCDE";
  std::uint64_t orbit_cap = kTableOrbitCap;
  std::uint64_t weyl_cap = kDefaultWeylCap;
  unsigned jobs = 0;  // 0 = hardware concurrency (capped)
};

/// Adjoint groups of each family up to max_rank simple roots, one row per
/// nonzero class of pi1. A_{n-1} rows run over d = 1..n-1.
std::vector<TableRow> build_table(const TableOptions& opts);
nlohmann::json table_json(const std::vector<TableRow>& rows);
std::string render_table(const std::vector<TableRow>& rows, Format f);

/// Runs f(i) for i in [0, n) on a small worker pool; rethrows the first
/// exception by index, so results are deterministic.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& f);

}  // namespace levi_slope
