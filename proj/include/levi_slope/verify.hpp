#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "levi_slope/report.hpp"

namespace levi_slope {

/// A (datum, lift) pair of the verification catalogue.
struct CatalogueEntry {
  RootDatum datum;
  IntVector lift;
  std::string label;  // e.g. "D5(adjoint) class (2)"
};

/// Simple types with at most max_simple simple roots, adjoint and simply
/// connected, one entry per element of pi1; plus GL_n for n <= max_simple with
/// d e_n for every d in [0, n).
std::vector<CatalogueEntry> verification_catalogue(int max_simple);

/// Data used by the exhaustive and randomized sweeps (one per datum, class 0).
std::vector<RootDatum> catalogue_data(int max_simple);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> failures;  // first few only
  double seconds = 0;

  void fail(const std::string& what);
};

struct VerifyOptions {
  int max_rank = 8;
  std::uint64_t seed = 0x5eed;
  unsigned jobs = 0;
  std::uint64_t orbit_cap = kTableOrbitCap;
  std::uint64_t weyl_cap = kDefaultWeylCap;
  bool include_table = true;
  bool timing = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

CheckResult check_gl6_examples();
CheckResult check_gl_family_law(int max_n, const VerifyOptions& opts);
CheckResult check_oracle_equivalence(const std::vector<CatalogueEntry>& cat, unsigned jobs);
CheckResult check_uniqueness_exhaustive(int max_simple);
CheckResult check_table_invariance(const std::vector<TableRow>& rows);
CheckResult check_choice_independence(const std::vector<RootDatum>& data, int trials,
                                      std::uint64_t seed);
CheckResult check_slope_properties(const std::vector<RootDatum>& data, int instances,
                                   std::uint64_t seed);
CheckResult check_slope_order(const std::vector<RootDatum>& data, int pairs, std::uint64_t seed);
CheckResult check_weyl_invariance(int max_simple);
CheckResult check_stability_equivalence(const std::vector<CatalogueEntry>& cat);
CheckResult check_type_a_inverse(int max_k);

VerifyReport run_verify(const VerifyOptions& opts);
nlohmann::json verify_json(const VerifyReport& r, bool timing);

/// Deliberately corrupts one Cartan entry of a fixed datum and reports the
/// violated invariants as a failed check.
CheckResult check_injected_fault(const std::string& fault);

}  // namespace levi_slope
