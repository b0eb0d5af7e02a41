#include "doctest.h"
#include "levi_slope/verify.hpp"

using namespace levi_slope;

namespace {
void require_pass(const CheckResult& r) {
  INFO(r.name);
  for (const auto& f : r.failures) INFO(f);
  CHECK(r.passed);
  CHECK(r.cases > 0);
}
}  // namespace

TEST_CASE("choice independence on small data, several seeds") {
  const auto data = catalogue_data(4);
  for (std::uint64_t seed : {1u, 2u, 3u}) require_pass(check_choice_independence(data, 20, seed));
}

TEST_CASE("slope properties and order preservation") {
  const auto data = catalogue_data(5);
  for (std::uint64_t seed : {11u, 12u}) {
    require_pass(check_slope_properties(data, 200, seed));
    require_pass(check_slope_order(data, 200, seed));
  }
}

TEST_CASE("W-invariance of the slope") { require_pass(check_weyl_invariance(3)); }

TEST_CASE("oracle and stability over a small catalogue") {
  const auto cat = verification_catalogue(5);
  require_pass(check_oracle_equivalence(cat, 2));
  require_pass(check_stability_equivalence(cat));
  require_pass(check_uniqueness_exhaustive(4));
}

TEST_CASE("fault injection is detected") {
  const auto r = check_injected_fault("finite_type");
  CHECK_FALSE(r.passed);
  REQUIRE(!r.failures.empty());
  CHECK(r.failures[0].find("cartan_finite_type") != std::string::npos);
  CHECK_THROWS_AS(check_injected_fault("nothing"), InvalidInput);
}

TEST_CASE("verify at rank 3 passes") {
  VerifyOptions o;
  o.max_rank = 3;
  const auto rep = run_verify(o);
  for (const auto& c : rep.checks) require_pass(c);
  CHECK(verify_json(rep, false)["passed"] == true);
}
