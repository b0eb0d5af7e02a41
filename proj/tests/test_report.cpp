#include "doctest.h"
#include "levi_slope/group_spec.hpp"
#include "levi_slope/report.hpp"

using namespace levi_slope;

TEST_CASE("analysis report for GL_6 in degree 2") {
  const auto j = analysis_report(build_gl(6), IntVector{0, 0, 0, 0, 0, 2});
  CHECK(j["schema"] == 1);
  CHECK(j["minimal_parabolic"]["nodes"] == nlohmann::json::array({1, 2, 4, 5}));
  CHECK(j["minimal_parabolic"]["levi"] == "A2xA2");
  CHECK(j["degree_P"]["block_degrees"] == nlohmann::json::array({1, 1}));
  CHECK(j["relative_weyl"]["type"] == "A1");
  CHECK(j["relative_weyl"]["order"] == 2);
  CHECK(j["stability"]["exists_stable"] == false);
  CHECK_FALSE(j.contains("timing_seconds"));
}

TEST_CASE("reports are byte-stable") {
  const RootDatum e6 = build_simple('E', 6, Isogeny::adjoint);
  const std::string a = dump_json(analysis_report(e6, degree_lift(e6, {1})));
  const std::string b = dump_json(analysis_report(e6, degree_lift(e6, {1})));
  CHECK(a == b);
  CHECK(a.find("\"schema\": 1") != std::string::npos);
}

TEST_CASE("line bundles are stable") {
  const auto j = analysis_report(build_gl(1), IntVector{7});
  CHECK(j["minimal_parabolic"]["is_group"] == true);
  CHECK(j["stability"]["exists_stable"] == true);
}

TEST_CASE("bad lifts are rejected") {
  CHECK_THROWS_AS(analysis_report(build_gl(3), IntVector{1, 2}), InvalidInput);
  CHECK_THROWS_AS(parse_format("yaml"), InvalidInput);
}

TEST_CASE("table rows and renderings") {
  TableOptions o;
  o.max_rank = 5;
  o.families = "BD";
  const auto rows = build_table(o);
  REQUIRE(rows.size() == 4 + 3 + 3);
  CHECK(rows[0].group == "B2");
  CHECK(rows[2].weyl_c_label == "C3");
  CHECK(rows[2].weyl_abstract == "B3");
  const auto& d5_2 = rows[8];
  CHECK(d5_2.group == "D5");
  CHECK(d5_2.degree == "2");
  CHECK(d5_2.levi == "A1xA1");
  CHECK(d5_2.weyl_order == 48);
  CHECK(rows[9].mirror_of == "1");
  CHECK(render_table(rows, Format::md).find("| D5 | 2 | A1xA1 | {4,5} | C3 | B3 | 48 |") != std::string::npos);
  CHECK(render_table(rows, Format::latex).find("A_{1}\\times A_{1}") != std::string::npos);
  CHECK(table_json(rows)["rows"].size() == rows.size());
  CHECK_THROWS_AS(build_table(TableOptions{3, "AZ"}), InvalidInput);
}

TEST_CASE("parallel_for rethrows and covers every index") {
  std::vector<int> hit(50, 0);
  parallel_for(hit.size(), 3, [&](std::size_t i) { hit[i] = 1; });
  CHECK(std::count(hit.begin(), hit.end(), 1) == 50);
  CHECK_THROWS_AS(parallel_for(5, 2, [](std::size_t i) {
                    if (i == 3) throw CapExceeded("x");
                  }),
                  CapExceeded);
}
