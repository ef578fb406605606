#include <doctest.h>

#include <algorithm>
#include <random>

#include "density.hpp"
#include "numio.hpp"
#include "oracles.hpp"

using namespace rootdense;

TEST_SUITE("density") {

TEST_CASE("star_discrepancy examples") {
  CHECK(star_discrepancy({}) == 1);
  CHECK(star_discrepancy({mpq_class(1, 2)}) == mpq_class(1, 2));
  CHECK(star_discrepancy({mpq_class(1, 4), mpq_class(3, 4)}) == mpq_class(1, 4));
  CHECK_THROWS_AS(star_discrepancy({mpq_class(0)}), std::domain_error);
  CHECK_THROWS_AS(star_discrepancy({mpq_class(3, 2)}), std::domain_error);
}

TEST_CASE("star_discrepancy of centered grids is 1/(2N)") {
  for (unsigned long n : {1, 2, 5, 10}) {
    std::vector<mpq_class> grid;
    for (unsigned long i = 1; i <= n; ++i) {
      grid.emplace_back(2 * i - 1, 2 * n);
      grid.back().canonicalize();
    }
    mpq_class expected(1, 2 * n);
    expected.canonicalize();
    CHECK(star_discrepancy(grid) == expected);
  }
}

TEST_CASE("star_discrepancy equals the naive quadratic oracle on random sets") {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    size_t n = 1 + gen() % 50;
    std::vector<mpq_class> pts;
    for (size_t i = 0; i < n; ++i) {
      unsigned long den = 2 + gen() % 999;
      unsigned long num = 1 + gen() % (den - 1);
      pts.emplace_back(num, den);
      pts.back().canonicalize();
    }
    CHECK(star_discrepancy(pts) == oracles::star_discrepancy_naive(pts));
  }
}

TEST_CASE("enumerative report examples") {
  IntPoly f = IntPoly::parse("x^2+1");

  auto r = cover_report_enumerative(f, 10, mpq_class(1, 2));
  REQUIRE(r.intervals.size() == 2);
  CHECK(r.intervals[0].count == 1);  // 2/5
  CHECK(r.intervals[1].count == 2);  // 1/2 and 3/5
  CHECK(r.covered_count == 2);
  CHECK(r.point_count == 3);
  CHECK(r.max_p == 5);

  auto r2 = cover_report_enumerative(f, 4, mpq_class(1, 2));
  CHECK(r2.intervals[0].count == 0);
  CHECK(r2.intervals[1].count == 1);  // the point 1/2 lands in [1/2, 1)
  CHECK(r2.covered_count == 1);

  auto r3 = cover_report_enumerative(IntPoly::parse("x^3-x+3"), 3, mpq_class(1, 4));
  CHECK(r3.point_count == 2);  // 1/3 and 2/3
  CHECK(r3.covered_count == 2);
  CHECK(r3.intervals[1].count == 1);
  CHECK(r3.intervals[2].count == 1);
}

TEST_CASE("interval width must tile (0,1)") {
  IntPoly f = IntPoly::parse("x^2+1");
  CHECK_THROWS_AS(cover_report_enumerative(f, 10, mpq_class(3, 10)), std::domain_error);
  CHECK_THROWS_AS(cover_report_enumerative(f, 10, mpq_class(0)), std::domain_error);
  CHECK_THROWS_AS(cover_report_constructive(f, mpq_class(2, 3)), std::domain_error);
}

TEST_CASE("constructive report covers x^2+1 at eps 1/4 and embeds verified witnesses") {
  IntPoly f = IntPoly::parse("x^2+1");
  auto r = cover_report_constructive(f, mpq_class(1, 4));
  CHECK(r.covered_count == 4);
  for (const auto& row : r.intervals) {
    REQUIRE(row.witness.has_value());
    CHECK(row.status == "ok");
    CHECK(verify_witness(f, *row.witness));
    // the witness value lies inside the closed interval
    CHECK(row.witness->value() >= row.lo);
    CHECK(row.witness->value() <= row.hi);
  }
}

TEST_CASE("starved budget yields partial coverage with per-interval logs") {
  IntPoly f = IntPoly::parse("x^2+1");
  ScanOptions opt;
  opt.budget = Budget{3, 1};
  auto r = cover_report_constructive(f, mpq_class(1, 4), opt);
  CHECK(r.covered_count < 4);
  for (const auto& row : r.intervals) {
    if (!row.witness) {
      CHECK((row.status == "no_fraction" || row.status == "no_witness"));
    }
  }
}

TEST_CASE("enumerative and constructive reports agree on witnessed intervals") {
  IntPoly f = IntPoly::parse("x^2+1");
  auto cons = cover_report_constructive(f, mpq_class(1, 4));
  auto enu = cover_report_enumerative(f, 200, mpq_class(1, 4));
  for (size_t j = 0; j < cons.intervals.size(); ++j) {
    if (!cons.intervals[j].witness) continue;
    // a witnessed interval contains a point of A_f with p <= the report's max p
    CHECK(cons.intervals[j].witness->p <= cons.max_p);
    if (cons.intervals[j].witness->p <= 200) CHECK(enu.intervals[j].count >= 1);
  }
}

TEST_CASE("report rendering is deterministic across worker counts") {
  IntPoly f = IntPoly::parse("x^2+1");
  ScanOptions one;
  one.workers = 1;
  one.seed = 3;
  ScanOptions eight;
  eight.workers = 8;
  eight.seed = 3;
  auto r1 = cover_report_constructive(f, mpq_class(1, 8), one);
  auto r8 = cover_report_constructive(f, mpq_class(1, 8), eight);
  for (auto fmt : {ReportFormat::table, ReportFormat::csv, ReportFormat::json_lines})
    CHECK(render_report(r1, fmt) == render_report(r8, fmt));

  AfOptions a1;
  a1.workers = 1;
  AfOptions a8;
  a8.workers = 8;
  auto e1 = cover_report_enumerative(f, 2000, mpq_class(1, 10), a1);
  auto e8 = cover_report_enumerative(f, 2000, mpq_class(1, 10), a8);
  CHECK(render_report(e1, ReportFormat::csv) == render_report(e8, ReportFormat::csv));
}

TEST_CASE("format parsing") {
  CHECK(parse_report_format("table") == ReportFormat::table);
  CHECK(parse_report_format("csv") == ReportFormat::csv);
  CHECK(parse_report_format("json-lines") == ReportFormat::json_lines);
  CHECK_THROWS_AS(parse_report_format("yaml"), std::invalid_argument);
}

TEST_CASE("csv and json-lines carry one row per interval") {
  IntPoly f = IntPoly::parse("x^2+1");
  auto r = cover_report_enumerative(f, 100, mpq_class(1, 5));
  std::string csv = render_report(r, ReportFormat::csv);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);  // header + 5 rows
  CHECK(csv.rfind("index,lo,hi,count,covered\n", 0) == 0);
  std::string jl = render_report(r, ReportFormat::json_lines);
  CHECK(std::count(jl.begin(), jl.end(), '\n') == 6);  // meta + 5 rows
}

}  // TEST_SUITE
