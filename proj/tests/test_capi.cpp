// Exercises the shared library through its C interface only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rootdense.h>

#include <cstdio>
#include <string>

namespace {

struct Str {
  char* s = nullptr;
  ~Str() { rd_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct Poly {
  rd_poly* f = nullptr;
  explicit Poly(const char* text) { REQUIRE(rd_poly_parse(text, &f) == RD_OK); }
  ~Poly() { rd_poly_free(f); }
};

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("polynomial surface") {
  Poly f("x^2+1");
  CHECK(rd_poly_degree(f.f) == 2);
  Str text;
  CHECK(rd_poly_to_string(f.f, &text.s) == RD_OK);
  CHECK(text.str() == "1,0,1");

  Str val;
  CHECK(rd_poly_eval(f.f, "27", &val.s) == RD_OK);
  CHECK(val.str() == "730");

  Str rf;
  Poly g("x^3-x+3");
  CHECK(rd_fixed_divisor(g.f, &rf.s) == RD_OK);
  CHECK(rf.str() == "3");

  rd_poly* bad = nullptr;
  CHECK(rd_poly_parse("", &bad) == RD_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(std::string(rd_last_error()).find("malformed") != std::string::npos);

  rd_poly* conj = nullptr;
  REQUIRE(rd_conjugate_g(f.f, 3, 2, &conj) == RD_OK);
  Str ctext;
  CHECK(rd_poly_to_string(conj, &ctext.s) == RD_OK);
  CHECK(ctext.str() == "13,12,9");
  rd_poly_free(conj);
  CHECK(rd_conjugate_g(g.f, 3, 1, &conj) == RD_ERR_DOMAIN);
}

TEST_CASE("irreducibility and primality") {
  Poly f("x^4+1");
  int found = -1;
  uint64_t q = 99;
  CHECK(rd_irreducibility_witness(f.f, 200, &found, &q) == RD_OK);
  CHECK(found == 0);

  Poly g("x^2+1");
  CHECK(rd_irreducibility_witness(g.f, 50, &found, &q) == RD_OK);
  CHECK(found == 1);
  CHECK(q == 3);

  int prime = -1;
  CHECK(rd_is_prime("561", 0, &prime) == RD_OK);
  CHECK(prime == 0);
  CHECK(rd_is_prime("409", 0, &prime) == RD_OK);
  CHECK(prime == 1);
  CHECK(rd_is_prime("40x9", 0, &prime) == RD_ERR_PARSE);
}

TEST_CASE("roots and the root-set surface") {
  Poly f("x^2+1");
  Str roots;
  CHECK(rd_roots_mod_p(f.f, "13", 100000, 0, &roots.s) == RD_OK);
  CHECK(roots.str() == "5 8");
  CHECK(rd_roots_mod_p(f.f, "12", 100000, 0, &roots.s) == RD_ERR_DOMAIN);

  Str csv;
  CHECK(rd_af_points_csv(f.f, 10, 100000, 0, 1, &csv.s) == RD_OK);
  CHECK(csv.str() == "p,z,value\n2,1,0.500000000000\n5,2,0.400000000000\n5,3,0.600000000000\n");

  Str stats;
  CHECK(rd_af_stats(f.f, 100, 100000, 0, 2, &stats.s) == RD_OK);
  CHECK(stats.str().find("points: ") != std::string::npos);
  CHECK(stats.str().find("d_star_exact: ") != std::string::npos);
}

TEST_CASE("fractions and witnesses through the pipeline") {
  Poly f("x^2+1");
  int member = -1;
  CHECK(rd_bf_contains(f.f, 1, 3, &member) == RD_OK);
  CHECK(member == 1);
  CHECK(rd_bf_contains(f.f, 0, 3, &member) == RD_ERR_DOMAIN);

  uint64_t a = 0, b = 0, t = 0;
  CHECK(rd_select_fraction(f.f, "1/3", "0.01", 100, &a, &b) == RD_OK);
  CHECK(a == 1);
  CHECK(b == 3);
  CHECK(rd_solve_t(f.f, a, b, &t) == RD_OK);
  CHECK(t == 2);
  CHECK(rd_select_fraction(f.f, "0.999999", "1e-9", 5, &a, &b) == RD_ERR_EXHAUSTED);

  rd_witness* w = nullptr;
  REQUIRE(rd_find_witness(f.f, 1, 3, 2, 1, 10, 0, &w) == RD_OK);
  CHECK(rd_witness_w(w) == 2);
  Str p, z, gap, wtext;
  CHECK(rd_witness_p(w, &p.s) == RD_OK);
  CHECK(p.str() == "73");
  CHECK(rd_witness_z(w, &z.s) == RD_OK);
  CHECK(z.str() == "27");
  CHECK(rd_witness_gap(w, &gap.s) == RD_OK);
  CHECK(gap.str() == "8/219");
  CHECK(rd_witness_to_string(w, &wtext.s) == RD_OK);
  CHECK(wtext.str() == "a=1 b=3 t=2 w=2 p=73 z=27 gap=8/219 value=0.369863013699");
  int ok = 0;
  CHECK(rd_verify_witness(f.f, w, 0, &ok) == RD_OK);
  CHECK(ok == 1);
  rd_witness_free(w);
  w = nullptr;
  CHECK(rd_find_witness(f.f, 1, 3, 2, 3, 5, 0, &w) == RD_ERR_EXHAUSTED);

  rd_witness* aw = nullptr;
  Str log;
  REQUIRE(rd_approximate(f.f, "0.333", "0.06", 10000, 1000000, 0, 0, &aw, &log.s) == RD_OK);
  CHECK(rd_verify_witness(f.f, aw, 0, &ok) == RD_OK);
  CHECK(ok == 1);
  CHECK(log.str().find("stage=ok") != std::string::npos);
  rd_witness_free(aw);

  // the irreducibility gate blocks mod-every-prime reducibles unless asserted
  Poly h("x^4+1");
  rd_witness* hw = nullptr;
  CHECK(rd_approximate(h.f, "0.5", "0.2", 1000, 1000, 0, 0, &hw, nullptr) == RD_ERR_DOMAIN);

  rd_witness_list* list = nullptr;
  REQUIRE(rd_witness_sequence(f.f, 1, 3, 2, 3, 100, 0, &list) == RD_OK);
  CHECK(rd_witness_list_size(list) == 3);
  const rd_witness* w2 = rd_witness_list_get(list, 2);
  REQUIRE(w2 != nullptr);
  CHECK(rd_witness_w(w2) == 6);
  CHECK(rd_witness_list_get(list, 3) == nullptr);
  rd_witness_list_free(list);
}

TEST_CASE("reports and cache through the C surface") {
  Poly f("x^2+1");
  rd_report* rep = nullptr;
  REQUIRE(rd_scan_constructive(f.f, "0.25", 10000, 1000000, 0, 2, 0, &rep) == RD_OK);
  CHECK(rd_report_intervals(rep) == 4);
  CHECK(rd_report_covered(rep) == 4);
  Str table, csv, jl;
  CHECK(rd_report_render(rep, "table", &table.s) == RD_OK);
  CHECK(table.str().find("covered: 4/4") != std::string::npos);
  CHECK(rd_report_render(rep, "csv", &csv.s) == RD_OK);
  CHECK(rd_report_render(rep, "json-lines", &jl.s) == RD_OK);
  CHECK(rd_report_render(rep, "yaml", &table.s) == RD_ERR_PARSE);
  rd_report_free(rep);

  rd_report* enu = nullptr;
  REQUIRE(rd_scan_enumerative(f.f, 100, "0.5", 100000, 0, 1, &enu) == RD_OK);
  CHECK(rd_report_intervals(enu) == 2);
  rd_report_free(enu);

  const char* path = "rootdense_capi_cache.jsonl";
  std::remove(path);
  rd_witness* w = nullptr;
  REQUIRE(rd_find_witness(f.f, 1, 3, 2, 0, 10, 0, &w) == RD_OK);
  CHECK(rd_cache_append(path, f.f, w, 0) == RD_OK);
  CHECK(rd_cache_append(path, f.f, w, 0) == RD_OK);
  rd_witness_free(w);
  Str summary;
  uint64_t total = 0, ok_count = 0;
  CHECK(rd_cache_verify(path, 0, &summary.s, &total, &ok_count) == RD_OK);
  CHECK(total == 2);
  CHECK(ok_count == 2);
  std::remove(path);
  CHECK(rd_cache_verify(path, 0, nullptr, &total, &ok_count) == RD_ERR_IO);
}

TEST_CASE("brauer surface") {
  uint64_t run = 0;
  CHECK(rd_brauer_max_run(19, &run) == RD_OK);
  CHECK(run == 4);
  CHECK(rd_brauer_max_run(15, &run) == RD_ERR_DOMAIN);
  Str csv;
  int within = 0;
  CHECK(rd_brauer_scan(100, &csv.s, &within) == RD_OK);
  CHECK(within == 1);
  CHECK(csv.str().rfind("b,max_run\n3,1\n", 0) == 0);
}

TEST_CASE("status names") {
  CHECK(std::string(rd_status_name(RD_OK)) == "ok");
  CHECK(std::string(rd_status_name(RD_ERR_EXHAUSTED)) == "budget exhausted");
  CHECK(std::string(rd_version()) == "1.0.0");
}

}  // TEST_SUITE
