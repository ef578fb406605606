#include <doctest.h>

#include "oracles.hpp"
#include "rootsmodp.hpp"

using namespace rootdense;

namespace {

const std::vector<std::string> kCorpus = {"x^2+1", "x^2+x+2", "x^3-x+3", "x^3+2x+2", "x^4+x+1"};

std::vector<uint64_t> to_u64(const std::vector<mpz_class>& v) {
  std::vector<uint64_t> out;
  for (const auto& z : v) out.push_back(mpz_get_ui(z.get_mpz_t()));
  return out;
}

}  // namespace

TEST_SUITE("rootsmodp") {

TEST_CASE("roots_mod_p examples") {
  Rng rng(0);
  CHECK(to_u64(roots_mod_p(IntPoly::parse("x^2+1"), 13, 100000, rng)) == std::vector<uint64_t>{5, 8});
  CHECK(roots_mod_p(IntPoly::parse("x^2+1"), 7, 100000, rng).empty());
  CHECK(to_u64(roots_mod_p(IntPoly::parse("x^3-x+3"), 3, 100000, rng)) == std::vector<uint64_t>{0, 1, 2});
}

TEST_CASE("roots_mod_p rejects f vanishing mod p") {
  Rng rng(0);
  CHECK_THROWS_AS(roots_mod_p(IntPoly::parse("3,3,3"), 3, 100000, rng), std::domain_error);
  CHECK_THROWS_AS(roots_mod_p(IntPoly::parse("3,3,3"), 3, 0, rng), std::domain_error);
}

TEST_CASE("degree drop mod p is handled") {
  // 5x^2 + x + 1 mod 5 is x + 1: single root 4
  Rng rng(0);
  IntPoly f = IntPoly::parse("1,1,5");
  CHECK(to_u64(roots_mod_p(f, 5, 100000, rng)) == std::vector<uint64_t>{4});
  CHECK(to_u64(roots_mod_p(f, 5, 0, rng)) == std::vector<uint64_t>{4});
  // 5x^2 + 1 mod 5 is the nonzero constant 1: no roots
  CHECK(roots_mod_p(IntPoly::parse("1,0,5"), 5, 0, rng).empty());
}

TEST_CASE("splitting path equals exhaustive search for all p <= 2000") {
  for (const auto& text : kCorpus) {
    IntPoly f = IntPoly::parse(text);
    Rng rng(123);
    uint64_t mismatches = 0;
    for (uint64_t p : oracles::sieve_simple(2000)) {
      auto expected = oracles::roots_exhaustive(f, p);
      auto got = to_u64(roots_mod_p(f, mpz_class(p), 0, rng));  // threshold 0 forces the gcd path
      if (got != expected) ++mismatches;
      if (got.size() > static_cast<size_t>(f.degree())) ++mismatches;
    }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("splitting works for a large prime") {
  Rng rng(7);
  // p = 2^31 - 1; x^2 + 1 has two roots since p = 1 (mod 4)
  mpz_class p(2147483647);
  auto roots = roots_mod_p(IntPoly::parse("x^2+1"), p, 0, rng);
  REQUIRE(roots.size() == 2);
  for (const auto& z : roots) {
    mpz_class v = eval(IntPoly::parse("x^2+1"), z), r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    CHECK(r == 0);
  }
  CHECK(roots[0] < roots[1]);
  CHECK(roots[0] + roots[1] == p);
}

TEST_CASE("a_f_points examples") {
  auto pts = a_f_points(IntPoly::parse("x^2+1"), 10);
  CHECK(pts == std::vector<RootPoint>{{2, 1}, {5, 2}, {5, 3}});
  CHECK(a_f_points(IntPoly::parse("x^2+1"), 4) == std::vector<RootPoint>{{2, 1}});
  // z = 0 filtered by the 1 <= z <= p-1 range
  CHECK(a_f_points(IntPoly::parse("x^3-x+3"), 3) == std::vector<RootPoint>{{3, 1}, {3, 2}});
}

TEST_CASE("a_f_points is deterministic across seeds and worker counts") {
  IntPoly f = IntPoly::parse("x^3+2x+2");
  AfOptions one;
  one.workers = 1;
  AfOptions eight;
  eight.workers = 8;
  auto a = a_f_points(f, 3000, one);
  auto b = a_f_points(f, 3000, eight);
  CHECK(a == b);

  AfOptions forced;
  forced.exhaustive_threshold = 0;  // all primes through the splitting path
  forced.seed = 99;
  CHECK(a == a_f_points(f, 3000, forced));

  uint64_t bad = 0;
  for (const auto& pt : a) {
    if (!(pt.z >= 1 && pt.z <= pt.p - 1)) ++bad;
    mpz_class v = eval(f, mpz_class(pt.z)), r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), mpz_class(pt.p).get_mpz_t());
    if (r != 0) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("root_points_csv format") {
  auto csv = root_points_csv(a_f_points(IntPoly::parse("x^2+1"), 10));
  CHECK(csv == "p,z,value\n2,1,0.500000000000\n5,2,0.400000000000\n5,3,0.600000000000\n");
}

}  // TEST_SUITE
