#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cache.hpp"

using namespace rootdense;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("rootdense_test_" + name + ".jsonl") {
    std::remove(path.c_str());
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_SUITE("cache") {

TEST_CASE("cache line round trip, stable key order") {
  IntPoly f = IntPoly::parse("x^2+1");
  auto wit = find_witness(f, Fraction{1, 3}, 2, 0, 10, 0);
  REQUIRE(wit.has_value());

  CacheRecord rec = make_cache_record(f, *wit, 7);
  std::string line = cache_line(rec);
  CHECK(line.find("{\"poly\":\"1,0,1\",\"a\":1,\"b\":3,\"t\":2,\"w\":0,\"p\":\"13\",\"z\":\"5\",\"seed\":7,") == 0);

  CacheRecord back = parse_cache_line(line);
  CHECK(back.poly == rec.poly);
  CHECK(back.a == rec.a);
  CHECK(back.b == rec.b);
  CHECK(back.t == rec.t);
  CHECK(back.w == rec.w);
  CHECK(back.p == rec.p);
  CHECK(back.z == rec.z);
  CHECK(back.seed == rec.seed);
}

TEST_CASE("parse_cache_line rejects malformed lines") {
  CHECK_THROWS_AS(parse_cache_line("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cache_line("{\"poly\":\"1,0,1\"}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cache_line(
                      "{\"poly\":\"1,0,1\",\"a\":1,\"b\":3,\"t\":2,\"w\":0,\"p\":\"13x\",\"z\":\"5\",\"seed\":0}"),
                  std::invalid_argument);
}

TEST_CASE("append and verify a cache file") {
  IntPoly f = IntPoly::parse("x^2+1");
  TempFile tmp("append");
  for (uint64_t lo : {0, 1, 3}) {
    auto wit = find_witness(f, Fraction{1, 3}, 2, lo, 100, 0);
    REQUIRE(wit.has_value());
    append_cache(tmp.path, f, *wit, 0);
  }
  auto result = verify_cache_file(tmp.path, 0);
  CHECK(result.total == 3);
  CHECK(result.ok == 3);
  CHECK(result.all_ok());
}

TEST_CASE("verify flags tampered and malformed records") {
  std::stringstream cache;
  cache << R"({"poly":"1,0,1","a":1,"b":3,"t":2,"w":0,"p":"13","z":"5","seed":0,"timestamp":""})" << "\n";
  cache << R"({"poly":"1,0,1","a":1,"b":3,"t":2,"w":0,"p":"13","z":"6","seed":0,"timestamp":""})" << "\n";
  cache << "garbage\n";
  cache << "\n";  // blank lines are skipped
  cache << R"({"poly":"1,0,1","a":1,"b":3,"t":2,"w":2,"p":"73","z":"27","seed":0,"timestamp":""})" << "\n";
  auto result = verify_cache(cache, 0);
  CHECK(result.total == 4);
  CHECK(result.ok == 2);
  REQUIRE(result.failures.size() == 2);
  CHECK(result.failures[0].first == 2);
  CHECK(result.failures[1].first == 3);
  CHECK_FALSE(result.all_ok());
}

TEST_CASE("missing cache file is an error") {
  CHECK_THROWS(verify_cache_file("rootdense_test_does_not_exist.jsonl", 0));
}

}  // TEST_SUITE
