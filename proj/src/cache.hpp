#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "witness.hpp"

namespace rootdense {

// One line of the append-only witness cache. Keys are serialized in the fixed
// order poly, a, b, t, w, p, z, seed, timestamp; p and z are decimal strings
// so arbitrary-precision values survive the round trip.
struct CacheRecord {
  std::string poly;
  uint64_t a = 0, b = 0, t = 0, w = 0;
  mpz_class p, z;
  uint64_t seed = 0;
  std::string timestamp;
};

std::string cache_line(const CacheRecord& record);
CacheRecord parse_cache_line(const std::string& line);  // throws std::invalid_argument

CacheRecord make_cache_record(const IntPoly& f, const Witness& wit, uint64_t seed);

// Appends one record (timestamped now, UTC) to the cache file.
void append_cache(const std::string& path, const IntPoly& f, const Witness& wit, uint64_t seed);

struct CacheVerifyResult {
  uint64_t total = 0;
  uint64_t ok = 0;
  std::vector<std::pair<uint64_t, std::string>> failures;  // (line number, reason)

  bool all_ok() const { return ok == total; }
  std::string summary() const;
};

// Re-validates every record: parse, rebuild the witness, verify_witness.
CacheVerifyResult verify_cache(std::istream& in, uint64_t seed);
CacheVerifyResult verify_cache_file(const std::string& path, uint64_t seed);

}  // namespace rootdense
