#include "cache.hpp"

#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rootdense {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string now_utc() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Witness record_witness(const CacheRecord& r) {
  if (r.b < 1 || r.p < 1) throw std::invalid_argument("bad cache line: b and p must be positive");
  Witness wit;
  wit.a = r.a;
  wit.b = r.b;
  wit.t = r.t;
  wit.w = r.w;
  wit.p = r.p;
  wit.z = r.z;
  mpz_class shift = mpz_class(static_cast<unsigned long>(r.b)) * static_cast<unsigned long>(r.w) +
                    static_cast<unsigned long>(r.t);
  wit.gap = mpq_class(shift, mpz_class(static_cast<unsigned long>(r.b)) * r.p);
  wit.gap.canonicalize();
  return wit;
}

}  // namespace

std::string cache_line(const CacheRecord& record) {
  ordered_json j;
  j["poly"] = record.poly;
  j["a"] = record.a;
  j["b"] = record.b;
  j["t"] = record.t;
  j["w"] = record.w;
  j["p"] = record.p.get_str();
  j["z"] = record.z.get_str();
  j["seed"] = record.seed;
  j["timestamp"] = record.timestamp;
  return j.dump();
}

CacheRecord parse_cache_line(const std::string& line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad cache line: ") + e.what());
  }
  try {
    CacheRecord r;
    r.poly = j.at("poly").get<std::string>();
    r.a = j.at("a").get<uint64_t>();
    r.b = j.at("b").get<uint64_t>();
    r.t = j.at("t").get<uint64_t>();
    r.w = j.at("w").get<uint64_t>();
    r.p = mpz_class(j.at("p").get<std::string>(), 10);
    r.z = mpz_class(j.at("z").get<std::string>(), 10);
    r.seed = j.at("seed").get<uint64_t>();
    r.timestamp = j.value("timestamp", "");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad cache line: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad cache line: p/z must be decimal integers");
  }
}

CacheRecord make_cache_record(const IntPoly& f, const Witness& wit, uint64_t seed) {
  CacheRecord r;
  r.poly = f.to_string();
  r.a = wit.a;
  r.b = wit.b;
  r.t = wit.t;
  r.w = wit.w;
  r.p = wit.p;
  r.z = wit.z;
  r.seed = seed;
  r.timestamp = now_utc();
  return r;
}

void append_cache(const std::string& path, const IntPoly& f, const Witness& wit, uint64_t seed) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open cache file for append: " + path);
  out << cache_line(make_cache_record(f, wit, seed)) << "\n";
  if (!out) throw std::runtime_error("write to cache file failed: " + path);
}

std::string CacheVerifyResult::summary() const {
  std::string out = "records: " + std::to_string(total) + "\nverified: " + std::to_string(ok) + "\n";
  for (const auto& [line, reason] : failures)
    out += "line " + std::to_string(line) + ": " + reason + "\n";
  return out;
}

CacheVerifyResult verify_cache(std::istream& in, uint64_t seed) {
  CacheVerifyResult result;
  std::string line;
  uint64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    ++result.total;
    try {
      CacheRecord r = parse_cache_line(line);
      IntPoly f = IntPoly::parse(r.poly);
      if (verify_witness(f, record_witness(r), seed))
        ++result.ok;
      else
        result.failures.emplace_back(lineno, "witness verification failed");
    } catch (const std::exception& e) {
      result.failures.emplace_back(lineno, e.what());
    }
  }
  return result;
}

CacheVerifyResult verify_cache_file(const std::string& path, uint64_t seed) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cache file: " + path);
  return verify_cache(in, seed);
}

}  // namespace rootdense
