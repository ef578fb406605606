#include "rootdense.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "cache.hpp"
#include "density.hpp"
#include "numio.hpp"

struct rd_poly {
  rootdense::IntPoly impl;
};
struct rd_witness {
  rootdense::Witness impl;
};
struct rd_witness_list {
  std::vector<rd_witness> impl;
};
struct rd_report {
  rootdense::DensityReport impl;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rd_status fail(rd_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs fn, translating exceptions to status codes. invalid_argument comes
// from text parsing, domain_error from precondition violations.
template <class F>
rd_status wrap(F&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    return fail(RD_ERR_PARSE, e.what());
  } catch (const std::domain_error& e) {
    return fail(RD_ERR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(RD_ERR_IO, e.what());
  }
}

rd_status require(bool cond, const char* what) {
  if (!cond) return fail(RD_ERR_DOMAIN, what);
  return RD_OK;
}

mpz_class parse_mpz(const char* text) {
  if (!text) throw std::invalid_argument("null decimal string");
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty decimal string");
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("malformed decimal string: \"" + s + "\"");
  for (size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw std::invalid_argument("malformed decimal string: \"" + s + "\"");
  return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
}

// Irreducibility gate shared by the pipeline entry points.
rd_status check_irreducible(const rootdense::IntPoly& f) {
  auto q = rootdense::irreducibility_witness(f, 200);
  if (!q)
    return fail(RD_ERR_DOMAIN,
                "no irreducibility witness below 200; pass assume_irreducible if f is known irreducible");
  return RD_OK;
}

}  // namespace

extern "C" {

const char* rd_version(void) { return "1.0.0"; }

const char* rd_status_name(rd_status status) {
  switch (status) {
    case RD_OK:
      return "ok";
    case RD_ERR_PARSE:
      return "parse error";
    case RD_ERR_DOMAIN:
      return "domain error";
    case RD_ERR_EXHAUSTED:
      return "budget exhausted";
    case RD_ERR_VERIFY:
      return "verification failed";
    case RD_ERR_IO:
      return "i/o error";
  }
  return "unknown";
}

const char* rd_last_error(void) { return g_last_error.c_str(); }

void rd_string_free(char* s) { std::free(s); }

rd_status rd_poly_parse(const char* text, rd_poly** out) {
  return wrap([&] {
    if (!text || !out) return fail(RD_ERR_PARSE, "null argument");
    *out = new rd_poly{rootdense::IntPoly::parse(text)};
    return RD_OK;
  });
}

void rd_poly_free(rd_poly* f) { delete f; }

int rd_poly_degree(const rd_poly* f) { return f ? f->impl.degree() : -1; }

rd_status rd_poly_to_string(const rd_poly* f, char** out) {
  return wrap([&] {
    if (auto s = require(f && out, "null argument")) return s;
    *out = dup_string(f->impl.to_string());
    return RD_OK;
  });
}

rd_status rd_poly_eval(const rd_poly* f, const char* x_decimal, char** out_decimal) {
  return wrap([&] {
    if (auto s = require(f && out_decimal, "null argument")) return s;
    *out_decimal = dup_string(rootdense::eval(f->impl, parse_mpz(x_decimal)).get_str());
    return RD_OK;
  });
}

rd_status rd_fixed_divisor(const rd_poly* f, char** out_decimal) {
  return wrap([&] {
    if (auto s = require(f && out_decimal, "null argument")) return s;
    *out_decimal = dup_string(rootdense::fixed_divisor(f->impl).get_str());
    return RD_OK;
  });
}

rd_status rd_irreducibility_witness(const rd_poly* f, uint64_t prime_bound, int* found, uint64_t* out_q) {
  return wrap([&] {
    if (auto s = require(f && found && out_q, "null argument")) return s;
    auto q = rootdense::irreducibility_witness(f->impl, prime_bound);
    *found = q.has_value() ? 1 : 0;
    *out_q = q.value_or(0);
    return RD_OK;
  });
}

rd_status rd_conjugate_g(const rd_poly* f, uint64_t b, uint64_t t, rd_poly** out) {
  return wrap([&] {
    if (auto s = require(f && out, "null argument")) return s;
    *out = new rd_poly{rootdense::conjugate_g(f->impl, b, t)};
    return RD_OK;
  });
}

rd_status rd_is_prime(const char* n_decimal, uint64_t seed, int* out) {
  return wrap([&] {
    if (auto s = require(out != nullptr, "null argument")) return s;
    *out = rootdense::is_prime(parse_mpz(n_decimal), seed) ? 1 : 0;
    return RD_OK;
  });
}

rd_status rd_brauer_max_run(uint64_t b, uint64_t* out) {
  return wrap([&] {
    if (auto s = require(out != nullptr, "null argument")) return s;
    if (auto s = require(b >= 3 && b % 2 == 1 && rootdense::is_prime(b), "b must be an odd prime")) return s;
    *out = rootdense::brauer_max_run(b);
    return RD_OK;
  });
}

rd_status rd_brauer_scan(uint64_t limit, char** out_csv, int* within_bound) {
  return wrap([&] {
    if (auto s = require(out_csv && within_bound, "null argument")) return s;
    if (auto s = require(limit >= 3, "limit must be >= 3")) return s;
    std::string csv = "b,max_run\n";
    bool ok = true;
    for (uint64_t b : rootdense::sieve_primes(limit)) {
      if (b % 4 != 3) continue;
      uint64_t run = rootdense::brauer_max_run(b);
      csv += std::to_string(b) + "," + std::to_string(run) + "\n";
      ok = ok && run * run < b;
    }
    *out_csv = dup_string(csv);
    *within_bound = ok ? 1 : 0;
    return RD_OK;
  });
}

rd_status rd_roots_mod_p(const rd_poly* f, const char* p_decimal, uint64_t exhaustive_threshold,
                         uint64_t seed, char** out_roots) {
  return wrap([&] {
    if (auto s = require(f && out_roots, "null argument")) return s;
    mpz_class p = parse_mpz(p_decimal);
    if (auto s = require(rootdense::is_prime(p, seed), "p must be prime")) return s;
    rootdense::Rng rng(seed);
    std::string text;
    for (const auto& z : rootdense::roots_mod_p(f->impl, p, exhaustive_threshold, rng)) {
      if (!text.empty()) text += " ";
      text += z.get_str();
    }
    *out_roots = dup_string(text);
    return RD_OK;
  });
}

rd_status rd_af_points_csv(const rd_poly* f, uint64_t x_bound, uint64_t exhaustive_threshold, uint64_t seed,
                           unsigned workers, char** out_csv) {
  return wrap([&] {
    if (auto s = require(f && out_csv, "null argument")) return s;
    rootdense::AfOptions opt{exhaustive_threshold, seed, workers};
    *out_csv = dup_string(rootdense::root_points_csv(rootdense::a_f_points(f->impl, x_bound, opt)));
    return RD_OK;
  });
}

rd_status rd_af_stats(const rd_poly* f, uint64_t x_bound, uint64_t exhaustive_threshold, uint64_t seed,
                      unsigned workers, char** out_text) {
  return wrap([&] {
    if (auto s = require(f && out_text, "null argument")) return s;
    rootdense::AfOptions opt{exhaustive_threshold, seed, workers};
    auto points = rootdense::a_f_points(f->impl, x_bound, opt);
    std::vector<mpq_class> values;
    values.reserve(points.size());
    uint64_t max_p = 0;
    for (const auto& pt : points) {
      values.push_back(pt.value());
      max_p = std::max(max_p, pt.p);
    }
    mpq_class d = rootdense::star_discrepancy(values);
    std::string text;
    text += "poly: " + f->impl.to_string() + "\n";
    text += "x_bound: " + std::to_string(x_bound) + "\n";
    text += "seed: " + std::to_string(seed) + "\n";
    text += "points: " + std::to_string(points.size()) + "\n";
    text += "max_p: " + std::to_string(max_p) + "\n";
    text += "d_star: " + rootdense::decimal_string(d) + "\n";
    text += "d_star_exact: " + rootdense::rational_string(d) + "\n";
    if (!values.empty()) {
      auto [lo, hi] = std::minmax_element(values.begin(), values.end());
      text += "min: " + rootdense::decimal_string(*lo) + "\n";
      text += "max: " + rootdense::decimal_string(*hi) + "\n";
    }
    *out_text = dup_string(text);
    return RD_OK;
  });
}

rd_status rd_bf_contains(const rd_poly* f, uint64_t a, uint64_t b, int* out) {
  return wrap([&] {
    if (auto s = require(f && out, "null argument")) return s;
    *out = rootdense::bf_contains(f->impl, a, b) ? 1 : 0;
    return RD_OK;
  });
}

rd_status rd_select_fraction(const rd_poly* f, const char* alpha, const char* eps, uint64_t b_max,
                             uint64_t* out_a, uint64_t* out_b) {
  return wrap([&] {
    if (auto s = require(f && alpha && eps && out_a && out_b, "null argument")) return s;
    auto frac = rootdense::select_fraction(f->impl, rootdense::parse_rational(alpha),
                                           rootdense::parse_rational(eps), b_max);
    if (!frac) return fail(RD_ERR_EXHAUSTED, "no member of B_f within eps of alpha below b_max");
    *out_a = frac->a;
    *out_b = frac->b;
    return RD_OK;
  });
}

rd_status rd_solve_t(const rd_poly* f, uint64_t a, uint64_t b, uint64_t* out_t) {
  return wrap([&] {
    if (auto s = require(f && out_t, "null argument")) return s;
    *out_t = rootdense::solve_t(f->impl, rootdense::Fraction{a, b});
    return RD_OK;
  });
}

rd_status rd_find_witness(const rd_poly* f, uint64_t a, uint64_t b, uint64_t t, uint64_t w_lo, uint64_t w_hi,
                          uint64_t seed, rd_witness** out) {
  return wrap([&] {
    if (auto s = require(f && out, "null argument")) return s;
    auto wit = rootdense::find_witness(f->impl, rootdense::Fraction{a, b}, t, w_lo, w_hi, seed);
    if (!wit) return fail(RD_ERR_EXHAUSTED, "no witness in [w_lo, w_hi]");
    *out = new rd_witness{std::move(*wit)};
    return RD_OK;
  });
}

rd_status rd_approximate(const rd_poly* f, const char* alpha, const char* eps, uint64_t b_max, uint64_t w_max,
                         uint64_t seed, int assume_irreducible, rd_witness** out, char** out_log) {
  return wrap([&] {
    if (auto s = require(f && alpha && eps && out, "null argument")) return s;
    if (!assume_irreducible)
      if (auto s = check_irreducible(f->impl)) return s;
    rootdense::Budget budget{b_max, w_max};
    auto result = rootdense::approximate(f->impl, rootdense::parse_rational(alpha),
                                         rootdense::parse_rational(eps), budget, seed);
    if (out_log) *out_log = dup_string(result.log.to_string());
    if (!result.witness) return fail(RD_ERR_EXHAUSTED, "budget exhausted: " + result.log.to_string());
    *out = new rd_witness{std::move(*result.witness)};
    return RD_OK;
  });
}

rd_status rd_witness_sequence(const rd_poly* f, uint64_t a, uint64_t b, uint64_t t, uint64_t count,
                              uint64_t w_max, uint64_t seed, rd_witness_list** out) {
  return wrap([&] {
    if (auto s = require(f && out, "null argument")) return s;
    auto seq = rootdense::witness_sequence(f->impl, rootdense::Fraction{a, b}, t, count, w_max, seed);
    auto* list = new rd_witness_list;
    list->impl.reserve(seq.size());
    for (auto& wit : seq) list->impl.push_back(rd_witness{std::move(wit)});
    *out = list;
    return RD_OK;
  });
}

void rd_witness_free(rd_witness* w) { delete w; }

uint64_t rd_witness_a(const rd_witness* w) { return w ? w->impl.a : 0; }
uint64_t rd_witness_b(const rd_witness* w) { return w ? w->impl.b : 0; }
uint64_t rd_witness_t(const rd_witness* w) { return w ? w->impl.t : 0; }
uint64_t rd_witness_w(const rd_witness* w) { return w ? w->impl.w : 0; }

rd_status rd_witness_p(const rd_witness* w, char** out_decimal) {
  return wrap([&] {
    if (auto s = require(w && out_decimal, "null argument")) return s;
    *out_decimal = dup_string(w->impl.p.get_str());
    return RD_OK;
  });
}

rd_status rd_witness_z(const rd_witness* w, char** out_decimal) {
  return wrap([&] {
    if (auto s = require(w && out_decimal, "null argument")) return s;
    *out_decimal = dup_string(w->impl.z.get_str());
    return RD_OK;
  });
}

rd_status rd_witness_gap(const rd_witness* w, char** out_fraction) {
  return wrap([&] {
    if (auto s = require(w && out_fraction, "null argument")) return s;
    *out_fraction = dup_string(rootdense::rational_string(w->impl.gap));
    return RD_OK;
  });
}

rd_status rd_witness_value(const rd_witness* w, char** out_decimal) {
  return wrap([&] {
    if (auto s = require(w && out_decimal, "null argument")) return s;
    *out_decimal = dup_string(rootdense::decimal_string(w->impl.value()));
    return RD_OK;
  });
}

rd_status rd_witness_to_string(const rd_witness* w, char** out) {
  return wrap([&] {
    if (auto s = require(w && out, "null argument")) return s;
    *out = dup_string(w->impl.to_string());
    return RD_OK;
  });
}

rd_status rd_verify_witness(const rd_poly* f, const rd_witness* w, uint64_t seed, int* ok) {
  return wrap([&] {
    if (auto s = require(f && w && ok, "null argument")) return s;
    *ok = rootdense::verify_witness(f->impl, w->impl, seed) ? 1 : 0;
    return RD_OK;
  });
}

void rd_witness_list_free(rd_witness_list* list) { delete list; }

uint64_t rd_witness_list_size(const rd_witness_list* list) { return list ? list->impl.size() : 0; }

const rd_witness* rd_witness_list_get(const rd_witness_list* list, uint64_t index) {
  if (!list || index >= list->impl.size()) return nullptr;
  return &list->impl[index];
}

rd_status rd_scan_enumerative(const rd_poly* f, uint64_t x_bound, const char* eps,
                              uint64_t exhaustive_threshold, uint64_t seed, unsigned workers,
                              rd_report** out) {
  return wrap([&] {
    if (auto s = require(f && eps && out, "null argument")) return s;
    rootdense::AfOptions opt{exhaustive_threshold, seed, workers};
    *out = new rd_report{
        rootdense::cover_report_enumerative(f->impl, x_bound, rootdense::parse_rational(eps), opt)};
    return RD_OK;
  });
}

rd_status rd_scan_constructive(const rd_poly* f, const char* eps, uint64_t b_max, uint64_t w_max,
                               uint64_t seed, unsigned workers, int assume_irreducible, rd_report** out) {
  return wrap([&] {
    if (auto s = require(f && eps && out, "null argument")) return s;
    if (!assume_irreducible)
      if (auto s = check_irreducible(f->impl)) return s;
    rootdense::ScanOptions opt{rootdense::Budget{b_max, w_max}, seed, workers};
    *out = new rd_report{rootdense::cover_report_constructive(f->impl, rootdense::parse_rational(eps), opt)};
    return RD_OK;
  });
}

void rd_report_free(rd_report* r) { delete r; }

uint64_t rd_report_intervals(const rd_report* r) { return r ? r->impl.intervals.size() : 0; }

uint64_t rd_report_covered(const rd_report* r) { return r ? r->impl.covered_count : 0; }

double rd_report_wall_ms(const rd_report* r) { return r ? r->impl.wall_ms : 0; }

rd_status rd_report_render(const rd_report* r, const char* format, char** out) {
  return wrap([&] {
    if (auto s = require(r && format && out, "null argument")) return s;
    *out = dup_string(rootdense::render_report(r->impl, rootdense::parse_report_format(format)));
    return RD_OK;
  });
}

rd_status rd_cache_append(const char* path, const rd_poly* f, const rd_witness* w, uint64_t seed) {
  return wrap([&] {
    if (auto s = require(path && f && w, "null argument")) return s;
    rootdense::append_cache(path, f->impl, w->impl, seed);
    return RD_OK;
  });
}

rd_status rd_cache_verify(const char* path, uint64_t seed, char** out_summary, uint64_t* out_total,
                          uint64_t* out_ok) {
  return wrap([&] {
    if (auto s = require(path && out_total && out_ok, "null argument")) return s;
    auto result = rootdense::verify_cache_file(path, seed);
    if (out_summary) *out_summary = dup_string(result.summary());
    *out_total = result.total;
    *out_ok = result.ok;
    return RD_OK;
  });
}

}  // extern "C"
