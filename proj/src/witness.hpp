#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bfset.hpp"

namespace rootdense {

// A verified construction step: p = G(w)/r_f is prime for G the conjugate
// polynomial of (b, t), and z = (a*p + b*w + t)/b is an integer root of f
// mod p whose distance to a/b is exactly gap = (b*w + t)/(b*p).
struct Witness {
  uint64_t a = 0;
  uint64_t b = 0;
  uint64_t t = 0;
  uint64_t w = 0;
  mpz_class p;
  mpz_class z;
  mpq_class gap;

  mpq_class value() const;  // z/p
  std::string to_string() const;
};

// How a search went, for reporting: which stage concluded it, and the effort.
struct SearchLog {
  std::string stage;  // "ok", "no_fraction" or "no_witness"
  uint64_t w_tried = 0;
  uint64_t prime_tests = 0;
  std::optional<Fraction> fraction;
  std::optional<uint64_t> t;

  std::string to_string() const;
};

// Smallest w in [w_lo, w_hi] whose G(w)/r_f is a positive prime with the
// derived z inside [1, p-1]; nothing if the range is exhausted. The (frac, t)
// contract a*c*t^(n-1) = -r_f (mod b) is re-checked up front, and f must have
// a positive leading coefficient and degree >= 2.
std::optional<Witness> find_witness(const IntPoly& f, const Fraction& frac, uint64_t t, uint64_t w_lo,
                                    uint64_t w_hi, uint64_t seed, SearchLog* log = nullptr);

// Re-derives every invariant from scratch: primality of p, r_f*p = G(w),
// b | (a*p + b*w + t) with quotient z, 1 <= z <= p-1, f(z) = 0 (mod p), and
// the exact gap identity. False on any failure.
bool verify_witness(const IntPoly& f, const Witness& wit, uint64_t seed = 0);

struct Budget {
  uint64_t b_max = 10000;
  uint64_t w_max = 1000000;
};

struct ApproxResult {
  std::optional<Witness> witness;
  SearchLog log;
};

// Full pipeline: select a fraction within eps/2 of alpha, solve for t, then
// search w ascending until the gap is at most eps/2, so any returned witness
// satisfies |z/p - alpha| <= eps exactly. Budget exhaustion returns a log
// describing the failing stage; it is never a disproof.
ApproxResult approximate(const IntPoly& f, const mpq_class& alpha, const mpq_class& eps, const Budget& budget,
                         uint64_t seed);

// First `count` witnesses by ascending w in [0, w_max] (fewer when the bound
// is hit). Gaps are strictly positive and eventually strictly decreasing.
std::vector<Witness> witness_sequence(const IntPoly& f, const Fraction& frac, uint64_t t, uint64_t count,
                                      uint64_t w_max, uint64_t seed);

}  // namespace rootdense
