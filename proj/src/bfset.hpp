#pragma once

#include <cstdint>
#include <optional>

#include "intpoly.hpp"

namespace rootdense {

// A reduced fraction a/b with b an odd prime, 1 <= a < b.
struct Fraction {
  uint64_t a = 0;
  uint64_t b = 0;

  mpq_class value() const {
    mpq_class q(a, b);
    q.canonicalize();
    return q;
  }
  bool operator==(const Fraction&) const = default;
};

// Membership of a/b in B_f: gcd(b, c*r_f) = 1 and a*c*x^(n-1) = -r_f (mod b)
// solvable, decided by the power-residue test on u = -r_f * (a*c)^-1 with
// d = n-1. Throws on a outside [1, b-1] or b not an odd prime.
bool bf_contains(const IntPoly& f, uint64_t a, uint64_t b);

// Smallest qualifying fraction a/b in B_f with |a/b - alpha| <= eps (exact
// rational comparison), scanning primes b ascending up to b_max. Returns
// nothing when the bound is exhausted.
//
// n even: any b with gcd(b, c*r_f) = 1 and gcd(n-1, b-1) = 1 admits every a,
// so the nearest numerator to alpha*b (ties rounded down) is taken directly.
// n odd: restrict to b = 3 (mod 4) with gcd(b-1, h) = 1 for h the odd part of
// n-1, and search a outward from the nearest numerator within a window of
// half-width ceil(sqrt(b))+1; consecutive-residue runs are shorter than
// sqrt(b) for such b, so the window succeeds once b is large enough.
std::optional<Fraction> select_fraction(const IntPoly& f, const mpq_class& alpha, const mpq_class& eps,
                                        uint64_t b_max);

// Smallest t in [1, b-1] with a*c*t^(n-1) = -r_f (mod b). The fraction must
// be a member of B_f (throws otherwise).
uint64_t solve_t(const IntPoly& f, const Fraction& frac);

}  // namespace rootdense
