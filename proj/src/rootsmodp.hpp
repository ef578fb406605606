#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "intpoly.hpp"
#include "modarith.hpp"

namespace rootdense {

// One normalized root: f(z) = 0 (mod p) with 1 <= z <= p-1, so z/p lies in (0,1).
struct RootPoint {
  uint64_t p;
  uint64_t z;

  mpq_class value() const {
    mpq_class q(z, p);
    q.canonicalize();
    return q;
  }
  bool operator==(const RootPoint&) const = default;
};

// All residues z in [0, p-1] with f(z) = 0 (mod p), ascending, each once.
// Exhaustive evaluation for p < exhaustive_threshold; above that, gcd with
// x^p - x followed by random-shift quadratic splitting (rng supplies shifts,
// so results are reproducible per seed; the output is sorted either way).
// Rejects f that vanishes identically mod p.
std::vector<mpz_class> roots_mod_p(const IntPoly& f, const mpz_class& p, uint64_t exhaustive_threshold, Rng& rng);

struct AfOptions {
  uint64_t exhaustive_threshold = 100000;
  uint64_t seed = 0;
  unsigned workers = 1;
};

// The root set A_f up to modulus bound X: for every prime p <= X, every root
// z of f mod p with 1 <= z <= p-1, ordered by (p, z).
std::vector<RootPoint> a_f_points(const IntPoly& f, uint64_t x_bound, const AfOptions& opt = {});

// CSV with header "p,z,value"; value rendered to 12 significant digits.
std::string root_points_csv(const std::vector<RootPoint>& points);

}  // namespace rootdense
