#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace rootdense {

// Deterministic random stream for primality rounds and root-splitting shifts.
// One instance per worker; never shared. Seeded explicitly so every run with
// the same seed is reproducible.
class Rng {
 public:
  explicit Rng(uint64_t seed);
  ~Rng();
  Rng(const Rng&) = delete;
  Rng& operator=(const Rng&) = delete;

  // uniform in [0, n), n > 0
  mpz_class below(const mpz_class& n);

 private:
  gmp_randstate_t state_;
};

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m);

// a^e mod m in [0, m-1]; square-and-multiply. m >= 2.
uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t m);
mpz_class pow_mod(const mpz_class& a, const mpz_class& e, const mpz_class& m);

// Inverse of a mod m when gcd(a, m) = 1, else nothing.
std::optional<uint64_t> inv_mod(uint64_t a, uint64_t m);
std::optional<mpz_class> inv_mod(const mpz_class& a, const mpz_class& m);

// Primality. Deterministic (12 fixed strong-pseudoprime bases) below
// 3317044064679887385961981; above that BPSW plus 16 seeded random strong
// rounds, i.e. probabilistic with no known counterexample.
bool is_prime(const mpz_class& n, uint64_t seed = 0);
bool is_prime(uint64_t n);

// Ascending primes <= limit via a segmented sieve. limit >= 2.
std::vector<uint64_t> sieve_primes(uint64_t limit, uint64_t segment_flags = uint64_t{1} << 20);

// True iff x^d = u (mod b) is solvable, for b an odd prime and gcd(u, b) = 1:
// u^((b-1)/gcd(d, b-1)) = 1 (mod b).
bool dth_power_residue_test(uint64_t u, uint64_t d, uint64_t b);

// Smallest x in [1, b-1] with x^d = u (mod b), or nothing. Inverse-exponent
// route when gcd(d, b-1) = 1, exhaustive scan otherwise.
std::optional<uint64_t> dth_root_mod(uint64_t u, uint64_t d, uint64_t b);

// Length of the longest run of consecutive integers in [1, b-1] that are all
// quadratic residues or all non-residues mod b (Euler criterion), b odd prime.
uint64_t brauer_max_run(uint64_t b);

namespace detail {
// Strong Lucas probable-prime test (Selfridge parameter choice); exposed for
// direct testing. n odd, n > 2, not a perfect square handled internally.
bool strong_lucas_prp(const mpz_class& n);
}  // namespace detail

}  // namespace rootdense
