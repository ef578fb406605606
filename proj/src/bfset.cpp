#include "bfset.hpp"

#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "modarith.hpp"

namespace rootdense {

namespace {

// -r_f * (a*c)^(-1) mod b, the target of the solvability test. Requires
// gcd(b, c*r_f) = 1, which makes the inverse exist and the result nonzero.
uint64_t solvability_target(const IntPoly& f, uint64_t a, uint64_t b, const mpz_class& rf) {
  const mpz_class bz(static_cast<unsigned long>(b));
  mpz_class ac = mpz_class(static_cast<unsigned long>(a)) * f.leading();
  mpz_class inv = *inv_mod(ac, bz);
  mpz_class u;
  mpz_class t = -rf * inv;
  mpz_mod(u.get_mpz_t(), t.get_mpz_t(), bz.get_mpz_t());
  return mpz_get_ui(u.get_mpz_t());
}

bool bf_contains_checked_prime(const IntPoly& f, uint64_t a, uint64_t b, const mpz_class& rf) {
  if (a < 1 || a >= b) throw std::domain_error("bf_contains: a must lie in [1, b-1]");
  if (f.degree() < 2) throw std::domain_error("bf_contains: degree must be >= 2");
  const mpz_class bz(static_cast<unsigned long>(b));
  mpz_class crf = f.leading() * rf;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), crf.get_mpz_t(), bz.get_mpz_t());
  if (g != 1) return false;

  uint64_t u = solvability_target(f, a, b, rf);
  return dth_power_residue_test(u, static_cast<uint64_t>(f.degree() - 1), b);
}

uint64_t isqrt_u64(uint64_t n) {
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Nearest integer to alpha*b with ties rounded down: ceil(alpha*b - 1/2).
mpz_class nearest_numerator(const mpq_class& alpha, uint64_t b) {
  mpq_class x = alpha * mpz_class(static_cast<unsigned long>(b)) - mpq_class(1, 2);
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

uint64_t clamp_numerator(const mpz_class& a0, uint64_t b) {
  if (a0 < 1) return 1;
  if (a0 > static_cast<unsigned long>(b - 1)) return b - 1;
  return mpz_get_ui(a0.get_mpz_t());
}

bool within_eps(uint64_t a, uint64_t b, const mpq_class& alpha, const mpq_class& eps) {
  mpq_class v(a, b);
  v.canonicalize();
  mpq_class diff = v - alpha;
  if (diff < 0) diff = -diff;
  return diff <= eps;
}

}  // namespace

bool bf_contains(const IntPoly& f, uint64_t a, uint64_t b) {
  if (b < 3 || b % 2 == 0 || !is_prime(b)) throw std::domain_error("bf_contains: b must be an odd prime");
  return bf_contains_checked_prime(f, a, b, fixed_divisor(f));
}

std::optional<Fraction> select_fraction(const IntPoly& f, const mpq_class& alpha, const mpq_class& eps,
                                        uint64_t b_max) {
  if (alpha <= 0 || alpha >= 1) throw std::domain_error("select_fraction: alpha must lie in (0,1)");
  if (eps <= 0) throw std::domain_error("select_fraction: eps must be positive");
  if (f.degree() < 2) throw std::domain_error("select_fraction: degree must be >= 2");
  if (b_max < 3) return std::nullopt;

  const int n = f.degree();
  const uint64_t d = static_cast<uint64_t>(n - 1);
  const mpz_class rf = fixed_divisor(f);
  const mpz_class crf_abs = abs(f.leading() * rf);

  const bool n_even = n % 2 == 0;
  uint64_t h = d;  // odd part of n-1 (n odd makes d even)
  if (!n_even)
    while (h % 2 == 0) h /= 2;

  for (uint64_t b : sieve_primes(b_max)) {
    if (b == 2) continue;
    const mpz_class bz(static_cast<unsigned long>(b));
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), crf_abs.get_mpz_t(), bz.get_mpz_t());
    if (g != 1) continue;

    if (n_even) {
      if (std::gcd(d, b - 1) != 1) continue;
      uint64_t a = clamp_numerator(nearest_numerator(alpha, b), b);
      if (!within_eps(a, b, alpha, eps)) continue;
      assert(bf_contains_checked_prime(f, a, b, rf));  // bijective power map: every a qualifies
      return Fraction{a, b};
    }

    if (b % 4 != 3) continue;
    if (std::gcd(b - 1, h) != 1) continue;
    const uint64_t a0 = clamp_numerator(nearest_numerator(alpha, b), b);
    const uint64_t half_width = isqrt_u64(b) + 2;  // = ceil(sqrt(b)) + 1; b prime is never a square
    for (uint64_t dist = 0; dist <= half_width; ++dist) {
      for (int dir = 0; dir < (dist == 0 ? 1 : 2); ++dir) {
        uint64_t a;
        if (dir == 0) {
          if (a0 <= dist) continue;  // a0 - dist < 1
          a = a0 - dist;
        } else {
          a = a0 + dist;
          if (a > b - 1) continue;
        }
        if (!within_eps(a, b, alpha, eps)) continue;
        if (bf_contains_checked_prime(f, a, b, rf)) return Fraction{a, b};
      }
    }
  }
  return std::nullopt;
}

uint64_t solve_t(const IntPoly& f, const Fraction& frac) {
  if (!bf_contains(f, frac.a, frac.b))
    throw std::domain_error("solve_t: fraction is not a member of B_f");
  uint64_t u = solvability_target(f, frac.a, frac.b, fixed_divisor(f));
  auto t = dth_root_mod(u, static_cast<uint64_t>(f.degree() - 1), frac.b);
  assert(t.has_value());
  return *t;
}

}  // namespace rootdense
