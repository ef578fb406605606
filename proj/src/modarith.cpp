#include "modarith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "numio.hpp"

namespace rootdense {

namespace {

mpz_class mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// x^e mod n for a strong-pseudoprime round; n odd, n > 3.
// Returns true if n passes the round to base a.
bool strong_round(const mpz_class& n, const mpz_class& a, const mpz_class& d, unsigned long s) {
  mpz_class x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = mod(x * x, n);
    if (x == n - 1) return true;
  }
  return false;
}

const uint64_t kSmallPrimes[] = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,  53,  59,  61,
    67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151,
    157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251,
    257, 263, 269, 271, 277, 281, 283, 293, 307, 311, 313, 317, 331, 337, 347, 349, 353, 359,
    367, 373, 379, 383, 389, 397, 401, 409, 419, 421, 431, 433, 439, 443, 449, 457, 461, 463,
    467, 479, 487, 491, 499, 503, 509, 521, 523, 541, 547, 557, 563, 569, 571, 577, 587, 593,
    599, 601, 607, 613, 617, 619, 631, 641, 643, 647, 653, 659, 661, 673, 677, 683, 691, 701,
    709, 719, 727, 733, 739, 743, 751, 757, 761, 769, 773, 787, 797, 809, 811, 821, 823, 827,
    829, 839, 853, 857, 859, 863, 877, 881, 883, 887, 907, 911, 919, 929, 937, 941, 947, 953,
    967, 971, 977, 983, 991, 997};

// Upper bound for the deterministic 12-base strong-pseudoprime test.
const mpz_class& deterministic_limit() {
  static const mpz_class limit("3317044064679887385961981");
  return limit;
}

}  // namespace

Rng::Rng(uint64_t seed) {
  gmp_randinit_mt(state_);
  gmp_randseed_ui(state_, static_cast<unsigned long>(seed));
}

Rng::~Rng() { gmp_randclear(state_); }

mpz_class Rng::below(const mpz_class& n) {
  mpz_class r;
  mpz_urandomm(r.get_mpz_t(), state_, n.get_mpz_t());
  return r;
}

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t m) {
  if (m < 2) throw std::invalid_argument("pow_mod: modulus must be >= 2");
  uint64_t base = a % m, result = 1 % m;
  while (e) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

mpz_class pow_mod(const mpz_class& a, const mpz_class& e, const mpz_class& m) {
  if (m < 2) throw std::invalid_argument("pow_mod: modulus must be >= 2");
  if (e < 0) throw std::invalid_argument("pow_mod: negative exponent");
  mpz_class r;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::optional<uint64_t> inv_mod(uint64_t a, uint64_t m) {
  if (m < 2) throw std::invalid_argument("inv_mod: modulus must be >= 2");
  __int128 old_r = a % m, r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) return std::nullopt;
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<uint64_t>(inv);
}

std::optional<mpz_class> inv_mod(const mpz_class& a, const mpz_class& m) {
  if (m < 2) throw std::invalid_argument("inv_mod: modulus must be >= 2");
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
  return r;
}

namespace detail {

bool strong_lucas_prp(const mpz_class& n) {
  if (mpz_perfect_square_p(n.get_mpz_t())) return false;

  // Selfridge: first D in 5, -7, 9, -11, ... with (D|n) = -1.
  mpz_class d_param(5);
  while (true) {
    int j = mpz_jacobi(d_param.get_mpz_t(), n.get_mpz_t());
    if (j == 0) return false;  // shares a factor with n
    if (j == -1) break;
    if (d_param > 0)
      d_param = -(d_param + 2);
    else
      d_param = -(d_param - 2);
  }
  const mpz_class p_param(1);
  mpz_class q_param = (1 - d_param) / 4;

  mpz_class d = n + 1;
  unsigned long s = static_cast<unsigned long>(mpz_scan1(d.get_mpz_t(), 0));
  d >>= s;

  auto half = [&n](mpz_class x) {
    if (mpz_odd_p(x.get_mpz_t())) x += n;
    return mpz_class(x >> 1);
  };

  // Lucas ladder over the bits of d, building U_d, V_d and Q^d.
  mpz_class u(1), v = mod(p_param, n), qk = mod(q_param, n);
  size_t bits = mpz_sizeinbase(d.get_mpz_t(), 2);
  for (size_t i = bits - 1; i-- > 0;) {
    u = mod(u * v, n);
    v = mod(v * v - 2 * qk, n);
    qk = mod(qk * qk, n);
    if (mpz_tstbit(d.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
      mpz_class u2 = half(mod(p_param * u + v, n));
      v = half(mod(d_param * u + p_param * v, n));
      u = u2;
      qk = mod(qk * q_param, n);
    }
  }

  if (u == 0 || v == 0) return true;
  for (unsigned long r = 1; r < s; ++r) {
    v = mod(v * v - 2 * qk, n);
    if (v == 0) return true;
    qk = mod(qk * qk, n);
  }
  return false;
}

}  // namespace detail

bool is_prime(const mpz_class& n, uint64_t seed) {
  if (n < 2) return false;
  for (uint64_t q : kSmallPrimes) {
    if (n == q) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(q))) return false;
  }
  if (n < 997ul * 997ul) return true;

  mpz_class d = n - 1;
  unsigned long s = static_cast<unsigned long>(mpz_scan1(d.get_mpz_t(), 0));
  d >>= s;

  if (n < deterministic_limit()) {
    for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
      if (!strong_round(n, mpz_class(static_cast<unsigned long>(a)), d, s)) return false;
    return true;
  }

  if (!strong_round(n, 2, d, s)) return false;
  if (!detail::strong_lucas_prp(n)) return false;
  Rng rng(derive_seed(seed, mpz_fdiv_ui(n.get_mpz_t(), 0xFFFFFFFFul)));
  const mpz_class span = n - 3;
  for (int round = 0; round < 16; ++round) {
    mpz_class a = 2 + rng.below(span);
    if (!strong_round(n, a, d, s)) return false;
  }
  return true;
}

bool is_prime(uint64_t n) { return is_prime(mpz_class(static_cast<unsigned long>(n))); }

std::vector<uint64_t> sieve_primes(uint64_t limit, uint64_t segment_flags) {
  if (limit < 2) throw std::invalid_argument("sieve_primes: limit must be >= 2");
  if (segment_flags < 8) segment_flags = 8;

  uint64_t root = 1;
  while ((root + 1) * (root + 1) <= limit) ++root;

  // base sieve up to sqrt(limit)
  std::vector<char> base(root + 1, 1);
  for (uint64_t i = 2; i * i <= root; ++i)
    if (base[i])
      for (uint64_t j = i * i; j <= root; j += i) base[j] = 0;
  std::vector<uint64_t> base_primes;
  for (uint64_t i = 2; i <= root; ++i)
    if (base[i]) base_primes.push_back(i);

  std::vector<uint64_t> primes;
  std::vector<char> segment(segment_flags);
  for (uint64_t low = 2; low <= limit; low += segment_flags) {
    uint64_t high = std::min(low + segment_flags - 1, limit);
    std::fill(segment.begin(), segment.end(), 1);
    for (uint64_t q : base_primes) {
      if (q * q > high) break;
      uint64_t start = std::max(q * q, ((low + q - 1) / q) * q);
      for (uint64_t j = start; j <= high; j += q) segment[j - low] = 0;
    }
    for (uint64_t v = low; v <= high; ++v)
      if (segment[v - low]) primes.push_back(v);
  }
  return primes;
}

bool dth_power_residue_test(uint64_t u, uint64_t d, uint64_t b) {
  if (d == 0) throw std::invalid_argument("dth_power_residue_test: d must be positive");
  if (b < 3 || b % 2 == 0) throw std::invalid_argument("dth_power_residue_test: b must be an odd prime");
  uint64_t ur = u % b;
  if (ur == 0) throw std::invalid_argument("dth_power_residue_test: u must be coprime to b");
  uint64_t g = std::gcd(d, b - 1);
  return pow_mod(ur, (b - 1) / g, b) == 1;
}

std::optional<uint64_t> dth_root_mod(uint64_t u, uint64_t d, uint64_t b) {
  if (d == 0) throw std::invalid_argument("dth_root_mod: d must be positive");
  if (b < 3 || b % 2 == 0) throw std::invalid_argument("dth_root_mod: b must be an odd prime");
  uint64_t ur = u % b;
  if (ur == 0) throw std::invalid_argument("dth_root_mod: u must be coprime to b");

  uint64_t g = std::gcd(d, b - 1);
  if (g == 1) {
    uint64_t e = *inv_mod(d % (b - 1), b - 1);
    return pow_mod(ur, e, b);  // the unique root
  }
  for (uint64_t x = 1; x < b; ++x)
    if (pow_mod(x, d, b) == ur) return x;
  return std::nullopt;
}

uint64_t brauer_max_run(uint64_t b) {
  if (b < 3 || b % 2 == 0) throw std::invalid_argument("brauer_max_run: b must be an odd prime");
  uint64_t best = 0, run = 0;
  int last = -1;
  for (uint64_t x = 1; x < b; ++x) {
    int qr = pow_mod(x, (b - 1) / 2, b) == 1 ? 1 : 0;
    run = qr == last ? run + 1 : 1;
    last = qr;
    best = std::max(best, run);
  }
  return best;
}

}  // namespace rootdense
