#include "rootsmodp.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <thread>

#include "fppoly.hpp"
#include "numio.hpp"

namespace rootdense {

namespace {

using detail::FpPoly;

std::vector<mpz_class> roots_exhaustive_u64(const IntPoly& f, uint64_t p) {
  std::vector<uint64_t> c(f.coeffs().size());
  bool all_zero = true;
  for (size_t i = 0; i < c.size(); ++i) {
    c[i] = mpz_fdiv_ui(f.coeff(i).get_mpz_t(), static_cast<unsigned long>(p));
    all_zero = all_zero && c[i] == 0;
  }
  if (all_zero) throw std::domain_error("roots_mod_p: f vanishes identically mod p");

  std::vector<mpz_class> roots;
  for (uint64_t x = 0; x < p; ++x) {
    uint64_t acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = (mul_mod(acc, x, p) + c[i]) % p;
    if (acc == 0) roots.emplace_back(static_cast<unsigned long>(x));
  }
  return roots;
}

// Splits a monic squarefree product of linear factors into its roots.
void split_linear_product(const FpPoly& s, const mpz_class& p, Rng& rng, std::vector<mpz_class>& out) {
  if (s.deg() <= 0) return;
  if (s.deg() == 1) {
    mpz_class r;
    mpz_class neg = -s.c[0];
    mpz_mod(r.get_mpz_t(), neg.get_mpz_t(), p.get_mpz_t());
    out.push_back(r);
    return;
  }
  const FpPoly x = detail::fp_x();
  const FpPoly one = detail::fp_const(1, p);
  const mpz_class half = (p - 1) / 2;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    mpz_class delta = rng.below(p);
    FpPoly shifted;  // x + delta
    shifted.c = {delta, mpz_class(1)};
    FpPoly h = detail::fp_sub(detail::fp_powmod(shifted, half, s, p), one, p);
    FpPoly g = detail::fp_gcd(s, h, p);
    if (g.deg() > 0 && g.deg() < s.deg()) {
      split_linear_product(g, p, rng, out);
      split_linear_product(detail::fp_quot(s, g, p), p, rng, out);
      return;
    }
  }
  throw std::runtime_error("roots_mod_p: splitting failed to converge (composite p?)");
}

std::vector<mpz_class> roots_gcd_method(const IntPoly& f, const mpz_class& p, Rng& rng) {
  FpPoly fbar = detail::fp_from(f.coeffs(), p);
  if (fbar.zero()) throw std::domain_error("roots_mod_p: f vanishes identically mod p");
  if (fbar.deg() == 0) return {};
  fbar = detail::fp_monic(fbar, p);

  std::vector<mpz_class> roots;
  if (fbar.deg() == 1) {
    mpz_class r;
    mpz_class neg = -fbar.c[0];
    mpz_mod(r.get_mpz_t(), neg.get_mpz_t(), p.get_mpz_t());
    roots.push_back(r);
    return roots;
  }

  const FpPoly x = detail::fp_x();
  FpPoly xp = detail::fp_powmod(x, p, fbar, p);
  FpPoly s = detail::fp_gcd(fbar, detail::fp_sub(xp, x, p), p);
  split_linear_product(s, p, rng, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

std::vector<mpz_class> roots_mod_p(const IntPoly& f, const mpz_class& p, uint64_t exhaustive_threshold, Rng& rng) {
  if (p < 2) throw std::domain_error("roots_mod_p: p must be a prime >= 2");
  assert(is_prime(p) && "roots_mod_p requires a prime modulus");

  if (p == 2) return roots_exhaustive_u64(f, 2);
  if (p < exhaustive_threshold && mpz_fits_ulong_p(p.get_mpz_t()))
    return roots_exhaustive_u64(f, mpz_get_ui(p.get_mpz_t()));
  return roots_gcd_method(f, p, rng);
}

std::vector<RootPoint> a_f_points(const IntPoly& f, uint64_t x_bound, const AfOptions& opt) {
  if (x_bound < 2) throw std::domain_error("a_f_points: modulus bound must be >= 2");
  const std::vector<uint64_t> primes = sieve_primes(x_bound);

  // Fixed-size blocks keep the per-block RNG derivation independent of the
  // worker count, so results never depend on parallelism.
  const size_t block_size = 1024;
  const size_t n_blocks = (primes.size() + block_size - 1) / block_size;
  std::vector<std::vector<RootPoint>> block_out(n_blocks);

  auto run_block = [&](size_t bi) {
    Rng rng(derive_seed(opt.seed, bi));
    auto& out = block_out[bi];
    const size_t lo = bi * block_size, hi = std::min(primes.size(), lo + block_size);
    for (size_t k = lo; k < hi; ++k) {
      const uint64_t p = primes[k];
      for (const mpz_class& z : roots_mod_p(f, mpz_class(static_cast<unsigned long>(p)), opt.exhaustive_threshold, rng)) {
        uint64_t zu = mpz_get_ui(z.get_mpz_t());
        if (zu >= 1 && zu <= p - 1) out.push_back(RootPoint{p, zu});
      }
    }
  };

  unsigned workers = std::max(1u, opt.workers);
  if (workers == 1 || n_blocks <= 1) {
    for (size_t bi = 0; bi < n_blocks; ++bi) run_block(bi);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (size_t bi = w; bi < n_blocks; bi += workers) run_block(bi);
      });
    for (auto& th : pool) th.join();
  }

  std::vector<RootPoint> points;
  for (auto& blk : block_out) points.insert(points.end(), blk.begin(), blk.end());
  return points;
}

std::string root_points_csv(const std::vector<RootPoint>& points) {
  std::string out = "p,z,value\n";
  for (const auto& pt : points) {
    out += std::to_string(pt.p);
    out += ",";
    out += std::to_string(pt.z);
    out += ",";
    out += decimal_string(pt.value());
    out += "\n";
  }
  return out;
}

}  // namespace rootdense
