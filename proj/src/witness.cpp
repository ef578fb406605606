#include "witness.hpp"

#include <functional>
#include <stdexcept>

#include "modarith.hpp"
#include "numio.hpp"

namespace rootdense {

namespace {

mpz_class mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// a*c*t^(n-1) + r_f = 0 (mod b)
bool shift_congruence_holds(const IntPoly& f, const Fraction& frac, uint64_t t, const mpz_class& rf) {
  const mpz_class bz(static_cast<unsigned long>(frac.b));
  mpz_class lhs = mpz_class(static_cast<unsigned long>(frac.a)) * f.leading();
  lhs *= pow_mod(mpz_class(static_cast<unsigned long>(t)), mpz_class(f.degree() - 1), bz);
  lhs += rf;
  return mod(lhs, bz) == 0;
}

void validate_search_inputs(const IntPoly& f, const Fraction& frac, uint64_t t, const mpz_class& rf) {
  if (f.degree() < 2) throw std::domain_error("find_witness: degree must be >= 2");
  if (f.leading() <= 0)
    throw std::domain_error("find_witness: f must be normalized to a positive leading coefficient");
  if (frac.b < 3 || frac.b % 2 == 0 || !is_prime(frac.b))
    throw std::domain_error("find_witness: b must be an odd prime");
  if (frac.a < 1 || frac.a >= frac.b) throw std::domain_error("find_witness: a must lie in [1, b-1]");
  if (t < 1 || t >= frac.b) throw std::domain_error("find_witness: t must lie in [1, b-1]");
  if (!shift_congruence_holds(f, frac, t, rf))
    throw std::domain_error("find_witness: (a, b, t) does not satisfy a*c*t^(n-1) = -r_f (mod b)");
}

// Scans w ascending, emitting each witness to `accept`; stops when accept
// returns false or the range ends. Counts effort into log if given.
void scan_witnesses(const IntPoly& f, const Fraction& frac, uint64_t t, uint64_t w_lo, uint64_t w_hi,
                    uint64_t seed, SearchLog* log, const std::function<bool(Witness&&)>& accept) {
  const mpz_class rf = fixed_divisor(f);
  validate_search_inputs(f, frac, t, rf);
  const IntPoly g = conjugate_g(f, frac.b, t);
  const mpz_class bz(static_cast<unsigned long>(frac.b));
  const mpz_class az(static_cast<unsigned long>(frac.a));
  const mpz_class tz(static_cast<unsigned long>(t));

  for (uint64_t w = w_lo; w <= w_hi; ++w) {
    if (log) ++log->w_tried;
    const mpz_class value = eval(g, mpz_class(static_cast<unsigned long>(w)));
    if (value <= 0) continue;
    mpz_class candidate, rem;
    mpz_fdiv_qr(candidate.get_mpz_t(), rem.get_mpz_t(), value.get_mpz_t(), rf.get_mpz_t());
    if (rem != 0) throw std::logic_error("witness search: r_f does not divide G(w)");
    if (log) ++log->prime_tests;
    if (!is_prime(candidate, seed)) continue;

    const mpz_class& p = candidate;
    mpz_class shift = bz * static_cast<unsigned long>(w) + tz;
    mpz_class num = az * p + shift;
    mpz_class z, zrem;
    mpz_fdiv_qr(z.get_mpz_t(), zrem.get_mpz_t(), num.get_mpz_t(), bz.get_mpz_t());
    if (zrem != 0) throw std::logic_error("witness search: b does not divide a*p + b*w + t");
    if (z < 1 || z > p - 1) continue;  // only possible at tiny w

    mpq_class gap(shift, bz * p);
    gap.canonicalize();

    Witness wit;
    wit.a = frac.a;
    wit.b = frac.b;
    wit.t = t;
    wit.w = w;
    wit.p = p;
    wit.z = z;
    wit.gap = gap;
    if (!accept(std::move(wit))) return;
  }
}

}  // namespace

mpq_class Witness::value() const {
  mpq_class v(z, p);
  v.canonicalize();
  return v;
}

std::string Witness::to_string() const {
  std::string out;
  out += "a=" + std::to_string(a);
  out += " b=" + std::to_string(b);
  out += " t=" + std::to_string(t);
  out += " w=" + std::to_string(w);
  out += " p=" + p.get_str();
  out += " z=" + z.get_str();
  out += " gap=" + rational_string(gap);
  out += " value=" + decimal_string(value());
  return out;
}

std::string SearchLog::to_string() const {
  std::string out = "stage=" + stage;
  if (fraction) out += " fraction=" + std::to_string(fraction->a) + "/" + std::to_string(fraction->b);
  if (t) out += " t=" + std::to_string(*t);
  out += " w_tried=" + std::to_string(w_tried);
  out += " prime_tests=" + std::to_string(prime_tests);
  return out;
}

std::optional<Witness> find_witness(const IntPoly& f, const Fraction& frac, uint64_t t, uint64_t w_lo,
                                    uint64_t w_hi, uint64_t seed, SearchLog* log) {
  if (w_lo > w_hi) throw std::domain_error("find_witness: w_lo must not exceed w_hi");
  std::optional<Witness> found;
  scan_witnesses(f, frac, t, w_lo, w_hi, seed, log, [&](Witness&& wit) {
    found = std::move(wit);
    return false;
  });
  if (log) log->stage = found ? "ok" : "no_witness";
  return found;
}

bool verify_witness(const IntPoly& f, const Witness& wit, uint64_t seed) {
  try {
    if (f.degree() < 2) return false;
    if (wit.b < 3 || wit.b % 2 == 0 || !is_prime(wit.b)) return false;
    if (wit.a < 1 || wit.a >= wit.b) return false;
    if (wit.t < 1 || wit.t >= wit.b) return false;

    if (wit.p < 2 || !is_prime(wit.p, seed)) return false;

    const mpz_class rf = fixed_divisor(f);
    const IntPoly g = conjugate_g(f, wit.b, wit.t);  // throws if gcd(b, c*r_f) != 1
    if (rf * wit.p != eval(g, mpz_class(static_cast<unsigned long>(wit.w)))) return false;

    const mpz_class bz(static_cast<unsigned long>(wit.b));
    mpz_class shift = bz * static_cast<unsigned long>(wit.w) + static_cast<unsigned long>(wit.t);
    if (bz * wit.z != mpz_class(static_cast<unsigned long>(wit.a)) * wit.p + shift) return false;
    if (wit.z < 1 || wit.z > wit.p - 1) return false;

    if (mod(eval(f, wit.z), wit.p) != 0) return false;

    mpq_class gap(shift, bz * wit.p);
    gap.canonicalize();
    if (gap != wit.gap || gap <= 0) return false;
    mpq_class diff = wit.value() - Fraction{wit.a, wit.b}.value();
    return diff == gap;
  } catch (const std::exception&) {
    return false;
  }
}

ApproxResult approximate(const IntPoly& f, const mpq_class& alpha, const mpq_class& eps, const Budget& budget,
                         uint64_t seed) {
  if (alpha <= 0 || alpha >= 1) throw std::domain_error("approximate: alpha must lie in (0,1)");
  if (eps <= 0) throw std::domain_error("approximate: eps must be positive");

  ApproxResult result;
  const mpq_class half_eps = eps / 2;

  auto frac = select_fraction(f, alpha, half_eps, budget.b_max);
  if (!frac) {
    result.log.stage = "no_fraction";
    return result;
  }
  result.log.fraction = *frac;
  const uint64_t t = solve_t(f, *frac);
  result.log.t = t;

  scan_witnesses(f, *frac, t, 0, budget.w_max, seed, &result.log, [&](Witness&& wit) {
    if (wit.gap > half_eps) return true;  // keep searching: gap still too wide
    result.witness = std::move(wit);
    return false;
  });
  result.log.stage = result.witness ? "ok" : "no_witness";
  return result;
}

std::vector<Witness> witness_sequence(const IntPoly& f, const Fraction& frac, uint64_t t, uint64_t count,
                                      uint64_t w_max, uint64_t seed) {
  if (count < 1) throw std::domain_error("witness_sequence: count must be positive");
  std::vector<Witness> out;
  scan_witnesses(f, frac, t, 0, w_max, seed, nullptr, [&](Witness&& wit) {
    out.push_back(std::move(wit));
    return out.size() < count;
  });
  return out;
}

}  // namespace rootdense
