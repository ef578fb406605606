#include "intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "fppoly.hpp"
#include "modarith.hpp"

namespace rootdense {

namespace {

[[noreturn]] void bad_poly(const std::string& text, const std::string& why) {
  throw std::invalid_argument("malformed polynomial \"" + text + "\": " + why);
}

bool parse_int(const std::string& s, mpz_class& out) {
  if (s.empty()) return false;
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  out = mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
  return true;
}

std::vector<mpz_class> parse_coeff_list(const std::string& text, const std::string& stripped) {
  std::vector<mpz_class> coeffs;
  size_t pos = 0;
  while (pos <= stripped.size()) {
    size_t comma = stripped.find(',', pos);
    std::string item = stripped.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    mpz_class v;
    if (!parse_int(item, v)) bad_poly(text, "expected integer coefficient, got \"" + item + "\"");
    coeffs.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return coeffs;
}

std::vector<mpz_class> parse_human(const std::string& text, const std::string& stripped) {
  std::vector<mpz_class> coeffs;
  size_t pos = 0;
  while (pos < stripped.size()) {
    int sign = 1;
    while (pos < stripped.size() && (stripped[pos] == '+' || stripped[pos] == '-')) {
      if (stripped[pos] == '-') sign = -sign;
      ++pos;
    }
    if (pos >= stripped.size()) bad_poly(text, "dangling sign");

    std::string digits;
    while (pos < stripped.size() && std::isdigit(static_cast<unsigned char>(stripped[pos])))
      digits.push_back(stripped[pos++]);
    if (pos < stripped.size() && stripped[pos] == '*') ++pos;

    mpz_class coef = digits.empty() ? mpz_class(1) : mpz_class(digits, 10);
    unsigned long exp = 0;
    if (pos < stripped.size() && (stripped[pos] == 'x' || stripped[pos] == 'X')) {
      ++pos;
      exp = 1;
      if (pos < stripped.size() && stripped[pos] == '^') {
        ++pos;
        std::string es;
        while (pos < stripped.size() && std::isdigit(static_cast<unsigned char>(stripped[pos])))
          es.push_back(stripped[pos++]);
        if (es.empty() || es.size() > 4) bad_poly(text, "bad exponent");
        exp = std::stoul(es);
      }
    } else if (digits.empty()) {
      bad_poly(text, std::string("unexpected character '") + stripped[pos] + "'");
    }
    if (pos < stripped.size() && stripped[pos] != '+' && stripped[pos] != '-')
      bad_poly(text, std::string("unexpected character '") + stripped[pos] + "'");

    if (coeffs.size() < exp + 1) coeffs.resize(exp + 1, mpz_class(0));
    coeffs[exp] += sign * coef;
  }
  if (coeffs.empty()) bad_poly(text, "empty");
  return coeffs;
}

}  // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) throw std::invalid_argument("the zero polynomial is not allowed");
}

IntPoly IntPoly::parse(const std::string& text) {
  std::string stripped;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) stripped.push_back(ch);
  if (stripped.empty()) bad_poly(text, "empty");

  bool human = stripped.find('x') != std::string::npos || stripped.find('X') != std::string::npos;
  IntPoly f(human ? parse_human(text, stripped) : parse_coeff_list(text, stripped));
  if (f.leading() < 0) return f.negated();  // root sets, r_f and A_f agree for f and -f
  return f;
}

IntPoly IntPoly::negated() const {
  std::vector<mpz_class> c;
  c.reserve(coeffs_.size());
  for (const auto& v : coeffs_) c.push_back(-v);
  return IntPoly(std::move(c));
}

std::string IntPoly::to_string() const {
  std::string out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ",";
    out += coeffs_[i].get_str();
  }
  return out;
}

mpz_class eval(const IntPoly& f, const mpz_class& x) {
  mpz_class acc = 0;
  for (size_t i = f.coeffs().size(); i-- > 0;) acc = acc * x + f.coeff(i);
  return acc;
}

mpz_class fixed_divisor(const IntPoly& f) {
  // gcd over the n+1 consecutive values f(0..n) equals the gcd over all of Z
  // (finite differences of order > n vanish).
  mpz_class g = 0;
  for (int i = 0; i <= f.degree(); ++i) {
    mpz_class v = eval(f, i);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly conjugate_g(const IntPoly& f, uint64_t b, uint64_t t) {
  if (b < 3 || b % 2 == 0 || !is_prime(b)) throw std::domain_error("conjugate_g: b must be an odd prime");
  if (t < 1 || t >= b) throw std::domain_error("conjugate_g: t must lie in [1, b-1]");
  mpz_class bz(static_cast<unsigned long>(b)), tz(static_cast<unsigned long>(t));
  mpz_class crf = f.leading() * fixed_divisor(f);
  if (mpz_divisible_p(crf.get_mpz_t(), bz.get_mpz_t()))
    throw std::domain_error("conjugate_g: b divides c*r_f");

  const int n = f.degree();
  // b^(n-i) for each i
  std::vector<mpz_class> bpow(static_cast<size_t>(n) + 1);
  bpow[0] = 1;
  for (int i = 1; i <= n; ++i) bpow[static_cast<size_t>(i)] = bpow[static_cast<size_t>(i - 1)] * bz;

  std::vector<mpz_class> acc(static_cast<size_t>(n) + 1, mpz_class(0));
  std::vector<mpz_class> pow = {mpz_class(1)};  // (bw+t)^i
  for (int i = 0; i <= n; ++i) {
    const mpz_class scale = f.coeff(static_cast<size_t>(i)) * bpow[static_cast<size_t>(n - i)];
    if (scale != 0)
      for (size_t k = 0; k < pow.size(); ++k) acc[k] += scale * pow[k];
    if (i < n) {
      // pow *= (b*w + t)
      std::vector<mpz_class> next(pow.size() + 1, mpz_class(0));
      for (size_t k = 0; k < pow.size(); ++k) {
        next[k] += pow[k] * tz;
        next[k + 1] += pow[k] * bz;
      }
      pow = std::move(next);
    }
  }
  return IntPoly(std::move(acc));
}

namespace {

// Divisor lists for the rational-root pretest; empty when v is too expensive
// to factor by trial division.
std::vector<mpz_class> small_divisors(const mpz_class& v) {
  std::vector<std::pair<mpz_class, int>> factors;
  mpz_class rest = abs(v);
  for (uint64_t q = 2; q <= 100000 && rest > 1; q == 2 ? q = 3 : q += 2) {
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(q))) continue;
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(q))) {
      rest /= static_cast<unsigned long>(q);
      ++e;
    }
    factors.emplace_back(mpz_class(static_cast<unsigned long>(q)), e);
  }
  if (rest > 1) {
    if (!is_prime(rest)) return {};  // unfactored composite tail: skip pretest
    factors.emplace_back(rest, 1);
  }
  std::vector<mpz_class> divs = {mpz_class(1)};
  for (const auto& [q, e] : factors) {
    size_t base = divs.size();
    mpz_class qp = 1;
    for (int k = 1; k <= e; ++k) {
      qp *= q;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * qp);
      if (divs.size() > 4096) return {};
    }
  }
  return divs;
}

// True iff f has a rational root u/v (in lowest terms, v > 0): checks the
// homogeneous value sum_i c_i u^i v^(n-i) = 0 over all candidate pairs.
bool has_rational_root(const IntPoly& f) {
  if (f.coeff(0) == 0) return true;  // x divides f
  auto us = small_divisors(f.coeff(0));
  auto vs = small_divisors(f.leading());
  if (us.empty() || vs.empty()) return false;  // pretest skipped

  const int n = f.degree();
  for (const auto& v : vs) {
    std::vector<mpz_class> vpow(static_cast<size_t>(n) + 1);
    vpow[0] = 1;
    for (int i = 1; i <= n; ++i) vpow[static_cast<size_t>(i)] = vpow[static_cast<size_t>(i - 1)] * v;
    for (const auto& u : us) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
      if (g != 1) continue;
      for (int sign = 0; sign < 2; ++sign) {
        mpz_class uu = sign ? mpz_class(-u) : u;
        mpz_class acc = 0, upow = 1;
        for (int i = 0; i <= n; ++i) {
          acc += f.coeff(static_cast<size_t>(i)) * upow * vpow[static_cast<size_t>(n - i)];
          upow *= uu;
        }
        if (acc == 0) return true;
      }
    }
  }
  return false;
}

std::vector<uint64_t> prime_divisors(int n) {
  std::vector<uint64_t> out;
  int rest = n;
  for (int q = 2; q * q <= rest; ++q) {
    if (rest % q) continue;
    out.push_back(static_cast<uint64_t>(q));
    while (rest % q == 0) rest /= q;
  }
  if (rest > 1) out.push_back(static_cast<uint64_t>(rest));
  return out;
}

// Rabin's criterion: f of degree n is irreducible over F_q iff
// x^(q^n) = x (mod f) and gcd(x^(q^(n/r)) - x, f) = 1 for every prime r | n.
bool irreducible_mod_q(const IntPoly& f, uint64_t q) {
  using namespace detail;
  const mpz_class p(static_cast<unsigned long>(q));
  FpPoly fbar = fp_monic(fp_from(f.coeffs(), p), p);
  const int n = fbar.deg();
  if (n != f.degree()) return false;  // degree dropped (q | c); caller filters

  const FpPoly x = fp_x();
  const mpz_class qz(static_cast<unsigned long>(q));

  FpPoly frob = x;  // x^(q^m) mod fbar, m = 0 initially
  int m = 0;
  auto advance_to = [&](int target) {
    for (; m < target; ++m) frob = fp_powmod(frob, qz, fbar, p);
  };

  // Visit the checkpoints n/r in ascending order so the Frobenius power can
  // only ever move forward.
  std::vector<int> checkpoints;
  for (uint64_t r : prime_divisors(n)) checkpoints.push_back(n / static_cast<int>(r));
  std::sort(checkpoints.begin(), checkpoints.end());
  for (int target : checkpoints) {
    advance_to(target);
    FpPoly g = fp_gcd(fbar, fp_sub(frob, x, p), p);
    if (g.deg() != 0) return false;
  }
  advance_to(n);
  return fp_equal(frob, x);
}

}  // namespace

std::optional<uint64_t> irreducibility_witness(const IntPoly& f, uint64_t prime_bound) {
  if (f.degree() < 2) throw std::domain_error("irreducibility_witness: degree must be >= 2");
  if (prime_bound < 2) throw std::domain_error("irreducibility_witness: prime_bound must be >= 2");
  if (has_rational_root(f)) return std::nullopt;

  for (uint64_t q : sieve_primes(prime_bound)) {
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), static_cast<unsigned long>(q))) continue;
    if (irreducible_mod_q(f, q)) return q;
  }
  return std::nullopt;
}

}  // namespace rootdense
