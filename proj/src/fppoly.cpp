#include "fppoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace rootdense::detail {

namespace {

mpz_class mod(const mpz_class& a, const mpz_class& p) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  return r;
}

mpz_class inv(const mpz_class& a, const mpz_class& p) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("fppoly: leading coefficient not invertible (composite modulus?)");
  return r;
}

}  // namespace

void fp_trim(FpPoly& a) {
  while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

FpPoly fp_from(const std::vector<mpz_class>& coeffs, const mpz_class& p) {
  FpPoly r;
  r.c.reserve(coeffs.size());
  for (const auto& v : coeffs) r.c.push_back(mod(v, p));
  fp_trim(r);
  return r;
}

FpPoly fp_x() {
  FpPoly r;
  r.c = {mpz_class(0), mpz_class(1)};
  return r;
}

FpPoly fp_const(const mpz_class& v, const mpz_class& p) {
  FpPoly r;
  r.c = {mod(v, p)};
  fp_trim(r);
  return r;
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b, const mpz_class& p) {
  FpPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) {
    mpz_class v;
    if (i < a.c.size()) v += a.c[i];
    if (i < b.c.size()) v += b.c[i];
    r.c[i] = mod(v, p);
  }
  fp_trim(r);
  return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, const mpz_class& p) {
  FpPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) {
    mpz_class v;
    if (i < a.c.size()) v += a.c[i];
    if (i < b.c.size()) v -= b.c[i];
    r.c[i] = mod(v, p);
  }
  fp_trim(r);
  return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, const mpz_class& p) {
  if (a.zero() || b.zero()) return {};
  FpPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  for (auto& v : r.c) v = mod(v, p);
  fp_trim(r);
  return r;
}

FpPoly fp_monic(const FpPoly& a, const mpz_class& p) {
  if (a.zero()) return a;
  if (a.lead() == 1) return a;
  mpz_class s = inv(a.lead(), p);
  FpPoly r = a;
  for (auto& v : r.c) v = mod(v * s, p);
  return r;
}

namespace {

// Division with remainder; writes quotient/remainder into out params.
void fp_divmod(const FpPoly& a, const FpPoly& m, const mpz_class& p, FpPoly& q, FpPoly& r) {
  if (m.zero()) throw std::domain_error("fppoly: division by zero polynomial");
  r = a;
  q.c.clear();
  if (a.deg() < m.deg()) return;
  q.c.assign(static_cast<size_t>(a.deg() - m.deg()) + 1, mpz_class(0));
  mpz_class lead_inv = inv(m.lead(), p);
  for (int k = a.deg() - m.deg(); k >= 0; --k) {
    size_t top = static_cast<size_t>(k + m.deg());
    if (top >= r.c.size() || r.c[top] == 0) continue;
    mpz_class factor = mod(r.c[top] * lead_inv, p);
    q.c[static_cast<size_t>(k)] = factor;
    for (int i = 0; i <= m.deg(); ++i) {
      size_t idx = static_cast<size_t>(k + i);
      r.c[idx] = mod(r.c[idx] - factor * m.c[static_cast<size_t>(i)], p);
    }
  }
  fp_trim(q);
  fp_trim(r);
}

}  // namespace

FpPoly fp_rem(const FpPoly& a, const FpPoly& m, const mpz_class& p) {
  FpPoly q, r;
  fp_divmod(a, m, p, q, r);
  return r;
}

FpPoly fp_quot(const FpPoly& a, const FpPoly& m, const mpz_class& p) {
  FpPoly q, r;
  fp_divmod(a, m, p, q, r);
  return q;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, const mpz_class& p) {
  while (!b.zero()) {
    FpPoly r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

FpPoly fp_powmod(const FpPoly& base, const mpz_class& e, const FpPoly& m, const mpz_class& p) {
  if (m.deg() < 1) throw std::domain_error("fppoly: powmod modulus must have degree >= 1");
  FpPoly result = fp_const(1, p);
  FpPoly b = fp_rem(base, m, p);
  if (e == 0) return result;
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    result = fp_rem(fp_mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
      result = fp_rem(fp_mul(result, b, p), m, p);
  }
  return result;
}

bool fp_equal(const FpPoly& a, const FpPoly& b) { return a.c == b.c; }

}  // namespace rootdense::detail
