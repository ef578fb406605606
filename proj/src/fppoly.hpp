#pragma once

#include <gmpxx.h>

#include <vector>

namespace rootdense::detail {

// Dense polynomial over Z/pZ, constant term first, coefficients in [0, p).
// Empty coefficient vector is the zero polynomial; otherwise the leading
// coefficient is nonzero.
struct FpPoly {
  std::vector<mpz_class> c;

  bool zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  const mpz_class& lead() const { return c.back(); }
};

FpPoly fp_from(const std::vector<mpz_class>& coeffs, const mpz_class& p);
FpPoly fp_x();                                       // the monomial x
FpPoly fp_const(const mpz_class& v, const mpz_class& p);
void fp_trim(FpPoly& a);

FpPoly fp_add(const FpPoly& a, const FpPoly& b, const mpz_class& p);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b, const mpz_class& p);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, const mpz_class& p);
FpPoly fp_monic(const FpPoly& a, const mpz_class& p);

// Remainder and exact quotient by a nonzero divisor.
FpPoly fp_rem(const FpPoly& a, const FpPoly& m, const mpz_class& p);
FpPoly fp_quot(const FpPoly& a, const FpPoly& m, const mpz_class& p);

// Monic gcd.
FpPoly fp_gcd(FpPoly a, FpPoly b, const mpz_class& p);

// base^e mod m, with m of degree >= 1.
FpPoly fp_powmod(const FpPoly& base, const mpz_class& e, const FpPoly& m, const mpz_class& p);

bool fp_equal(const FpPoly& a, const FpPoly& b);

}  // namespace rootdense::detail
