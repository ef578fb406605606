#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rootdense {

// Integer polynomial with arbitrary-precision coefficients, stored densely,
// constant term first. Canonical: the last stored coefficient is nonzero; the
// zero polynomial is rejected on construction.
class IntPoly {
 public:
  explicit IntPoly(std::vector<mpz_class> coeffs);

  // Accepts "1,0,1" (coefficient list, constant first) or "x^2+1" (integer
  // coefficients). The presence of 'x' selects the human syntax. Parsed
  // polynomials are normalized to a positive leading coefficient.
  static IntPoly parse(const std::string& text);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const mpz_class& leading() const { return coeffs_.back(); }
  const mpz_class& coeff(size_t i) const { return coeffs_[i]; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  IntPoly negated() const;

  // Canonical comma-separated coefficient list, e.g. "1,0,1".
  std::string to_string() const;

  bool operator==(const IntPoly&) const = default;

 private:
  std::vector<mpz_class> coeffs_;
};

// Exact evaluation at an integer point.
mpz_class eval(const IntPoly& f, const mpz_class& x);

// r_f, the gcd of all integer values of f; computed as gcd(|f(0)|, ..., |f(n)|).
mpz_class fixed_divisor(const IntPoly& f);

// The conjugate polynomial G(w) = sum_i c_i (bw+t)^i b^(n-i), expanded to
// integer coefficients. Requires b odd prime coprime to c*r_f and 1 <= t < b.
// deg G = deg f and the leading coefficient of G is c*b^n.
IntPoly conjugate_g(const IntPoly& f, uint64_t b, uint64_t t);

// Smallest prime q <= prime_bound, not dividing the leading coefficient, such
// that f mod q is irreducible over the field with q elements: a sound
// certificate of irreducibility over the rationals (for primitive f). Absence
// is not a proof of reducibility: x^4+1 is irreducible yet splits mod every
// prime. A rational-root pretest rejects obvious reducibles early. Degree >= 2.
std::optional<uint64_t> irreducibility_witness(const IntPoly& f, uint64_t prime_bound);

}  // namespace rootdense
