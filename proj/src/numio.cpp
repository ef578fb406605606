#include "numio.hpp"

#include <cctype>
#include <stdexcept>

namespace rootdense {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

[[noreturn]] void bad(const std::string& text) {
  throw std::invalid_argument("malformed rational: \"" + text + "\"");
}

}  // namespace

mpq_class parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) bad(text);

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  if (s.empty()) bad(text);

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    mpq_class q{mpz_class(num, 10), mpz_class(den, 10)};
    if (q.get_den() == 0) bad(text);
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
  }

  std::string mantissa = s;
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    mantissa = s.substr(0, e);
    std::string es = s.substr(e + 1);
    bool eneg = false;
    if (!es.empty() && (es[0] == '+' || es[0] == '-')) {
      eneg = es[0] == '-';
      es.erase(0, 1);
    }
    if (!all_digits(es) || es.size() > 6) bad(text);
    exp10 = std::stol(es);
    if (eneg) exp10 = -exp10;
  }

  std::string digits = mantissa;
  if (auto dot = mantissa.find('.'); dot != std::string::npos) {
    digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
    exp10 -= static_cast<long>(mantissa.size() - dot - 1);
  }
  if (!all_digits(digits)) bad(text);

  mpq_class q{mpz_class(digits, 10)};
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  if (exp10 < 0)
    q /= scale;
  else
    q *= scale;
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

std::string decimal_string(const mpq_class& value, int significant_digits) {
  if (significant_digits < 1) throw std::invalid_argument("significant_digits must be >= 1");
  if (value == 0) return "0";
  mpq_class v = value > 0 ? value : mpq_class(-value);

  // e = floor(log10(v)), found by scaling.
  long e = 0;
  mpq_class scaled = v;
  while (scaled >= 10) {
    scaled /= 10;
    ++e;
  }
  while (scaled < 1) {
    scaled *= 10;
    --e;
  }

  // round(v * 10^(digits-1-e)), half away from zero
  long shift = significant_digits - 1 - e;
  mpz_class num = v.get_num(), den = v.get_den(), pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  if (shift >= 0)
    num *= pow10;
  else
    den *= pow10;
  mpz_class d = (2 * num + den) / (2 * den);

  std::string digits = d.get_str();
  if (static_cast<int>(digits.size()) > significant_digits) {
    // carry out of the top digit (e.g. 0.999... -> 1.00...)
    digits.pop_back();
    ++e;
  }

  std::string out;
  if (e < 0) {
    out = "0." + std::string(static_cast<size_t>(-e - 1), '0') + digits;
  } else if (e + 1 >= static_cast<long>(digits.size())) {
    out = digits + std::string(static_cast<size_t>(e + 1 - digits.size()), '0');
  } else {
    out = digits.substr(0, static_cast<size_t>(e + 1)) + "." + digits.substr(static_cast<size_t>(e + 1));
  }
  return (value < 0 ? "-" : "") + out;
}

std::string rational_string(const mpq_class& value) {
  return value.get_str();
}

uint64_t derive_seed(uint64_t seed, uint64_t index) {
  auto mix = [](uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  };
  return mix(seed + mix(index + 1));
}

}  // namespace rootdense
