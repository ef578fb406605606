#include <doctest.h>

#include <random>

#include "intpoly.hpp"
#include "modarith.hpp"
#include "oracles.hpp"

using namespace rootdense;

namespace {

const std::vector<std::string> kCorpus = {"x^2+1", "x^2+x+2", "x^3-x+3", "x^3+2x+2", "x^4+x+1"};

}  // namespace

TEST_SUITE("intpoly") {

TEST_CASE("parsing both syntaxes") {
  CHECK(IntPoly::parse("1,0,1") == IntPoly::parse("x^2+1"));
  CHECK(IntPoly::parse("3,-1,0,1") == IntPoly::parse("x^3-x+3"));
  CHECK(IntPoly::parse("2, 2, 1") == IntPoly::parse("x^2 + 2x + 2"));
  CHECK(IntPoly::parse("x^2+1").to_string() == "1,0,1");
  CHECK(IntPoly::parse("-5") == IntPoly::parse("5"));  // sign normalization
  CHECK(IntPoly::parse("-x^2-1") == IntPoly::parse("x^2+1"));
  CHECK(IntPoly::parse("2*x^3 - 4").to_string() == "-4,0,0,2");
  CHECK(IntPoly::parse("x+x+1").to_string() == "1,2");
  CHECK(IntPoly::parse("1,0,1,0").degree() == 2);  // trailing zeros stripped
}

TEST_CASE("parsing rejects malformed input") {
  CHECK_THROWS_AS(IntPoly::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(IntPoly::parse("0"), std::invalid_argument);        // zero polynomial
  CHECK_THROWS_AS(IntPoly::parse("0,0"), std::invalid_argument);      // zero polynomial
  CHECK_THROWS_AS(IntPoly::parse("x^2-x^2"), std::invalid_argument);  // cancels to zero
  CHECK_THROWS_AS(IntPoly::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(IntPoly::parse("x^"), std::invalid_argument);
  CHECK_THROWS_AS(IntPoly::parse("x2"), std::invalid_argument);
  CHECK_THROWS_AS(IntPoly::parse("y+1"), std::invalid_argument);
  CHECK_THROWS_AS(IntPoly::parse("1.5,2"), std::invalid_argument);
}

TEST_CASE("eval") {
  IntPoly f = IntPoly::parse("x^2+1");
  CHECK(eval(f, 0) == 1);
  CHECK(eval(f, 5) == 26);
  CHECK(eval(f, 27) == 730);
  CHECK(eval(IntPoly::parse("x^3-x+3"), 27) == 19659);
  CHECK(eval(f, -3) == 10);
}

TEST_CASE("fixed_divisor examples") {
  CHECK(fixed_divisor(IntPoly::parse("x^2+1")) == 1);
  CHECK(fixed_divisor(IntPoly::parse("x^2+x+2")) == 2);
  CHECK(fixed_divisor(IntPoly::parse("x^3-x+3")) == 3);
  // Fermat family x^q - x + q*k
  CHECK(fixed_divisor(IntPoly::parse("5,-1,0,0,0,1")) == 5);    // x^5 - x + 5
  CHECK(fixed_divisor(IntPoly::parse("10,-1,0,0,0,1")) == 5);   // x^5 - x + 10
  CHECK(fixed_divisor(IntPoly::parse("14,-1,0,0,0,0,0,1")) == 7);  // x^7 - x + 14
}

TEST_CASE("fixed_divisor equals brute-force gcd over [-100, 100]") {
  for (const auto& text : kCorpus) {
    IntPoly f = IntPoly::parse(text);
    CHECK(fixed_divisor(f) == oracles::gcd_over_range(f, -100, 100));
  }
  CHECK(fixed_divisor(IntPoly::parse("6,6,6")) == oracles::gcd_over_range(IntPoly::parse("6,6,6"), -100, 100));
}

TEST_CASE("fixed_divisor divides 500 random values per corpus polynomial") {
  std::mt19937_64 gen(1);
  for (const auto& text : kCorpus) {
    IntPoly f = IntPoly::parse(text);
    mpz_class rf = fixed_divisor(f);
    for (int i = 0; i < 500; ++i) {
      mpz_class x(static_cast<long>(gen() % 2000001) - 1000000);
      CHECK(mpz_divisible_p(eval(f, x).get_mpz_t(), rf.get_mpz_t()));
    }
  }
}

TEST_CASE("conjugate_g examples") {
  CHECK(conjugate_g(IntPoly::parse("x^2+1"), 3, 2) == IntPoly::parse("13,12,9"));
  CHECK(conjugate_g(IntPoly::parse("x^2+1"), 5, 4) == IntPoly::parse("41,40,25"));
  CHECK(conjugate_g(IntPoly::parse("x^3-x+3"), 5, 1) == IntPoly::parse("351,-110,75,125"));
}

TEST_CASE("conjugate_g rejects bad (b, t)") {
  IntPoly f = IntPoly::parse("x^3-x+3");  // c*r_f = 3
  CHECK_THROWS_AS(conjugate_g(f, 3, 1), std::domain_error);   // b | c*r_f
  CHECK_THROWS_AS(conjugate_g(f, 5, 0), std::domain_error);   // t out of range
  CHECK_THROWS_AS(conjugate_g(f, 5, 5), std::domain_error);
  CHECK_THROWS_AS(conjugate_g(f, 9, 2), std::domain_error);   // composite b
  CHECK_THROWS_AS(conjugate_g(f, 2, 1), std::domain_error);   // even b
}

TEST_CASE("conjugate identity G(w) = b^n f(w + t/b), exactly") {
  for (const auto& text : kCorpus) {
    IntPoly f = IntPoly::parse(text);
    mpz_class crf = f.leading() * fixed_divisor(f);
    for (uint64_t b : {3, 5, 7, 11, 97}) {
      if (mpz_divisible_ui_p(crf.get_mpz_t(), b)) continue;
      for (uint64_t t : {uint64_t{1}, b / 2, b - 1}) {
        IntPoly g = conjugate_g(f, b, t);
        CHECK(g.degree() == f.degree());
        mpz_class bn;
        mpz_ui_pow_ui(bn.get_mpz_t(), b, static_cast<unsigned long>(f.degree()));
        CHECK(g.leading() == f.leading() * bn);
        for (long w = -20; w <= 20; ++w) {
          mpq_class arg = w + mpq_class(t, b);
          arg.canonicalize();
          mpq_class rhs = mpq_class(bn) * oracles::eval_rational(f, arg);
          rhs.canonicalize();
          CHECK(mpq_class(eval(g, w)) == rhs);
        }
      }
    }
  }
}

TEST_CASE("G(w) = c*t^n (mod b) for all w") {
  for (const auto& text : kCorpus) {
    IntPoly f = IntPoly::parse(text);
    mpz_class crf = f.leading() * fixed_divisor(f);
    for (uint64_t b : {5, 7, 13}) {
      if (mpz_divisible_ui_p(crf.get_mpz_t(), b)) continue;
      for (uint64_t t = 1; t < b; ++t) {
        IntPoly g = conjugate_g(f, b, t);
        mpz_class expected = f.leading() * pow_mod(mpz_class(t), mpz_class(f.degree()), mpz_class(b));
        mpz_mod(expected.get_mpz_t(), expected.get_mpz_t(), mpz_class(b).get_mpz_t());
        for (long w = 0; w <= 30; ++w) {
          mpz_class got = eval(g, w);
          mpz_mod(got.get_mpz_t(), got.get_mpz_t(), mpz_class(b).get_mpz_t());
          CHECK(got == expected);
        }
      }
    }
  }
}

TEST_CASE("gcd preservation: fixed_divisor(G) = fixed_divisor(f)") {
  for (const auto& text : kCorpus) {
    IntPoly f = IntPoly::parse(text);
    mpz_class rf = fixed_divisor(f);
    mpz_class crf = f.leading() * rf;
    for (uint64_t b : {3, 5, 7, 11, 13}) {
      if (mpz_divisible_ui_p(crf.get_mpz_t(), b)) continue;
      for (uint64_t t = 1; t < b; ++t) CHECK(fixed_divisor(conjugate_g(f, b, t)) == rf);
    }
  }
}

TEST_CASE("irreducibility_witness examples") {
  CHECK(irreducibility_witness(IntPoly::parse("x^2+1"), 50) == 3);
  CHECK_FALSE(irreducibility_witness(IntPoly::parse("x^2-1"), 50).has_value());
  // irreducible over Q yet reducible mod every prime: stays empty
  CHECK_FALSE(irreducibility_witness(IntPoly::parse("x^4+1"), 200).has_value());
  CHECK(irreducibility_witness(IntPoly::parse("x^4+x+1"), 50) == 2);
  CHECK(irreducibility_witness(IntPoly::parse("x^3-x+3"), 50) == 2);
  CHECK(irreducibility_witness(IntPoly::parse("x^2+x+2"), 50) == 3);
  CHECK_THROWS_AS(irreducibility_witness(IntPoly::parse("x+1"), 50), std::domain_error);
}

TEST_CASE("rational-root pretest rejects factorable polynomials") {
  CHECK_FALSE(irreducibility_witness(IntPoly::parse("x^2-4"), 50).has_value());
  CHECK_FALSE(irreducibility_witness(IntPoly::parse("x^3+x"), 50).has_value());       // root 0
  CHECK_FALSE(irreducibility_witness(IntPoly::parse("2x^2-x-1"), 50).has_value());    // root 1
  CHECK_FALSE(irreducibility_witness(IntPoly::parse("4x^2-1"), 50).has_value());      // root 1/2
}

TEST_CASE("witness matches monic-divisor search for q <= 13") {
  std::vector<std::string> polys = {"x^2+1", "x^2+x+2", "x^3-x+3", "x^3+2x+2",
                                    "x^4+x+1", "x^4+1", "x^4+x^2+1", "x^2+3x+1"};
  for (const auto& text : polys) {
    IntPoly f = IntPoly::parse(text);
    std::optional<uint64_t> expected;
    for (uint64_t q : {2, 3, 5, 7, 11, 13}) {
      if (mpz_divisible_ui_p(f.leading().get_mpz_t(), q)) continue;
      if (!oracles::has_small_factor_mod_q(f, q)) {
        expected = q;
        break;
      }
    }
    CHECK(irreducibility_witness(f, 13) == expected);
  }
}

}  // TEST_SUITE
