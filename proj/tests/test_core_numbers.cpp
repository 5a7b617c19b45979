#include "svlab/kernels.hpp"
#include "svlab/pi_laurent.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace svlab;

namespace {

// Independent pi oracle: Machin's formula with exact rational partial sums,
// tail bounded by the first dropped term.
Rational machin_pi_rational(int terms) {
    auto atan_inv = [&](long x) {
        Rational s(0);
        BigInt xpow = x;  // x^{2k+1}
        for (int k = 0; k <= terms; ++k) {
            Rational t = make_rational(BigInt(1), BigInt((2 * k + 1)) * xpow);
            s += (k % 2 == 0) ? t : -t;
            xpow *= x * x;
        }
        return s;
    };
    return Rational(16) * atan_inv(5) - Rational(4) * atan_inv(239);
}

PiLaurent random_pi_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), expo(-3, 3), num(-9, 9), den(1, 7);
    PiLaurent v;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i)
        v += PiLaurent::monomial(make_rational(num(rng), den(rng)), expo(rng));
    return v;
}

}  // namespace

TEST_CASE("factorial basics and big values") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    // iterated-multiplication oracle
    BigInt acc = 1;
    for (long n = 1; n <= 60; ++n) {
        acc *= n;
        CHECK(factorial(n) == acc);
    }
    CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("factorial memo cap does not change values") {
    std::size_t old = factorial_memo_cap();
    set_factorial_memo_cap(10);
    CHECK(factorial(25) == factorial(12) * falling_factorial(25, 13));
    set_factorial_memo_cap(old);
}

TEST_CASE("double factorial conventions") {
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(1) == 1);
    CHECK(double_factorial(7) == 105);
    CHECK(double_factorial(8) == 384);
    CHECK_THROWS_AS(double_factorial(-2), std::invalid_argument);
}

TEST_CASE("(2g)!! (2g-1)!! = (2g)! for g up to 200") {
    for (long g = 1; g <= 200; ++g)
        CHECK(double_factorial(2 * g) * double_factorial(2 * g - 1) == factorial(2 * g));
}

TEST_CASE("factorial quotient") {
    CHECK(factorial_quotient(10, 7) == Rational(8 * 9 * 10));
    CHECK(factorial_quotient(7, 10) == make_rational(1, 8 * 9 * 10));
    CHECK(factorial_quotient(5, 5) == 1);
    for (long a : {0L, 3L, 17L})
        for (long b : {0L, 4L, 21L})
            CHECK(factorial_quotient(a, b) == make_rational(factorial(a), factorial(b)));
}

TEST_CASE("Stirling consistency at 128-bit precision") {
    // n! / (sqrt(2 pi n) n^n e^{-n}) -> 1 within 1/(10n)
    const mpfr_prec_t prec = 128;
    const Mpf pi = Mpf::pi(prec);
    for (long n = 50; n <= 500; n += 7) {
        Mpf nf = Mpf::from(factorial(n), prec);
        Mpf nn = Mpf::from(n, prec);
        Mpf stirling = Mpf::sqrt(Mpf::from(2L, prec) * pi * nn) *
                       Mpf::exp(nn * Mpf::log(nn) - nn);
        double ratio = (nf / stirling).to_double();
        CHECK(std::abs(ratio - 1.0) <= 1.0 / (10.0 * n));
    }
}

TEST_CASE("rational invariants: lowest terms, positive denominator") {
    Rational q = make_rational(-6, -8);
    CHECK(q.get_num() == 3);
    CHECK(q.get_den() == 4);
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
    CHECK(rational_from_string(to_string(q)) == q);
}

TEST_CASE("pi-Laurent monomial products and powers") {
    PiLaurent a = PiLaurent::monomial(make_rational(1, 3), 2);  // pi^2/3
    CHECK(a * a == PiLaurent::monomial(make_rational(1, 9), 4));
    PiLaurent b = PiLaurent::monomial(make_rational(1, 6), 2);
    CHECK(b.pow(0) == PiLaurent::one());
    CHECK(b.pow(3) == PiLaurent::monomial(make_rational(1, 216), 6));
}

TEST_CASE("multiplicity-1 plus multiplicity-2 loop coefficients add to 3/2") {
    PiLaurent p1 = PiLaurent::monomial(Rational(2), -1) + PiLaurent::monomial(Rational(2), -2);
    PiLaurent p2 = PiLaurent(make_rational(3, 2)) - PiLaurent::monomial(Rational(2), -1) -
                   PiLaurent::monomial(Rational(2), -2);
    CHECK(p1 + p2 == PiLaurent(make_rational(3, 2)));
}

TEST_CASE("pi-Laurent ring axioms on random instances") {
    std::mt19937 rng(20240811u);
    for (int i = 0; i < 200; ++i) {
        PiLaurent a = random_pi_laurent(rng), b = random_pi_laurent(rng),
                  c = random_pi_laurent(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == PiLaurent::zero());
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("division by monomials only") {
    PiLaurent a = PiLaurent::parse("2/pi + 2/pi^2");
    PiLaurent m = PiLaurent::monomial(Rational(2), -2);
    CHECK(a.divided_by(m) == PiLaurent::parse("pi + 1"));
    CHECK_THROWS_AS(a.divided_by(PiLaurent::zero()), std::domain_error);
    CHECK_THROWS_AS(a.divided_by(a), std::domain_error);
}

TEST_CASE("to_float against the Machin pi oracle") {
    const mpfr_prec_t prec = 256;
    Mpf pi_oracle = Mpf::from(machin_pi_rational(50), prec);
    // pi^2/3
    double expect = (pi_oracle * pi_oracle / Mpf::from(3L, prec)).to_double();
    double got = PiLaurent::parse("pi^2/3").to_mpf(53).to_double();
    CHECK(got == doctest::Approx(expect).epsilon(1e-15));
    CHECK(got == doctest::Approx(3.289868133696453).epsilon(1e-15));
    // pi^2/12
    double got12 = PiLaurent::parse("pi^2/12").to_double();
    CHECK(got12 == doctest::Approx(expect / 4.0).epsilon(1e-15));
    CHECK(got12 == doctest::Approx(0.8224670334241132).epsilon(1e-15));
    CHECK(PiLaurent::zero().to_double() == 0.0);
}

TEST_CASE("to_float agrees with term-by-term evaluation") {
    std::mt19937 rng(7u);
    auto two_pow = [](long e, mpfr_prec_t p) {
        return Mpf::exp(Mpf::from(e, p + 16) * Mpf::log(Mpf::from(2L, p + 16)));
    };
    for (int i = 0; i < 80; ++i) {
        PiLaurent v = random_pi_laurent(rng);
        for (mpfr_prec_t p : {static_cast<mpfr_prec_t>(53), static_cast<mpfr_prec_t>(128)}) {
            Mpf direct(p);
            Mpf magnitude(p + 16);
            Mpf pi = Mpf::pi(p);
            Mpf pi_hi = Mpf::pi(p + 16);
            for (const auto& [k, q] : v.terms()) {
                direct = direct + Mpf::from(q, p) * Mpf::pow_si(pi, k);
                Rational absq = q < 0 ? Rational(-q) : q;
                magnitude = magnitude + Mpf::from(absq, p + 16) * Mpf::pow_si(pi_hi, k);
            }
            Mpf ours = v.to_mpf(p);
            Mpf diff = Mpf::abs(ours - direct);
            if (magnitude.is_zero()) {
                CHECK(diff.is_zero());
                continue;
            }
            // each rounding in the term-by-term route contributes at the
            // scale of the magnitude sum
            CHECK(diff.cmp(magnitude * two_pow(3 - (long)p, p)) <= 0);
            // the contract against the true value: within 2^{1-p} relative
            Mpf truth = v.to_mpf(p + 200);
            if (!truth.is_zero()) {
                Mpf err = Mpf::abs(ours - truth);
                CHECK(err.cmp(Mpf::abs(truth) * two_pow(1 - (long)p, p)) <= 0);
            }
        }
    }
}

TEST_CASE("canonical strings round-trip exactly") {
    for (const char* s : {"0", "pi^2/3", "2/pi + 2/pi^2", "3/2 - 2/pi - 2/pi^2", "2*pi/3",
                          "5*pi^3", "1/2", "7", "-pi^2/3 + 2", "3/(4*pi)"}) {
        PiLaurent v = PiLaurent::parse(s);
        CHECK(PiLaurent::parse(v.str()) == v);
    }
    std::mt19937 rng(99u);
    for (int i = 0; i < 300; ++i) {
        PiLaurent v = random_pi_laurent(rng);
        CHECK(PiLaurent::parse(v.str()) == v);
    }
    // the canonical form is exponent-sorted with explicit pi powers
    CHECK(PiLaurent::parse("2/pi^2 + 2/pi").str() == "2/pi + 2/pi^2");
    CHECK(PiLaurent::parse("1/3*pi^2").str() == "pi^2/3");
    CHECK_THROWS_AS(PiLaurent::parse("2**pi"), std::invalid_argument);
    CHECK_THROWS_AS(PiLaurent::parse(""), std::invalid_argument);
}
