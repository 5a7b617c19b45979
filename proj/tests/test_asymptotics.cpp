#include "svlab/asymptotics.hpp"

#include "svlab/hyperelliptic.hpp"
#include "svlab/kernels.hpp"

#include <doctest.h>

#include <cmath>

using namespace svlab;

TEST_CASE("distinct fixed zeros") {
    AsymptoticValue p1 = asym_distinct_fixed(3, 4, 1, 100, 5);
    CHECK(p1.coefficient == PiLaurent(Rational(20)));
    CHECK(p1.error == ErrorClass::OneOverG);

    AsymptoticValue p2 = asym_distinct_fixed(3, 4, 2, 100, 5);
    CHECK(p2.coefficient ==
          PiLaurent::monomial(make_rational(20, 6), 2) * make_rational(1, 202L * 202L));

    AsymptoticValue zero = asym_distinct_fixed(3, 4, 5, 100, 5);
    CHECK(zero.coefficient.is_zero());
    CHECK(zero.error == ErrorClass::Exact);

    AsymptoticValue any = asym_distinct_any_multiplicity(1, 1);
    CHECK(any.coefficient == PiLaurent(Rational(4)));
    CHECK(any.error == ErrorClass::OneOverG);
    CHECK(asym_distinct_any_multiplicity(3, 2, true).error == ErrorClass::Exact);
    CHECK(asym_distinct_any_multiplicity(3, 2, true).coefficient == PiLaurent(Rational(12)));
    CHECK(asym_distinct_any_multiplicity(0, 0).coefficient == PiLaurent::one());
}

TEST_CASE("values decrease strictly in the multiplicity") {
    const int m1 = 6, m2 = 6;
    for (long g : {10L, 50L}) {
        double prev = 1e300;
        for (int p = 1; p <= std::min(m1, m2) + 1; ++p) {
            double v = asym_distinct_fixed(m1, m2, p, g, 5).value();
            CHECK(v < prev);
            prev = v;
        }
    }
}

TEST_CASE("multiplicity-weighted sum approaches (m1+1)(m2+1)") {
    const int m1 = 4, m2 = 5;
    const long g = 1000, l = 6;
    double sum = 0.0;
    for (int p = 1; p <= std::min(m1, m2) + 1; ++p)
        sum += p * asym_distinct_fixed(m1, m2, p, g, l).value();
    CHECK(std::abs(sum / ((m1 + 1) * (m2 + 1)) - 1.0) <= 10.0 / g);
}

TEST_CASE("principal-stratum distinct constants") {
    // any-zeros factor applied to the fixed-zero constants
    const long g = 1000, l = 2 * g - 2;
    std::vector<int> ones(l, 1);
    StratumSignature H(ones);
    Rational pairs = unlabelled_pair_factor(H, 1, 1);
    CHECK(pairs == make_rational(BigInt(l) * (l - 1), BigInt(2)));

    double p1 = to_double(pairs) * asym_distinct_fixed(1, 1, 1, g, l).value();
    CHECK(std::abs(p1 / (8.0 * g * g) - 1.0) < 3.0 / g);

    double p2 = to_double(pairs) * asym_distinct_fixed(1, 1, 2, g, l).value();
    CHECK(std::abs(p2 / (M_PI * M_PI / 12.0) - 1.0) < 5.0 / g);
}

TEST_CASE("loop case split and the exact telescoping") {
    const int m = 4;
    for (long g = 20; g <= 500; g += 7) {
        StratumSignature H({m, static_cast<int>(2 * g - 2 - m)});
        const long l = 2, D = 2 * g + l - 3;
        PiLaurent no_cyl = asym_loop(m, 1, LoopMode::NoCylinder, g, l).coefficient;
        PiLaurent same = asym_loop(m, 1, LoopMode::CylinderSameZero, g, l).coefficient;
        PiLaurent other = asym_loop(m, 1, LoopMode::CylinderOtherZero, g, l,
                                    static_cast<int>(2 * g - 2 - m))
                              .coefficient;
        PiLaurent total = no_cyl + same + other;
        // exact: (m+1)^2/2 (1 - 1/D)
        PiLaurent expect = PiLaurent(make_rational((m + 1) * (m + 1), 2) *
                                     (Rational(1) - make_rational(1, D)));
        CHECK(total == expect);
        double eps = std::abs(total.to_double() /
                                  asym_loop(m, 1, LoopMode::OneFixedZeroTotal, g, l).value() -
                              1.0);
        CHECK(eps <= 5.0 / g);
    }
}

TEST_CASE("loop closed forms") {
    CHECK(asym_loop(5, 1, LoopMode::NoCylinder, 50, 2).coefficient ==
          PiLaurent(Rational(12)));  // (m+1)(m-1)/2
    CHECK(asym_loop(5, 1, LoopMode::OneFixedZeroTotal, 50, 2).coefficient ==
          PiLaurent(Rational(18)));  // (m+1)^2/2
    CHECK(asym_loop(5, 1, LoopMode::AnyMultiplicity, 50, 2).coefficient ==
          PiLaurent(Rational(18)));
    CHECK(asym_loop(1, 1, LoopMode::NoCylinder, 50, 98).coefficient.is_zero());
    CHECK_THROWS_AS(asym_loop(5, 2, LoopMode::NoCylinder, 50, 2), std::invalid_argument);

    // general p at one fixed zero
    AsymptoticValue v = asym_loop(10, 3, LoopMode::OneFixedZeroTotal, 50, 2);
    PiLaurent expect = PiLaurent::monomial(make_rational(1, 36), 4) *
                       (make_rational(1, 2) * Rational(11 * 5) * make_rational(1, 99L * 99 * 99 * 99));
    CHECK(v.coefficient == expect);
    CHECK(asym_loop(10, 6, LoopMode::OneFixedZeroTotal, 50, 2).coefficient.is_zero());
}

TEST_CASE("loops with all zeros fixed") {
    // n = 1 specialises to the no-cylinder leading term at p = 1
    AsymptoticValue one = asym_loop_all_zeros_fixed({6}, 1, 50, 3);
    CHECK(one.coefficient == PiLaurent(make_rational(7 * 5, 2)));
    // window [n/2, M/2]
    CHECK(asym_loop_all_zeros_fixed({2, 2, 2, 2, 2, 2}, 2, 50, 8).coefficient.is_zero());
    CHECK(asym_loop_all_zeros_fixed({2, 2}, 3, 50, 8).coefficient.is_zero());
    AsymptoticValue bound = asym_loop_all_zeros_fixed({4, 2}, 2, 50, 4);
    CHECK(bound.bound_only);
    CHECK(bound.error == ErrorClass::BoundOnly);
}

TEST_CASE("principal-stratum loops") {
    CHECK(asym_principal_loops(1, 100).coefficient == PiLaurent(make_rational(395, 2)));
    CHECK(asym_principal_loops(2, 100).coefficient ==
          PiLaurent::monomial(make_rational(1, 6 * 395), 2));
    CHECK(asym_principal_loops(3, 100).coefficient ==
          PiLaurent::monomial(make_rational(1, 18), 4) *
              make_rational(1, 395L * 395 * 395));
    // p=1 leading is ~2g
    CHECK(std::abs(asym_principal_loops(1, 1000).value() / 2000.0 - 1.0) < 2e-3);
}

TEST_CASE("special families") {
    // hyperelliptic leading coefficients
    AsymptoticValue h1 = asym_special_families(SpecialFamily::HypMinimalLoops, 1, 10);
    CHECK(h1.coefficient == PiLaurent::parse("200/pi + 200/pi^2"));
    AsymptoticValue h2 = asym_special_families(SpecialFamily::HypMinimalLoops, 2, 10);
    CHECK(h2.error == ErrorClass::OneOverGQuarter);
    CHECK(asym_special_families(SpecialFamily::HypMinimalLoops, 3, 10).coefficient.is_zero());
    CHECK(asym_special_families(SpecialFamily::HypGm1Gm1Distinct, 5, 10).coefficient.is_zero());

    // p=1 + p=2 coefficients add to 1/2 g^2 resp. 1 g^2 and 3/2 g^2
    for (long g : {10L, 31L}) {
        PiLaurent a = asym_special_families(SpecialFamily::HypGm1Gm1Loops, 1, g).coefficient +
                      asym_special_families(SpecialFamily::HypGm1Gm1Loops, 2, g).coefficient;
        CHECK(a == PiLaurent(make_rational(g * g, 2)));
        PiLaurent b = asym_special_families(SpecialFamily::HypGm1Gm1Distinct, 1, g).coefficient +
                      asym_special_families(SpecialFamily::HypGm1Gm1Distinct, 2, g).coefficient;
        CHECK(b == PiLaurent(Rational(g * g)));
        PiLaurent c = asym_special_families(SpecialFamily::HypMinimalLoops, 1, g).coefficient +
                      asym_special_families(SpecialFamily::HypMinimalLoops, 2, g).coefficient;
        CHECK(c == PiLaurent(make_rational(3 * g * g, 2)));
    }

    // connected/odd/even family shapes
    CHECK(asym_special_families(SpecialFamily::MinimalLoops, 1, 10).coefficient ==
          PiLaurent(Rational(2 * 81)));  // (1/2)(2g-2)^2
    CHECK(asym_special_families(SpecialFamily::Gm1Gm1Distinct, 1, 10).coefficient ==
          PiLaurent(make_rational(19 * 19, 4)));
    CHECK(asym_special_families(SpecialFamily::Gm1Gm1LoopsFixed, 2, 10).coefficient ==
          PiLaurent::monomial(make_rational(1, 48), 2));
    CHECK(asym_special_families(SpecialFamily::Gm1Gm1LoopsAny, 2, 10).coefficient ==
          PiLaurent::monomial(make_rational(1, 24), 2));
    CHECK(special_family_from_string("hyp-minimal-loops") == SpecialFamily::HypMinimalLoops);
    CHECK_THROWS_AS(special_family_from_string("nope"), std::invalid_argument);
}

TEST_CASE("total saddle-connection constant and the pair identity") {
    CHECK(asym_total(StratumSignature({18})).coefficient ==
          PiLaurent(make_rational(19L * 19, 2)));  // (2g-1)^2/2 at g=10
    CHECK(asym_total(StratumSignature({1, 1})).coefficient == PiLaurent(Rational(8)));

    // sum over ordered pairs plus loops telescopes to (sum (m+1))^2 / 2
    for (const auto& orders : std::vector<std::vector<int>>{{3, 1}, {2, 2, 2}, {4, 1, 1}, {1, 1, 1, 1}}) {
        StratumSignature H(orders);
        Rational total(0);
        long s = 0;
        for (int m : orders) s += m + 1;
        for (std::size_t i = 0; i < orders.size(); ++i)
            for (std::size_t j = 0; j < orders.size(); ++j) {
                if (i == j) {
                    total += make_rational((orders[i] + 1) * (orders[i] + 1), 2);
                } else {
                    total += make_rational((orders[i] + 1) * (orders[j] + 1), 2);
                }
            }
        CHECK(total == make_rational(s * s, 2));
        CHECK(asym_total(H).coefficient == PiLaurent(total));
    }
}

TEST_CASE("unlabelled factors") {
    StratumSignature H({3, 3, 1, 1, 1, 1});
    CHECK(unlabelled_pair_factor(H, 3, 1) == Rational(8));
    CHECK(unlabelled_pair_factor(H, 3, 3) == Rational(1));
    CHECK(unlabelled_pair_factor(H, 1, 1) == Rational(6));
    CHECK(unlabelled_loop_factor(H, 1) == Rational(4));
    CHECK(unlabelled_loop_factor(H, 5) == Rational(0));
}

TEST_CASE("interval API requires g") {
    AsymptoticValue v = asym_distinct_fixed(2, 2, 1, 100, 3);
    auto [lo, hi] = v.interval(100.0, 6.0);
    CHECK(lo <= 9.0);
    CHECK(9.0 <= hi);
    CHECK(hi - lo == doctest::Approx(2 * 6.0 * 9.0 / 100.0));
}
