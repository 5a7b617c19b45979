#include "svlab/hyperelliptic.hpp"

#include <doctest.h>

#include <cmath>

using namespace svlab;

TEST_CASE("exact homology identity: p1 + p2 partition sum equals g^2") {
    for (long g : {3L, 4L, 5L, 6L, 7L, 8L, 12L, 21L, 40L, 77L}) {
        PiLaurent total = hyp_gm1gm1_distinct_p1(g) + hyp_gm1gm1_distinct_p2_total(g);
        CHECK(total == PiLaurent(Rational(g * g)));
    }
}

TEST_CASE("multiplicity-1 values approach their leading coefficients") {
    const double pi = M_PI;
    // spot check at g=20: within 0.25 of 1 (observed ~0.004)
    double r = hyp_minimal_loops_p1_total(20).to_double() / ((2 / pi + 2 / (pi * pi)) * 400.0);
    CHECK(std::abs(r - 1.0) <= 0.25);
    CHECK(std::abs(r - 1.0) <= 0.05);

    double d = hyp_gm1gm1_distinct_p1(50).to_double() / ((2 / pi) * 2500.0);
    CHECK(std::abs(d - 1.0) <= 6.0 / 50);
    double l = hyp_gm1gm1_loops_p1(50).to_double() / ((2 / (pi * pi)) * 2500.0);
    CHECK(std::abs(l - 1.0) <= 6.0 / 50);
}

TEST_CASE("partition terms carry the diagonal symmetry factor") {
    // at g1 = g2 the labelled constant halves
    const long g = 8;
    PiLaurent diag = hyp_gm1gm1_distinct_p2_term(g, g / 2);
    // reconstruct the off-diagonal normalisation from neighbours: the term
    // without |Gamma| equals twice the diagonal value
    PiLaurent total = hyp_gm1gm1_distinct_p2_total(g);
    PiLaurent off;
    for (long g1 = 1; g1 < g / 2; ++g1) off += hyp_gm1gm1_distinct_p2_term(g, g1);
    CHECK(total == off + diag);
    // the ordered sum with no symmetry factor is twice the total
    PiLaurent ordered;
    for (long g1 = 1; g1 <= g - 1; ++g1)
        ordered += (2 * g1 == g) ? hyp_gm1gm1_distinct_p2_term(g, g1) * Rational(2)
                                 : hyp_gm1gm1_distinct_p2_term(g, g1);
    CHECK(ordered == total * Rational(2));
}

TEST_CASE("pi powers cancel in the exact constants") {
    CHECK(hyp_gm1gm1_distinct_p1(9).is_rational());
    CHECK(hyp_gm1gm1_distinct_p2_total(9).is_rational());
    // loop constants live in pi^{-2}
    CHECK(hyp_gm1gm1_loops_p1(9).terms().begin()->first == -2);
    CHECK(hyp_minimal_loops_p1_total(9).terms().begin()->first == -2);
    CHECK(hyp_minimal_loops_p2_total(9).terms().begin()->first == -2);
}

TEST_CASE("dispatcher surface") {
    StratumSignature two({7, 7});
    StratumSignature minimal({14});
    CHECK(sv_hyperelliptic_exact(two, SvKind::DistinctZeros, 3).value.is_zero());
    CHECK(sv_hyperelliptic_exact(two, SvKind::DistinctZeros, 7).value.is_zero());
    CHECK(sv_hyperelliptic_exact(two, SvKind::DistinctZeros, 1).value ==
          hyp_gm1gm1_distinct_p1(8));
    CHECK(sv_hyperelliptic_exact(two, SvKind::Loops, 1).value == hyp_gm1gm1_loops_p1(8));
    CHECK(sv_hyperelliptic_exact(minimal, SvKind::Loops, 1).value ==
          hyp_minimal_loops_p1_total(8));
    CHECK(sv_hyperelliptic_exact(minimal, SvKind::Loops, 2, 3).value ==
          hyp_minimal_loops_p2_term(8, 3));
    CHECK_THROWS_AS(sv_hyperelliptic_exact(StratumSignature({3, 1}), SvKind::Loops, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(sv_hyperelliptic_exact(minimal, SvKind::DistinctZeros, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(sv_hyperelliptic_exact(two, SvKind::Loops, 2), std::invalid_argument);
}

TEST_CASE("three evaluation routes agree") {
    HyperellipticSweep sweep(400);
    for (long g : {10L, 47L, 120L, 300L}) {
        // exact vs floating sweep
        CHECK(std::abs(sweep.gm1gm1_distinct_p1(g) / hyp_gm1gm1_distinct_p1(g).to_double() - 1.0) <
              1e-11);
        CHECK(std::abs(sweep.gm1gm1_distinct_p2_total(g) /
                           hyp_gm1gm1_distinct_p2_total(g).to_double() -
                       1.0) < 1e-10);
        CHECK(std::abs(sweep.gm1gm1_loops_p1_value(g) / hyp_gm1gm1_loops_p1(g).to_double() - 1.0) <
              1e-11);
        CHECK(std::abs(sweep.gm1gm1_loops_p2_total_value(g) /
                           hyp_gm1gm1_loops_p2_total(g).to_double() -
                       1.0) < 1e-10);
        CHECK(std::abs(sweep.minimal_loops_p1_total_value(g) /
                           hyp_minimal_loops_p1_total(g).to_double() -
                       1.0) < 1e-11);
        CHECK(std::abs(sweep.minimal_loops_p2_total_value(g) /
                           hyp_minimal_loops_p2_total(g).to_double() -
                       1.0) < 1e-10);
        // exact vs lngamma route
        CHECK(std::abs(hyp_gm1gm1_distinct_p1_numeric(g) / hyp_gm1gm1_distinct_p1(g).to_double() -
                       1.0) < 1e-12);
        CHECK(std::abs(hyp_gm1gm1_loops_p1_numeric(g) / hyp_gm1gm1_loops_p1(g).to_double() - 1.0) <
              1e-12);
        CHECK(std::abs(hyp_minimal_loops_p1_numeric(g) / hyp_minimal_loops_p1_total(g).to_double() -
                       1.0) < 1e-12);
    }
}

TEST_CASE("loop constants: multiplicity 1 and 2 coefficients add to the homology share") {
    // (2/pi^2 + 1/2 - 2/pi^2) g^2 = g^2/2 and the exact sums approach it
    const double pi2 = M_PI * M_PI;
    for (long g : {100L, 400L}) {
        double v = (hyp_gm1gm1_loops_p1(g) + hyp_gm1gm1_loops_p2_total(g)).to_double() /
                   (0.5 * g * g);
        CHECK(std::abs(v - 1.0) <= 3.0 * std::pow(double(g), -0.25));
    }
    // H^hyp(2g-2): (2/pi + 2/pi^2) + (3/2 - 2/pi - 2/pi^2) = 3/2
    for (long g : {100L, 400L}) {
        double v = (hyp_minimal_loops_p1_total(g) + hyp_minimal_loops_p2_total(g)).to_double() /
                   (1.5 * g * g);
        CHECK(std::abs(v - 1.0) <= 3.0 * std::pow(double(g), -0.25));
    }
    (void)pi2;
}
