#include "svlab/sv_engine.hpp"

#include "svlab/asymptotics.hpp"
#include "svlab/kernels.hpp"

#include <doctest.h>

#include <random>

using namespace svlab;

namespace {

StratumSignature random_signature(std::mt19937& rng, int min_zeros = 2) {
    std::uniform_int_distribution<int> nz(min_zeros, 5), order(0, 6);
    while (true) {
        std::vector<int> orders(static_cast<std::size_t>(nz(rng)));
        long sum = 0;
        for (auto& m : orders) {
            m = order(rng);
            sum += m;
        }
        if (sum % 2 == 0 && sum > 0) return StratumSignature(orders);
    }
}

}  // namespace

TEST_CASE("dimension term") {
    // p=1: (d1/2-1)! = (d/2-2)! so the term is 1
    StratumSignature H({3, 1});
    Configuration c = dominant_distinct_config(H, 0, 1, 1);
    CHECK(dimension_term(c) == Rational(1));

    // dominant p=2 on H(m1,m2): d1/2-1 = 2g-2p+l-1, quotient of 2 factors
    StratumSignature H2({3, 3});
    Configuration c2 = dominant_distinct_config(H2, 0, 1, 2);
    long top = H2.dimension() / 2 - 2;
    long d1 = c2.blocks[0].substratum.dimension() / 2 - 1;
    CHECK(dimension_term(c2) == factorial_quotient(d1, top) * Rational(factorial(4 / 2 - 1)));
}

TEST_CASE("multiplicity-one reduction is an algebraic identity") {
    std::mt19937 rng(31337u);
    VolumeProvider asym = asymptotic_volume_provider();
    for (int trial = 0; trial < 40; ++trial) {
        StratumSignature H = random_signature(rng);
        std::uniform_int_distribution<int> pick(0, H.zero_count() - 1);
        int i1 = pick(rng), i2 = pick(rng);
        if (i1 == i2) continue;
        Configuration c = dominant_distinct_config(H, i1, i2, 1);
        SvValue full = sv_distinct_labelled(c, asym);
        SvValue simplified = sv_distinct_p1_simplified(H, i1, i2, asym);
        CHECK(full.value == simplified.value);
        // with leading-term volumes the value collapses to (m1+1)(m2+1)
        CHECK(full.value ==
              PiLaurent(Rational((H.order(i1) + 1) * (H.order(i2) + 1))));
    }
}

TEST_CASE("dominant distinct configurations reproduce the closed form exactly") {
    VolumeProvider mixed = mixed_volume_provider();
    StratumSignature H({4, 5, 7});  // g = 9
    const long l = H.zero_count();
    for (int p = 1; p <= 5; ++p) {
        Configuration c = dominant_distinct_config(H, 0, 1, p);
        SvValue v = sv_distinct_labelled(c, mixed);
        // (m1+1)(m2+1) (pi^2/6)^{p-1} dim-term, exactly
        PiLaurent expect = PiLaurent::monomial(make_rational(1, 6), 2)
                               .pow(static_cast<unsigned>(p - 1)) *
                           (Rational(5 * 6) * dimension_term(c));
        CHECK(v.value == expect);
        // and it agrees with the component-corrected dominant form
        CHECK(sv_component_corrected(c, ComponentId::Whole, mixed).value == expect);
    }
}

TEST_CASE("loop master formula reproduces the multiplicity-1 case split exactly") {
    VolumeProvider asym = asymptotic_volume_provider();
    StratumSignature H({6, 4});  // g = 6, l = 2, D = 2g+l-3 = 11
    const int m = 6;
    const long D = 11;

    PiLaurent no_cyl;
    for (int b1 = 0; 2 * b1 <= m - 2; ++b1)
        no_cyl += sv_loop_labelled(loop_config_no_cylinder(H, 0, b1, m - 2 - b1), asym).value;
    CHECK(no_cyl == PiLaurent(make_rational((m + 1) * (m - 1), 2)));

    PiLaurent cyl_same;
    for (int a1 = 0; 2 * a1 <= m - 2; ++a1)
        cyl_same +=
            sv_loop_labelled(loop_config_cylinder_same_zero(H, 0, a1, m - 2 - a1), asym).value;
    CHECK(cyl_same == PiLaurent(make_rational((m + 1) * (m - 1), 2 * D)));

    PiLaurent cyl_other = sv_loop_labelled(loop_config_cylinder_other_zero(H, 0, 1), asym).value;
    CHECK(cyl_other == PiLaurent(make_rational((m + 1) * (4 + 1), D)));

    // telescoped total: (m+1)^2/2 * (1 - 1/D)
    PiLaurent total = no_cyl + cyl_same + cyl_other;
    CHECK(total == PiLaurent(make_rational((m + 1) * (m + 1), 2) * (Rational(1) - make_rational(1, D))));
}

TEST_CASE("principal-stratum dominant loop sum against the closed form at g=6") {
    // engine value x zero choices vs the principal-loops closed form; the
    // exact ratio at g=6, p=2 is 56/51
    const long g = 6;
    const int p = 2;
    std::vector<int> ones(2 * g - 2, 1);
    StratumSignature H(ones);
    VolumeProvider mixed = mixed_volume_provider();

    Configuration c = principal_loop_dominant_config(H, p, {0, 1, 2, 3});
    SvValue v = sv_loop_labelled(c, mixed);
    CHECK(symmetry(c).gamma_order == 1);
    CHECK(symmetry(c).gamma_minus_order == 1);

    // labelled-fixed value x (2g-2)(2g-3)(2g-4)(2g-5)/2
    Rational choices = make_rational(BigInt(10) * 9 * 8 * 7, BigInt(2));
    PiLaurent any_zero = v.value * choices;
    PiLaurent closed = asym_principal_loops(p, g).coefficient;
    PiLaurent ratio = any_zero.divided_by(closed);
    CHECK(ratio == PiLaurent(make_rational(56, 51)));
}

TEST_CASE("component-corrected values") {
    StratumSignature H({4, 4, 8});  // all even, g = 9: odd/even components
    Configuration dom = dominant_distinct_config(H, 0, 1, 2);
    VolumeProvider mixed = mixed_volume_provider();
    SvValue v = sv_component_corrected(dom, ComponentId::Odd, mixed);
    CHECK_FALSE(v.bound_only);
    CHECK(v.error == ErrorClass::OneOverG);
    PiLaurent expect =
        PiLaurent::monomial(make_rational(1, 6), 2) * (Rational(5 * 5) * dimension_term(dom));
    CHECK(v.value == expect);

    // a non-dominant configuration is reported as a bound, never a value
    auto configs = enumerate_distinct_zero_configs(StratumSignature({3, 3}), 0, 1, 2);
    bool saw_bound = false;
    for (const auto& c : configs) {
        if (is_dominant(c)) continue;
        SvValue b = sv_component_corrected(c, ComponentId::Whole, mixed);
        CHECK(b.bound_only);
        CHECK(b.error == ErrorClass::BoundOnly);
        saw_bound = true;
    }
    CHECK(saw_bound);
}

TEST_CASE("enumerated multiplicity-1 loop configurations telescope exactly") {
    // summing the engine over the full enumeration must reproduce the exact
    // telescoped total (m+1)^2/2 (1 - 1/D) with leading-term volumes; this
    // pins both the enumerator's completeness and the engine weights
    VolumeProvider asym = asymptotic_volume_provider();
    for (const auto& orders : std::vector<std::vector<int>>{{4, 2}, {6, 4}, {3, 3}, {4, 1, 1}}) {
        StratumSignature H(orders);
        const int m = H.order(0);
        const long D = 2 * H.genus() + H.zero_count() - 3;
        PiLaurent total;
        for (const auto& c : enumerate_loop_configs(H, 0, 1))
            total += sv_loop_labelled(c, asym).value;
        PiLaurent expect = PiLaurent(make_rational((m + 1) * (m + 1), 2) *
                                     (Rational(1) - make_rational(1, D)));
        CHECK(total == expect);
    }
}

TEST_CASE("dominant multiplicity-2 loop family reproduces its exact closed form") {
    // On H(8,2): the q=0, single-new-zero, dominant family at p=2 consists
    // of a two-hole block on the heavy piece (b'+b'' = m-2p) and a
    // figure-eight(0,0) block on H(0). Summed over partitions with the
    // reflection rule, the engine must give
    //   (1/2) (pi^2/6) (m+1)(m-2p+1) (2g+l-2p-1)!/(2g+l-3)!
    // with leading-term volumes: here (1/2)(pi^2/6)(9)(5)/(10*11) = 3 pi^2/88.
    StratumSignature H({8, 2});
    VolumeProvider mixed = mixed_volume_provider();
    PiLaurent sum;
    int family_size = 0;
    bool saw_cylinder_shape = false;
    for (const auto& c : enumerate_loop_configs(H, 0, 2)) {
        if (!is_dominant(c)) continue;
        if (c.zero_classes.size() == 1 && c.q() == 1) saw_cylinder_shape = true;
        if (c.zero_classes.size() != 1 || c.q() != 0) continue;
        bool th_on_heavy = false, fe_on_torus = false;
        for (const auto& b : c.blocks) {
            if (b.kind == BlockKind::TwoHole && b.substratum.genus() >= 2) th_on_heavy = true;
            if (b.kind == BlockKind::FigureEight && b.substratum == StratumSignature({0}))
                fe_on_torus = true;
        }
        if (!(th_on_heavy && fe_on_torus)) continue;
        ++family_size;
        sum += sv_loop_labelled(c, mixed).value;
    }
    CHECK(family_size == 3);  // partitions (0,4), (1,3), (2,2) of m-2p = 4
    CHECK(sum == PiLaurent::monomial(make_rational(3, 88), 2));
    // the enumeration also reaches the subleading cylinder shapes
    CHECK(saw_cylinder_shape);
}

TEST_CASE("engine values over full enumerations are nonnegative and finite") {
    VolumeProvider asym = asymptotic_volume_provider();
    for (const auto& orders :
         std::vector<std::vector<int>>{{2, 2}, {3, 1}, {2, 1, 1}, {4, 2}}) {
        StratumSignature H(orders);
        for (int p = 1; p <= 2; ++p) {
            for (const auto& c : enumerate_distinct_zero_configs(H, 0, 1, p)) {
                SvValue v = sv_distinct_labelled(c, asym);
                CHECK(v.value.to_double() >= 0.0);
            }
            for (const auto& c : enumerate_loop_configs(H, 0, p)) {
                SvValue v = sv_loop_labelled(c, asym);
                CHECK(v.value.to_double() >= 0.0);
            }
        }
    }
}

TEST_CASE("volume-unavailable errors name the sub-stratum") {
    StratumSignature H({3, 5});
    Configuration c = dominant_distinct_config(H, 0, 1, 1);
    VolumeProvider exact = exact_volume_provider();
    CHECK_THROWS_AS(sv_distinct_labelled(c, exact), VolumeUnavailableError);
    try {
        sv_distinct_labelled(c, exact);
    } catch (const VolumeUnavailableError& e) {
        CHECK(std::string(e.what()).find("H(") != std::string::npos);
    }
}

TEST_CASE("error classes join as the worst input") {
    StratumSignature H({3, 5});
    Configuration c = dominant_distinct_config(H, 0, 1, 1);
    SvValue v = sv_distinct_labelled(c, asymptotic_volume_provider());
    CHECK(v.error == ErrorClass::OneOverG);

    StratumSignature small({1, 1});
    Configuration cs = dominant_distinct_config(small, 0, 1, 1);
    SvValue vs = sv_distinct_labelled(cs, asymptotic_volume_provider());
    CHECK(vs.error == ErrorClass::OrderOne);  // bounded-genus leading term only
}
