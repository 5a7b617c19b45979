#include "svlab/hyperelliptic.hpp"

#include "svlab/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace svlab {

namespace {

PiLaurent mu_min(long g) { return hyperelliptic_minimal_volume(g); }
PiLaurent mu_two(long g) { return hyperelliptic_two_zero_volume(g); }

Rational fq(const BigInt& num, const BigInt& den) { return make_rational(num, den); }

}  // namespace

PiLaurent hyp_gm1gm1_distinct_p1(long g) {
    if (g < 2) throw std::invalid_argument("needs g >= 2");
    return mu_min(g).divided_by(mu_two(g)) * Rational(2 * g - 1);
}

PiLaurent hyp_gm1gm1_distinct_p2_term(long g, long g1) {
    const long g2 = g - g1;
    if (g1 < 1 || g2 < 1) throw std::invalid_argument("partition must have g1, g2 >= 1");
    const long gamma = (g1 == g2) ? 2 : 1;
    Rational pref = fq(BigInt((2 * g1 - 1)) * (2 * g2 - 1), BigInt(2 * gamma));
    pref *= fq(factorial(2 * g1 - 1) * factorial(2 * g2 - 1), factorial(2 * g - 1));
    return (mu_min(g1) * mu_min(g2)).divided_by(mu_two(g)) * pref;
}

PiLaurent hyp_gm1gm1_distinct_p2_total(long g) {
    PiLaurent total;
    for (long g1 = 1; 2 * g1 <= g; ++g1) total += hyp_gm1gm1_distinct_p2_term(g, g1);
    return total;
}

PiLaurent hyp_gm1gm1_loops_p1(long g) {
    if (g < 2) throw std::invalid_argument("needs g >= 2");
    return mu_two(g - 1).divided_by(mu_two(g)) * make_rational(g - 1, 2 * g - 1);
}

PiLaurent hyp_gm1gm1_loops_p2_term(long g, long g1) {
    const long g2 = g - 1 - g1;
    if (g1 < 1 || g2 < 1) throw std::invalid_argument("partition must have g1, g2 >= 1");
    const long gamma = (g1 == g2) ? 2 : 1;
    Rational pref = fq(BigInt(g1) * g2, BigInt(2 * gamma));
    pref *= fq(factorial(2 * g1) * factorial(2 * g2), factorial(2 * g - 1));
    return (mu_two(g1) * mu_two(g2)).divided_by(mu_two(g)) * pref;
}

PiLaurent hyp_gm1gm1_loops_p2_total(long g) {
    PiLaurent total;
    for (long g1 = 1; 2 * g1 <= g - 1; ++g1) total += hyp_gm1gm1_loops_p2_term(g, g1);
    return total;
}

PiLaurent hyp_minimal_loops_p1_twohole(long g) {
    if (g < 2) throw std::invalid_argument("needs g >= 2");
    return mu_two(g - 1).divided_by(mu_min(g)) * make_rational(g - 1, 2);
}

PiLaurent hyp_minimal_loops_p1_fig8_cylinder(long g) {
    if (g < 2) throw std::invalid_argument("needs g >= 2");
    return mu_min(g - 1).divided_by(mu_min(g)) * make_rational(2 * g - 3, 2 * (2 * g - 2));
}

PiLaurent hyp_minimal_loops_p1_total(long g) {
    return hyp_minimal_loops_p1_twohole(g) + hyp_minimal_loops_p1_fig8_cylinder(g);
}

PiLaurent hyp_minimal_loops_p2_term(long g, long g1) {
    const long g2 = g - 1 - g1;
    if (g1 < 1 || g2 < 1) throw std::invalid_argument("partition must have g1, g2 >= 1");
    Rational pref = fq(BigInt((2 * g1 - 1)) * 2 * g2, BigInt(8));
    pref *= fq(factorial(2 * g1 - 1) * factorial(2 * g2), factorial(2 * g - 2));
    return (mu_min(g1) * mu_two(g2)).divided_by(mu_min(g)) * pref;
}

PiLaurent hyp_minimal_loops_p2_total(long g) {
    PiLaurent total;
    for (long g1 = 1; g1 <= g - 2; ++g1) total += hyp_minimal_loops_p2_term(g, g1);
    return total;
}

SvValue sv_hyperelliptic_exact(const StratumSignature& H, SvKind kind, int p,
                               std::optional<long> partition_g1) {
    const long g = H.genus();
    const bool minimal = H.is_minimal() && H.marked_points() == 0;
    const bool two = H.is_gm1_gm1() && H.marked_points() == 0;
    if (!minimal && !two)
        throw std::invalid_argument("no hyperelliptic component for " + H.str());
    if (kind == SvKind::DistinctZeros && minimal)
        throw std::invalid_argument("the minimal stratum has no distinct-zero saddle connections");

    SvValue out;
    out.error = ErrorClass::Exact;
    out.provenance = "hyperelliptic exact family";
    if (p >= 3) {
        out.value = PiLaurent::zero();  // no multiplicity >= 3 on these components
        return out;
    }
    if (p <= 0) throw std::invalid_argument("multiplicity must be >= 1");

    if (p == 1) {
        if (kind == SvKind::DistinctZeros) {
            out.value = hyp_gm1gm1_distinct_p1(g);
        } else {
            out.value = minimal ? hyp_minimal_loops_p1_total(g) : hyp_gm1gm1_loops_p1(g);
        }
        return out;
    }
    if (!partition_g1)
        throw std::invalid_argument("multiplicity 2 needs a genus partition g1");
    if (kind == SvKind::DistinctZeros) {
        out.value = hyp_gm1gm1_distinct_p2_term(g, *partition_g1);
    } else {
        out.value = minimal ? hyp_minimal_loops_p2_term(g, *partition_g1)
                            : hyp_gm1gm1_loops_p2_term(g, *partition_g1);
    }
    return out;
}

HyperellipticSweep::HyperellipticSweep(long g_max) : g_max_(g_max) {
    dfa_.resize(g_max + 1);
    dfb_.resize(g_max + 1);
    dfa_[0] = dfb_[0] = 1.0;  // unused
    if (g_max >= 1) {
        dfa_[1] = 1.0;  // (-1)!!/0!!
        dfb_[1] = 1.0;  // 0!!/1!!
    }
    for (long n = 2; n <= g_max; ++n) {
        dfa_[n] = dfa_[n - 1] * double(2 * n - 3) / double(2 * n - 2);
        dfb_[n] = dfb_[n - 1] * double(2 * n - 2) / double(2 * n - 1);
    }
    pi2_ = M_PI * M_PI;
}

double HyperellipticSweep::gm1gm1_distinct_p1(long g) const {
    return double(2 * g - 1) * double(2 * g + 2) / 4.0 * dfa_[g] / dfb_[g];
}

double HyperellipticSweep::gm1gm1_distinct_p2_total(long g) const {
    // 1/2 sum over ordered partitions of C(g) v(g1) v(g2),
    // v(n) = (2n-1)/((2n)(2n+1)) dfa(n), C(g) = (2g)(2g+1)(2g+2)/(4 dfb(g))
    double s = 0.0;
    for (long g1 = 1; g1 < g; ++g1) {
        long g2 = g - g1;
        double v1 = double(2 * g1 - 1) / (double(2 * g1) * double(2 * g1 + 1)) * dfa_[g1];
        double v2 = double(2 * g2 - 1) / (double(2 * g2) * double(2 * g2 + 1)) * dfa_[g2];
        s += v1 * v2;
    }
    double C = double(2 * g) * double(2 * g + 1) * double(2 * g + 2) / (4.0 * dfb_[g]);
    return 0.5 * C * s;
}

double HyperellipticSweep::gm1gm1_loops_p1(long g) const {
    // c * pi^2
    return double(g - 1) / double(2 * g - 1) * double(2 * g + 1) * double(2 * g + 2) *
           dfb_[g - 1] / dfb_[g];
}

double HyperellipticSweep::gm1gm1_loops_p2_total(long g) const {
    // (c * pi^2); 1/2 sum over ordered partitions of C2(g) w(g1) w(g2),
    // w(n) = n dfb(n)/((2n+1)(2n+2)), C2(g) = 4 (2g)(2g+1)(2g+2)/dfb(g)
    double s = 0.0;
    for (long g1 = 1; g1 <= g - 2; ++g1) {
        long g2 = g - 1 - g1;
        double w1 = double(g1) * dfb_[g1] / (double(2 * g1 + 1) * double(2 * g1 + 2));
        double w2 = double(g2) * dfb_[g2] / (double(2 * g2 + 1) * double(2 * g2 + 2));
        s += w1 * w2;
    }
    double C = 4.0 * double(2 * g) * double(2 * g + 1) * double(2 * g + 2) / dfb_[g];
    return 0.5 * C * s;
}

double HyperellipticSweep::minimal_loops_p1_total(long g) const {
    // (c * pi^2), the two multiplicity-1 pieces added
    double twohole = 2.0 * double(g - 1) * double(2 * g + 1) * dfb_[g - 1] / dfa_[g];
    double fig8 = double(2 * g - 3) / (2.0 * double(2 * g - 2)) * double(2 * g) *
                  double(2 * g + 1) * dfa_[g - 1] / dfa_[g];
    return twohole + fig8;
}

double HyperellipticSweep::minimal_loops_p2_total(long g) const {
    // (c * pi^2); ordered partitions of g-1 (the two blocks differ in kind)
    double s = 0.0;
    for (long g1 = 1; g1 <= g - 2; ++g1) {
        long g2 = g - 1 - g1;
        double u = double(2 * g1 - 1) * dfa_[g1] / (double(2 * g1) * double(2 * g1 + 1));
        double t = double(2 * g2) * dfb_[g2] / (double(2 * g2 + 1) * double(2 * g2 + 2));
        s += u * t;
    }
    double C = double(2 * g - 1) * double(2 * g) * double(2 * g + 1) / dfa_[g];
    return C * s;
}

double HyperellipticSweep::gm1gm1_loops_p1_value(long g) const {
    return gm1gm1_loops_p1(g) / pi2_;
}
double HyperellipticSweep::gm1gm1_loops_p2_total_value(long g) const {
    return gm1gm1_loops_p2_total(g) / pi2_;
}
double HyperellipticSweep::minimal_loops_p1_total_value(long g) const {
    return minimal_loops_p1_total(g) / pi2_;
}
double HyperellipticSweep::minimal_loops_p2_total_value(long g) const {
    return minimal_loops_p2_total(g) / pi2_;
}

namespace {

// log of dfa(n) = (2n-3)!!/(2n-2)!! and dfb(n) = (2n-2)!!/(2n-1)!!
Mpf log_dfa(long n, mpfr_prec_t prec) {
    // dfa(n) = (2n-2)! / (4^{n-1} ((n-1)!)^2)
    Mpf ln4 = Mpf::log(Mpf::from(4L, prec));
    return Mpf::lngamma(Mpf::from(2 * n - 1, prec)) -
           Mpf::from(2L, prec) * Mpf::lngamma(Mpf::from(n, prec)) -
           Mpf::from(n - 1, prec) * ln4;
}
Mpf log_dfb(long n, mpfr_prec_t prec) {
    // dfb(n) = 2^{2n-1} (n-1)! n! / (2n)!
    Mpf ln2 = Mpf::log(Mpf::from(2L, prec));
    return Mpf::from(2 * n - 1, prec) * ln2 + Mpf::lngamma(Mpf::from(n, prec)) +
           Mpf::lngamma(Mpf::from(n + 1, prec)) - Mpf::lngamma(Mpf::from(2 * n + 1, prec));
}

}  // namespace

double hyp_gm1gm1_distinct_p1_numeric(long g) {
    const mpfr_prec_t prec = 256;
    Mpf lg = Mpf::log(Mpf::from(BigInt(BigInt(2 * g - 1) * (2 * g + 2)), prec) / Mpf::from(4L, prec)) +
             log_dfa(g, prec) - log_dfb(g, prec);
    return Mpf::exp(lg).to_double();
}

double hyp_gm1gm1_loops_p1_numeric(long g) {
    const mpfr_prec_t prec = 256;
    Mpf pref = Mpf::from(g - 1, prec) / Mpf::from(2 * g - 1, prec) *
               Mpf::from(BigInt(BigInt(2 * g + 1) * (2 * g + 2)), prec);
    Mpf lg = Mpf::log(pref) + log_dfb(g - 1, prec) - log_dfb(g, prec);
    return (Mpf::exp(lg) / (Mpf::pi(prec) * Mpf::pi(prec))).to_double();
}

double hyp_minimal_loops_p1_numeric(long g) {
    const mpfr_prec_t prec = 256;
    Mpf twohole = Mpf::exp(Mpf::log(Mpf::from(BigInt(BigInt(2) * (g - 1) * (2 * g + 1)), prec)) +
                           log_dfb(g - 1, prec) - log_dfa(g, prec));
    Mpf fig8 = Mpf::exp(Mpf::log(Mpf::from(BigInt(BigInt(2 * g - 3) * (2 * g) * (2 * g + 1)), prec) /
                                 Mpf::from(BigInt(BigInt(2) * (2 * g - 2)), prec)) +
                        log_dfa(g - 1, prec) - log_dfa(g, prec));
    return ((twohole + fig8) / (Mpf::pi(prec) * Mpf::pi(prec))).to_double();
}

}  // namespace svlab
