#include "svlab/asymptotics.hpp"

#include "svlab/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace svlab {

namespace {

const PiLaurent& pi2_over_6() {
    static const PiLaurent v = PiLaurent::monomial(make_rational(1, 6), 2);
    return v;
}
const PiLaurent& pi2_over_3() {
    static const PiLaurent v = PiLaurent::monomial(make_rational(1, 3), 2);
    return v;
}

Rational inv_power(long base, long exp) {
    // base^{-exp} as a rational, exp may be negative
    if (exp == 0) return Rational(1);
    BigInt b;
    mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp > 0 ? exp : -exp));
    return exp > 0 ? make_rational(BigInt(1), b) : Rational(b);
}

AsymptoticValue exact_zero(std::string why) {
    AsymptoticValue v;
    v.coefficient = PiLaurent::zero();
    v.error = ErrorClass::Exact;
    v.description = std::move(why);
    return v;
}

}  // namespace

AsymptoticValue asym_distinct_fixed(int m1, int m2, int p, long g, long l) {
    if (p < 1) throw std::invalid_argument("multiplicity must be >= 1");
    if (p > std::min(m1, m2) + 1)
        return exact_zero("multiplicity exceeds min(m1,m2)+1");
    AsymptoticValue v;
    v.coefficient = pi2_over_6().pow(static_cast<unsigned>(p - 1)) *
                    (Rational((m1 + 1) * (m2 + 1)) * inv_power(2 * g + l - 3, 2 * p - 2));
    v.error = p == 1 ? ErrorClass::OneOverG : ErrorClass::OneOverGTimesCp;
    v.description = "distinct fixed zeros, multiplicity " + std::to_string(p);
    return v;
}

AsymptoticValue asym_distinct_any_multiplicity(int m1, int m2, bool up_to_homology) {
    AsymptoticValue v;
    v.coefficient = PiLaurent(Rational((m1 + 1) * (m2 + 1)));
    v.error = up_to_homology ? ErrorClass::Exact : ErrorClass::OneOverG;
    v.description = up_to_homology ? "distinct fixed zeros, homology classes of any multiplicity"
                                   : "distinct fixed zeros, any multiplicity";
    return v;
}

AsymptoticValue asym_loop(int m, int p, LoopMode mode, long g, long l, int m2) {
    if (p < 1) throw std::invalid_argument("multiplicity must be >= 1");
    AsymptoticValue v;
    const long D = 2 * g + l - 3;
    switch (mode) {
        case LoopMode::NoCylinder:
            if (p != 1) throw std::invalid_argument("case split applies to multiplicity 1");
            v.coefficient = PiLaurent(make_rational(static_cast<long>(m + 1) * (m - 1), 2));
            v.description = "loop, no cylinder";
            break;
        case LoopMode::CylinderSameZero:
            if (p != 1) throw std::invalid_argument("case split applies to multiplicity 1");
            v.coefficient =
                PiLaurent(make_rational(static_cast<long>(m + 1) * (m - 1), 2 * D));
            v.description = "loop bounding a cylinder, same zero on the far side";
            break;
        case LoopMode::CylinderOtherZero:
            if (p != 1) throw std::invalid_argument("case split applies to multiplicity 1");
            if (m2 < 0) throw std::invalid_argument("needs the order of the far zero");
            v.coefficient =
                PiLaurent(make_rational(static_cast<long>(m + 1) * (m2 + 1), D));
            v.description = "loop bounding a cylinder, far zero of order " + std::to_string(m2);
            break;
        case LoopMode::OneFixedZeroTotal:
            if (p == 1) {
                // cylinder cases included; the telescoped total
                v.coefficient = PiLaurent(make_rational(static_cast<long>(m + 1) * (m + 1), 2));
                v.error = ErrorClass::OneOverG;
                v.description = "loops at one fixed zero, multiplicity 1";
                return v;
            }
            if (2 * p > m) return exact_zero("multiplicity exceeds m/2");
            v.coefficient = pi2_over_6().pow(static_cast<unsigned>(p - 1)) *
                            (make_rational(1, 2) * Rational(static_cast<long>(m + 1) * (m - 2 * p + 1)) *
                             inv_power(D, 2 * p - 2));
            v.error = ErrorClass::OneOverGTimesCp;
            v.description = "loops at one fixed zero, multiplicity " + std::to_string(p);
            return v;
        case LoopMode::AnyMultiplicity:
            v.coefficient = PiLaurent(make_rational(static_cast<long>(m + 1) * (m + 1), 2));
            v.description = "loops at one fixed zero, any multiplicity";
            break;
    }
    v.error = ErrorClass::OneOverG;
    return v;
}

AsymptoticValue asym_loop_all_zeros_fixed(const std::vector<int>& orders, int p, long g, long l) {
    if (orders.empty()) throw std::invalid_argument("need at least one zero");
    if (p < 1) throw std::invalid_argument("multiplicity must be >= 1");
    const int n = static_cast<int>(orders.size());
    long M = 0;
    for (int m : orders) M += m;
    if (2 * p < n || 2 * p > M)
        return exact_zero("multiplicity outside [n/2, M/2]");
    const long D = 2 * g + l - 3;
    AsymptoticValue v;
    if (n == 1) {
        const int m = orders[0];
        v.coefficient = pi2_over_6().pow(static_cast<unsigned>(p - 1)) *
                        (make_rational(1, 2) * Rational(static_cast<long>(m + 1) * (m - 2 * p + 1)) *
                         inv_power(D, 2 * p - 2));
        v.error = ErrorClass::OneOverGTimesCp;
        v.description = "loops, one fixed zero";
        return v;
    }
    Rational c(1);
    for (int m : orders) c *= (m + 1);
    v.coefficient = PiLaurent(c * inv_power(D, 2 * p - 3 + n));
    v.error = ErrorClass::BoundOnly;
    v.bound_only = true;
    v.description = "loops, n >= 2 fixed zeros (bound only)";
    return v;
}

AsymptoticValue asym_principal_loops(int p, long g) {
    if (p < 1) throw std::invalid_argument("multiplicity must be >= 1");
    AsymptoticValue v;
    v.coefficient = pi2_over_3().pow(static_cast<unsigned>(p - 1)) *
                    (make_rational(1, 2) * inv_power(4 * g - 5, 2 * p - 3));
    v.error = ErrorClass::OneOverGTimesCp;
    v.description = "principal stratum loops, any zero, multiplicity " + std::to_string(p);
    return v;
}

std::string to_string(SpecialFamily f) {
    switch (f) {
        case SpecialFamily::MinimalLoops: return "minimal-loops";
        case SpecialFamily::Gm1Gm1Distinct: return "gm1gm1-distinct";
        case SpecialFamily::Gm1Gm1LoopsFixed: return "gm1gm1-loops-fixed";
        case SpecialFamily::Gm1Gm1LoopsAny: return "gm1gm1-loops-any";
        case SpecialFamily::HypMinimalLoops: return "hyp-minimal-loops";
        case SpecialFamily::HypGm1Gm1Distinct: return "hyp-gm1gm1-distinct";
        case SpecialFamily::HypGm1Gm1Loops: return "hyp-gm1gm1-loops";
    }
    return "?";
}

SpecialFamily special_family_from_string(const std::string& s) {
    for (SpecialFamily f :
         {SpecialFamily::MinimalLoops, SpecialFamily::Gm1Gm1Distinct,
          SpecialFamily::Gm1Gm1LoopsFixed, SpecialFamily::Gm1Gm1LoopsAny,
          SpecialFamily::HypMinimalLoops, SpecialFamily::HypGm1Gm1Distinct,
          SpecialFamily::HypGm1Gm1Loops}) {
        if (to_string(f) == s) return f;
    }
    throw std::invalid_argument("unknown family: " + s);
}

namespace {

AsymptoticValue hyp_family(long g, const PiLaurent& coeff_p1, const PiLaurent& coeff_p2, int p) {
    if (p >= 3) return exact_zero("no multiplicity >= 3 on hyperelliptic components");
    AsymptoticValue v;
    const Rational g2(BigInt(g) * g);
    if (p == 1) {
        v.coefficient = coeff_p1 * g2;
        v.error = ErrorClass::OneOverG;
    } else {
        v.coefficient = coeff_p2 * g2;
        v.error = ErrorClass::OneOverGQuarter;
    }
    return v;
}

}  // namespace

AsymptoticValue asym_special_families(SpecialFamily family, int p, long g) {
    if (p < 1) throw std::invalid_argument("multiplicity must be >= 1");
    AsymptoticValue v;
    v.description = to_string(family) + ", p=" + std::to_string(p);
    const PiLaurent one = PiLaurent::one();
    const PiLaurent inv_pi = PiLaurent::monomial(Rational(2), -1);       // 2/pi
    const PiLaurent inv_pi2 = PiLaurent::monomial(Rational(2), -2);     // 2/pi^2

    switch (family) {
        case SpecialFamily::MinimalLoops: {
            v.coefficient = pi2_over_6().pow(static_cast<unsigned>(p - 1)) *
                            (make_rational(1, 2) * inv_power(2 * g - 2, 2 * p - 4));
            v.error = p == 1 ? ErrorClass::OneOverG : ErrorClass::OneOverGTimesCp;
            return v;
        }
        case SpecialFamily::Gm1Gm1Distinct: {
            if (p > g) return exact_zero("multiplicity beyond g");
            v.coefficient = pi2_over_6().pow(static_cast<unsigned>(p - 1)) *
                            (make_rational(1, 4) * inv_power(2 * g - 1, 2 * p - 4));
            v.error = p == 1 ? ErrorClass::OneOverG : ErrorClass::OneOverGTimesCp;
            return v;
        }
        case SpecialFamily::Gm1Gm1LoopsFixed: {
            v.coefficient = pi2_over_6().pow(static_cast<unsigned>(p - 1)) *
                            (make_rational(1, 8) * inv_power(2 * g - 1, 2 * p - 4));
            v.error = p == 1 ? ErrorClass::OneOverG : ErrorClass::OneOverGTimesCp;
            return v;
        }
        case SpecialFamily::Gm1Gm1LoopsAny: {
            v.coefficient = pi2_over_6().pow(static_cast<unsigned>(p - 1)) *
                            (make_rational(1, 4) * inv_power(2 * g - 1, 2 * p - 4));
            v.error = p == 1 ? ErrorClass::OneOverG : ErrorClass::OneOverGTimesCp;
            return v;
        }
        case SpecialFamily::HypMinimalLoops: {
            // p=1: (2/pi + 2/pi^2) g^2 ; p=2: (3/2 - 2/pi - 2/pi^2) g^2
            PiLaurent c1 = inv_pi + inv_pi2;
            PiLaurent c2 = PiLaurent(make_rational(3, 2)) - inv_pi - inv_pi2;
            AsymptoticValue r = hyp_family(g, c1, c2, p);
            r.description = v.description;
            return r;
        }
        case SpecialFamily::HypGm1Gm1Distinct: {
            PiLaurent c1 = inv_pi;
            PiLaurent c2 = one - inv_pi;
            AsymptoticValue r = hyp_family(g, c1, c2, p);
            r.description = v.description;
            return r;
        }
        case SpecialFamily::HypGm1Gm1Loops: {
            PiLaurent c1 = inv_pi2;
            PiLaurent c2 = PiLaurent(make_rational(1, 2)) - inv_pi2;
            AsymptoticValue r = hyp_family(g, c1, c2, p);
            r.description = v.description;
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

AsymptoticValue asym_total(const StratumSignature& H) {
    AsymptoticValue v;
    const long s = 2 * H.genus() + H.zero_count() - 2;
    v.coefficient = PiLaurent(make_rational(BigInt(s) * s, BigInt(2)));
    v.error = ErrorClass::OneOverG;
    v.description = "all saddle connections";
    return v;
}

Rational unlabelled_pair_factor(const StratumSignature& H, int m1, int m2) {
    long n1 = std::count(H.orders().begin(), H.orders().end(), m1);
    if (m1 == m2) return make_rational(BigInt(n1) * (n1 - 1), BigInt(2));
    long n2 = std::count(H.orders().begin(), H.orders().end(), m2);
    return Rational(BigInt(n1) * n2);
}

Rational unlabelled_loop_factor(const StratumSignature& H, int m) {
    return Rational(static_cast<long>(std::count(H.orders().begin(), H.orders().end(), m)));
}

}  // namespace svlab
