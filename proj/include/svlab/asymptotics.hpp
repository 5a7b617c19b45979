#pragma once

#include "svlab/error_class.hpp"
#include "svlab/pi_laurent.hpp"
#include "svlab/strata.hpp"

#include <string>
#include <vector>

namespace svlab {

// A large-genus leading value at concrete (g, l, ...): the coefficient is an
// exact PiLaurent, the error class a symbolic tag. interval() turns it into
// a numeric range once the caller supplies g and an explicit multiple.
struct AsymptoticValue {
    PiLaurent coefficient;
    ErrorClass error = ErrorClass::OneOverG;
    bool bound_only = false;
    std::string description;

    double value() const { return coefficient.to_double(); }
    std::pair<double, double> interval(double g, double multiple) const {
        double v = value();
        double w = multiple * err_scale(error, g) * std::abs(v);
        return {v - w, v + w};
    }
};

// Saddle connections between distinct fixed zeros, multiplicity p:
// 0 beyond min(m1,m2)+1, else (m1+1)(m2+1) (pi^2/6)^{p-1} / (2g+l-3)^{2p-2}.
AsymptoticValue asym_distinct_fixed(int m1, int m2, int p, long g, long l);

// Any multiplicity: (m1+1)(m2+1), O(1/g); the homology-class count is exact.
AsymptoticValue asym_distinct_any_multiplicity(int m1, int m2, bool up_to_homology = false);

enum class LoopMode {
    NoCylinder,
    CylinderSameZero,
    CylinderOtherZero,
    OneFixedZeroTotal,
    AnyMultiplicity,
};

// Loop constants at a fixed zero of order m. The three basic modes are the
// multiplicity-1 cases; OneFixedZeroTotal carries the general-p form
// (1/2)(pi^2/6)^{p-1}(m+1)(m-2p+1)/(2g+l-3)^{2p-2}.
AsymptoticValue asym_loop(int m, int p, LoopMode mode, long g, long l, int m2 = -1);

// Loops with all n zeros fixed; vanishes outside n/2 <= p <= M/2.
AsymptoticValue asym_loop_all_zeros_fixed(const std::vector<int>& orders, int p, long g, long l);

// Principal stratum, loops at any zero: (1/2)(pi^2/3)^{p-1}/(4g-5)^{2p-3}.
AsymptoticValue asym_principal_loops(int p, long g);

enum class SpecialFamily {
    MinimalLoops,          // H(2g-2) whole/odd/even
    Gm1Gm1Distinct,        // H(g-1,g-1) whole/odd/even/non-hyp
    Gm1Gm1LoopsFixed,
    Gm1Gm1LoopsAny,
    HypMinimalLoops,       // H^hyp(2g-2)
    HypGm1Gm1Distinct,     // H^hyp(g-1,g-1)
    HypGm1Gm1Loops,
};

SpecialFamily special_family_from_string(const std::string& s);
std::string to_string(SpecialFamily f);

AsymptoticValue asym_special_families(SpecialFamily family, int p, long g);

// Any saddle connection on any stratum: (2g+l-2)^2/2.
AsymptoticValue asym_total(const StratumSignature& H);

// Combinatorial factor turning fixed-zero constants into any-zero ones:
// n_{m1} n_{m2} for m1 != m2, n(n-1)/2 for m1 = m2; n_m for loops.
Rational unlabelled_pair_factor(const StratumSignature& H, int m1, int m2);
Rational unlabelled_loop_factor(const StratumSignature& H, int m);

}  // namespace svlab
