#pragma once

#include "svlab/configurations.hpp"
#include "svlab/error_class.hpp"
#include "svlab/pi_laurent.hpp"
#include "svlab/volumes.hpp"

#include <string>

namespace svlab {

struct SvValue {
    PiLaurent value;
    ErrorClass error = ErrorClass::Exact;
    std::string provenance;
    // O(1)^p bound forms: `value` is only the scale of the bound; never add
    // these to exact values.
    bool bound_only = false;
};

// The dimension term prod (d_i/2 - 1)! / (d/2 - 2)!, computed as an exact
// rational via a factorial quotient anchored at the largest block (so huge
// strata never materialise full factorials).
Rational dimension_term(const Configuration& c);

// Master formula for saddle connections between distinct fixed zeros:
//   1/(|G||G-|) * prod(a_i+1) * 2^{-(p-1)} * dim-term * prod mu(H_i) / mu(H).
SvValue sv_distinct_labelled(const Configuration& c, const VolumeProvider& vol);

// Master formula for loops; two-hole blocks contribute (b'+1)(b''+1).
SvValue sv_loop_labelled(const Configuration& c, const VolumeProvider& vol);

// Multiplicity-1 short form (m1+m2+1) * mu(H_1)/mu(H).
SvValue sv_distinct_p1_simplified(const StratumSignature& H, int i1, int i2,
                                  const VolumeProvider& vol);

// Dominant/non-dominant forms for non-connected strata and their
// odd/even/non-hyperelliptic components: dominant configurations get the
// (pi^2/6)^{p-1} closed form with a 1+O(1/g) class, non-dominant ones a
// bound-only value.
SvValue sv_component_corrected(const Configuration& c, ComponentId parent,
                               const VolumeProvider& vol);

}  // namespace svlab
