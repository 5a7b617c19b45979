#include "svlab/sv_engine.hpp"

#include "svlab/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace svlab {

Rational dimension_term(const Configuration& c) {
    std::vector<long> half_dims;
    for (const auto& b : c.blocks)
        if (!b.is_cylinder()) half_dims.push_back(b.substratum.dimension() / 2 - 1);
    if (half_dims.empty()) throw std::invalid_argument("configuration without blocks");
    const long target = c.parent.dimension() / 2 - 2;

    auto it = std::max_element(half_dims.begin(), half_dims.end());
    Rational r = factorial_quotient(*it, target);
    for (auto jt = half_dims.begin(); jt != half_dims.end(); ++jt)
        if (jt != it) r *= Rational(factorial(*jt));
    return r;
}

namespace {

struct VolumeRatio {
    PiLaurent value;
    ErrorClass error;
};

PiLaurent volume_as_pilaurent(const VolumeValue& v, const std::string& what) {
    if (v.kind == VolumeValue::Kind::HypStirlingLeading)
        throw std::invalid_argument("Stirling-form volume cannot enter the exact engine: " + what);
    return v.value;
}

VolumeRatio volume_ratio(const Configuration& c, const VolumeProvider& vol,
                         std::optional<ComponentId> parent_component) {
    PiLaurent prod = PiLaurent::one();
    ErrorClass err = ErrorClass::Exact;
    for (const auto& b : c.blocks) {
        if (b.is_cylinder()) continue;
        VolumeValue v = vol(b.substratum, b.component_choice);
        prod = prod * volume_as_pilaurent(v, b.substratum.str());
        err = join(err, v.error);
    }
    VolumeValue vh = vol(c.parent, parent_component);
    err = join(err, vh.error);
    return {prod.divided_by(volume_as_pilaurent(vh, c.parent.str())), err};
}

Rational symmetry_and_weights(const Configuration& c) {
    SymmetryData sym = symmetry(c);
    Rational r = make_rational(1, sym.gamma_order * sym.gamma_minus_order);
    for (const auto& b : c.blocks) {
        if (b.is_cylinder()) continue;
        if (b.kind == BlockKind::TwoHole) {
            r *= Rational((b.first + 1) * (b.second + 1));
        } else {
            r *= Rational(b.a() + 1);
        }
    }
    // 2^{-(p-1)}
    r /= BigInt(1) << static_cast<unsigned>(c.p() - 1);
    return r;
}

}  // namespace

SvValue sv_distinct_labelled(const Configuration& c, const VolumeProvider& vol) {
    if (c.kind != Configuration::Kind::DistinctZeros)
        throw std::invalid_argument("sv_distinct_labelled needs a distinct-zeros configuration");
    if (!c.labelled) throw std::invalid_argument("configuration must be labelled");
    SvValue out;
    Rational comb = symmetry_and_weights(c) * dimension_term(c);
    VolumeRatio vr = volume_ratio(c, vol, std::nullopt);
    out.value = vr.value * comb;
    out.error = vr.error;
    out.provenance = "distinct-zeros gluing formula";
    return out;
}

SvValue sv_loop_labelled(const Configuration& c, const VolumeProvider& vol) {
    if (c.kind != Configuration::Kind::Loop)
        throw std::invalid_argument("sv_loop_labelled needs a loop configuration");
    if (!c.labelled) throw std::invalid_argument("configuration must be labelled");
    SvValue out;
    Rational comb = symmetry_and_weights(c) * dimension_term(c);
    VolumeRatio vr = volume_ratio(c, vol, std::nullopt);
    out.value = vr.value * comb;
    out.error = vr.error;
    out.provenance = "loop gluing formula";
    return out;
}

SvValue sv_distinct_p1_simplified(const StratumSignature& H, int i1, int i2,
                                  const VolumeProvider& vol) {
    Configuration c = dominant_distinct_config(H, i1, i2, 1);
    SvValue out;
    VolumeValue v1 = vol(c.blocks[0].substratum, std::nullopt);
    VolumeValue vh = vol(H, std::nullopt);
    out.value = volume_as_pilaurent(v1, c.blocks[0].substratum.str())
                    .divided_by(volume_as_pilaurent(vh, H.str())) *
                Rational(c.m1 + c.m2 + 1);
    out.error = join(v1.error, vh.error);
    out.provenance = "multiplicity-one short form";
    return out;
}

SvValue sv_component_corrected(const Configuration& c, ComponentId parent,
                               const VolumeProvider& vol) {
    (void)vol;
    SvValue out;
    Rational zeros_factor(1);
    for (int m : c.new_zero_orders()) zeros_factor *= Rational(m + 1);
    Rational dim = dimension_term(c);
    const int p = c.p();

    if (is_dominant(c)) {
        SymmetryData sym = symmetry(c);
        PiLaurent pi2_6 = PiLaurent::monomial(make_rational(1, 6), 2);
        out.value = pi2_6.pow(static_cast<unsigned>(p - 1)) *
                    (zeros_factor * dim / Rational(sym.gamma_order * sym.gamma_minus_order));
        out.error = ErrorClass::OneOverG;
        out.provenance = "component-corrected dominant form (" + to_string(parent) + ")";
        return out;
    }
    out.value = PiLaurent(zeros_factor * dim);
    out.error = ErrorClass::BoundOnly;
    out.bound_only = true;
    out.provenance = "component-corrected non-dominant bound (" + to_string(parent) + ")";
    return out;
}

}  // namespace svlab
