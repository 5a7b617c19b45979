#include "svlab/volumes.hpp"

#include "svlab/kernels.hpp"

namespace svlab {

VolumeValue volume_asymptotic(const StratumSignature& s) {
    Rational lead(4);
    for (int m : s.orders()) lead /= (m + 1);
    VolumeValue v;
    v.kind = VolumeValue::Kind::AsymptoticLeading;
    v.value = PiLaurent(lead);
    v.error = s.genus() <= 2 ? ErrorClass::OrderOne : ErrorClass::OneOverG;
    return v;
}

PiLaurent hyperelliptic_minimal_volume(long g) {
    if (g < 1) throw std::invalid_argument("hyperelliptic_minimal_volume needs g >= 1");
    Rational c = make_rational(BigInt(2), factorial(2 * g + 1));
    c *= make_rational(double_factorial(2 * g - 3), double_factorial(2 * g - 2));
    return PiLaurent::monomial(c, static_cast<int>(2 * g));
}

PiLaurent hyperelliptic_two_zero_volume(long g) {
    if (g < 1) throw std::invalid_argument("hyperelliptic_two_zero_volume needs g >= 1");
    Rational c = make_rational(BigInt(8), factorial(2 * g + 2));
    c *= make_rational(double_factorial(2 * g - 2), double_factorial(2 * g - 1));
    return PiLaurent::monomial(c, static_cast<int>(2 * g));
}

namespace {
bool is_genus_one_marked(const StratumSignature& s, int max_points) {
    return s.genus() == 1 && s.zero_count() <= max_points;
}

Mpf stirling_form(long g, const Rational& pref, int pref_pi_pow, long g_pow, mpfr_prec_t prec) {
    // pref * pi^{pref_pi_pow} * (pi e / 2)^{2g} * g^{g_pow}
    const Mpf pi = Mpf::pi(prec);
    Mpf base = pi * Mpf::e(prec) / Mpf::from(2L, prec);
    Mpf r = Mpf::from(pref, prec) * Mpf::pow_si(pi, pref_pi_pow);
    r = r * Mpf::pow_si(base, 2 * g);
    r = r * Mpf::pow_si(Mpf::from(g, prec), g_pow);
    return r;
}
}  // namespace

Mpf hyperelliptic_minimal_volume_stirling(long g, mpfr_prec_t prec) {
    // (1/2pi) (pi e/2)^{2g} g^{-2g-2}
    return stirling_form(g, make_rational(1, 2), -1, -2 * g - 2, prec);
}

Mpf hyperelliptic_two_zero_volume_stirling(long g, mpfr_prec_t prec) {
    // (1/2) (pi e/2)^{2g} g^{-2g-3}
    return stirling_form(g, make_rational(1, 2), 0, -2 * g - 3, prec);
}

VolumeValue volume_exact_special(const StratumSignature& s, ComponentId c) {
    VolumeValue v;
    v.kind = VolumeValue::Kind::Exact;
    v.error = ErrorClass::Exact;

    if (is_genus_one_marked(s, 2) && (c == ComponentId::Whole || c == ComponentId::Hyperelliptic)) {
        // mu(H(0)) = pi^2/3, and mu(H(0,0)) = mu(H(0)).
        v.value = PiLaurent::monomial(make_rational(1, 3), 2);
        return v;
    }
    if (s.is_minimal() && s.marked_points() == 0 &&
        (c == ComponentId::Hyperelliptic || (c == ComponentId::Whole && s.genus() == 2))) {
        v.value = hyperelliptic_minimal_volume(s.genus());
        return v;
    }
    if (s.is_gm1_gm1() && s.marked_points() == 0 &&
        (c == ComponentId::Hyperelliptic || (c == ComponentId::Whole && s.genus() == 2))) {
        v.value = hyperelliptic_two_zero_volume(s.genus());
        return v;
    }
    throw NoExactFormulaError("no exact volume formula for " +
                              stratum_to_string(s, c));
}

VolumeValue volume_component_asymptotic(const StratumSignature& s, ComponentId c) {
    const ComponentSet set = classify_components(s);
    // The complement of the hyperelliptic locus is the whole stratum when no
    // hyperelliptic component exists, so NonHyp is always meaningful.
    const bool ok = set.contains(c) || c == ComponentId::Whole ||
                    c == ComponentId::NonHyperelliptic;
    if (!ok)
        throw std::invalid_argument("component " + to_string(c) + " invalid for " + s.str());

    if (c == ComponentId::Hyperelliptic) {
        VolumeValue v;
        v.kind = VolumeValue::Kind::HypStirlingLeading;
        v.error = ErrorClass::OneOverG;
        v.numeric = s.is_minimal() ? hyperelliptic_minimal_volume_stirling(s.genus()).to_double()
                                   : hyperelliptic_two_zero_volume_stirling(s.genus()).to_double();
        return v;
    }

    VolumeValue whole = volume_asymptotic(s);
    VolumeValue v;
    v.kind = VolumeValue::Kind::AsymptoticLeading;
    v.error = join(whole.error, ErrorClass::OneOverG);
    if (c == ComponentId::Odd || c == ComponentId::Even) {
        v.value = whole.value * make_rational(1, 2);
    } else {
        v.value = whole.value;  // Whole or NonHyp
    }
    return v;
}

VolumeProvider exact_volume_provider() {
    return [](const StratumSignature& s, std::optional<ComponentId> c) -> VolumeValue {
        ComponentId comp = c.value_or(ComponentId::Whole);
        try {
            return volume_exact_special(s, comp);
        } catch (const NoExactFormulaError&) {
            throw VolumeUnavailableError(stratum_to_string(s, c));
        }
    };
}

VolumeProvider asymptotic_volume_provider() {
    return [](const StratumSignature& s, std::optional<ComponentId> c) -> VolumeValue {
        if (c && *c != ComponentId::Whole) return volume_component_asymptotic(s, *c);
        return volume_asymptotic(s);
    };
}

VolumeProvider mixed_volume_provider() {
    return [](const StratumSignature& s, std::optional<ComponentId> c) -> VolumeValue {
        ComponentId comp = c.value_or(ComponentId::Whole);
        try {
            return volume_exact_special(s, comp);
        } catch (const NoExactFormulaError&) {
        }
        if (c && *c != ComponentId::Whole) return volume_component_asymptotic(s, *c);
        return volume_asymptotic(s);
    };
}

}  // namespace svlab
