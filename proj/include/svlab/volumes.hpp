#pragma once

#include "svlab/error_class.hpp"
#include "svlab/pi_laurent.hpp"
#include "svlab/strata.hpp"

#include <functional>
#include <optional>
#include <stdexcept>

namespace svlab {

struct VolumeUnavailableError : std::runtime_error {
    explicit VolumeUnavailableError(const std::string& stratum)
        : std::runtime_error("volume unavailable for " + stratum), stratum_name(stratum) {}
    std::string stratum_name;
};

struct NoExactFormulaError : std::runtime_error {
    explicit NoExactFormulaError(const std::string& what) : std::runtime_error(what) {}
};

struct VolumeValue {
    enum class Kind { Exact, AsymptoticLeading, HypStirlingLeading };
    Kind kind = Kind::Exact;
    // Exact value, or the leading coefficient (a rational for eq-volume
    // leadings). For HypStirlingLeading this field is unused; the value is
    // only available numerically.
    PiLaurent value;
    ErrorClass error = ErrorClass::Exact;
    double numeric = 0.0;  // HypStirlingLeading only

    bool is_exact() const { return kind == Kind::Exact; }
};

// Leading term 4 / prod(m_n + 1) with error class O(1/g); the class degrades
// to O(1) at bounded genus (g <= 2), where the leading term is only an
// order-of-magnitude statement.
VolumeValue volume_asymptotic(const StratumSignature& s);

// Exact Masur-Veech volumes where closed forms exist:
//   mu(H(0)) = mu(H(0,0)) = pi^2/3,
//   mu(H^hyp(2g-2))   = 2 pi^{2g}/(2g+1)! * (2g-3)!!/(2g-2)!!,
//   mu(H^hyp(g-1,g-1)) = 8 pi^{2g}/(2g+2)! * (2g-2)!!/(2g-1)!!.
// Unsupported pairs raise NoExactFormulaError.
VolumeValue volume_exact_special(const StratumSignature& s, ComponentId c);

// The two hyperelliptic families, addressed by genus.
PiLaurent hyperelliptic_minimal_volume(long g);   // H^hyp(2g-2), g >= 1
PiLaurent hyperelliptic_two_zero_volume(long g);  // H^hyp(g-1,g-1), g >= 1

// Stirling leading forms of the hyperelliptic volumes (numeric); the value
// involves (pi e / 2)^{2g} g^{-2g-c} so it only exists numerically.
Mpf hyperelliptic_minimal_volume_stirling(long g, mpfr_prec_t prec = 256);
Mpf hyperelliptic_two_zero_volume_stirling(long g, mpfr_prec_t prec = 256);

// Component volume asymptotics: NonHyp -> mu(H)(1+O(1/g)), Odd/Even ->
// mu(H)/2 (1+O(1/g)), Hyp -> Stirling leading form.
VolumeValue volume_component_asymptotic(const StratumSignature& s, ComponentId c);

// A volume provider feeds the Siegel-Veech engine. Exact where closed forms
// exist, asymptotic-leading otherwise; throws VolumeUnavailableError when it
// has nothing to offer.
using VolumeProvider =
    std::function<VolumeValue(const StratumSignature&, std::optional<ComponentId>)>;

VolumeProvider exact_volume_provider();
VolumeProvider asymptotic_volume_provider();
// exact for genus-1 pieces and hyperelliptic/small families, asymptotic
// leading otherwise
VolumeProvider mixed_volume_provider();

}  // namespace svlab
