// python bindings for the main operations: stratum bookkeeping, volumes,
// Siegel-Veech constants (exact and asymptotic), the lemma oracles, the
// lookup table and the lattice Monte-Carlo harness.

#include "svlab/acceptance.hpp"
#include "svlab/asymptotics.hpp"
#include "svlab/configurations.hpp"
#include "svlab/hyperelliptic.hpp"
#include "svlab/lemma_lab.hpp"
#include "svlab/siegel_mc.hpp"
#include "svlab/sv_engine.hpp"
#include "svlab/table.hpp"
#include "svlab/volumes.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace svlab;

namespace {

py::dict value_dict(const PiLaurent& v, ErrorClass err) {
    py::dict d;
    d["exact"] = v.str();
    d["value"] = v.to_double();
    d["error_class"] = to_string(err);
    return d;
}

py::dict stratum_dict(const std::string& text) {
    auto [sig, comp] = parse_stratum(text);
    py::dict d;
    d["signature"] = sig.str();
    d["orders"] = sig.orders();
    d["genus"] = sig.genus();
    d["dimension"] = sig.dimension();
    ComponentSet cs = classify_components(sig);
    py::list comps;
    for (ComponentId c : cs.components) comps.append(to_string(c));
    d["components"] = comps;
    d["coincides_with_hyperelliptic"] = cs.coincides_with_hyperelliptic;
    d["extrapolated"] = cs.extrapolated;
    if (comp) d["component"] = to_string(*comp);
    return d;
}

py::dict volume_dict(const std::string& text) {
    auto [sig, comp] = parse_stratum(text);
    ComponentId c = comp.value_or(ComponentId::Whole);
    try {
        VolumeValue v = volume_exact_special(sig, c);
        py::dict d = value_dict(v.value, v.error);
        d["kind"] = "exact";
        return d;
    } catch (const NoExactFormulaError&) {
    }
    if (comp && *comp != ComponentId::Whole) {
        VolumeValue v = volume_component_asymptotic(sig, c);
        if (v.kind == VolumeValue::Kind::HypStirlingLeading) {
            py::dict d;
            d["kind"] = "stirling-leading";
            d["value"] = v.numeric;
            d["error_class"] = to_string(v.error);
            return d;
        }
        py::dict d = value_dict(v.value, v.error);
        d["kind"] = "asymptotic-leading";
        return d;
    }
    VolumeValue v = volume_asymptotic(sig);
    py::dict d = value_dict(v.value, v.error);
    d["kind"] = "asymptotic-leading";
    return d;
}

py::dict asym_dict(const AsymptoticValue& v) {
    py::dict d = value_dict(v.coefficient, v.error);
    d["bound_only"] = v.bound_only;
    d["description"] = v.description;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Siegel-Veech constants for strata of translation surfaces";

    m.def("stratum", &stratum_dict, py::arg("signature"),
          "parse a signature like \"H(1,1)\" and classify its components");
    m.def("volume", &volume_dict, py::arg("stratum"),
          "exact volume where a closed form exists, else the asymptotic leading term");

    m.def(
        "pi_laurent",
        [](const std::string& text) {
            PiLaurent v = PiLaurent::parse(text);
            return value_dict(v, ErrorClass::Exact);
        },
        py::arg("text"), "parse/normalise an exact pi-polynomial like \"2/pi + 2/pi^2\"");

    m.def(
        "sv_hyperelliptic",
        [](const std::string& stratum, const std::string& kind, int p,
           std::optional<long> partition) {
            auto [sig, comp] = parse_stratum(stratum);
            SvKind k = kind == "distinct" ? SvKind::DistinctZeros : SvKind::Loops;
            SvValue v = sv_hyperelliptic_exact(sig, k, p, partition);
            return value_dict(v.value, v.error);
        },
        py::arg("stratum"), py::arg("kind"), py::arg("p"), py::arg("partition") = std::nullopt,
        "exact constants on the hyperelliptic components");

    m.def(
        "asym_distinct_fixed",
        [](int m1, int m2, int p, long g, long l) {
            return asym_dict(asym_distinct_fixed(m1, m2, p, g, l));
        },
        py::arg("m1"), py::arg("m2"), py::arg("p"), py::arg("g"), py::arg("l"));
    m.def(
        "asym_loop",
        [](int m, int p, const std::string& mode, long g, long l, int m2) {
            LoopMode lm = LoopMode::OneFixedZeroTotal;
            if (mode == "no_cylinder") lm = LoopMode::NoCylinder;
            else if (mode == "cylinder_same_zero") lm = LoopMode::CylinderSameZero;
            else if (mode == "cylinder_other_zero") lm = LoopMode::CylinderOtherZero;
            else if (mode == "any_multiplicity") lm = LoopMode::AnyMultiplicity;
            else if (mode != "one_fixed_zero_total")
                throw std::invalid_argument("unknown loop mode: " + mode);
            return asym_dict(asym_loop(m, p, lm, g, l, m2));
        },
        py::arg("m"), py::arg("p"), py::arg("mode"), py::arg("g"), py::arg("l"),
        py::arg("m2") = -1);
    m.def(
        "asym_principal_loops",
        [](int p, long g) { return asym_dict(asym_principal_loops(p, g)); }, py::arg("p"),
        py::arg("g"));
    m.def(
        "asym_special_family",
        [](const std::string& family, int p, long g) {
            return asym_dict(asym_special_families(special_family_from_string(family), p, g));
        },
        py::arg("family"), py::arg("p"), py::arg("g"));
    m.def(
        "asym_total",
        [](const std::string& stratum) {
            return asym_dict(asym_total(parse_stratum(stratum).first));
        },
        py::arg("stratum"));

    m.def(
        "count_distinct_configs",
        [](const std::string& stratum, int i1, int i2, int p) {
            auto H = parse_stratum(stratum).first;
            return enumerate_distinct_zero_configs(H, i1, i2, p).size();
        },
        py::arg("stratum"), py::arg("i1"), py::arg("i2"), py::arg("p"));
    m.def(
        "count_loop_configs",
        [](const std::string& stratum, int z, int p) {
            auto H = parse_stratum(stratum).first;
            return enumerate_loop_configs(H, z, p).size();
        },
        py::arg("stratum"), py::arg("z"), py::arg("p"));

    m.def("table_csv", [](long g) { return table_to_csv(generate_table(g)); }, py::arg("g"));
    m.def("table_json", [](long g) { return table_to_json(generate_table(g), g); }, py::arg("g"));

    m.def("eval_series",
          [](const std::string& which, long N) {
              return eval_series(which == "half_pi" ? SeriesKind::HalfPi
                                                    : SeriesKind::PiSqOverEight,
                                 N);
          },
          py::arg("which"), py::arg("N"));
    m.def("partition_zeta_sum", &eval_partition_zeta_sum, py::arg("g"));
    m.def("double_factorial_sum", &eval_double_factorial_sums, py::arg("g"), py::arg("which"));
    m.def("double_factorial_sum_limit", &double_factorial_sum_limit, py::arg("which"));
    m.def("cancelling_factorials", &check_cancelling_factorials, py::arg("p"), py::arg("g"));
    m.def("zeta", &euler_maclaurin_zeta, py::arg("s"), py::arg("terms") = 10000);

    m.def(
        "siegel",
        [](long samples, double radius, std::uint64_t seed, bool primitive, int threads) {
            SiegelReport r = siegel_average(samples, radius, seed, primitive, threads);
            py::dict d;
            d["samples"] = r.samples;
            d["radius"] = r.radius;
            d["seed"] = r.seed;
            d["estimate"] = r.estimate;
            d["target"] = r.target;
            d["std_error"] = r.std_error;
            d["z_score"] = r.z_score;
            d["mean_ratio"] = r.mean_ratio;
            d["wall_seconds"] = r.wall_seconds;
            return d;
        },
        py::arg("samples"), py::arg("radius"), py::arg("seed") = 20240817ull,
        py::arg("primitive") = false, py::arg("threads") = 0);

    m.def("acceptance", []() {
        py::list out;
        for (const auto& r : run_acceptance()) {
            py::dict d;
            d["id"] = r.id;
            d["name"] = r.name;
            d["pass"] = r.pass;
            d["seconds"] = r.seconds;
            d["details"] = r.details;
            out.append(d);
        }
        return out;
    });
}
