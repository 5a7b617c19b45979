// svlab command-line interface: exact and asymptotic Siegel-Veech constants
// for strata of translation surfaces, volume lookups, combinatorial lemma
// oracles, the lattice Monte-Carlo harness, and the acceptance self-test.

#include "svlab/acceptance.hpp"
#include "svlab/asymptotics.hpp"
#include "svlab/hyperelliptic.hpp"
#include "svlab/lemma_lab.hpp"
#include "svlab/siegel_mc.hpp"
#include "svlab/table.hpp"
#include "svlab/volumes.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using json = nlohmann::json;
using namespace svlab;

namespace {

mpfr_prec_t default_precision() {
    if (const char* env = std::getenv("SVLAB_PREC_BITS")) {
        long p = std::atol(env);
        if (p >= 53) return static_cast<mpfr_prec_t>(p);
    }
    return 128;
}

json value_json(const PiLaurent& v, ErrorClass err) {
    return json{{"value_exact", v.str()},
                {"value_float", v.to_mpf(default_precision()).to_double()},
                {"error_class", to_string(err)}};
}

int cmd_volume(const std::string& stratum, const std::string& kind) {
    auto [sig, comp] = parse_stratum(stratum);
    json out;
    out["stratum"] = stratum_to_string(sig, comp);
    out["genus"] = sig.genus();
    out["dimension"] = sig.dimension();
    ComponentId c = comp.value_or(ComponentId::Whole);

    if (kind == "exact" || kind == "auto") {
        try {
            VolumeValue v = volume_exact_special(sig, c);
            out["kind"] = "exact";
            out.update(value_json(v.value, v.error));
            std::cout << out.dump() << "\n";
            return 0;
        } catch (const NoExactFormulaError& e) {
            if (kind == "exact") {
                out["error"] = e.what();
                std::cout << out.dump() << "\n";
                return 3;
            }
        }
    }
    if (comp && *comp != ComponentId::Whole) {
        VolumeValue v = volume_component_asymptotic(sig, c);
        if (v.kind == VolumeValue::Kind::HypStirlingLeading) {
            out["kind"] = "stirling-leading";
            out["value_float"] = v.numeric;
            out["error_class"] = to_string(v.error);
        } else {
            out["kind"] = "asymptotic-leading";
            out.update(value_json(v.value, v.error));
        }
    } else {
        VolumeValue v = volume_asymptotic(sig);
        out["kind"] = "asymptotic-leading";
        out.update(value_json(v.value, v.error));
    }
    std::cout << out.dump() << "\n";
    return 0;
}

struct GenericSvArgs {
    int m1 = -1, m2 = -1, m = -1;
    long l = 0;
    std::string mode = "one_fixed_zero_total";
};

int cmd_sv_generic(const std::string& family, int p, long g, const GenericSvArgs& a) {
    json out;
    out["family"] = family;
    out["p"] = p;
    out["g"] = g;
    AsymptoticValue v;
    if (family == "distinct-fixed") {
        if (a.m1 < 0 || a.m2 < 0 || a.l <= 0)
            throw CLI::ValidationError("--m1/--m2/--l", "distinct-fixed needs m1, m2 and l");
        v = asym_distinct_fixed(a.m1, a.m2, p, g, a.l);
    } else if (family == "loop-fixed") {
        if (a.m < 0 || a.l <= 0) throw CLI::ValidationError("--m/--l", "loop-fixed needs m and l");
        LoopMode mode;
        if (a.mode == "no_cylinder") mode = LoopMode::NoCylinder;
        else if (a.mode == "cylinder_same_zero") mode = LoopMode::CylinderSameZero;
        else if (a.mode == "cylinder_other_zero") mode = LoopMode::CylinderOtherZero;
        else if (a.mode == "any_multiplicity") mode = LoopMode::AnyMultiplicity;
        else if (a.mode == "one_fixed_zero_total") mode = LoopMode::OneFixedZeroTotal;
        else throw CLI::ValidationError("--mode", "unknown loop mode: " + a.mode);
        v = asym_loop(a.m, p, mode, g, a.l, a.m2);
    } else {  // total
        if (a.l <= 0) throw CLI::ValidationError("--l", "total needs the zero count l");
        std::vector<int> orders(static_cast<std::size_t>(a.l), 0);
        orders[0] = static_cast<int>(2 * g - 2);
        v = asym_total(StratumSignature(orders));
    }
    out["description"] = v.description;
    out.update(value_json(v.coefficient, v.error));
    if (v.coefficient.is_zero() && v.error == ErrorClass::Exact) out["note"] = "0 (exact)";
    if (v.bound_only) out["note"] = "bound-only";
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_sv(const std::string& family, int p, long g, bool exact, long partition) {
    json out;
    out["family"] = family;
    out["p"] = p;
    SpecialFamily f = special_family_from_string(family);
    const bool hyp = family.rfind("hyp-", 0) == 0;
    if (exact && !hyp)
        throw CLI::ValidationError("--exact", "exact values exist for the hyp-* families only");
    if (exact) {
        out["g"] = g;
        StratumSignature H =
            (f == SpecialFamily::HypMinimalLoops)
                ? StratumSignature({static_cast<int>(2 * g - 2)})
                : StratumSignature({static_cast<int>(g - 1), static_cast<int>(g - 1)});
        SvKind kind = (f == SpecialFamily::HypGm1Gm1Distinct) ? SvKind::DistinctZeros : SvKind::Loops;
        if (p >= 3) {
            SvValue v = sv_hyperelliptic_exact(H, kind, p);
            out.update(value_json(v.value, v.error));
        } else if (p == 1) {
            SvValue v = sv_hyperelliptic_exact(H, kind, 1);
            out.update(value_json(v.value, v.error));
        } else {
            if (partition > 0) {
                SvValue v = sv_hyperelliptic_exact(H, kind, 2, partition);
                out["partition_g1"] = partition;
                out.update(value_json(v.value, v.error));
            } else {
                PiLaurent total;
                switch (f) {
                    case SpecialFamily::HypMinimalLoops: total = hyp_minimal_loops_p2_total(g); break;
                    case SpecialFamily::HypGm1Gm1Distinct:
                        total = hyp_gm1gm1_distinct_p2_total(g);
                        break;
                    default: total = hyp_gm1gm1_loops_p2_total(g); break;
                }
                out["partition_g1"] = "summed";
                out.update(value_json(total, ErrorClass::Exact));
            }
        }
    } else {
        out["g"] = g;
        AsymptoticValue v = asym_special_families(f, p, g);
        out["description"] = v.description;
        out.update(value_json(v.coefficient, v.error));
        if (v.coefficient.is_zero()) out["note"] = "0 (exact)";
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_lemma(const std::string& id, long g, long n, int which, int p, int variant) {
    json out;
    out["lemma"] = id;
    if (id == "factorial-comparison") {
        SweepReport r = sweep_lemma_factorial_comparison(p > 0 ? p : 4, 8, 3);
        out["cases"] = r.cases;
        out["violations"] = r.violations;
        out["precondition_rejections"] = r.precondition_rejections;
        out["pass"] = r.violations == 0;
    } else if (id == "product-binomials") {
        SweepReport r = sweep_lemma_product_binomials(p > 0 ? p : 4, 6, 3);
        out["cases"] = r.cases;
        out["violations"] = r.violations;
        out["pass"] = r.violations == 0;
    } else if (id == "ingredient") {
        SweepReport r = sweep_lemma_ingredient(p > 0 ? p : 5, 12, 3);
        out["cases"] = r.cases;
        out["violations"] = r.violations;
        out["precondition_rejections"] = r.precondition_rejections;
        out["pass"] = r.violations == 0;
    } else if (id == "sum-constant") {
        SumConstantEstimate e =
            estimate_lemma_sum_constant(p > 0 ? p : 2, {static_cast<int>(n > 0 ? n : 5),
                                                        static_cast<int>(n > 0 ? n : 5)},
                                        2, variant > 0 ? variant : 1);
        out["ratio"] = to_string(e.ratio);
        out["c_estimate"] = e.c_estimate;
        out["admissible_choices"] = e.admissible_choices;
    } else if (id == "partition-zeta") {
        const long gg = g > 0 ? g : 10000;
        double v = eval_partition_zeta_sum(gg);
        double target = 2.0 * euler_maclaurin_zeta(1.5);
        out["g"] = gg;
        out["sum"] = v;
        out["target"] = target;
        out["error"] = std::abs(v - target);
    } else if (id == "df-sums") {
        const long gg = g > 0 ? g : 10000;
        json sums = json::array();
        for (int w = 1; w <= 3; ++w) {
            if (which > 0 && which != w) continue;
            double v = eval_double_factorial_sums(gg, w);
            double target = double_factorial_sum_limit(w);
            sums.push_back({{"which", w}, {"sum", v}, {"target", target},
                            {"error", std::abs(v - target)}});
        }
        out["g"] = gg;
        out["sums"] = sums;
    } else if (id == "cancelling") {
        const long gg = g > 0 ? g : 100;
        out["g"] = gg;
        out["p"] = p > 0 ? p : 1;
        out["ratio"] = check_cancelling_factorials(p > 0 ? p : 1, gg);
    } else if (id == "series") {
        const long N = n > 0 ? n : 1000000;
        out["N"] = N;
        out["half_pi"] = {{"sum", eval_series(SeriesKind::HalfPi, N)},
                          {"target", M_PI / 2.0}};
        out["pi_sq_over_8"] = {{"sum", eval_series(SeriesKind::PiSqOverEight, N)},
                               {"target", M_PI * M_PI / 8.0}};
    } else if (id == "error-term") {
        const long gg = g > 0 ? g : 100;
        Rational s = error_term_lemma_sum(gg, 2, 2);
        out["g"] = gg;
        out["sum"] = to_string(s);
        out["sum_float"] = to_double(s);
        out["within_[1,1+5/g]"] = (s >= 1 && s <= Rational(1) + make_rational(5, gg));
    } else {
        throw CLI::ValidationError("--id", "unknown lemma id: " + id);
    }
    std::cout << out.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Siegel-Veech constant laboratory for strata of translation surfaces"};
    app.require_subcommand(1);

    // volume
    std::string stratum, kind = "auto";
    auto* vol = app.add_subcommand("volume", "exact or asymptotic Masur-Veech volumes");
    vol->add_option("--stratum", stratum, "signature, e.g. \"H(2)\" or \"H(1,1)^hyp\"")->required();
    vol->add_option("--kind", kind, "exact | asymptotic | auto")->default_val("auto");

    // sv
    std::string family;
    int sv_p = 1;
    long sv_g = 0, sv_partition = 0;
    bool sv_exact = false;
    auto* sv = app.add_subcommand("sv", "named Siegel-Veech constants");
    sv->add_option("--family", family,
                   "minimal-loops | gm1gm1-distinct | gm1gm1-loops-fixed | gm1gm1-loops-any | "
                   "hyp-minimal-loops | hyp-gm1gm1-distinct | hyp-gm1gm1-loops | "
                   "distinct-fixed | loop-fixed | total")
        ->required();
    sv->add_option("--p", sv_p, "multiplicity")->required();
    sv->add_option("--g", sv_g, "genus (required unless the value is exactly 0)");
    sv->add_flag("--exact", sv_exact, "exact value (hyp-* families)");
    sv->add_option("--partition", sv_partition, "genus partition g1 for p=2 exact values");
    GenericSvArgs sv_args;
    sv->add_option("--m1", sv_args.m1, "order of the first fixed zero (distinct-fixed)");
    sv->add_option("--m2", sv_args.m2, "order of the second/far zero");
    sv->add_option("--m", sv_args.m, "order of the loop zero (loop-fixed)");
    sv->add_option("--l", sv_args.l, "number of zeros of the stratum");
    sv->add_option("--mode", sv_args.mode,
                   "loop case: no_cylinder | cylinder_same_zero | cylinder_other_zero | "
                   "one_fixed_zero_total | any_multiplicity");

    // table
    long table_g = 100;
    std::string format = "csv", out_path;
    auto* tab = app.add_subcommand("table", "lookup table of large-genus constants");
    tab->add_option("--g", table_g, "genus")->default_val(100);
    tab->add_option("--format", format, "csv | json")->default_val("csv");
    tab->add_option("--out", out_path, "write to file instead of stdout");

    // lemma
    std::string lemma_id;
    long lemma_g = 0, lemma_n = 0;
    int lemma_which = 0, lemma_p = 0, lemma_variant = 0;
    auto* lem = app.add_subcommand("lemma", "combinatorial lemma oracles");
    lem->add_option("--id", lemma_id,
                    "factorial-comparison | product-binomials | ingredient | sum-constant | "
                    "partition-zeta | df-sums | cancelling | series | error-term")
        ->required();
    lem->add_option("--g", lemma_g, "genus parameter");
    lem->add_option("--n", lemma_n, "size/terms parameter");
    lem->add_option("--which", lemma_which, "sum selector for 5.6");
    lem->add_option("--p", lemma_p, "multiplicity/length parameter");
    lem->add_option("--variant", lemma_variant, "variant for 5.4");

    // siegel
    long samples = 10000;
    double radius = 30.0;
    std::uint64_t seed = 20240817ull;
    bool primitive = false;
    int threads = 0;
    auto* sg = app.add_subcommand("siegel", "Monte-Carlo check of the Siegel formula");
    sg->add_option("--samples", samples)->default_val(10000);
    sg->add_option("--radius", radius)->default_val(30.0);
    sg->add_option("--seed", seed)->default_val(20240817ull);
    sg->add_flag("--primitive", primitive, "count primitive vectors only");
    sg->add_option("--threads", threads, "worker threads (0 = hardware)");

    // selftest
    auto* self = app.add_subcommand("selftest", "run the acceptance suite");
    std::string golden;
    self->add_option("--golden", golden, "path to the table golden file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (vol->parsed()) return cmd_volume(stratum, kind);
        if (sv->parsed()) {
            const bool exact_zero = family.rfind("hyp-", 0) == 0 && sv_p >= 3;
            if (sv_g <= 0 && !exact_zero)
                throw CLI::ValidationError("--g", "genus required for nonzero values");
            if (sv_g <= 0) sv_g = 4;
            if (family == "distinct-fixed" || family == "loop-fixed" || family == "total")
                return cmd_sv_generic(family, sv_p, sv_g, sv_args);
            return cmd_sv(family, sv_p, sv_g, sv_exact, sv_partition);
        }
        if (tab->parsed()) {
            auto rows = generate_table(table_g);
            std::string text = format == "json" ? table_to_json(rows, table_g) + "\n"
                                                : table_to_csv(rows);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream f(out_path);
                f << text;
            }
            return 0;
        }
        if (lem->parsed())
            return cmd_lemma(lemma_id, lemma_g, lemma_n, lemma_which, lemma_p, lemma_variant);
        if (sg->parsed()) {
            SiegelReport r = siegel_average(samples, radius, seed, primitive, threads);
            std::cout << siegel_report_to_json(r) << "\n";
            return 0;
        }
        if (self->parsed()) {
            if (!golden.empty()) setenv("SVLAB_GOLDEN", golden.c_str(), 1);
            return print_acceptance_report(run_acceptance()) ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const VolumeUnavailableError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const NoExactFormulaError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
