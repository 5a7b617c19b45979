#include "svlab/acceptance.hpp"

#include "svlab/asymptotics.hpp"
#include "svlab/configurations.hpp"
#include "svlab/hyperelliptic.hpp"
#include "svlab/lemma_lab.hpp"
#include "svlab/siegel_mc.hpp"
#include "svlab/sv_engine.hpp"
#include "svlab/table.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <sstream>

namespace svlab {

namespace {

using Clock = std::chrono::steady_clock;

struct Run {
    CriterionResult res;
    Clock::time_point t0 = Clock::now();
    std::ostringstream msg;

    Run(int id, std::string name) {
        res.id = id;
        res.name = std::move(name);
        res.pass = true;
    }
    void require(bool ok, const std::string& what) {
        if (!ok) {
            res.pass = false;
            if (!msg.str().empty()) msg << "; ";
            msg << "FAILED: " << what;
        }
    }
    CriterionResult finish(double budget_seconds = 0.0) {
        res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (budget_seconds > 0.0 && res.seconds >= budget_seconds) {
            res.pass = false;
            msg << "; FAILED: runtime " << res.seconds << "s over budget " << budget_seconds << "s";
        }
        res.details = msg.str();
        return res;
    }
};

double rel_err(double a, double b) { return std::abs(a / b - 1.0); }

CriterionResult criterion_series() {
    Run run(1, "series identities (pi/2 and pi^2/8 at N=1e6)");
    const long N = 1000000;
    const double half_pi = M_PI / 2.0;
    const double pi2_8 = M_PI * M_PI / 8.0;
    const double s1 = eval_series(SeriesKind::HalfPi, N);
    const double s2 = eval_series(SeriesKind::PiSqOverEight, N);
    run.msg << "|S1-pi/2|=" << std::abs(s1 - half_pi) << ", |S2-pi^2/8|=" << std::abs(s2 - pi2_8);
    run.require(std::abs(s1 - half_pi) <= 1e-3, "half-pi series beyond 1e-3");
    run.require(std::abs(s2 - pi2_8) <= 1e-3, "pi^2/8 series beyond 1e-3");
    return run.finish(30.0);
}

CriterionResult criterion_partition_zeta() {
    Run run(2, "partition zeta sum -> 2 zeta(3/2)");
    const double target = 2.0 * euler_maclaurin_zeta(1.5);
    double prev = -1.0;
    bool decreasing = true;
    double last = 0.0;
    for (long g : {100L, 1000L, 10000L}) {
        double err = std::abs(eval_partition_zeta_sum(g) - target);
        if (prev >= 0 && err >= prev) decreasing = false;
        prev = err;
        last = err;
        run.msg << "g=" << g << " err=" << err << " ";
    }
    run.require(decreasing, "errors not decreasing over g in {1e2,1e3,1e4}");
    run.require(last <= 0.35, "error at g=1e4 beyond 0.35");
    return run.finish(10.0);
}

CriterionResult criterion_double_factorial_sums() {
    Run run(3, "double-factorial partition sums at g=1e4");
    for (int which = 1; which <= 3; ++which) {
        const double limit = double_factorial_sum_limit(which);
        const double v = eval_double_factorial_sums(10000, which);
        run.msg << "sum" << which << " err=" << std::abs(v - limit) << " ";
        run.require(std::abs(v - limit) <= 0.2,
                    "sum " + std::to_string(which) + " beyond 0.2 of its limit");
    }
    return run.finish(60.0);
}

CriterionResult criterion_inequality_sweeps() {
    Run run(4, "inequality lemma sweeps, exact arithmetic");
    auto fut_cmp = std::async(std::launch::async, [] { return sweep_lemma_factorial_comparison(4, 8, 3); });
    auto fut_ing = std::async(std::launch::async, [] { return sweep_lemma_ingredient(5, 12, 3); });
    // the binomial-product lemma is swept at its stated value range, plus a
    // thin slice at values up to 8
    SweepReport bin_narrow = sweep_lemma_product_binomials(4, 6, 3);
    SweepReport bin_wide = sweep_lemma_product_binomials(2, 8, 3);
    SweepReport cmp = fut_cmp.get();
    SweepReport ing = fut_ing.get();
    run.msg << "comparison: " << cmp.cases << " cases, binomial: " << (bin_narrow.cases + bin_wide.cases)
            << " cases, ingredient: " << ing.cases << " cases";
    run.require(cmp.cases > 0 && cmp.violations == 0, "factorial-comparison violations");
    run.require(bin_narrow.cases > 0 && bin_narrow.violations == 0, "product-binomial violations");
    run.require(bin_wide.violations == 0, "product-binomial violations (wide slice)");
    run.require(ing.cases > 0 && ing.violations == 0, "ingredient-lemma violations");
    return run.finish(60.0);
}

CriterionResult criterion_hyperelliptic_asymptotics() {
    Run run(5, "hyperelliptic exact vs asymptotic constants");
    // multiplicity 1, exact route, g in 10..200
    double worst_p1 = 0.0;
    for (long g = 10; g <= 200; ++g) {
        const double g2 = static_cast<double>(g) * g;
        const double d1 = hyp_gm1gm1_distinct_p1(g).to_double() / ((2.0 / M_PI) * g2);
        const double l1 = hyp_gm1gm1_loops_p1(g).to_double() / ((2.0 / (M_PI * M_PI)) * g2);
        const double m1 =
            hyp_minimal_loops_p1_total(g).to_double() / ((2.0 / M_PI + 2.0 / (M_PI * M_PI)) * g2);
        for (double r : {d1, l1, m1}) {
            worst_p1 = std::max(worst_p1, std::abs(r - 1.0) * g);
            if (std::abs(r - 1.0) > 6.0 / g) {
                run.require(false, "p=1 ratio beyond 6/g at g=" + std::to_string(g));
                break;
            }
        }
        if (!run.res.pass) break;
    }
    run.msg << "max |ratio-1|*g (p=1) = " << worst_p1;

    // multiplicity 2 partition sums, floating sweep path, g in 50..2000
    HyperellipticSweep sweep(2001);
    double worst_p2 = 0.0;
    for (long g = 50; g <= 2000 && run.res.pass; ++g) {
        const double g2 = static_cast<double>(g) * g;
        const double tol = 3.0 * std::pow(static_cast<double>(g), -0.25);
        const double d2 = sweep.gm1gm1_distinct_p2_total(g) / ((1.0 - 2.0 / M_PI) * g2);
        const double l2 =
            sweep.gm1gm1_loops_p2_total_value(g) / ((0.5 - 2.0 / (M_PI * M_PI)) * g2);
        const double m2 = sweep.minimal_loops_p2_total_value(g) /
                          ((1.5 - 2.0 / M_PI - 2.0 / (M_PI * M_PI)) * g2);
        for (double r : {d2, l2, m2}) {
            worst_p2 = std::max(worst_p2, std::abs(r - 1.0) * std::pow(double(g), 0.25));
            if (std::abs(r - 1.0) > tol) {
                run.require(false, "p=2 ratio beyond 3*g^{-1/4} at g=" + std::to_string(g));
                break;
            }
        }
    }
    run.msg << ", max |ratio-1|*g^{1/4} (p=2) = " << worst_p2;

    // the floating path must agree with the exact path where both run
    for (long g : {50L, 123L, 300L}) {
        const double exact = hyp_gm1gm1_distinct_p2_total(g).to_double();
        run.require(rel_err(sweep.gm1gm1_distinct_p2_total(g), exact) < 1e-9,
                    "floating/exact p=2 mismatch at g=" + std::to_string(g));
    }
    return run.finish(300.0);
}

CriterionResult criterion_homology_total() {
    Run run(6, "homology-total consistency on H^hyp(g-1,g-1)");
    HyperellipticSweep sweep(2001);
    double worst = 0.0;
    for (long g = 50; g <= 2000 && run.res.pass; ++g) {
        const double g2 = static_cast<double>(g) * g;
        const double tol = 3.0 * std::pow(static_cast<double>(g), -0.25);
        const double v =
            (sweep.gm1gm1_distinct_p1(g) + 2.0 * sweep.gm1gm1_distinct_p2_total(g)) / g2;
        worst = std::max(worst, std::abs(v - 1.0) * std::pow(double(g), 0.25));
        run.require(std::abs(v - 1.0) <= tol,
                    "(p1 + 2 p2)/g^2 beyond 3*g^{-1/4} at g=" + std::to_string(g));
    }
    run.msg << "max |ratio-1|*g^{1/4} = " << worst;
    // the sharper content of the homology count: p1 + p2 equals g^2 exactly
    for (long g : {3L, 4L, 5L, 6L, 7L, 8L, 9L, 10L, 17L, 30L, 64L, 101L}) {
        PiLaurent total = hyp_gm1gm1_distinct_p1(g) + hyp_gm1gm1_distinct_p2_total(g);
        run.require(total == PiLaurent(Rational(g * g)),
                    "exact homology identity fails at g=" + std::to_string(g));
    }
    run.msg << "; exact p1+p2=g^2 verified on 12 genera";
    return run.finish();
}

CriterionResult criterion_engine_vs_closed_forms() {
    Run run(7, "gluing engine vs closed forms at g=1e6");
    const long g = 1000000;
    VolumeProvider vol = mixed_volume_provider();

    // distinct zeros on H(m1, m2, 2g-2-m1-m2)
    const int m1 = 3, m2 = 4;
    StratumSignature H({m1, m2, static_cast<int>(2 * g - 2 - m1 - m2)});
    const long l = H.zero_count();
    for (int p = 1; p <= 3; ++p) {
        Configuration c = dominant_distinct_config(H, 0, 1, p);
        SvValue engine = sv_distinct_labelled(c, vol);
        AsymptoticValue closed = asym_distinct_fixed(m1, m2, p, g, l);
        const double re = rel_err(engine.value.to_double(), closed.value());
        run.msg << "distinct p=" << p << " rel=" << re << " ";
        run.require(re <= 1e-4, "distinct p=" + std::to_string(p) + " beyond 1e-4");
    }

    // loops on H(m, 2g-2-m): the three multiplicity-1 cases and their total
    const int m = 6;
    StratumSignature HL({m, static_cast<int>(2 * g - 2 - m)});
    const long ll = HL.zero_count();
    double no_cyl = 0.0, cyl_same = 0.0, cyl_other = 0.0;
    for (int b1 = 0; 2 * b1 <= m - 2; ++b1)
        no_cyl += sv_loop_labelled(loop_config_no_cylinder(HL, 0, b1, m - 2 - b1), vol)
                      .value.to_double();
    for (int a1 = 0; 2 * a1 <= m - 2; ++a1)
        cyl_same += sv_loop_labelled(loop_config_cylinder_same_zero(HL, 0, a1, m - 2 - a1), vol)
                        .value.to_double();
    cyl_other = sv_loop_labelled(loop_config_cylinder_other_zero(HL, 0, 1), vol).value.to_double();

    const double c_no = asym_loop(m, 1, LoopMode::NoCylinder, g, ll).value();
    const double c_same = asym_loop(m, 1, LoopMode::CylinderSameZero, g, ll).value();
    const double c_other = asym_loop(m, 1, LoopMode::CylinderOtherZero, g, ll,
                                     static_cast<int>(2 * g - 2 - m))
                               .value();
    const double c_total = asym_loop(m, 1, LoopMode::OneFixedZeroTotal, g, ll).value();
    run.msg << "| loops rel: " << rel_err(no_cyl, c_no) << " " << rel_err(cyl_same, c_same) << " "
            << rel_err(cyl_other, c_other) << " "
            << rel_err(no_cyl + cyl_same + cyl_other, c_total);
    run.require(rel_err(no_cyl, c_no) <= 1e-4, "no-cylinder case beyond 1e-4");
    run.require(rel_err(cyl_same, c_same) <= 1e-4, "cylinder-same case beyond 1e-4");
    run.require(rel_err(cyl_other, c_other) <= 1e-4, "cylinder-other case beyond 1e-4");
    run.require(rel_err(no_cyl + cyl_same + cyl_other, c_total) <= 1e-4,
                "multiplicity-1 loop total beyond 1e-4");
    return run.finish();
}

CriterionResult criterion_table_golden(const std::string& golden_path) {
    Run run(8, "lookup-table regeneration against the golden file");
    std::string csv = table_to_csv(generate_table(100));
    std::ifstream in(golden_path);
    if (!in) {
        run.require(false, "golden file missing: " + golden_path);
        return run.finish();
    }
    std::stringstream buf;
    buf << in.rdbuf();
    run.require(buf.str() == csv, "table output differs from the golden file");
    run.msg << "rows=" << generate_table(100).size();
    return run.finish();
}

CriterionResult criterion_siegel() {
    Run run(9, "Siegel formula Monte Carlo (1e4 samples, L=30)");
    SiegelReport r = siegel_average(10000, 30.0, 20240817ull);
    run.msg << "mean/target=" << r.mean_ratio << ", z=" << r.z_score;
    run.require(std::abs(r.mean_ratio - 1.0) <= 0.02, "mean beyond 2% of pi L^2");
    run.require(std::abs(r.z_score) <= 3.0, "|z| > 3");
    return run.finish(120.0);
}

CriterionResult criterion_zero_cases() {
    Run run(10, "exact-zero cases");
    // beyond min(m1,m2)+1
    AsymptoticValue a = asym_distinct_fixed(2, 5, 4, 40, 5);
    run.require(a.coefficient.is_zero() && a.error == ErrorClass::Exact,
                "multiplicity beyond min+2 not exactly zero");
    run.require(enumerate_distinct_zero_configs(StratumSignature({2, 5, 1}), 0, 1, 4).empty(),
                "configurations exist beyond min+1");

    // p >= 3 on all three hyperelliptic families
    StratumSignature minimal({18});   // g = 10
    StratumSignature two({9, 9});     // g = 10
    run.require(sv_hyperelliptic_exact(two, SvKind::DistinctZeros, 3).value.is_zero(),
                "hyp distinct p=3 nonzero");
    run.require(sv_hyperelliptic_exact(two, SvKind::Loops, 3).value.is_zero(),
                "hyp loops p=3 nonzero");
    run.require(sv_hyperelliptic_exact(minimal, SvKind::Loops, 3).value.is_zero(),
                "hyp minimal loops p=3 nonzero");
    run.require(enumerate_loop_configs(two, 0, 3, ComponentId::Hyperelliptic).empty(),
                "hyp loop configurations exist at p=3");

    // p outside [n/2, M/2]
    AsymptoticValue low = asym_loop_all_zeros_fixed({2, 2, 2, 2, 2, 2}, 2, 50, 8);  // p < n/2
    AsymptoticValue high = asym_loop_all_zeros_fixed({2, 2}, 3, 50, 8);             // p > M/2
    run.require(low.coefficient.is_zero() && low.error == ErrorClass::Exact,
                "p < n/2 not exactly zero");
    run.require(high.coefficient.is_zero() && high.error == ErrorClass::Exact,
                "p > M/2 not exactly zero");
    return run.finish();
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
    std::string golden = "tests/golden/table_g100.csv";
    if (const char* env = std::getenv("SVLAB_GOLDEN")) golden = env;
    std::vector<CriterionResult> results;
    results.push_back(criterion_series());
    results.push_back(criterion_partition_zeta());
    results.push_back(criterion_double_factorial_sums());
    results.push_back(criterion_inequality_sweeps());
    results.push_back(criterion_hyperelliptic_asymptotics());
    results.push_back(criterion_homology_total());
    results.push_back(criterion_engine_vs_closed_forms());
    results.push_back(criterion_table_golden(golden));
    results.push_back(criterion_siegel());
    results.push_back(criterion_zero_cases());
    return results;
}

bool print_acceptance_report(const std::vector<CriterionResult>& results) {
    bool all = true;
    for (const auto& r : results) {
        std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.details.empty() ? "" : " -- ",
                    r.details.c_str());
        all = all && r.pass;
    }
    std::printf("%s: %zu/%zu criteria passed\n", all ? "OK" : "FAILURE",
                static_cast<std::size_t>(std::count_if(results.begin(), results.end(),
                                                       [](const auto& r) { return r.pass; })),
                results.size());
    return all;
}

}  // namespace svlab
