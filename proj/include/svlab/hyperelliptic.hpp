#pragma once

#include "svlab/sv_engine.hpp"

#include <optional>
#include <vector>

namespace svlab {

// Exact Siegel-Veech constants on the hyperelliptic components, built from
// the exact component volumes. All multiplicity-2 "totals" sum over
// distinct configurations: unordered genus partitions with |Gamma| = 2 on
// the diagonal for the symmetric families, ordered partitions when the two
// blocks are of different kinds. There are no multiplicities >= 3.

// H^hyp(g-1,g-1), saddle connections between the two zeros
PiLaurent hyp_gm1gm1_distinct_p1(long g);
PiLaurent hyp_gm1gm1_distinct_p2_term(long g, long g1);  // partition g = g1+g2, labelled
PiLaurent hyp_gm1gm1_distinct_p2_total(long g);

// H^hyp(g-1,g-1), loops (any zero; fixed-zero constants coincide)
PiLaurent hyp_gm1gm1_loops_p1(long g);
PiLaurent hyp_gm1gm1_loops_p2_term(long g, long g1);  // partition g-1 = g1+g2
PiLaurent hyp_gm1gm1_loops_p2_total(long g);

// H^hyp(2g-2), loops
PiLaurent hyp_minimal_loops_p1_twohole(long g);
PiLaurent hyp_minimal_loops_p1_fig8_cylinder(long g);
PiLaurent hyp_minimal_loops_p1_total(long g);
PiLaurent hyp_minimal_loops_p2_term(long g, long g1);  // partition g-1 = g1+g2, ordered
PiLaurent hyp_minimal_loops_p2_total(long g);

enum class SvKind { DistinctZeros, Loops };

// Dispatcher: p=1 totals, p=2 per-partition terms
// (partition required), exact 0 for p >= 3, errors for non-hyperelliptic
// shapes or missing partitions.
SvValue sv_hyperelliptic_exact(const StratumSignature& H, SvKind kind, int p,
                               std::optional<long> partition_g1 = std::nullopt);

// Fast floating path for large sweeps; cross-validated against the exact
// path in tests. Index conventions match the exact functions.
class HyperellipticSweep {
  public:
    explicit HyperellipticSweep(long g_max);

    double gm1gm1_distinct_p1(long g) const;
    double gm1gm1_distinct_p2_total(long g) const;
    double gm1gm1_loops_p1(long g) const;      // value of c * pi^2 (pure number)
    double gm1gm1_loops_p2_total(long g) const;
    double minimal_loops_p1_total(long g) const;
    double minimal_loops_p2_total(long g) const;

    // true constants (pi factors reinstated)
    double gm1gm1_loops_p1_value(long g) const;
    double gm1gm1_loops_p2_total_value(long g) const;
    double minimal_loops_p1_total_value(long g) const;
    double minimal_loops_p2_total_value(long g) const;

  private:
    long g_max_;
    std::vector<double> dfa_;  // (2n-3)!!/(2n-2)!!
    std::vector<double> dfb_;  // (2n-2)!!/(2n-1)!!
    double pi2_;
};

// High-precision numeric evaluation (lngamma route) of the multiplicity-1
// constants, usable at genus far beyond exact-arithmetic reach.
double hyp_gm1gm1_distinct_p1_numeric(long g);
double hyp_gm1gm1_loops_p1_numeric(long g);
double hyp_minimal_loops_p1_numeric(long g);

}  // namespace svlab
