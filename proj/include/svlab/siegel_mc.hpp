#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace svlab {

// Deterministic uniform generator: the raw mt19937_64 output sequence is
// fully specified by the standard, and the mapping to [0,1) uses only the
// top 53 bits, so the sample stream is identical across platforms.
class UniformRng {
  public:
    explicit UniformRng(std::uint64_t seed) : eng_(seed) {}
    double next() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double next_open() { return 1.0 - next(); }
    std::uint64_t next_u64() { return eng_(); }

  private:
    std::mt19937_64 eng_;
};

// A unimodular planar lattice given by a point tau of the modular
// fundamental domain |Re tau| <= 1/2, |tau| >= 1; the basis is
// (1/sqrt(tau_y))(1,0) and (1/sqrt(tau_y))(tau_x, tau_y).
struct LatticeSample {
    double tau_x = 0.0;
    double tau_y = 1.0;

    double b1x() const;
    double b1y() const { return 0.0; }
    double b2x() const;
    double b2y() const;
    bool in_fundamental_domain() const;
    double basis_determinant() const;
};

// Hyperbolic-measure sampling (density 1/tau_y^2 on the fundamental
// domain) by rejection from the product measure on the vertical strip.
LatticeSample sample_lattice(UniformRng& rng);

// Number of nonzero (or primitive) lattice vectors of norm <= L. Exact
// integer count; enumeration runs per-row over a provably sufficient
// coefficient range after Lagrange reduction.
long count_vectors(const LatticeSample& s, double L, bool primitive_only = false);

// Brute-force oracle: full coefficient box |m|,|n| <= ceil(2L/(sqrt(3)|b1|))
// on the reduced basis (the naive bound L/|b1| misses skew lattices).
long count_vectors_bruteforce(const LatticeSample& s, double L, bool primitive_only = false);

// Counts for an explicitly given basis (used by rotation-invariance tests).
long count_vectors_basis(double b1x, double b1y, double b2x, double b2y, double L,
                         bool primitive_only = false);

struct SiegelReport {
    long samples = 0;
    double radius = 0.0;
    std::uint64_t seed = 0;
    bool primitive = false;
    double estimate = 0.0;   // mean vector count
    double target = 0.0;     // pi L^2 (the ball area)
    double std_error = 0.0;
    double z_score = 0.0;
    double mean_ratio = 0.0;  // estimate / target
    double wall_seconds = 0.0;
};

// Averages the vector count over `samples` lattices and compares with the
// Siegel prediction pi L^2. Work is split over a fixed number of
// substreams derived from the seed, so results do not depend on thread
// count.
SiegelReport siegel_average(long samples, double L, std::uint64_t seed,
                            bool primitive_only = false, int threads = 0);

std::string siegel_report_to_json(const SiegelReport& r);

}  // namespace svlab
