#pragma once

#include "svlab/strata.hpp"

#include <optional>
#include <string>
#include <vector>

namespace svlab {

enum class BlockKind { Slit, FigureEight, TwoHole, Cylinder };

std::string to_string(BlockKind k);

// One construction block of the gluing datum. For Slit/FigureEight the pair
// (first, second) is the partition a = a' + a'' of the distinguished zero;
// for TwoHole it is the orders (b', b'') of the two distinguished zeros
// (first on the left boundary, second on the right). Cylinders carry no
// data. zero_labels are the indices of the parent-stratum zeros assigned to
// the substratum (labelled configurations).
struct ConstructionBlock {
    BlockKind kind = BlockKind::Cylinder;
    int first = 0;
    int second = 0;
    StratumSignature substratum;  // unused for Cylinder
    std::vector<int> zero_labels;
    std::optional<ComponentId> component_choice;

    int a() const { return first + second; }
    bool is_cylinder() const { return kind == BlockKind::Cylinder; }

    static ConstructionBlock slit(int a1, int a2, StratumSignature sub,
                                  std::vector<int> labels = {});
    static ConstructionBlock figure_eight(int a1, int a2, StratumSignature sub,
                                          std::vector<int> labels = {});
    static ConstructionBlock two_hole(int b1, int b2, StratumSignature sub,
                                      std::vector<int> labels = {});
    static ConstructionBlock cylinder();
};

// A new zero produced by the gluing: the set of boundary points merged into
// it and the resulting cone order.
struct LoopZeroClass {
    int order = 0;
    std::vector<std::pair<int, int>> points;  // (block index, side: 0=L, 1=R)
    int parent_zero = -1;                     // index into the parent signature
};

struct SymmetryData {
    int gamma_order = 1;        // |Gamma|, cyclic translational symmetries
    int gamma_minus_order = 1;  // |Gamma_-| in {1, 2}
};

struct Configuration {
    enum class Kind { DistinctZeros, Loop };

    Kind kind = Kind::DistinctZeros;
    StratumSignature parent;
    std::vector<ConstructionBlock> blocks;  // cyclic order, canonical rotation
    bool labelled = true;

    // DistinctZeros: the two fixed zeros (parent indices) and their orders.
    int fixed_zero_1 = -1;
    int fixed_zero_2 = -1;
    int m1 = 0;
    int m2 = 0;

    // Loop: derived zero classes, the anchor (index into classes whose
    // parent_zero is the fixed zero) and its order m1.
    std::vector<LoopZeroClass> zero_classes;
    int anchor_class = -1;

    int p() const;  // non-cylinder blocks
    int q() const;  // cylinders

    // Orders of the zeros the homologous saddle connections pass through:
    // {m1, m2} for distinct zeros, the class orders (fixed zero first) for
    // loops.
    std::vector<int> new_zero_orders() const;
};

// Walks the boundary identification chain and derives the new zeros. Angle
// bookkeeping in units of 2*pi: b + 3/2 per two-hole side, 1/2 per cylinder
// side, a + 2 for a figure-eight block (whose two sides merge). Order of a
// class = total - 1. Throws if the blocks cannot close up (all-figure-eight
// cycles, adjacent cylinders, non-integral orders).
std::vector<LoopZeroClass> derive_loop_zero_classes(const std::vector<ConstructionBlock>& blocks);

SymmetryData symmetry(const Configuration& c);

bool is_dominant(const Configuration& c);

// Identity checks from the construction: dimension d = sum d_i + 2q + 2 and
// the total new-zero order. Returns false with a reason on violation.
bool validate_configuration(const Configuration& c, std::string* reason = nullptr);

// All labelled multiplicity-p configurations of saddle connections between
// the distinct fixed zeros i1, i2. Empty iff p > min(m1, m2) + 1.
std::vector<Configuration> enumerate_distinct_zero_configs(const StratumSignature& H, int i1,
                                                           int i2, int p);

// All labelled multiplicity-p loop configurations at the fixed zero
// m_index. When `component` is the hyperelliptic component of H(2g-2) or
// H(g-1,g-1), only the block structures realizable there survive (none for
// p >= 3).
std::vector<Configuration> enumerate_loop_configs(const StratumSignature& H, int m_index, int p,
                                                  std::optional<ComponentId> component = {});

// Direct constructors for the configurations carrying the leading terms.
Configuration dominant_distinct_config(const StratumSignature& H, int i1, int i2, int p);
Configuration loop_config_no_cylinder(const StratumSignature& H, int z, int b1, int b2);
Configuration loop_config_cylinder_same_zero(const StratumSignature& H, int z, int a1, int a2);
Configuration loop_config_cylinder_other_zero(const StratumSignature& H, int z1, int z2);
// Principal-stratum shape: p two-hole blocks alternating with p cylinders on the
// principal stratum; new_zeros lists the 2p parent zeros in chain order.
Configuration principal_loop_dominant_config(const StratumSignature& H, int p,
                                             const std::vector<int>& new_zeros);

std::string configuration_to_json(const Configuration& c);

}  // namespace svlab
