#include "svlab/configurations.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace svlab {

std::string to_string(BlockKind k) {
    switch (k) {
        case BlockKind::Slit: return "slit";
        case BlockKind::FigureEight: return "figure-eight";
        case BlockKind::TwoHole: return "two-hole";
        case BlockKind::Cylinder: return "cylinder";
    }
    return "?";
}

// Substratum order convention: the distinguished zero(s) come first —
// orders[0] = a for Slit/FigureEight, orders[0..1] = (b', b'') for TwoHole —
// followed by the assigned zeros.
ConstructionBlock ConstructionBlock::slit(int a1, int a2, StratumSignature sub,
                                          std::vector<int> labels) {
    return ConstructionBlock{BlockKind::Slit, a1, a2, std::move(sub), std::move(labels), {}};
}
ConstructionBlock ConstructionBlock::figure_eight(int a1, int a2, StratumSignature sub,
                                                  std::vector<int> labels) {
    return ConstructionBlock{BlockKind::FigureEight, a1, a2, std::move(sub), std::move(labels), {}};
}
ConstructionBlock ConstructionBlock::two_hole(int b1, int b2, StratumSignature sub,
                                              std::vector<int> labels) {
    return ConstructionBlock{BlockKind::TwoHole, b1, b2, std::move(sub), std::move(labels), {}};
}
ConstructionBlock ConstructionBlock::cylinder() { return ConstructionBlock{}; }

int Configuration::p() const {
    return static_cast<int>(
        std::count_if(blocks.begin(), blocks.end(), [](const auto& b) { return !b.is_cylinder(); }));
}
int Configuration::q() const { return static_cast<int>(blocks.size()) - p(); }

std::vector<int> Configuration::new_zero_orders() const {
    if (kind == Kind::DistinctZeros) return {m1, m2};
    std::vector<int> out;
    out.push_back(zero_classes.at(anchor_class).order);
    for (std::size_t i = 0; i < zero_classes.size(); ++i)
        if (static_cast<int>(i) != anchor_class) out.push_back(zero_classes[i].order);
    return out;
}

namespace {

int find_root(std::vector<int>& uf, int x) {
    while (uf[x] != x) {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    return x;
}
void unite(std::vector<int>& uf, int a, int b) { uf[find_root(uf, a)] = find_root(uf, b); }

std::vector<int> rest_orders(const ConstructionBlock& b) {
    const auto& o = b.substratum.orders();
    std::size_t skip = b.kind == BlockKind::TwoHole ? 2 : 1;
    std::vector<int> rest(o.begin() + static_cast<long>(std::min(skip, o.size())), o.end());
    std::sort(rest.begin(), rest.end());
    return rest;
}

// Comparable/structural key of a block; `swapped` reads the partition
// backwards (prime <-> double prime).
std::string block_key(const ConstructionBlock& b, bool labelled, bool swapped) {
    std::ostringstream out;
    out << static_cast<int>(b.kind) << ":";
    if (!b.is_cylinder()) {
        int f = swapped ? b.second : b.first;
        int s = swapped ? b.first : b.second;
        out << f << "," << s << ";";
        for (int m : rest_orders(b)) out << m << ",";
        out << ";";
        if (labelled) {
            auto l = b.zero_labels;
            std::sort(l.begin(), l.end());
            for (int x : l) out << x << ",";
        }
        if (b.component_choice) out << "^" << to_string(*b.component_choice);
    }
    return out.str();
}

// parent label per point, -1 when unassigned
std::vector<int> point_parent_labels(const Configuration& c) {
    std::vector<int> pl(2 * c.blocks.size(), -1);
    for (const auto& z : c.zero_classes)
        for (auto [i, side] : z.points) pl[2 * i + side] = z.parent_zero;
    return pl;
}

}  // namespace

std::vector<LoopZeroClass> derive_loop_zero_classes(const std::vector<ConstructionBlock>& blocks) {
    const int L = static_cast<int>(blocks.size());
    if (L == 0) throw std::invalid_argument("empty block list");
    bool any_separator = false;
    for (int i = 0; i < L; ++i) {
        if (blocks[i].kind == BlockKind::Slit)
            throw std::invalid_argument("slit blocks cannot appear in loop configurations");
        if (blocks[i].is_cylinder()) {
            if (L == 1) throw std::invalid_argument("a lone cylinder is not a configuration");
            if (blocks[(i + 1) % L].is_cylinder())
                throw std::invalid_argument("adjacent cylinders are not admissible");
        }
        if (blocks[i].kind == BlockKind::TwoHole || blocks[i].is_cylinder()) any_separator = true;
    }
    if (!any_separator)
        throw std::invalid_argument("figure-eight-only cycles produce no new zero");

    // union-find over points 2*i + side (side 0 = L, 1 = R)
    std::vector<int> uf(2 * L);
    std::iota(uf.begin(), uf.end(), 0);
    for (int i = 0; i < L; ++i) {
        unite(uf, 2 * i + 1, 2 * ((i + 1) % L));  // interface (i,R)-(i+1,L)
        if (blocks[i].kind == BlockKind::FigureEight) unite(uf, 2 * i, 2 * i + 1);
    }

    // angle contributions in units of pi (doubled units of 2*pi)
    std::map<int, long> total;
    std::map<int, std::vector<std::pair<int, int>>> members;
    for (int i = 0; i < L; ++i) {
        for (int side = 0; side < 2; ++side) {
            int root = find_root(uf, 2 * i + side);
            members[root].push_back({i, side});
            switch (blocks[i].kind) {
                case BlockKind::TwoHole:
                    total[root] += 2L * (side == 0 ? blocks[i].first : blocks[i].second) + 3;
                    break;
                case BlockKind::Cylinder:
                    total[root] += 1;
                    break;
                case BlockKind::FigureEight:
                    if (side == 0) total[root] += 2L * blocks[i].a() + 4;
                    break;
                default:
                    break;
            }
        }
    }

    std::vector<LoopZeroClass> classes;
    for (auto& [root, t] : total) {
        if (t % 2 != 0 || t < 2)
            throw std::invalid_argument("gluing chain produced a non-integral zero order");
        LoopZeroClass z;
        z.order = static_cast<int>(t / 2 - 1);
        z.points = members[root];
        std::sort(z.points.begin(), z.points.end());
        classes.push_back(std::move(z));
    }
    std::sort(classes.begin(), classes.end(),
              [](const LoopZeroClass& a, const LoopZeroClass& b) { return a.points < b.points; });
    return classes;
}

SymmetryData symmetry(const Configuration& c) {
    const int L = static_cast<int>(c.blocks.size());
    SymmetryData sym;
    std::vector<std::string> key(L), key_sw(L);
    for (int i = 0; i < L; ++i) {
        key[i] = block_key(c.blocks[i], c.labelled, false);
        key_sw[i] = block_key(c.blocks[i], c.labelled, true);
    }
    const bool loop = c.kind == Configuration::Kind::Loop;
    std::vector<int> pl = loop ? point_parent_labels(c) : std::vector<int>{};

    sym.gamma_order = 0;
    for (int s = 0; s < L; ++s) {
        bool ok = true;
        for (int i = 0; i < L && ok; ++i) ok = key[(i + s) % L] == key[i];
        if (ok && loop && c.labelled) {
            // fixed zeros are anchored: the shift must fix every new zero
            for (int i = 0; i < L && ok; ++i)
                for (int side = 0; side < 2 && ok; ++side)
                    ok = pl[2 * ((i + s) % L) + side] == pl[2 * i + side];
        }
        if (ok) ++sym.gamma_order;
    }

    // Distinct zeros, labelled: the reversal exchanges the two fixed zeros,
    // which are distinguishable, so there is no reflection symmetry.
    if (c.kind == Configuration::Kind::DistinctZeros && (c.labelled || c.m1 != c.m2)) {
        sym.gamma_minus_order = 1;
        return sym;
    }
    sym.gamma_minus_order = 1;
    for (int s = 0; s < L && sym.gamma_minus_order == 1; ++s) {
        bool ok = true;
        for (int i = 0; i < L && ok; ++i) ok = key_sw[((s - i) % L + L) % L] == key[i];
        if (ok && loop && c.labelled) {
            for (int i = 0; i < L && ok; ++i)
                for (int side = 0; side < 2 && ok; ++side)
                    ok = pl[2 * (((s - i) % L + L) % L) + (1 - side)] == pl[2 * i + side];
        }
        if (ok) sym.gamma_minus_order = 2;
    }
    return sym;
}

bool is_dominant(const Configuration& c) {
    int heavy = 0;
    for (const auto& b : c.blocks) {
        if (b.is_cylinder()) continue;
        const auto& o = b.substratum.orders();
        bool small = (o == std::vector<int>{0}) ||
                     (c.kind == Configuration::Kind::Loop && o == std::vector<int>{0, 0});
        if (!small) ++heavy;
    }
    return heavy <= 1;
}

bool validate_configuration(const Configuration& c, std::string* reason) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    long sum_di = 0;
    for (const auto& b : c.blocks)
        if (!b.is_cylinder()) sum_di += b.substratum.dimension();
    if (sum_di + 2 * c.q() + 2 != c.parent.dimension())
        return fail("dimension identity d = sum d_i + 2q + 2 violated");

    if (c.kind == Configuration::Kind::DistinctZeros) {
        long s1 = 0, s2 = 0;
        for (const auto& b : c.blocks) {
            if (b.kind != BlockKind::Slit) return fail("distinct-zero configs use slit blocks only");
            s1 += b.first;
            s2 += b.second;
        }
        if (s1 + c.p() - 1 != c.m1 || s2 + c.p() - 1 != c.m2)
            return fail("m1/m2 composition identity violated");
    } else {
        long total = 0, budget = 0;
        for (const auto& z : c.zero_classes) total += z.order;
        for (const auto& b : c.blocks) {
            if (b.kind == BlockKind::Slit) return fail("slit block in loop configuration");
            if (!b.is_cylinder()) budget += b.first + b.second;
        }
        if (total != budget + 2 * c.p()) return fail("total new-zero order identity violated");
        if (c.anchor_class < 0 || c.anchor_class >= static_cast<int>(c.zero_classes.size()))
            return fail("missing anchor class");
    }

    // every parent zero is used exactly once
    std::vector<int> used(c.parent.zero_count(), 0);
    for (const auto& b : c.blocks)
        for (int lab : b.zero_labels) {
            if (lab < 0 || lab >= c.parent.zero_count()) return fail("bad zero label");
            ++used[lab];
        }
    if (c.kind == Configuration::Kind::DistinctZeros) {
        ++used[c.fixed_zero_1];
        ++used[c.fixed_zero_2];
    } else {
        for (const auto& z : c.zero_classes) {
            if (z.parent_zero < 0) return fail("unassigned new zero");
            ++used[z.parent_zero];
            if (c.parent.order(z.parent_zero) != z.order)
                return fail("new zero order does not match its parent zero");
        }
    }
    for (int u : used)
        if (u != 1) return fail("parent zeros not partitioned exactly once");
    return true;
}

namespace {

void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& emit) {
    if (parts == 1) {
        cur.push_back(total);
        emit(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        cur.push_back(v);
        compositions(total - v, parts - 1, cur, emit);
        cur.pop_back();
    }
}

std::string config_canonical_key(const Configuration& c, int rotation) {
    const int L = static_cast<int>(c.blocks.size());
    std::ostringstream out;
    std::vector<int> pl =
        c.kind == Configuration::Kind::Loop ? point_parent_labels(c) : std::vector<int>{};
    for (int i = 0; i < L; ++i) {
        int j = (i + rotation) % L;
        out << block_key(c.blocks[j], c.labelled, false);
        if (c.kind == Configuration::Kind::Loop) out << "|" << pl[2 * j] << "," << pl[2 * j + 1];
        out << "#";
    }
    if (c.kind == Configuration::Kind::DistinctZeros)
        out << "@" << c.fixed_zero_1 << "," << c.fixed_zero_2;
    return out.str();
}

Configuration rotate_configuration(const Configuration& c, int rotation) {
    const int L = static_cast<int>(c.blocks.size());
    if (rotation == 0) return c;
    Configuration r = c;
    for (int i = 0; i < L; ++i) r.blocks[i] = c.blocks[(i + rotation) % L];
    for (auto& z : r.zero_classes) {
        for (auto& pt : z.points) pt.first = ((pt.first - rotation) % L + L) % L;
        std::sort(z.points.begin(), z.points.end());
    }
    return r;
}

Configuration canonicalize(Configuration c) {
    const int L = static_cast<int>(c.blocks.size());
    int best = 0;
    std::string best_key = config_canonical_key(c, 0);
    for (int s = 1; s < L; ++s) {
        std::string k = config_canonical_key(c, s);
        if (k < best_key) {
            best_key = k;
            best = s;
        }
    }
    Configuration r = rotate_configuration(c, best);
    if (r.kind == Configuration::Kind::Loop) {
        // keep classes ordered by their point sets and re-locate the anchor
        int anchor_parent = c.zero_classes.at(c.anchor_class).parent_zero;
        std::sort(r.zero_classes.begin(), r.zero_classes.end(),
                  [](const LoopZeroClass& a, const LoopZeroClass& b) { return a.points < b.points; });
        for (std::size_t i = 0; i < r.zero_classes.size(); ++i)
            if (r.zero_classes[i].parent_zero == anchor_parent) r.anchor_class = static_cast<int>(i);
    }
    return r;
}

ConstructionBlock swapped_block(const ConstructionBlock& b) {
    if (b.is_cylinder()) return b;
    ConstructionBlock r = b;
    std::swap(r.first, r.second);
    if (b.kind == BlockKind::TwoHole) {
        // keep the substratum convention orders[0..1] = (first, second)
        std::vector<int> orders = b.substratum.orders();
        std::swap(orders[0], orders[1]);
        r.substratum = StratumSignature(std::move(orders));
    }
    return r;
}

// The gluing chain read backwards with primes and double primes exchanged:
// the same configuration, written in the mirrored order.
Configuration reflect_configuration(const Configuration& c) {
    const int L = static_cast<int>(c.blocks.size());
    Configuration r = c;
    for (int i = 0; i < L; ++i) r.blocks[i] = swapped_block(c.blocks[(L - i) % L]);
    for (auto& z : r.zero_classes) {
        for (auto& pt : z.points) {
            pt.first = (L - pt.first) % L;
            pt.second = 1 - pt.second;
        }
        std::sort(z.points.begin(), z.points.end());
    }
    return r;
}

// Loop configurations are dihedral classes: dedupe over rotations and the
// reflection. Distinct-zero configurations stay cyclic (the reflection
// exchanges the two labelled fixed zeros).
std::string dihedral_canonical_key(const Configuration& c) {
    Configuration a = canonicalize(c);
    std::string ka = config_canonical_key(a, 0);
    if (c.kind != Configuration::Kind::Loop) return ka;
    Configuration b = canonicalize(reflect_configuration(c));
    std::string kb = config_canonical_key(b, 0);
    return std::min(ka, kb);
}

StratumSignature make_substratum(const std::vector<int>& distinguished,
                                 const std::vector<int>& assigned_orders) {
    std::vector<int> orders = distinguished;
    std::vector<int> rest = assigned_orders;
    std::sort(rest.begin(), rest.end());
    orders.insert(orders.end(), rest.begin(), rest.end());
    return StratumSignature(std::move(orders));
}

// Assign the chosen parent zeros Z to the derived classes (orders must
// match, the fixed zero anchors somewhere) and emit one configuration per
// assignment.
void emit_loop_candidates(const StratumSignature& H, int m_index, const std::vector<int>& Z,
                          const std::vector<ConstructionBlock>& blocks,
                          std::vector<Configuration>& out, std::set<std::string>& seen) {
    std::vector<LoopZeroClass> classes;
    try {
        classes = derive_loop_zero_classes(blocks);
    } catch (const std::invalid_argument&) {
        return;
    }
    const int n = static_cast<int>(classes.size());
    if (n != static_cast<int>(Z.size())) return;

    std::vector<int> class_orders;
    for (const auto& z : classes) class_orders.push_back(z.order);
    std::vector<int> z_orders;
    for (int i : Z) z_orders.push_back(H.order(i));
    {
        auto a = class_orders;
        auto b = z_orders;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return;
    }

    // enumerate order-preserving bijections classes -> Z
    std::vector<int> perm(Z.begin(), Z.end());
    std::sort(perm.begin(), perm.end());
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = H.order(perm[i]) == class_orders[i];
        if (!ok) continue;
        Configuration c;
        c.kind = Configuration::Kind::Loop;
        c.parent = H;
        c.labelled = true;
        c.blocks = blocks;
        c.zero_classes = classes;
        c.anchor_class = -1;
        for (int i = 0; i < n; ++i) {
            c.zero_classes[i].parent_zero = perm[i];
            if (perm[i] == m_index) c.anchor_class = i;
        }
        if (c.anchor_class < 0) continue;
        c = canonicalize(std::move(c));
        std::string why;
        if (!validate_configuration(c, &why))
            throw std::logic_error("enumerated an invalid loop configuration: " + why);
        if (seen.insert(dihedral_canonical_key(c)).second) out.push_back(std::move(c));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<Configuration> hyperelliptic_loop_configs(const StratumSignature& H, int m_index,
                                                      int p);

}  // namespace

std::vector<Configuration> enumerate_distinct_zero_configs(const StratumSignature& H, int i1,
                                                           int i2, int p) {
    const int l = H.zero_count();
    if (i1 < 0 || i1 >= l || i2 < 0 || i2 >= l || i1 == i2)
        throw std::invalid_argument("fixed zeros must be two distinct zero indices");
    if (p < 1) throw std::invalid_argument("multiplicity p must be >= 1");
    const int m1 = H.order(i1), m2 = H.order(i2);
    std::vector<Configuration> out;
    if (p > std::min(m1, m2) + 1) return out;

    std::vector<int> others;
    for (int i = 0; i < l; ++i)
        if (i != i1 && i != i2) others.push_back(i);
    const int k = static_cast<int>(others.size());

    std::set<std::string> seen;
    std::vector<int> cur1, cur2;
    compositions(m1 + 1 - p, p, cur1, [&](const std::vector<int>& A) {
        compositions(m2 + 1 - p, p, cur2, [&](const std::vector<int>& B) {
            std::vector<int> assign(k, 0);
            while (true) {
                std::vector<long> sums(p, 0);
                std::vector<std::vector<int>> labels(p);
                for (int j = 0; j < k; ++j) {
                    sums[assign[j]] += H.order(others[j]);
                    labels[assign[j]].push_back(others[j]);
                }
                bool parity_ok = true;
                for (int b = 0; b < p && parity_ok; ++b)
                    parity_ok = (sums[b] + A[b] + B[b]) % 2 == 0;
                if (parity_ok) {
                    Configuration c;
                    c.kind = Configuration::Kind::DistinctZeros;
                    c.parent = H;
                    c.labelled = true;
                    c.fixed_zero_1 = i1;
                    c.fixed_zero_2 = i2;
                    c.m1 = m1;
                    c.m2 = m2;
                    for (int b = 0; b < p; ++b) {
                        std::vector<int> assigned;
                        for (int lab : labels[b]) assigned.push_back(H.order(lab));
                        c.blocks.push_back(ConstructionBlock::slit(
                            A[b], B[b], make_substratum({A[b] + B[b]}, assigned), labels[b]));
                    }
                    c = canonicalize(std::move(c));
                    std::string why;
                    if (!validate_configuration(c, &why))
                        throw std::logic_error("enumerated an invalid configuration: " + why);
                    if (seen.insert(config_canonical_key(c, 0)).second) out.push_back(std::move(c));
                }
                int j = 0;
                for (; j < k; ++j) {
                    if (++assign[j] < p) break;
                    assign[j] = 0;
                }
                if (j == k || k == 0) break;
            }
        });
    });
    return out;
}

std::vector<Configuration> enumerate_loop_configs(const StratumSignature& H, int m_index, int p,
                                                  std::optional<ComponentId> component) {
    const int l = H.zero_count();
    if (m_index < 0 || m_index >= l) throw std::invalid_argument("bad zero index");
    if (p < 1) throw std::invalid_argument("multiplicity p must be >= 1");
    if (component && *component == ComponentId::Hyperelliptic)
        return hyperelliptic_loop_configs(H, m_index, p);

    std::vector<Configuration> out;
    std::set<std::string> seen;

    for (int pt = 0; pt <= p; ++pt) {
        const int pf = p - pt;
        for (int q = 0; q <= p; ++q) {
            const int n = pt + q;
            if (n < 1 || n > l) continue;

            // kind words: position 0 non-cylinder, no two cylinders
            // cyclically adjacent
            std::vector<std::vector<BlockKind>> words;
            std::vector<BlockKind> word;
            std::function<void(int, int, int)> build = [&](int f, int t, int cyl) {
                if (f == 0 && t == 0 && cyl == 0) {
                    if (!(word.back() == BlockKind::Cylinder &&
                          word.front() == BlockKind::Cylinder) &&
                        word.front() != BlockKind::Cylinder)
                        words.push_back(word);
                    return;
                }
                bool prev_cyl = !word.empty() && word.back() == BlockKind::Cylinder;
                if (f > 0) {
                    word.push_back(BlockKind::FigureEight);
                    build(f - 1, t, cyl);
                    word.pop_back();
                }
                if (t > 0) {
                    word.push_back(BlockKind::TwoHole);
                    build(f, t - 1, cyl);
                    word.pop_back();
                }
                if (cyl > 0 && !word.empty() && !prev_cyl) {
                    word.push_back(BlockKind::Cylinder);
                    build(f, t, cyl - 1);
                    word.pop_back();
                }
            };
            build(pf, pt, q);

            std::vector<int> other_indices;
            for (int i = 0; i < l; ++i)
                if (i != m_index) other_indices.push_back(i);

            std::function<void(int, int, std::vector<int>&)> subsets = [&](int start, int need,
                                                                           std::vector<int>& chosen) {
                if (need == 0) {
                    std::vector<int> Z = {m_index};
                    Z.insert(Z.end(), chosen.begin(), chosen.end());
                    long M = 0;
                    for (int z : Z) M += H.order(z);
                    const long budget = M - 2 * p;
                    if (budget < 0) return;

                    std::vector<int> remaining;
                    for (int i = 0; i < l; ++i)
                        if (std::find(Z.begin(), Z.end(), i) == Z.end()) remaining.push_back(i);
                    const int k = static_cast<int>(remaining.size());

                    for (const auto& w : words) {
                        std::vector<int> noncyl_index(w.size(), -1);
                        int cnt = 0;
                        for (std::size_t i = 0; i < w.size(); ++i)
                            if (w[i] != BlockKind::Cylinder) noncyl_index[i] = cnt++;

                        std::vector<int> comp_cur;
                        compositions(static_cast<int>(budget), 2 * p, comp_cur,
                                     [&](const std::vector<int>& parts) {
                            std::vector<int> assign(k, 0);
                            while (true) {
                                std::vector<std::vector<int>> labels(p);
                                for (int j = 0; j < k; ++j) labels[assign[j]].push_back(remaining[j]);
                                bool ok = true;
                                std::vector<ConstructionBlock> blocks;
                                for (std::size_t i = 0; i < w.size() && ok; ++i) {
                                    if (w[i] == BlockKind::Cylinder) {
                                        blocks.push_back(ConstructionBlock::cylinder());
                                        continue;
                                    }
                                    const int idx = noncyl_index[i];
                                    const int v1 = parts[2 * idx], v2 = parts[2 * idx + 1];
                                    std::vector<int> assigned;
                                    long sum = v1 + v2;
                                    for (int lab : labels[idx]) {
                                        assigned.push_back(H.order(lab));
                                        sum += H.order(lab);
                                    }
                                    if (sum % 2 != 0) {
                                        ok = false;
                                        break;
                                    }
                                    if (w[i] == BlockKind::FigureEight) {
                                        blocks.push_back(ConstructionBlock::figure_eight(
                                            v1, v2, make_substratum({v1 + v2}, assigned),
                                            labels[idx]));
                                    } else {
                                        blocks.push_back(ConstructionBlock::two_hole(
                                            v1, v2, make_substratum({v1, v2}, assigned),
                                            labels[idx]));
                                    }
                                }
                                if (ok) emit_loop_candidates(H, m_index, Z, blocks, out, seen);
                                int j = 0;
                                for (; j < k; ++j) {
                                    if (++assign[j] < p) break;
                                    assign[j] = 0;
                                }
                                if (j == k || k == 0) break;
                            }
                        });
                    }
                    return;
                }
                for (int i = start; i < static_cast<int>(other_indices.size()); ++i) {
                    chosen.push_back(other_indices[i]);
                    subsets(i + 1, need - 1, chosen);
                    chosen.pop_back();
                }
            };
            std::vector<int> chosen;
            subsets(0, n - 1, chosen);
        }
    }
    return out;
}

Configuration dominant_distinct_config(const StratumSignature& H, int i1, int i2, int p) {
    const int m1 = H.order(i1), m2 = H.order(i2);
    if (p < 1 || p > std::min(m1, m2) + 1)
        throw std::invalid_argument("no dominant configuration for this multiplicity");
    Configuration c;
    c.kind = Configuration::Kind::DistinctZeros;
    c.parent = H;
    c.labelled = true;
    c.fixed_zero_1 = i1;
    c.fixed_zero_2 = i2;
    c.m1 = m1;
    c.m2 = m2;
    std::vector<int> labels, assigned;
    for (int i = 0; i < H.zero_count(); ++i)
        if (i != i1 && i != i2) {
            labels.push_back(i);
            assigned.push_back(H.order(i));
        }
    const int a1 = m1 + 1 - p, a2 = m2 + 1 - p;
    c.blocks.push_back(
        ConstructionBlock::slit(a1, a2, make_substratum({a1 + a2}, assigned), labels));
    for (int i = 1; i < p; ++i)
        c.blocks.push_back(ConstructionBlock::slit(0, 0, StratumSignature({0})));
    return c;
}

namespace {
Configuration finish_loop_config(Configuration c, const std::vector<int>& parent_zeros) {
    c.zero_classes = derive_loop_zero_classes(c.blocks);
    if (c.zero_classes.size() != parent_zeros.size())
        throw std::logic_error("unexpected zero-class count");
    for (std::size_t i = 0; i < parent_zeros.size(); ++i)
        c.zero_classes[i].parent_zero = parent_zeros[i];
    c.anchor_class = 0;
    std::string why;
    if (!validate_configuration(c, &why)) throw std::logic_error("invalid loop configuration: " + why);
    return c;
}

std::pair<std::vector<int>, std::vector<int>> other_zero_data(const StratumSignature& H,
                                                              std::initializer_list<int> fixed) {
    std::vector<int> labels, orders;
    for (int i = 0; i < H.zero_count(); ++i)
        if (std::find(fixed.begin(), fixed.end(), i) == fixed.end()) {
            labels.push_back(i);
            orders.push_back(H.order(i));
        }
    return {labels, orders};
}
}  // namespace

Configuration loop_config_no_cylinder(const StratumSignature& H, int z, int b1, int b2) {
    if (b1 + b2 != H.order(z) - 2)
        throw std::invalid_argument("two-hole partition must satisfy b'+b'' = m-2");
    Configuration c;
    c.kind = Configuration::Kind::Loop;
    c.parent = H;
    c.labelled = true;
    auto [labels, orders] = other_zero_data(H, {z});
    c.blocks.push_back(ConstructionBlock::two_hole(b1, b2, make_substratum({b1, b2}, orders), labels));
    return finish_loop_config(std::move(c), {z});
}

Configuration loop_config_cylinder_same_zero(const StratumSignature& H, int z, int a1, int a2) {
    if (a1 + a2 != H.order(z) - 2)
        throw std::invalid_argument("figure-eight partition must satisfy a'+a'' = m-2");
    Configuration c;
    c.kind = Configuration::Kind::Loop;
    c.parent = H;
    c.labelled = true;
    auto [labels, orders] = other_zero_data(H, {z});
    c.blocks.push_back(
        ConstructionBlock::figure_eight(a1, a2, make_substratum({a1 + a2}, orders), labels));
    c.blocks.push_back(ConstructionBlock::cylinder());
    return finish_loop_config(std::move(c), {z});
}

Configuration loop_config_cylinder_other_zero(const StratumSignature& H, int z1, int z2) {
    if (z1 == z2) throw std::invalid_argument("cylinder-other-zero needs two distinct zeros");
    const int b1 = H.order(z1) - 1, b2 = H.order(z2) - 1;
    if (b1 < 0 || b2 < 0) throw std::invalid_argument("zero orders must be >= 1 here");
    Configuration c;
    c.kind = Configuration::Kind::Loop;
    c.parent = H;
    c.labelled = true;
    auto [labels, orders] = other_zero_data(H, {z1, z2});
    c.blocks.push_back(ConstructionBlock::two_hole(b1, b2, make_substratum({b1, b2}, orders), labels));
    c.blocks.push_back(ConstructionBlock::cylinder());
    // classes: {TH_L, Cyl_R} has order b1+1 = m, {TH_R, Cyl_L} has order b2+1
    return finish_loop_config(std::move(c), {z1, z2});
}

Configuration principal_loop_dominant_config(const StratumSignature& H, int p,
                                             const std::vector<int>& new_zeros) {
    if (static_cast<int>(new_zeros.size()) != 2 * p)
        throw std::invalid_argument("need 2p new zeros");
    Configuration c;
    c.kind = Configuration::Kind::Loop;
    c.parent = H;
    c.labelled = true;
    std::vector<int> labels, orders;
    for (int i = 0; i < H.zero_count(); ++i)
        if (std::find(new_zeros.begin(), new_zeros.end(), i) == new_zeros.end()) {
            labels.push_back(i);
            orders.push_back(H.order(i));
        }
    c.blocks.push_back(
        ConstructionBlock::two_hole(0, 0, make_substratum({0, 0}, orders), labels));
    c.blocks.push_back(ConstructionBlock::cylinder());
    for (int i = 1; i < p; ++i) {
        c.blocks.push_back(ConstructionBlock::two_hole(0, 0, StratumSignature({0, 0})));
        c.blocks.push_back(ConstructionBlock::cylinder());
    }
    c.zero_classes = derive_loop_zero_classes(c.blocks);
    if (static_cast<int>(c.zero_classes.size()) != 2 * p)
        throw std::logic_error("principal dominant config should have 2p new zeros");
    for (int i = 0; i < 2 * p; ++i) c.zero_classes[i].parent_zero = new_zeros[i];
    c.anchor_class = 0;
    std::string why;
    if (!validate_configuration(c, &why)) throw std::logic_error("invalid configuration: " + why);
    return c;
}

namespace {

std::vector<Configuration> hyperelliptic_loop_configs(const StratumSignature& H, int m_index,
                                                      int p) {
    std::vector<Configuration> out;
    if (p >= 3) return out;
    const long g = H.genus();
    auto tag = [&](Configuration c) {
        for (auto& b : c.blocks)
            if (!b.is_cylinder()) b.component_choice = ComponentId::Hyperelliptic;
        out.push_back(canonicalize(std::move(c)));
    };

    if (H.is_minimal() && H.marked_points() == 0) {
        if (p == 1 && g >= 3) {
            tag(loop_config_no_cylinder(H, m_index, static_cast<int>(g) - 2,
                                        static_cast<int>(g) - 2));
            tag(loop_config_cylinder_same_zero(H, m_index, static_cast<int>(g) - 2,
                                               static_cast<int>(g) - 2));
        } else if (p == 2) {
            for (long g1 = 1; g1 <= g - 2; ++g1) {
                long g2 = g - 1 - g1;
                Configuration c;
                c.kind = Configuration::Kind::Loop;
                c.parent = H;
                c.labelled = true;
                c.blocks.push_back(ConstructionBlock::figure_eight(
                    static_cast<int>(g1) - 1, static_cast<int>(g1) - 1,
                    StratumSignature({static_cast<int>(2 * g1 - 2)})));
                c.blocks.push_back(ConstructionBlock::two_hole(
                    static_cast<int>(g2) - 1, static_cast<int>(g2) - 1,
                    StratumSignature({static_cast<int>(g2) - 1, static_cast<int>(g2) - 1})));
                c.zero_classes = derive_loop_zero_classes(c.blocks);
                c.zero_classes[0].parent_zero = m_index;
                c.anchor_class = 0;
                tag(std::move(c));
            }
        }
    } else if (H.is_gm1_gm1() && H.marked_points() == 0) {
        const int other = m_index == 0 ? 1 : 0;
        if (p == 1 && g >= 3) {
            tag(loop_config_cylinder_other_zero(H, m_index, other));
        } else if (p == 2) {
            for (long g1 = 1; g1 <= g - 2; ++g1) {
                long g2 = g - 1 - g1;
                Configuration c;
                c.kind = Configuration::Kind::Loop;
                c.parent = H;
                c.labelled = true;
                c.blocks.push_back(ConstructionBlock::two_hole(
                    static_cast<int>(g1) - 1, static_cast<int>(g1) - 1,
                    StratumSignature({static_cast<int>(g1) - 1, static_cast<int>(g1) - 1})));
                c.blocks.push_back(ConstructionBlock::two_hole(
                    static_cast<int>(g2) - 1, static_cast<int>(g2) - 1,
                    StratumSignature({static_cast<int>(g2) - 1, static_cast<int>(g2) - 1})));
                c.zero_classes = derive_loop_zero_classes(c.blocks);
                c.zero_classes[0].parent_zero = m_index;
                c.zero_classes[1].parent_zero = other;
                c.anchor_class = 0;
                tag(std::move(c));
            }
        }
    } else {
        throw std::invalid_argument("hyperelliptic components exist only for H(2g-2), H(g-1,g-1)");
    }
    std::set<std::string> seen;
    std::vector<Configuration> dedup;
    for (auto& c : out)
        if (seen.insert(dihedral_canonical_key(c)).second) dedup.push_back(std::move(c));
    return dedup;
}

}  // namespace

std::string configuration_to_json(const Configuration& c) {
    std::ostringstream out;
    out << "{\"kind\":\"" << (c.kind == Configuration::Kind::DistinctZeros ? "distinct" : "loop")
        << "\",\"parent\":\"" << c.parent.str()
        << "\",\"labelled\":" << (c.labelled ? "true" : "false") << ",\"p\":" << c.p()
        << ",\"q\":" << c.q() << ",\"blocks\":[";
    bool first = true;
    for (const auto& b : c.blocks) {
        if (!first) out << ",";
        first = false;
        out << "{\"kind\":\"" << to_string(b.kind) << "\"";
        if (!b.is_cylinder()) {
            out << ",\"partition\":[" << b.first << "," << b.second << "]";
            out << ",\"substratum\":\"" << stratum_to_string(b.substratum, b.component_choice)
                << "\"";
            out << ",\"zero_labels\":[";
            for (std::size_t i = 0; i < b.zero_labels.size(); ++i)
                out << (i ? "," : "") << b.zero_labels[i];
            out << "]";
        }
        out << "}";
    }
    out << "]";
    if (c.kind == Configuration::Kind::DistinctZeros) {
        out << ",\"fixed_zeros\":[" << c.fixed_zero_1 << "," << c.fixed_zero_2 << "]";
        out << ",\"orders\":[" << c.m1 << "," << c.m2 << "]";
    } else {
        out << ",\"new_zeros\":[";
        for (std::size_t i = 0; i < c.zero_classes.size(); ++i) {
            if (i) out << ",";
            out << "{\"order\":" << c.zero_classes[i].order
                << ",\"parent_zero\":" << c.zero_classes[i].parent_zero
                << (static_cast<int>(i) == c.anchor_class ? ",\"fixed\":true" : "") << "}";
        }
        out << "]";
    }
    out << "}";
    return out.str();
}

}  // namespace svlab
