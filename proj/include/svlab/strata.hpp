#pragma once

#include <optional>
#include <string>
#include <vector>

namespace svlab {

// Labelled zero-order list; order-0 entries are marked points and count
// towards the zero count (and hence the dimension).
class StratumSignature {
  public:
    StratumSignature() = default;
    explicit StratumSignature(std::vector<int> zero_orders);

    const std::vector<int>& orders() const { return orders_; }
    int order(std::size_t i) const { return orders_.at(i); }
    int zero_count() const { return static_cast<int>(orders_.size()); }
    long genus() const { return genus_; }
    // real dimension d = 2(2g + l - 1)
    long dimension() const { return 2 * (2 * genus_ + zero_count() - 1); }

    bool is_minimal() const;    // H(2g-2), g >= 2, ignoring marked points
    bool is_gm1_gm1() const;    // H(g-1, g-1), g >= 2, ignoring marked points
    bool is_principal() const;  // H(1,...,1), no marked points
    bool all_even() const;      // marked points count as even
    int marked_points() const;

    std::string str() const;  // "H(m1,m2,...)"
    static StratumSignature parse(const std::string& text);

    friend bool operator==(const StratumSignature& a, const StratumSignature& b) {
        return a.orders_ == b.orders_;
    }
    friend bool operator!=(const StratumSignature& a, const StratumSignature& b) {
        return !(a == b);
    }

  private:
    std::vector<int> orders_;
    long genus_ = 1;
};

enum class ComponentId { Whole, Hyperelliptic, Odd, Even, NonHyperelliptic };

std::string to_string(ComponentId c);
ComponentId component_from_string(const std::string& s);

struct ComponentSet {
    std::vector<ComponentId> components;
    // H(0), H(1,1), H(2): connected and equal to their hyperelliptic locus.
    bool coincides_with_hyperelliptic = false;
    // The component table is established for g >= 4 only; below that the
    // classification is extrapolated (except the named small cases).
    bool extrapolated = false;

    bool contains(ComponentId c) const;
};

ComponentSet classify_components(const StratumSignature& s);

// "H(m1,...)" with optional "^hyp" / "^odd" / "^even" / "^nonhyp" suffix.
std::pair<StratumSignature, std::optional<ComponentId>> parse_stratum(const std::string& text);
std::string stratum_to_string(const StratumSignature& s, std::optional<ComponentId> c);

}  // namespace svlab
