#include "svlab/strata.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace svlab {

StratumSignature::StratumSignature(std::vector<int> zero_orders) : orders_(std::move(zero_orders)) {
    if (orders_.empty()) throw std::invalid_argument("stratum needs at least one zero/marked point");
    long sum = 0;
    for (int m : orders_) {
        if (m < 0) throw std::invalid_argument("zero orders must be >= 0");
        sum += m;
    }
    if (sum % 2 != 0) throw std::invalid_argument("zero orders must sum to 2g-2 (even)");
    genus_ = sum / 2 + 1;
}

namespace {
std::vector<int> positive_orders(const StratumSignature& s) {
    std::vector<int> v;
    for (int m : s.orders())
        if (m > 0) v.push_back(m);
    return v;
}
}  // namespace

bool StratumSignature::is_minimal() const {
    auto v = positive_orders(*this);
    return v.size() == 1 && v[0] == 2 * genus_ - 2 && genus_ >= 2;
}

bool StratumSignature::is_gm1_gm1() const {
    auto v = positive_orders(*this);
    return v.size() == 2 && v[0] == genus_ - 1 && v[1] == genus_ - 1 && genus_ >= 2;
}

bool StratumSignature::is_principal() const {
    return genus_ >= 2 && std::all_of(orders_.begin(), orders_.end(), [](int m) { return m == 1; });
}

bool StratumSignature::all_even() const {
    return std::all_of(orders_.begin(), orders_.end(), [](int m) { return m % 2 == 0; });
}

int StratumSignature::marked_points() const {
    return static_cast<int>(std::count(orders_.begin(), orders_.end(), 0));
}

std::string StratumSignature::str() const {
    std::ostringstream out;
    out << "H(";
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (i) out << ",";
        out << orders_[i];
    }
    out << ")";
    return out.str();
}

StratumSignature StratumSignature::parse(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
            s.end());
    if (s.size() < 4 || (s[0] != 'H' && s[0] != 'h') || s[1] != '(' || s.back() != ')')
        throw std::invalid_argument("bad stratum signature: " + text);
    std::vector<int> orders;
    std::string body = s.substr(2, s.size() - 3);
    std::istringstream in(body);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("bad stratum signature: " + text);
        orders.push_back(std::stoi(tok));
    }
    return StratumSignature(std::move(orders));
}

std::string to_string(ComponentId c) {
    switch (c) {
        case ComponentId::Whole: return "whole";
        case ComponentId::Hyperelliptic: return "hyp";
        case ComponentId::Odd: return "odd";
        case ComponentId::Even: return "even";
        case ComponentId::NonHyperelliptic: return "nonhyp";
    }
    return "?";
}

ComponentId component_from_string(const std::string& s) {
    if (s == "whole") return ComponentId::Whole;
    if (s == "hyp") return ComponentId::Hyperelliptic;
    if (s == "odd") return ComponentId::Odd;
    if (s == "even") return ComponentId::Even;
    if (s == "nonhyp" || s == "non-hyp") return ComponentId::NonHyperelliptic;
    throw std::invalid_argument("unknown component: " + s);
}

bool ComponentSet::contains(ComponentId c) const {
    return std::find(components.begin(), components.end(), c) != components.end();
}

ComponentSet classify_components(const StratumSignature& s) {
    const long g = s.genus();
    ComponentSet out;

    if (g <= 2) {
        // H(0), H(2), H(1,1) are connected and coincide with their
        // hyperelliptic component; marked-point variants reduce to them.
        out.components = {ComponentId::Whole};
        out.coincides_with_hyperelliptic = (g == 2 || s.zero_count() == s.marked_points());
        out.extrapolated = s.marked_points() > 0 && g == 2;
        if (g == 1) out.extrapolated = false;
        return out;
    }

    const bool hyp_shape = s.is_minimal() || s.is_gm1_gm1();
    if (hyp_shape) {
        if (s.all_even()) {
            out.components = {ComponentId::Hyperelliptic, ComponentId::Odd, ComponentId::Even};
        } else {
            out.components = {ComponentId::Hyperelliptic, ComponentId::NonHyperelliptic};
        }
    } else if (s.all_even()) {
        out.components = {ComponentId::Odd, ComponentId::Even};
    } else {
        out.components = {ComponentId::Whole};
    }
    // The component table is established for g >= 4 only.
    out.extrapolated = (g == 3) || (hyp_shape && s.marked_points() > 0);
    return out;
}

std::pair<StratumSignature, std::optional<ComponentId>> parse_stratum(const std::string& text) {
    auto caret = text.find('^');
    if (caret == std::string::npos) return {StratumSignature::parse(text), std::nullopt};
    std::string sig = text.substr(0, caret);
    std::string comp = text.substr(caret + 1);
    return {StratumSignature::parse(sig), component_from_string(comp)};
}

std::string stratum_to_string(const StratumSignature& s, std::optional<ComponentId> c) {
    if (!c || *c == ComponentId::Whole) return s.str();
    return s.str() + "^" + to_string(*c);
}

}  // namespace svlab
