#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace svlab {

// Symbolic error classes for asymptotic statements. Carried as data, never
// as numbers; numeric comparisons happen only in tests with explicit
// multiples of err_scale().
enum class ErrorClass {
    Exact,
    OneOverG,
    OneOverGTimesCp,
    OneOverGQuarter,
    OrderOne,
    OrderOneTimesCp,
    BoundOnly,
};

inline int severity(ErrorClass e) { return static_cast<int>(e); }

// The combined class of a product/sum of tagged values.
inline ErrorClass join(ErrorClass a, ErrorClass b) {
    return severity(a) >= severity(b) ? a : b;
}

inline std::string to_string(ErrorClass e) {
    switch (e) {
        case ErrorClass::Exact: return "exact";
        case ErrorClass::OneOverG: return "O(1/g)";
        case ErrorClass::OneOverGTimesCp: return "O(1/g)*O(1)^p";
        case ErrorClass::OneOverGQuarter: return "O(1/g^{1/4})";
        case ErrorClass::OrderOne: return "O(1)";
        case ErrorClass::OrderOneTimesCp: return "O(1)^p";
        case ErrorClass::BoundOnly: return "bound-only";
    }
    return "?";
}

inline ErrorClass error_class_from_string(const std::string& s) {
    for (ErrorClass e : {ErrorClass::Exact, ErrorClass::OneOverG, ErrorClass::OneOverGTimesCp,
                         ErrorClass::OneOverGQuarter, ErrorClass::OrderOne,
                         ErrorClass::OrderOneTimesCp, ErrorClass::BoundOnly}) {
        if (to_string(e) == s) return e;
    }
    throw std::invalid_argument("unknown error class: " + s);
}

// Decay rate of the class at a concrete genus; callers supply g and an
// explicit multiple to turn a tagged value into an interval.
inline double err_scale(ErrorClass e, double g) {
    switch (e) {
        case ErrorClass::Exact: return 0.0;
        case ErrorClass::OneOverG:
        case ErrorClass::OneOverGTimesCp: return 1.0 / g;
        case ErrorClass::OneOverGQuarter: return std::pow(g, -0.25);
        default: return 1.0;
    }
}

}  // namespace svlab
