#include "svlab/pi_laurent.hpp"

#include <cctype>
#include <sstream>

namespace svlab {

PiLaurent& PiLaurent::operator+=(const PiLaurent& o) {
    for (const auto& [k, q] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_[k] = q;
        } else {
            it->second += q;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

PiLaurent& PiLaurent::operator-=(const PiLaurent& o) { return *this += -o; }

PiLaurent PiLaurent::operator-() const {
    PiLaurent r;
    for (const auto& [k, q] : terms_) r.terms_[k] = -q;
    return r;
}

PiLaurent operator*(const PiLaurent& a, const PiLaurent& b) {
    PiLaurent r;
    for (const auto& [ka, qa] : a.terms_) {
        for (const auto& [kb, qb] : b.terms_) {
            Rational prod = qa * qb;
            auto it = r.terms_.find(ka + kb);
            if (it == r.terms_.end()) {
                r.terms_[ka + kb] = prod;
            } else {
                it->second += prod;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

PiLaurent& PiLaurent::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, q] : terms_) q *= c;
    return *this;
}

PiLaurent PiLaurent::divided_by(const PiLaurent& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("PiLaurent division by zero");
    if (!divisor.is_monomial())
        throw std::domain_error("PiLaurent division by multi-term divisor");
    const auto& [k, q] = *divisor.terms_.begin();
    PiLaurent r;
    for (const auto& [ka, qa] : terms_) r.terms_[ka - k] = qa / q;
    return r;
}

PiLaurent PiLaurent::pow(unsigned e) const {
    PiLaurent r = one();
    PiLaurent base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

Mpf PiLaurent::to_mpf(mpfr_prec_t precision) const {
    const mpfr_prec_t work = precision + 32;
    Mpf acc(work);
    const Mpf pi = Mpf::pi(work);
    for (const auto& [k, q] : terms_) {
        acc = acc + Mpf::from(q, work) * Mpf::pow_si(pi, k);
    }
    return acc.rounded_to(precision);
}

namespace {

std::string render_term(const Rational& q, int k) {
    const BigInt num = abs(q.get_num());
    const BigInt den = q.get_den();
    std::ostringstream out;
    if (k == 0) {
        out << num.get_str();
        if (den != 1) out << "/" << den.get_str();
        return out.str();
    }
    const std::string pp = (k == 1 || k == -1)
                               ? "pi"
                               : "pi^" + std::to_string(k > 0 ? k : -k);
    if (k > 0) {
        if (num == 1) {
            out << pp;
        } else {
            out << num.get_str() << "*" << pp;
        }
        if (den != 1) out << "/" << den.get_str();
    } else {
        out << num.get_str() << "/";
        if (den == 1) {
            out << pp;
        } else {
            out << "(" << den.get_str() << "*" << pp << ")";
        }
    }
    return out.str();
}

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("PiLaurent parse error at position " +
                                    std::to_string(pos) + ": " + what + " in \"" + s + "\"");
    }

    BigInt parse_integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            fail("expected integer");
        return BigInt(s.substr(start, pos - start));
    }

    // factor := integer | pi['^' int] | '(' product ')'
    // returns (rational value, pi exponent)
    std::pair<Rational, int> parse_factor() {
        skip_ws();
        if (peek() == '(') {
            ++pos;
            auto r = parse_product();
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return r;
        }
        if (s.compare(pos, 2, "pi") == 0) {
            pos += 2;
            int e = 1;
            if (peek() == '^') {
                ++pos;
                e = static_cast<int>(parse_integer().get_si());
            }
            return {Rational(1), e};
        }
        return {Rational(parse_integer()), 0};
    }

    std::pair<Rational, int> parse_product() {
        auto [q, k] = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*' || c == '/') {
                ++pos;
                auto [q2, k2] = parse_factor();
                if (c == '*') {
                    q *= q2;
                    k += k2;
                } else {
                    if (q2 == 0) fail("division by zero");
                    q /= q2;
                    k -= k2;
                }
            } else {
                break;
            }
        }
        return {q, k};
    }

    PiLaurent parse_sum() {
        PiLaurent total;
        bool first = true;
        while (!eof()) {
            int sign = 1;
            char c = peek();
            if (c == '+' || c == '-') {
                sign = (c == '-') ? -1 : 1;
                ++pos;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto [q, k] = parse_product();
            total += PiLaurent::monomial(sign * q, k);
            first = false;
        }
        if (first) fail("empty expression");
        return total;
    }
};

}  // namespace

std::string PiLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // descending exponent order
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, q] = *it;
        if (first) {
            if (q < 0) out << "-";
            first = false;
        } else {
            out << (q < 0 ? " - " : " + ");
        }
        out << render_term(q, k);
    }
    return out.str();
}

PiLaurent PiLaurent::parse(const std::string& text) {
    Parser p(text);
    return p.parse_sum();
}

}  // namespace svlab
