#pragma once

#include "svlab/mpfloat.hpp"
#include "svlab/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace svlab {

// Exact numbers of the form sum_k q_k * pi^k with rational q_k and integer
// exponents k. No stored coefficient is ever zero.
class PiLaurent {
  public:
    PiLaurent() = default;
    explicit PiLaurent(const Rational& q) {
        if (q != 0) terms_[0] = q;
    }
    explicit PiLaurent(long n) : PiLaurent(Rational(n)) {}

    static PiLaurent monomial(const Rational& coeff, int pi_exp) {
        PiLaurent p;
        if (coeff != 0) terms_of(p)[pi_exp] = coeff;
        return p;
    }
    static PiLaurent zero() { return PiLaurent(); }
    static PiLaurent one() { return PiLaurent(Rational(1)); }
    static PiLaurent pi(int exp = 1) { return monomial(Rational(1), exp); }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<int, Rational>& terms() const { return terms_; }

    // Coefficient of pi^k (zero if absent).
    Rational coeff(int k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    PiLaurent& operator+=(const PiLaurent& o);
    PiLaurent& operator-=(const PiLaurent& o);
    friend PiLaurent operator+(PiLaurent a, const PiLaurent& b) { return a += b; }
    friend PiLaurent operator-(PiLaurent a, const PiLaurent& b) { return a -= b; }
    friend PiLaurent operator*(const PiLaurent& a, const PiLaurent& b);
    PiLaurent operator-() const;

    PiLaurent& operator*=(const Rational& c);
    friend PiLaurent operator*(PiLaurent a, const Rational& c) { return a *= c; }
    friend PiLaurent operator*(const Rational& c, PiLaurent a) { return a *= c; }

    // Division is only defined by a single-term divisor.
    PiLaurent divided_by(const PiLaurent& divisor) const;

    PiLaurent pow(unsigned e) const;

    friend bool operator==(const PiLaurent& a, const PiLaurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PiLaurent& a, const PiLaurent& b) { return !(a == b); }

    // Evaluation with pi at the requested precision (+guard bits internally).
    Mpf to_mpf(mpfr_prec_t precision = 128) const;
    double to_double() const { return to_mpf(128).to_double(); }

    // Canonical rendering, exponent-sorted (descending), e.g. "pi^2/3",
    // "2/pi + 2/pi^2", "3/2 - 2/pi". parse() accepts the same grammar.
    std::string str() const;
    static PiLaurent parse(const std::string& text);

  private:
    static std::map<int, Rational>& terms_of(PiLaurent& p) { return p.terms_; }
    std::map<int, Rational> terms_;
};

}  // namespace svlab
