#pragma once

#include "svlab/rational.hpp"

#include <mpfr.h>

#include <string>
#include <utility>

namespace svlab {

// Thin RAII wrapper over mpfr_t carrying an explicit precision.
// Binary operations produce results at the wider of the two precisions.
class Mpf {
  public:
    explicit Mpf(mpfr_prec_t prec = 128) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Mpf(const Mpf& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Mpf(Mpf&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Mpf& operator=(Mpf o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Mpf() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    static Mpf pi(mpfr_prec_t prec) {
        Mpf r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static Mpf e(mpfr_prec_t prec) {
        Mpf one(prec);
        mpfr_set_ui(one.v_, 1, MPFR_RNDN);
        return exp(one);
    }
    static Mpf from(const Rational& q, mpfr_prec_t prec) {
        Mpf r(prec);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static Mpf from(const BigInt& z, mpfr_prec_t prec) {
        Mpf r(prec);
        mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static Mpf from(double d, mpfr_prec_t prec) {
        Mpf r(prec);
        mpfr_set_d(r.v_, d, MPFR_RNDN);
        return r;
    }
    static Mpf from(long n, mpfr_prec_t prec) {
        Mpf r(prec);
        mpfr_set_si(r.v_, n, MPFR_RNDN);
        return r;
    }

    Mpf rounded_to(mpfr_prec_t prec) const {
        Mpf r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend Mpf operator+(const Mpf& a, const Mpf& b) {
        Mpf r(std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Mpf operator-(const Mpf& a, const Mpf& b) {
        Mpf r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Mpf operator*(const Mpf& a, const Mpf& b) {
        Mpf r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Mpf operator/(const Mpf& a, const Mpf& b) {
        Mpf r(std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    Mpf operator-() const {
        Mpf r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    static Mpf pow_si(const Mpf& a, long k) {
        Mpf r(a.prec());
        mpfr_pow_si(r.v_, a.v_, k, MPFR_RNDN);
        return r;
    }
    static Mpf sqrt(const Mpf& a) {
        Mpf r(a.prec());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    static Mpf log(const Mpf& a) {
        Mpf r(a.prec());
        mpfr_log(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    static Mpf exp(const Mpf& a) {
        Mpf r(a.prec());
        mpfr_exp(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    static Mpf abs(const Mpf& a) {
        Mpf r(a.prec());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    // log Gamma(n), n > 0
    static Mpf lngamma(const Mpf& a) {
        Mpf r(a.prec());
        mpfr_lngamma(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int cmp(const Mpf& o) const { return mpfr_cmp(v_, o.v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    std::string str(int digits = 30) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

  private:
    mpfr_t v_;
};

}  // namespace svlab
