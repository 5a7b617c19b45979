#include "svlab/lemma_lab.hpp"

#include "svlab/kernels.hpp"
#include "svlab/mpfloat.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace svlab {

LemmaCheck check_lemma_factorial_comparison(int p, int r, const std::vector<int>& A,
                                            const std::vector<int>& B) {
    LemmaCheck out;
    if (p < 1 || r < 0 || static_cast<int>(A.size()) != p || static_cast<int>(B.size()) != p) {
        out.precondition_ok = false;
        out.note = "need p >= 1, r >= 0 and partitions of length p";
        return out;
    }
    long sa = std::accumulate(A.begin(), A.end(), 0L);
    long sb = std::accumulate(B.begin(), B.end(), 0L);
    for (int i = 0; i < p; ++i) {
        if (B[i] < 0 || B[i] > A[i]) {
            out.precondition_ok = false;
            out.note = "need 0 <= B_i <= A_i";
            return out;
        }
        if (B[i] >= sb) {
            out.precondition_ok = false;
            out.note = "need B_i < B";
            return out;
        }
    }
    // prod(A_i+r)! * (B+r-1)! <= prod(B_i+r)! * (A+r-1)!
    BigInt lhs = factorial(sb + r - 1), rhs = factorial(sa + r - 1);
    for (int i = 0; i < p; ++i) {
        lhs *= factorial(A[i] + r);
        rhs *= factorial(B[i] + r);
    }
    out.holds = lhs <= rhs;
    return out;
}

bool check_lemma_product_binomials(int p, int r, const std::vector<int>& l,
                                   const std::vector<int>& a) {
    if (p < 1 || r < 0 || static_cast<int>(l.size()) != p || static_cast<int>(a.size()) != p)
        throw std::invalid_argument("need p >= 1, r >= 0 and vectors of length p");
    long sum_top = 0, sum_l = 0;
    BigInt lhs = 1, rhs = 1;
    for (int i = 0; i < p; ++i) {
        if (l[i] < 0 || a[i] < 0) throw std::invalid_argument("l_i, a_i must be >= 0");
        sum_top += 2L * l[i] + a[i];
        sum_l += l[i];
        lhs *= factorial(2 * l[i] + a[i] + r);
        rhs *= factorial(l[i]) * factorial(l[i] + a[i] + r);
    }
    BigInt two_rp = BigInt(1) << static_cast<unsigned>(r * p);
    rhs *= two_rp * binomial(sum_top, sum_l);
    return lhs <= rhs;
}

LemmaCheck check_lemma_ingredient(int p, int r, int A, const std::vector<int>& parts) {
    LemmaCheck out;
    if (p < 2 || r < 0 || A < r || static_cast<int>(parts.size()) != p) {
        out.precondition_ok = false;
        out.note = "need p >= 2, r >= 0, A >= r";
        return out;
    }
    long s = 0;
    for (int x : parts) {
        if (x < 0 || x > A - 3) {
            out.precondition_ok = false;
            out.note = "need 0 <= A_i <= A-3";
            return out;
        }
        s += x;
    }
    if (s != A) {
        out.precondition_ok = false;
        out.note = "parts must sum to A";
        return out;
    }
    BigInt lhs = 1;
    for (int x : parts) lhs *= factorial(x + 3 + r);
    // Sharp bound over the admissible polytope {sum A_i = A, 0 <= A_i <= A-3}:
    // the product is log-convex, so the maximum sits at the integer vertex
    // (A-3, 3, 0, ..., 0), giving (3+r)!^{p-2} (6+r)! (A+r)! with equality
    // there. (The constraint forces both parts >= 3 at p = 2, so no
    // admissible point reaches (3+r)!^{p-1} (A+r)!.)
    BigInt rhs = factorial(A + r) * factorial(6 + r);
    BigInt f = factorial(3 + r);
    for (int i = 0; i < p - 2; ++i) rhs *= f;
    out.holds = lhs <= rhs;
    return out;
}

namespace {

void for_each_composition(int total, int parts, std::vector<int>& cur,
                          const std::function<void(const std::vector<int>&)>& fn) {
    if (parts == 0) {
        if (total == 0) fn(cur);
        return;
    }
    if (parts == 1) {
        cur.push_back(total);
        fn(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        cur.push_back(v);
        for_each_composition(total - v, parts - 1, cur, fn);
        cur.pop_back();
    }
}

}  // namespace

SweepReport sweep_lemma_factorial_comparison(int p_max, int part_max, int r_max) {
    SweepReport rep;
    for (int p = 1; p <= p_max; ++p) {
        std::vector<int> A(p, 0), B(p, 0);
        std::function<void(int)> loopA = [&](int i) {
            if (i == p) {
                std::function<void(int)> loopB = [&](int j) {
                    if (j == p) {
                        LemmaCheck c = check_lemma_factorial_comparison(p, 0, A, B);
                        for (int r = 0; r <= r_max; ++r) {
                            c = check_lemma_factorial_comparison(p, r, A, B);
                            if (!c.precondition_ok) {
                                ++rep.precondition_rejections;
                            } else {
                                ++rep.cases;
                                if (!c.holds) ++rep.violations;
                            }
                        }
                        return;
                    }
                    for (B[j] = 0; B[j] <= A[j]; ++B[j]) loopB(j + 1);
                    B[j] = 0;
                };
                loopB(0);
                return;
            }
            for (A[i] = 0; A[i] <= part_max; ++A[i]) loopA(i + 1);
            A[i] = 0;
        };
        loopA(0);
    }
    return rep;
}

SweepReport sweep_lemma_product_binomials(int p_max, int value_max, int r_max) {
    SweepReport rep;
    for (int p = 1; p <= p_max; ++p) {
        std::vector<int> l(p, 0), a(p, 0);
        std::function<void(int)> loop = [&](int i) {
            if (i == p) {
                for (int r = 0; r <= r_max; ++r) {
                    ++rep.cases;
                    if (!check_lemma_product_binomials(p, r, l, a)) ++rep.violations;
                }
                return;
            }
            for (l[i] = 0; l[i] <= value_max; ++l[i])
                for (a[i] = 0; a[i] <= value_max; ++a[i]) loop(i + 1);
            l[i] = a[i] = 0;
        };
        loop(0);
    }
    return rep;
}

SweepReport sweep_lemma_ingredient(int p_max, int A_max, int r_max) {
    SweepReport rep;
    for (int p = 2; p <= p_max; ++p) {
        for (int A = 0; A <= A_max; ++A) {
            std::vector<int> cur;
            for_each_composition(A, p, cur, [&](const std::vector<int>& parts) {
                for (int r = 0; r <= std::min(r_max, A); ++r) {
                    LemmaCheck c = check_lemma_ingredient(p, r, A, parts);
                    if (!c.precondition_ok) {
                        ++rep.precondition_rejections;
                    } else {
                        ++rep.cases;
                        if (!c.holds) ++rep.violations;
                    }
                }
            });
        }
    }
    return rep;
}

SumConstantEstimate estimate_lemma_sum_constant(int p, const std::vector<int>& Ms, int L,
                                                int variant) {
    if (p < 1 || L < 0 || Ms.empty() || (variant != 1 && variant != 2))
        throw std::invalid_argument("bad arguments");
    const int n = static_cast<int>(Ms.size());
    long total = L;
    for (int M : Ms) {
        if (M < 0) throw std::invalid_argument("M_j must be >= 0");
        total += M;
    }
    const int bump = variant == 1 ? 1 : 2;

    SumConstantEstimate out;
    BigInt sum = 0;

    // assignments k', k'': slot 2i -> a_i', slot 2i+1 -> a_i''
    std::vector<int> kp(p), kpp(p);
    std::function<void(int)> assign = [&](int i) {
        if (i == p) {
            // per-M block slot lists in slot order
            std::vector<std::vector<int>> slots(n);
            for (int j = 0; j < p; ++j) {
                slots[kp[j]].push_back(2 * j);
                slots[kpp[j]].push_back(2 * j + 1);
            }
            for (int j = 0; j < n; ++j)
                if (slots[j].empty() && Ms[j] != 0) return;  // M_j cannot be partitioned

            // enumerate partitions of each M_j and of L
            std::vector<int> value(2 * p, 0);
            std::function<void(int)> part = [&](int j) {
                if (j == n) {
                    std::vector<int> lcur;
                    for_each_composition(L, p, lcur, [&](const std::vector<int>& ls) {
                        BigInt prod = 1;
                        for (int i2 = 0; i2 < p; ++i2) {
                            long d = value[2 * i2] + value[2 * i2 + 1] + ls[i2];
                            if (d >= total) {
                                prod = 0;
                                break;
                            }
                            prod *= factorial(d + bump);
                        }
                        if (prod != 0) {
                            sum += prod;
                            ++out.admissible_choices;
                        }
                    });
                    return;
                }
                std::vector<int> cur;
                for_each_composition(Ms[j], static_cast<int>(slots[j].size()), cur,
                                     [&](const std::vector<int>& vals) {
                                         for (std::size_t t = 0; t < vals.size(); ++t)
                                             value[slots[j][t]] = vals[t];
                                         part(j + 1);
                                     });
                if (slots[j].empty()) part(j + 1);
            };
            part(0);
            return;
        }
        for (kp[i] = 0; kp[i] < n; ++kp[i])
            for (kpp[i] = 0; kpp[i] < n; ++kpp[i])
                if (kp[i] != kpp[i]) assign(i + 1);
        return;
    };
    if (n >= 2) assign(0);

    out.ratio = make_rational(sum, factorial(total + (variant == 2 ? 1 : 0)));
    out.c_estimate = std::pow(to_double(out.ratio), 1.0 / p);
    return out;
}

double eval_partition_zeta_sum(long g) {
    if (g < 2) throw std::invalid_argument("needs g >= 2");
    double sum = 0.0, comp = 0.0;
    for (long n = 1; n < g; ++n) {
        double t = std::pow(double(g) / (double(n) * double(g - n)), 1.5);
        double y = t - comp;
        double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    return sum;
}

namespace {

// exact pairwise reduction; all-positive terms
Rational pairwise_sum(std::vector<Rational>& terms, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return terms[lo];
    std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(terms, lo, mid) + pairwise_sum(terms, mid, hi);
}

std::vector<BigInt> central_binomials(long n_max) {
    std::vector<BigInt> cb(n_max + 1);
    cb[0] = 1;
    for (long n = 1; n <= n_max; ++n) {
        cb[n] = cb[n - 1] * (2 * (2 * n - 1));
        mpz_divexact_ui(cb[n].get_mpz_t(), cb[n].get_mpz_t(), static_cast<unsigned long>(n));
    }
    return cb;
}

BigInt pow2(unsigned long e) { return BigInt(1) << e; }

}  // namespace

double eval_double_factorial_sums(long g, int which) {
    if (g < 4) throw std::invalid_argument("needs g >= 4");
    if (which < 1 || which > 3) throw std::invalid_argument("which must be 1, 2 or 3");

    const long nmax = g;
    std::vector<BigInt> cb = central_binomials(nmax);
    std::vector<Rational> terms;

    if (which == 1) {
        // sum_{g1+g2=g} (2g1-1)!!/(2g1)!! * (2g2-1)!!/(2g2)!! / ((2g1+1)(2g2+1))
        // term(n) = C(2n,n) C(2m,m) / (4^g (2n+1)(2m+1)), symmetric
        const BigInt denom_pow = pow2(static_cast<unsigned long>(2 * g));
        for (long n = 1; 2 * n <= g; ++n) {
            long m = g - n;
            BigInt num = cb[n] * cb[m];
            BigInt den = denom_pow * ((2 * n + 1)) * ((2 * m + 1));
            Rational t = make_rational(num, den);
            if (2 * n < g) t *= 2;
            terms.push_back(t);
        }
    } else if (which == 2) {
        // sum over g1+g2=g-1 of (2g1)!!/(2g1+1)!! * (2g2)!!/(2g2+1)!! / ((2g1+2)(2g2+2))
        // term(n) = 4^{g-1} / ((2n+1)(2m+1)(2n+2)(2m+2) C(2n,n) C(2m,m))
        const BigInt num_pow = pow2(static_cast<unsigned long>(2 * (g - 1)));
        for (long n = 1; 2 * n <= g - 1; ++n) {
            long m = g - 1 - n;
            BigInt den = cb[n] * cb[m];
            den *= BigInt(2 * n + 1) * (2 * m + 1) * (2 * n + 2) * (2 * m + 2);
            Rational t = make_rational(num_pow, den);
            if (2 * n < g - 1) t *= 2;
            terms.push_back(t);
        }
    } else {
        // sum over g1+g2=g-1 of (2g1-1)!!/(2g1)!! * (2g2)!!/(2g2+1)!!
        //                       / ((2g1+1)(2g2+2)); not symmetric
        for (long n = 1; n <= g - 2; ++n) {
            long m = g - 1 - n;
            // C(2n,n) 4^{m-n} / ((2n+1)(2m+1)(2m+2) C(2m,m))
            BigInt num = cb[n];
            BigInt den = cb[m] * BigInt(2 * n + 1) * (2 * m + 1) * (2 * m + 2);
            if (m >= n) {
                num *= pow2(static_cast<unsigned long>(2 * (m - n)));
            } else {
                den *= pow2(static_cast<unsigned long>(2 * (n - m)));
            }
            terms.push_back(make_rational(num, den));
        }
    }

    if (terms.empty()) return 0.0;
    Rational sum = pairwise_sum(terms, 0, terms.size());
    const mpfr_prec_t prec = 256;
    Mpf gf = Mpf::from(g, prec);
    Mpf value = Mpf::from(sum, prec) * gf * Mpf::sqrt(gf);
    return value.to_double();
}

double double_factorial_sum_limit(int which) {
    const mpfr_prec_t prec = 256;
    const Mpf pi = Mpf::pi(prec);
    const Mpf sqrt_pi = Mpf::sqrt(pi);
    const Mpf one = Mpf::from(1L, prec);
    const Mpf quarter = Mpf::from(Rational(1, 4), prec);
    switch (which) {
        case 1: return (sqrt_pi * (Mpf::from(Rational(1, 2), prec) - one / pi)).to_double();
        case 2: return (sqrt_pi * quarter * (pi * pi * quarter - one)).to_double();
        case 3:
            return (sqrt_pi * quarter *
                    (Mpf::from(Rational(3, 4), prec) * pi - one - one / pi))
                .to_double();
        default: throw std::invalid_argument("which must be 1, 2 or 3");
    }
}

double eval_series(SeriesKind which, long N) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    double sum = 0.0, comp = 0.0, ratio = 1.0;
    for (long n = 0; n <= N; ++n) {
        double term;
        if (which == SeriesKind::HalfPi) {
            if (n > 0) ratio *= double(2 * n - 1) / double(2 * n);  // (2n-1)!!/(2n)!!
            term = ratio / double(2 * n + 1);
        } else {
            if (n > 0) ratio *= double(2 * n) / double(2 * n + 1);  // (2n)!!/(2n+1)!!
            term = ratio / double(2 * n + 2);
        }
        double y = term - comp;
        double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    return sum;
}

double check_cancelling_factorials(int p, long g) {
    if (p < 1 || p > g) throw std::invalid_argument("needs 1 <= p <= g");
    // (2g)^{2p} / ((2g-2p+1) ... (2g))
    BigInt num;
    mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(2 * g),
                  static_cast<unsigned long>(2 * p));
    BigInt den = 1;
    for (long k = 2 * g - 2 * p + 1; k <= 2 * g; ++k) den *= static_cast<unsigned long>(k);
    return to_double(make_rational(num, den));
}

double euler_maclaurin_zeta(double s, long terms) {
    if (s <= 1.0) throw std::invalid_argument("needs s > 1");
    double sum = 0.0, comp = 0.0;
    for (long n = 1; n <= terms; ++n) {
        double t = std::pow(double(n), -s);
        double y = t - comp;
        double q = sum + y;
        comp = (q - sum) - y;
        sum = q;
    }
    const double N = static_cast<double>(terms);
    sum += std::pow(N, 1.0 - s) / (s - 1.0);
    sum -= 0.5 * std::pow(N, -s);
    sum += s * std::pow(N, -s - 1.0) / 12.0;
    sum -= s * (s + 1.0) * (s + 2.0) * std::pow(N, -s - 3.0) / 720.0;
    return sum;
}

Rational error_term_lemma_sum(long g, long c, long C) {
    if (g < 1) throw std::invalid_argument("needs g >= 1");
    Rational sum(0);
    BigInt Cp = 1;
    for (long p = 1; p <= g; ++p) {
        Cp *= C;
        Rational inner = Rational(1) + make_rational(BigInt(c) * Cp, BigInt(g));
        BigInt gpw;
        mpz_ui_pow_ui(gpw.get_mpz_t(), static_cast<unsigned long>(g),
                      static_cast<unsigned long>(2 * p - 2));
        sum += inner / Rational(gpw);
    }
    return sum;
}

}  // namespace svlab
