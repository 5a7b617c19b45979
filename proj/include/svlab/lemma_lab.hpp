#pragma once

#include "svlab/rational.hpp"

#include <string>
#include <vector>

namespace svlab {

struct LemmaCheck {
    bool precondition_ok = true;
    bool holds = false;
    std::string note;
};

// prod (A_i+r)!/(A+r-1)! <= prod (B_i+r)!/(B+r-1)!  for 0 <= B_i <= A_i,
// B_i < B. Exact arithmetic via cross-multiplication.
LemmaCheck check_lemma_factorial_comparison(int p, int r, const std::vector<int>& A,
                                            const std::vector<int>& B);

// prod (2l_i+a_i+r)!/prod l_i! <= 2^{rp} C(sum(2l_i+a_i), sum l_i) prod (l_i+a_i+r)!
bool check_lemma_product_binomials(int p, int r, const std::vector<int>& l,
                                   const std::vector<int>& a);

// prod (A_i+3+r)! <= (3+r)!^{p-1} (A+r)!  for p >= 2, A >= r, A_i <= A-3.
LemmaCheck check_lemma_ingredient(int p, int r, int A, const std::vector<int>& parts);

struct SweepReport {
    long cases = 0;
    long violations = 0;
    long precondition_rejections = 0;
};

SweepReport sweep_lemma_factorial_comparison(int p_max, int part_max, int r_max);
SweepReport sweep_lemma_product_binomials(int p_max, int value_max, int r_max);
SweepReport sweep_lemma_ingredient(int p_max, int A_max, int r_max);

// Partition-sum bound: sums prod (a_i'+a_i''+l_i+1)! (variant 1; +2 and a
// shifted denominator for variant 2) over all admissible block assignments
// and partitions, divided by (M_1+...+M_n+L)! resp. (...+1)!. Returns the
// exact ratio and its p-th root as an empirical constant estimate.
struct SumConstantEstimate {
    Rational ratio;
    double c_estimate = 0.0;
    long admissible_choices = 0;
};
SumConstantEstimate estimate_lemma_sum_constant(int p, const std::vector<int>& Ms, int L,
                                                int variant);

// sum_{g1+g2=g} g^{3/2}/(g1 g2)^{3/2}  ->  2 zeta(3/2)
double eval_partition_zeta_sum(long g);

// The three double-factorial partition sums; exact-rational summation,
// converted to float once at the end. `which` is 1, 2 or 3.
double eval_double_factorial_sums(long g, int which);
// limits sqrt(pi)(1/2-1/pi), (sqrt(pi)/4)(pi^2/4-1), (sqrt(pi)/4)(3pi/4-1-1/pi)
double double_factorial_sum_limit(int which);

enum class SeriesKind { HalfPi, PiSqOverEight };
// Partial sums n = 0..N of (2n-1)!!/((2n+1)(2n)!!) resp. (2n)!!/((2n+2)(2n+1)!!);
// compensated floating summation (exact summation is out of reach at N ~ 1e6,
// the induced error is ~1e-9 against targets pi/2 and pi^2/8).
double eval_series(SeriesKind which, long N);

// (2g-2p)! (2g)^{2p} / (2g)!  ->  1, computed exactly, returned as float.
double check_cancelling_factorials(int p, long g);

// In-repo zeta oracle (Euler-Maclaurin with tail correction), s > 1.
double euler_maclaurin_zeta(double s, long terms = 10000);

// sum_{p=1}^{g} g^{-(2p-2)} (1 + (c/g) C^p), exact.
Rational error_term_lemma_sum(long g, long c, long C);

}  // namespace svlab
