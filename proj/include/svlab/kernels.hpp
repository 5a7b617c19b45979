#pragma once

#include "svlab/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace svlab {

// Memoised factorials. The table is thread_local (reads never block) and
// grows lazily up to the cap; above the cap values are computed without
// being stored.
void set_factorial_memo_cap(std::size_t cap);
std::size_t factorial_memo_cap();

BigInt factorial(long n);

// n!! with the conventions (-1)!! = 0!! = 1; rejects n < -1.
BigInt double_factorial(long n);

BigInt binomial(unsigned long n, unsigned long k);

// a!/b! as an exact rational, computed as a falling product (never
// materialises either factorial when |a-b| is small).
Rational factorial_quotient(long a, long b);

// n(n-1)...(n-k+1), k factors.
BigInt falling_factorial(long n, unsigned long k);

}  // namespace svlab
