#include "svlab/kernels.hpp"

#include <atomic>

namespace svlab {

namespace {
std::atomic<std::size_t> g_memo_cap{1000000};

std::vector<BigInt>& memo_table() {
    thread_local std::vector<BigInt> table{BigInt(1)};  // 0! = 1
    return table;
}
}  // namespace

void set_factorial_memo_cap(std::size_t cap) { g_memo_cap.store(cap); }
std::size_t factorial_memo_cap() { return g_memo_cap.load(); }

BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    auto& table = memo_table();
    const std::size_t cap = g_memo_cap.load();
    const auto un = static_cast<std::size_t>(n);
    if (un < table.size()) return table[un];
    if (un <= cap) {
        table.reserve(un + 1);
        while (table.size() <= un) {
            table.push_back(table.back() * static_cast<unsigned long>(table.size()));
        }
        return table[un];
    }
    BigInt r = table.back();
    for (std::size_t k = table.size(); k <= un; ++k) r *= static_cast<unsigned long>(k);
    return r;
}

BigInt double_factorial(long n) {
    if (n < -1) throw std::invalid_argument("double factorial needs n >= -1");
    BigInt r = 1;
    for (long k = n; k > 1; k -= 2) r *= static_cast<unsigned long>(k);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt falling_factorial(long n, unsigned long k) {
    BigInt r = 1;
    for (unsigned long i = 0; i < k; ++i) r *= BigInt(n - static_cast<long>(i));
    return r;
}

Rational factorial_quotient(long a, long b) {
    if (a < 0 || b < 0) throw std::invalid_argument("factorial_quotient of negative argument");
    if (a == b) return Rational(1);
    if (a > b) {
        BigInt num = 1;
        for (long k = b + 1; k <= a; ++k) num *= static_cast<unsigned long>(k);
        return Rational(num);
    }
    BigInt den = 1;
    for (long k = a + 1; k <= b; ++k) den *= static_cast<unsigned long>(k);
    return make_rational(BigInt(1), den);
}

}  // namespace svlab
