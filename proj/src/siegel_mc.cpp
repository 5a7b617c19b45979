#include "svlab/siegel_mc.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

namespace svlab {

double LatticeSample::b1x() const { return 1.0 / std::sqrt(tau_y); }
double LatticeSample::b2x() const { return tau_x / std::sqrt(tau_y); }
double LatticeSample::b2y() const { return tau_y / std::sqrt(tau_y); }

bool LatticeSample::in_fundamental_domain() const {
    return std::abs(tau_x) <= 0.5 && tau_x * tau_x + tau_y * tau_y >= 1.0 - 1e-15;
}

double LatticeSample::basis_determinant() const { return b1x() * b2y() - b1y() * b2x(); }

LatticeSample sample_lattice(UniformRng& rng) {
    // proposal: x uniform on [-1/2, 1/2], y with density prop. to 1/y^2 on
    // [sqrt(3)/2, inf) (inversion: y = y0/u); accept iff x^2 + y^2 >= 1
    const double y0 = std::sqrt(3.0) / 2.0;
    while (true) {
        double x = rng.next() - 0.5;
        double y = y0 / rng.next_open();
        if (x * x + y * y >= 1.0) return LatticeSample{x, y};
    }
}

namespace {

struct Vec2 {
    double x, y;
    double norm2() const { return x * x + y * y; }
};

long gcd_long(long a, long b) {
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Lagrange (Gauss) reduction; afterwards |b1| <= |b2| and |<b1,b2>| <= |b1|^2/2.
void lagrange_reduce(Vec2& b1, Vec2& b2) {
    if (b1.norm2() > b2.norm2()) std::swap(b1, b2);
    while (true) {
        double mu = (b1.x * b2.x + b1.y * b2.y) / b1.norm2();
        double t = std::round(mu);
        b2.x -= t * b1.x;
        b2.y -= t * b1.y;
        if (b2.norm2() < b1.norm2()) {
            std::swap(b1, b2);
        } else {
            break;
        }
    }
}

long count_reduced(Vec2 b1, Vec2 b2, double L, bool primitive_only) {
    lagrange_reduce(b1, b2);
    const double L2 = L * L;
    const double n1 = b1.norm2();
    // height of b2 over the b1-line; |det| = covolume
    const double det = std::abs(b1.x * b2.y - b1.y * b2.x);
    const double h = det / std::sqrt(n1);
    const double dot = b1.x * b2.x + b1.y * b2.y;
    long count = 0;
    const long nmax = static_cast<long>(std::floor(L / h)) + 1;
    for (long n = -nmax; n <= nmax; ++n) {
        // |m b1 + n b2|^2 = n1 (m + n dot/n1)^2 + n^2 h^2
        const double rest = L2 - double(n) * double(n) * h * h;
        if (rest < 0) continue;
        const double center = -double(n) * dot / n1;
        const double half = std::sqrt(rest / n1);
        long mlo = static_cast<long>(std::ceil(center - half - 1e-9));
        long mhi = static_cast<long>(std::floor(center + half + 1e-9));
        for (long m = mlo; m <= mhi; ++m) {
            if (m == 0 && n == 0) continue;
            const double wx = m * b1.x + n * b2.x;
            const double wy = m * b1.y + n * b2.y;
            if (wx * wx + wy * wy > L2) continue;
            if (primitive_only && gcd_long(std::labs(m), std::labs(n)) != 1) continue;
            ++count;
        }
    }
    return count;
}

}  // namespace

long count_vectors_basis(double b1x, double b1y, double b2x, double b2y, double L,
                         bool primitive_only) {
    if (L <= 0) throw std::invalid_argument("radius must be positive");
    return count_reduced(Vec2{b1x, b1y}, Vec2{b2x, b2y}, L, primitive_only);
}

long count_vectors(const LatticeSample& s, double L, bool primitive_only) {
    return count_vectors_basis(s.b1x(), s.b1y(), s.b2x(), s.b2y(), L, primitive_only);
}

long count_vectors_bruteforce(const LatticeSample& s, double L, bool primitive_only) {
    if (L <= 0) throw std::invalid_argument("radius must be positive");
    Vec2 b1{s.b1x(), s.b1y()}, b2{s.b2x(), s.b2y()};
    lagrange_reduce(b1, b2);
    // q(m,n) >= (3/4) max(m,n)^2 |b1|^2 for a reduced basis, so the box
    // ceil(2L/(sqrt(3)|b1|)) is complete
    const long box = static_cast<long>(std::ceil(2.0 * L / (std::sqrt(3.0 * b1.norm2())))) + 1;
    const double L2 = L * L;
    long count = 0;
    for (long m = -box; m <= box; ++m)
        for (long n = -box; n <= box; ++n) {
            if (m == 0 && n == 0) continue;
            const double wx = m * b1.x + n * b2.x;
            const double wy = m * b1.y + n * b2.y;
            if (wx * wx + wy * wy > L2) continue;
            if (primitive_only && gcd_long(std::labs(m), std::labs(n)) != 1) continue;
            ++count;
        }
    return count;
}

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}
}  // namespace

SiegelReport siegel_average(long samples, double L, std::uint64_t seed, bool primitive_only,
                            int threads) {
    if (samples < 100) throw std::invalid_argument("need at least 100 samples");
    if (L <= 0) throw std::invalid_argument("radius must be positive");
    const auto t0 = std::chrono::steady_clock::now();

    // fixed substream partition, independent of thread count
    const int W = 64;
    std::vector<double> sub_sum(W, 0.0), sub_sumsq(W, 0.0);
    auto run_substream = [&](int w) {
        const long lo = samples * w / W;
        const long hi = samples * (w + 1) / W;
        UniformRng rng(splitmix64(seed ^ (0x5555AAAAull + static_cast<std::uint64_t>(w) * 0x1000193ull)));
        double s = 0.0, s2 = 0.0;
        for (long i = lo; i < hi; ++i) {
            LatticeSample lat = sample_lattice(rng);
            const double c = static_cast<double>(count_vectors(lat, L, primitive_only));
            s += c;
            s2 += c * c;
        }
        sub_sum[w] = s;
        sub_sumsq[w] = s2;
    };

    int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;
    if (nthreads > W) nthreads = W;
    std::vector<std::thread> pool;
    std::atomic_int next_w{0};
    for (int t = 0; t < nthreads; ++t)
        pool.emplace_back([&]() {
            while (true) {
                int w = next_w.fetch_add(1);
                if (w >= W) return;
                run_substream(w);
            }
        });
    for (auto& th : pool) th.join();

    const double total = std::accumulate(sub_sum.begin(), sub_sum.end(), 0.0);
    const double total_sq = std::accumulate(sub_sumsq.begin(), sub_sumsq.end(), 0.0);
    const double n = static_cast<double>(samples);
    const double mean = total / n;
    const double var = (total_sq - n * mean * mean) / (n - 1.0);
    const double se = std::sqrt(var / n);

    SiegelReport r;
    r.samples = samples;
    r.radius = L;
    r.seed = seed;
    r.primitive = primitive_only;
    r.estimate = mean;
    r.target = M_PI * L * L;
    r.std_error = se;
    r.z_score = (mean - r.target) / se;
    r.mean_ratio = mean / r.target;
    r.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string siegel_report_to_json(const SiegelReport& r) {
    std::ostringstream out;
    out.precision(10);
    out << "{\"samples\":" << r.samples << ",\"radius\":" << r.radius << ",\"seed\":" << r.seed
        << ",\"primitive\":" << (r.primitive ? "true" : "false")
        << ",\"estimate\":" << r.estimate << ",\"target\":" << r.target
        << ",\"std_error\":" << r.std_error << ",\"z_score\":" << r.z_score
        << ",\"mean_ratio\":" << r.mean_ratio << ",\"wall_seconds\":" << r.wall_seconds << "}";
    return out.str();
}

}  // namespace svlab
