#include "hausdorff/fft.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "hausdorff/errors.hpp"
#include "hausdorff/grid.hpp"

namespace hausdorff::fft {

namespace {

constexpr long double kTwoPiL = 6.283185307179586476925286766559005768L;

// Root table w[j] = e^{-2πi j/N}, j < N/2, cached per size.
std::shared_ptr<const std::vector<cd>> root_table(std::size_t n) {
    static std::mutex mu;
    static std::unordered_map<std::size_t, std::shared_ptr<const std::vector<cd>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto table = std::make_shared<std::vector<cd>>(n / 2);
    for (std::size_t j = 0; j < n / 2; ++j) {
        const long double ang = -kTwoPiL * static_cast<long double>(j) / static_cast<long double>(n);
        (*table)[j] = cd(static_cast<double>(cosl(ang)), static_cast<double>(sinl(ang)));
    }
    cache.emplace(n, table);
    return table;
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

}  // namespace

cd unit_phase(long double angle) {
    const long double r = remainderl(angle, kTwoPiL);
    return cd(static_cast<double>(cosl(r)), static_cast<double>(sinl(r)));
}

void fft_pow2(std::vector<cd>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0) return;
    if (!is_power_of_two(n)) throw GridMismatchError("fft size must be a power of two");
    if (n == 1) return;

    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    const auto roots = root_table(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                cd w = (*roots)[k * stride];
                if (inverse) w = std::conj(w);
                const cd u = a[i + k];
                const cd v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
    if (inverse) {
        const double inv_n = 1.0 / static_cast<double>(n);
        for (auto& z : a) z *= inv_n;
    }
}

std::vector<cd> exponential_sum(const std::vector<cd>& a, double t0, double dt,
                                double s0, double ds, std::size_t m) {
    const std::size_t n = a.size();
    std::vector<cd> out(m, cd(0.0, 0.0));
    if (n == 0 || m == 0) return out;

    const long double alpha = static_cast<long double>(ds) * static_cast<long double>(dt);
    const long double s0t0 = static_cast<long double>(s0) * static_cast<long double>(t0);
    const long double s0dt = static_cast<long double>(s0) * static_cast<long double>(dt);
    const long double dst0 = static_cast<long double>(ds) * static_cast<long double>(t0);

    const std::size_t L = next_pow2(n + m - 1);
    std::vector<cd> U(L, cd(0.0, 0.0));
    std::vector<cd> V(L, cd(0.0, 0.0));

    for (std::size_t j = 0; j < n; ++j) {
        const long double jj = static_cast<long double>(j);
        U[j] = a[j] * unit_phase(-(s0dt * jj + alpha * jj * jj / 2.0L));
    }
    // v_p = e^{+i α p²/2}, p in [-(n-1), m-1], wrapped mod L.
    for (long long p = -(static_cast<long long>(n) - 1); p < static_cast<long long>(m); ++p) {
        const long double pp = static_cast<long double>(p);
        const std::size_t idx = static_cast<std::size_t>((p + static_cast<long long>(L)) % static_cast<long long>(L));
        V[idx] = unit_phase(alpha * pp * pp / 2.0L);
    }

    fft_pow2(U, false);
    fft_pow2(V, false);
    for (std::size_t i = 0; i < L; ++i) U[i] *= V[i];
    fft_pow2(U, true);

    for (std::size_t k = 0; k < m; ++k) {
        const long double kk = static_cast<long double>(k);
        out[k] = U[k] * unit_phase(-(s0t0 + dst0 * kk + alpha * kk * kk / 2.0L));
    }
    return out;
}

DualLattice dual_lattice(double h, std::size_t N) {
    DualLattice d;
    d.hs = kTwoPiL / (static_cast<long double>(h) * static_cast<long double>(N));
    d.s0 = -d.hs * static_cast<double>(N / 2);
    return d;
}

std::vector<cd> lattice_forward(const std::vector<cd>& x, double t0, double h) {
    const std::size_t N = x.size();
    if (!is_power_of_two(N)) throw GridMismatchError("lattice transform size must be a power of two");
    const DualLattice d = dual_lattice(h, N);

    // s_k t_j = s0 t0 + (-π) j + hs t0 k + 2π kj/N, since s0*h = -π exactly.
    std::vector<cd> work(N);
    for (std::size_t j = 0; j < N; ++j) work[j] = (j & 1) ? -x[j] : x[j];
    fft_pow2(work, false);

    const long double s0t0 = static_cast<long double>(d.s0) * static_cast<long double>(t0);
    const long double hst0 = static_cast<long double>(d.hs) * static_cast<long double>(t0);
    for (std::size_t k = 0; k < N; ++k) {
        const long double kk = static_cast<long double>(k);
        work[k] *= h * unit_phase(-(s0t0 + hst0 * kk));
    }
    return work;
}

std::vector<cd> lattice_inverse(const std::vector<cd>& X, double t0, double h) {
    const std::size_t N = X.size();
    if (!is_power_of_two(N)) throw GridMismatchError("lattice transform size must be a power of two");
    const DualLattice d = dual_lattice(h, N);

    const long double s0t0 = static_cast<long double>(d.s0) * static_cast<long double>(t0);
    const long double hst0 = static_cast<long double>(d.hs) * static_cast<long double>(t0);
    std::vector<cd> work(N);
    for (std::size_t k = 0; k < N; ++k) {
        const long double kk = static_cast<long double>(k);
        work[k] = X[k] * unit_phase(s0t0 + hst0 * kk) / h;
    }
    fft_pow2(work, true);
    for (std::size_t j = 0; j < N; ++j)
        if (j & 1) work[j] = -work[j];
    return work;
}

}  // namespace hausdorff::fft
