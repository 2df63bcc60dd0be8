#include "hausdorff/transforms.hpp"

#include <cmath>
#include <string>

#include "hausdorff/errors.hpp"
#include "hausdorff/fft.hpp"

namespace hausdorff {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;
constexpr double kInvSqrtTwoPi = 0.3989422804014326779399461;

std::vector<cd> weighted_values(const SampledLine& g) {
    std::vector<cd> a = g.values;
    const double h = g.grid.step();
    for (auto& z : a) z *= h;
    a.front() *= 0.5;
    a.back() *= 0.5;
    return a;
}

}  // namespace

SampledLine fourier_l1(const SampledLine& g, const Grid& target, Direction dir) {
    auto a = weighted_values(g);
    const Grid& in = g.grid;
    std::vector<cd> out;
    if (dir == Direction::forward) {
        // sum_j w_j g_j e^{-i s_k t_j}
        out = fft::exponential_sum(a, in.t_min(), in.step(), target.t_min(), target.step(),
                                   target.size());
    } else {
        // (2 pi)^{-1} sum_k w_k g^_k e^{+i s_k t_j}: negate the output grid to
        // flip the kernel sign inside the same chirp machinery.
        out = fft::exponential_sum(a, in.t_min(), in.step(), -target.t_min(), -target.step(),
                                   target.size());
        for (auto& z : out) z /= kTwoPi;
    }
    return SampledLine(target, std::move(out));
}

ConvolutionResult convolve(const SampledLine& g1, const SampledLine& g2, double tail_tol) {
    if (g1.grid != g2.grid) throw GridMismatchError("convolution requires identical grids");
    const Grid& grid = g1.grid;
    const std::size_t n = grid.size();
    const double h = grid.step();

    const std::size_t N = 2 * n;
    std::vector<cd> A(N, cd(0.0, 0.0)), B(N, cd(0.0, 0.0));
    std::copy(g1.values.begin(), g1.values.end(), A.begin());
    std::copy(g2.values.begin(), g2.values.end(), B.begin());
    fft::fft_pow2(A, false);
    fft::fft_pow2(B, false);
    for (std::size_t i = 0; i < N; ++i) A[i] *= B[i];
    fft::fft_pow2(A, true);
    // A[m] now holds the linear convolution sum at lattice point 2*t_min + m*h.

    // Node t_i of the common grid sits at convolution index m = i - q, where
    // q = t_min/h (integral by the lattice convention).
    const long long q = grid.origin_index();
    std::vector<cd> out(n, cd(0.0, 0.0));
    double left_mass = 0.0, right_mass = 0.0;
    const long long lo = -q;                                  // m of grid node 0
    const long long hi = lo + static_cast<long long>(n) - 1;  // m of grid node n-1
    for (long long m = 0; m < static_cast<long long>(2 * n - 1); ++m) {
        const double mag = std::abs(A[static_cast<std::size_t>(m)]);
        if (m < lo)
            left_mass += mag;
        else if (m > hi)
            right_mass += mag;
        else
            out[static_cast<std::size_t>(m - lo)] = h * A[static_cast<std::size_t>(m)];
    }
    left_mass *= h * h;   // one h scales the convolution sum, one the mass sum
    right_mass *= h * h;

    ConvolutionResult res;
    res.line = SampledLine(grid, std::move(out));
    res.truncation_mass = left_mass + right_mass;

    const double scale = g1.l1() * g2.l1();
    if (scale > 0.0 && res.truncation_mass > tail_tol * scale) {
        const bool l = left_mass > 0.5 * tail_tol * scale;
        const bool r = right_mass > 0.5 * tail_tol * scale;
        const std::string end = (l && r) ? "both" : (l ? "left" : "right");
        throw GridTooSmallError("convolution mass truncated at the " + end +
                                    " end of the grid window",
                                res.truncation_mass, end);
    }
    return res;
}

SampledLine mellin_halfline(const SampledLine& g, const Grid& target, Direction dir) {
    const Grid& in = g.grid;
    if (dir == Direction::forward) {
        // G(t) = g(e^{-t}) e^{-t/2};  (M g)(s) = (2 pi)^{-1/2} int G(t) e^{+i s t} dt.
        std::vector<cd> a = g.values;
        for (std::size_t j = 0; j < a.size(); ++j) a[j] *= std::exp(-0.5 * in.node(j));
        SampledLine weighted(in, std::move(a));
        auto w = weighted_values(weighted);
        auto out = fft::exponential_sum(w, in.t_min(), in.step(), -target.t_min(),
                                        -target.step(), target.size());
        for (auto& z : out) z *= kInvSqrtTwoPi;
        return SampledLine(target, std::move(out));
    }
    // Inverse: G(t) = (2 pi)^{-1/2} int (M g)(s) e^{-i s t} ds, then undo the weight.
    auto w = weighted_values(g);
    auto out = fft::exponential_sum(w, in.t_min(), in.step(), target.t_min(), target.step(),
                                    target.size());
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] *= kInvSqrtTwoPi * std::exp(0.5 * target.node(j));
    return SampledLine(target, std::move(out));
}

}  // namespace hausdorff
