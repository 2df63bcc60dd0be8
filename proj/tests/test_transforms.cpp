#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hausdorff/kernel_pair.hpp"
#include "hausdorff/transforms.hpp"
#include "support/oracles.hpp"

using namespace hausdorff;

namespace {
const Grid kT = Grid::default_t_grid();
const Grid kS = Grid::default_s_grid();
constexpr double kInvSqrt2Pi = 0.3989422804014326779;

SampledLine gaussian_line(const Grid& g) {
    return SampledLine::sample(
        g, [](double t) { return cd(kInvSqrt2Pi * std::exp(-0.5 * t * t), 0.0); });
}

SampledLine hardy_plus_line(const Grid& g) {
    return SampledLine::sample(g, [](double t) -> cd {
        if (t < 0.0) return std::exp(0.5 * t);
        if (t == 0.0) return 0.5;
        return 0.0;
    });
}
}  // namespace

TEST_CASE("forward transform equals the direct trapezoid sum (chirp correctness)") {
    const auto g = gaussian_line(kT);
    const auto out = fourier_l1(g, kS, Direction::forward);
    for (std::size_t k = 100; k < kS.size(); k += 1171) {
        const cd ref = oracles::direct_dft(g.values, kT.t_min(), kT.step(), kS.node(k));
        CHECK(std::abs(out.values[k] - ref) < 1e-11 * g.l1());
    }
}

TEST_CASE("gaussian closed form: g^(s) = e^{-s^2/2}") {
    const auto g = gaussian_line(kT);
    const auto out = fourier_l1(g, kS, Direction::forward);
    const std::size_t i0 = 4096;  // s = 0
    CHECK(std::abs(out.values[i0] - cd(1.0, 0.0)) < 1e-9);
    const std::size_t i1 = i0 + 64;  // s = 1
    CHECK(kS.node(i1) == 1.0);
    CHECK(std::abs(out.values[i1] - cd(std::exp(-0.5), 0.0)) < 1e-9);
    // Bandlimited-within-grid accuracy promise.
    double sup_err = 0.0;
    for (std::size_t k = 0; k < kS.size(); k += 7) {
        const double s = kS.node(k);
        sup_err = std::max(sup_err, std::abs(out.values[k] - cd(std::exp(-0.5 * s * s), 0.0)));
    }
    CHECK(sup_err <= 1e-8 * g.l1());
}

TEST_CASE("hardy transform: g^(s) = 1/(1/2 - is) to sampled-jump accuracy") {
    const auto g = hardy_plus_line(kT);
    const auto out = fourier_l1(g, kS, Direction::forward);
    CHECK(std::abs(out.values[4096] - cd(2.0, 0.0)) < 1e-5);
    const cd expected = 1.0 / cd(0.5, -1.0);
    CHECK(std::abs(out.values[4096 + 64] - expected) < 1e-5);
}

TEST_CASE("zero transforms to zero") {
    const auto out = fourier_l1(SampledLine::zeros(kT), kS, Direction::forward);
    CHECK(out.sup() == 0.0);
}

TEST_CASE("fourier inversion on a smooth compactly-supported function") {
    const auto g = gaussian_line(kT);
    const auto spec = fourier_l1(g, kS, Direction::forward);
    const auto back = fourier_l1(spec, kT, Direction::inverse);
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < kT.size(); ++j) {
        num += std::abs(back.values[j] - g.values[j]);
        den += std::abs(g.values[j]);
    }
    CHECK(num / den < 1e-6);
}

TEST_CASE("riemann-lebesgue at the s-grid edge") {
    for (const auto& g : {gaussian_line(kT), hardy_plus_line(kT)}) {
        const auto out = fourier_l1(g, kS, Direction::forward);
        const double edge = std::max(std::abs(out.values.front()), std::abs(out.values.back()));
        CHECK(edge <= 1e-2 * out.sup());
    }
}

TEST_CASE("convolution matches the brute-force sum exactly on the lattice") {
    const Grid small = Grid::over_range(-8.0, 8.0, 1 << 9);
    const auto g1 = SampledLine::sample(small, [](double t) {
        return cd(std::exp(-t * t), 0.3 * std::exp(-2.0 * (t - 0.5) * (t - 0.5)));
    });
    const auto g2 = SampledLine::sample(small, [](double t) {
        return cd(std::exp(-1.5 * (t + 0.3) * (t + 0.3)), 0.0);
    });
    const auto conv = convolve(g1, g2, 1e-3);
    const long long q = small.origin_index();
    for (std::size_t i = 5; i < small.size(); i += 41) {
        const cd ref = oracles::direct_conv_at(g1.values, g2.values, small.step(),
                                               static_cast<long long>(i) - q);
        CHECK(std::abs(conv.line.values[i] - ref) < 1e-12 * std::max(1.0, std::abs(ref)));
    }
}

TEST_CASE("hardy squared: K+ * K+ = -t e^{t/2} on t <= 0") {
    const auto g = hardy_plus_line(kT);
    const auto conv = convolve(g, g, 1e-6);
    // Value at t = -1 (between nodes): e^{-1/2}.
    const cd at_m1 = conv.line.interpolate(-1.0);
    CHECK(std::abs(at_m1 - cd(std::exp(-0.5), 0.0)) < 1e-4);
    // On-node comparison against the closed form.
    for (std::size_t j = 4000; j <= 8192; j += 700) {
        const double t = kT.node(j);
        CHECK(std::abs(conv.line.values[j] - cd(-t * std::exp(0.5 * t), 0.0)) < 1e-4);
    }
    CHECK(conv.truncation_mass < 1e-6 * g.l1() * g.l1());
}

TEST_CASE("convolving with zero gives zero") {
    const auto g = hardy_plus_line(kT);
    const auto conv = convolve(g, SampledLine::zeros(kT), 1e-8);
    CHECK(conv.line.sup() == 0.0);
    CHECK(conv.truncation_mass == 0.0);
}

TEST_CASE("convolution truncation raises grid-too-small") {
    const Grid small = Grid::over_range(-10.0, 10.0, 1 << 9);
    const auto heavy = SampledLine::sample(small, [](double t) {
        return cd(1.0 / (1.0 + t * t), 0.0);
    });
    CHECK_THROWS_AS(convolve(heavy, heavy, 1e-8), GridTooSmallError);
    CHECK_THROWS_AS(convolve(heavy, SampledLine::zeros(kT), 1e-8), GridMismatchError);
}

TEST_CASE("convolution theorem property on random smooth pairs") {
    std::mt19937_64 rng(314);
    std::uniform_real_distribution<double> width(0.4, 2.5), center(-4.0, 4.0), amp(-2.0, 2.0);
    for (int trial = 0; trial < 8; ++trial) {
        const double w1 = width(rng), c1 = center(rng), a1 = amp(rng);
        const double w2 = width(rng), c2 = center(rng), a2 = amp(rng);
        const auto g1 = SampledLine::sample(kT, [&](double t) {
            return cd(a1 * std::exp(-(t - c1) * (t - c1) / (2.0 * w1 * w1)),
                      0.5 * a1 * std::exp(-(t + c1) * (t + c1) / (2.0 * w1 * w1)));
        });
        const auto g2 = SampledLine::sample(kT, [&](double t) {
            return cd(a2 * std::exp(-(t - c2) * (t - c2) / (2.0 * w2 * w2)), 0.0);
        });
        const auto conv = convolve(g1, g2, 1e-6);
        const auto lhs = fourier_l1(conv.line, kS, Direction::forward);
        const auto f1 = fourier_l1(g1, kS, Direction::forward);
        const auto f2 = fourier_l1(g2, kS, Direction::forward);
        double sup = 0.0;
        for (std::size_t k = 0; k < kS.size(); k += 3)
            sup = std::max(sup, std::abs(lhs.values[k] - f1.values[k] * f2.values[k]));
        CHECK(sup <= 1e-6 * g1.l1() * g2.l1());
    }
}

TEST_CASE("convolution theorem on the hardy/gaussian pair") {
    const auto g1 = hardy_plus_line(kT);
    const auto g2 = gaussian_line(kT);
    const auto conv = convolve(g1, g2, 1e-6);
    const auto lhs = fourier_l1(conv.line, kS, Direction::forward);
    const auto f1 = fourier_l1(g1, kS, Direction::forward);
    const auto f2 = fourier_l1(g2, kS, Direction::forward);
    double sup = 0.0;
    for (std::size_t k = 0; k < kS.size(); ++k)
        sup = std::max(sup, std::abs(lhs.values[k] - f1.values[k] * f2.values[k]));
    CHECK(sup <= 1e-7);  // within the example tolerance; budget is 1e-6*l1*l1
}

TEST_CASE("mellin forward: indicator closed form") {
    // g(x) = x^{-1/2} on [1, e]: in t-coordinates G(t) = 1 on [-1, 0].
    const auto g = SampledLine::sample(kT, [](double t) -> cd {
        const double x = std::exp(-t);
        if (x > 1.0 && x < std::exp(1.0)) return std::exp(0.5 * t);
        if (x == 1.0 || x == std::exp(1.0)) return 0.5 * std::exp(0.5 * t);
        return 0.0;
    });
    const auto m = mellin_halfline(g, kS, Direction::forward);
    CHECK(std::abs(m.values[4096] - cd(kInvSqrt2Pi, 0.0)) < 3e-3);  // jump-limited sampling
    const double s1 = 1.0;
    const cd expected = kInvSqrt2Pi * (1.0 - std::exp(cd(0.0, -s1))) / cd(0.0, s1);
    CHECK(std::abs(m.values[4096 + 64] - expected) < 3e-3);
}

TEST_CASE("mellin is unitary on a smooth bump and inverts") {
    // f(x) = x^{-1/2} e^{-ln(x)^2/2}; ||f||_{L2(0,inf)}^2 = int e^{-t^2} dt.
    const auto g = SampledLine::sample(kT, [](double t) {
        return cd(std::exp(0.5 * t - 0.5 * t * t), 0.0);
    });
    double xnorm2 = 0.0;
    for (std::size_t j = 0; j < kT.size(); ++j) {
        const double w = (j == 0 || j + 1 == kT.size()) ? 0.5 * kT.step() : kT.step();
        xnorm2 += w * std::exp(-kT.node(j)) * std::norm(g.values[j]);
    }
    const auto m = mellin_halfline(g, kS, Direction::forward);
    CHECK(std::abs(m.l2() / std::sqrt(xnorm2) - 1.0) < 1e-6);  // Plancherel

    const auto back = mellin_halfline(m, kT, Direction::inverse);
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < kT.size(); ++j) {
        const double w = std::exp(-kT.node(j));
        num += w * std::norm(back.values[j] - g.values[j]);
        den += w * std::norm(g.values[j]);
    }
    CHECK(std::sqrt(num / den) < 1e-6);
}

TEST_CASE("mellin of zero is zero") {
    const auto m = mellin_halfline(SampledLine::zeros(kT), kS, Direction::forward);
    CHECK(m.sup() == 0.0);
}
