#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hausdorff/algebra.hpp"
#include "hausdorff/funcalc.hpp"

using namespace hausdorff;

namespace {
const Grid kT = Grid::default_t_grid();
const Grid kS = Grid::default_s_grid();

HausdorffOperator make(const Kernel& k) {
    return HausdorffOperator(k, ScalingFunction::reciprocal(), kT, kS);
}

double pair_sup_diff(const KernelPair& a, const KernelPair& b) {
    double m = 0.0;
    for (std::size_t j = 0; j < a.kplus.size(); ++j) {
        m = std::max(m, std::abs(a.kplus[j] - b.kplus[j]));
        m = std::max(m, std::abs(a.kminus[j] - b.kminus[j]));
    }
    return m;
}
}  // namespace

TEST_CASE("eigenprojection forms") {
    const auto id = HolomorphicFunction::identity();
    const cd z1(0.7, -0.2), z2(1.1, 0.4);
    const auto [f1, f2] = f1_f2_eigen(id, z1, z2);
    CHECK(std::abs(f1 - z2) < 1e-15);
    CHECK(std::abs(f2 - z1) < 1e-15);

    const auto [g1, g2] = f1_f2_eigen(HolomorphicFunction::square(), cd(1.0, 0.0), cd(2.0, 0.0));
    CHECK(std::abs(g1 - cd(5.0, 0.0)) < 1e-14);
    CHECK(std::abs(g2 - cd(4.0, 0.0)) < 1e-14);

    const HolomorphicFunction zero{[](cd) { return cd(0.0, 0.0); }, "0", {}};
    const auto [h1, h2] = f1_f2_eigen(zero, z1, z2);
    CHECK(h1 == cd(0.0, 0.0));
    CHECK(h2 == cd(0.0, 0.0));
}

TEST_CASE("contour integrals reproduce the spec examples") {
    const auto gamma = Contour::circle(cd(0.0, 0.0), 3.0);

    const auto [f1, f2] = f1_f2_contour(HolomorphicFunction::identity(), gamma, 1.0, 1.0);
    CHECK(std::abs(f1 - cd(1.0, 0.0)) < 1e-10);
    CHECK(std::abs(f2 - cd(1.0, 0.0)) < 1e-10);

    const auto [g1, g2] = f1_f2_contour(HolomorphicFunction::identity(), gamma, 0.0, 0.5);
    CHECK(std::abs(g1 - cd(0.5, 0.0)) < 1e-10);
    CHECK(std::abs(g2) < 1e-12);

    const cd z1(0.4, 0.3), z2(-0.7, 0.1);
    const auto [q1, q2] = f1_f2_contour(HolomorphicFunction::square(), gamma, z1, z2);
    CHECK(std::abs(q1 - (z2 * z2 + z1 * z1)) < 1e-10);
    CHECK(std::abs(q2 - 2.0 * z1 * z2) < 1e-10);
}

TEST_CASE("contour vs eigenprojection on 200 random interior points") {
    const auto gamma = Contour::circle(cd(0.2, -0.1), 2.5);
    const cd resolvent_pole(4.0, 1.0);  // outside the contour
    const std::vector<HolomorphicFunction> fns = {
        HolomorphicFunction::identity(), HolomorphicFunction::square(),
        HolomorphicFunction::cube(), HolomorphicFunction::resolvent(resolvent_pole)};

    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> d(-0.9, 0.9);
    for (int trial = 0; trial < 200; ++trial) {
        const cd z1(d(rng), d(rng)), z2(cd(0.2, -0.1) + cd(d(rng), d(rng)));
        for (const auto& F : fns) {
            const auto contour = f1_f2_contour(F, gamma, z1, z2);
            const auto eigen = f1_f2_eigen(F, z1, z2);
            const double scale = std::max(1.0, std::abs(eigen.first) + std::abs(eigen.second));
            CHECK(std::abs(contour.first - eigen.first) <= 1e-8 * scale);
            CHECK(std::abs(contour.second - eigen.second) <= 1e-8 * scale);
        }
    }
}

TEST_CASE("cauchy independence: circle vs rectangle") {
    const auto circle = Contour::circle(cd(0.3, 0.0), 2.0);
    const auto rect = Contour::rectangle(cd(-2.1, -1.7), cd(2.8, 1.9));
    for (const cd z1 : {cd(0.5, 0.1), cd(0.0, 0.0), cd(-0.3, 0.4)}) {
        const cd z2(0.4, -0.2);
        const auto a = f1_f2_contour(HolomorphicFunction::cube(), circle, z1, z2);
        const auto b = f1_f2_contour(HolomorphicFunction::cube(), rect, z1, z2);
        CHECK(std::abs(a.first - b.first) < 1e-9);
        CHECK(std::abs(a.second - b.second) < 1e-9);
    }
}

TEST_CASE("contour preconditions") {
    const auto gamma = Contour::circle(cd(0.0, 0.0), 1.0);
    // Poles outside the contour: winding 0.
    CHECK_THROWS_AS(f1_f2_contour(HolomorphicFunction::square(), gamma, cd(0.0, 0.0), cd(5.0, 0.0)),
                    ContourError);
    // Pole within quadrature reach of the contour.
    CHECK_THROWS_AS(
        f1_f2_contour(HolomorphicFunction::square(), gamma, cd(1e-9, 0.0), cd(0.9999999, 0.0)),
        ContourError);
    // Resolvent pole enclosed.
    CHECK_THROWS_AS(f1_f2_contour(HolomorphicFunction::resolvent(cd(0.5, 0.0)), gamma,
                                  cd(0.1, 0.0), cd(0.0, 0.0)),
                    ContourError);
}

TEST_CASE("winding numbers and interior tests") {
    const auto gamma = Contour::circle(cd(1.0, 1.0), 2.0);
    CHECK(gamma.winding_number(cd(1.0, 1.0)) == 1);
    CHECK(gamma.winding_number(cd(5.0, 5.0)) == 0);
    CHECK(gamma.encloses(cd(0.0, 0.0)));
    CHECK_FALSE(gamma.encloses(cd(4.0, 1.0)));

    const auto rect = Contour::rectangle(cd(-1.0, -1.0), cd(1.0, 1.0));
    CHECK(rect.winding_number(cd(0.0, 0.0)) == 1);
    CHECK(rect.winding_number(cd(2.0, 0.0)) == 0);
    CHECK(rect.boundary_distance(cd(0.0, 0.0)) == doctest::Approx(1.0));
}

TEST_CASE("auto contour encloses the spectrum with the requested margin") {
    const auto h = make(Kernel::hardy());
    const auto curve = spectrum_curve(*h.symbol());
    const auto gamma = auto_contour(curve, 0.25);
    CHECK(gamma.winding_number(cd(0.0, 0.0)) == 1);
    for (std::size_t i = 0; i < curve.branch_phi.size(); i += 101)
        CHECK(gamma.encloses(curve.branch_phi[i]));

    // radius = (1 + margin) * max distance from the centroid.
    CHECK(gamma.is_circle());
    double maxdist = std::abs(gamma.circle_center());
    for (const auto& z : curve.branch_phi)
        maxdist = std::max(maxdist, std::abs(z - gamma.circle_center()));
    for (const auto& z : curve.branch_phi_star)
        maxdist = std::max(maxdist, std::abs(z - gamma.circle_center()));
    CHECK(gamma.circle_radius() == doctest::Approx(1.25 * maxdist).epsilon(1e-12));

    CHECK_THROWS_AS(auto_contour(curve, 1e-6), ContourError);
    CHECK_THROWS_AS(auto_contour(curve, -1.0), ContourError);

    // Degenerate zero-operator curve: any positive radius around 0.
    const auto zero_curve = spectrum_curve(*make(Kernel::zero()).symbol());
    const auto gz = auto_contour(zero_curve, 1.0);
    CHECK(gz.winding_number(cd(0.0, 0.0)) == 1);

    const auto lg_curve = spectrum_curve(*make(Kernel::log_gaussian(1.0)).symbol());
    const auto glg = auto_contour(lg_curve, 0.25);
    for (double x = 0.0; x <= 1.0; x += 0.125) CHECK(glg.encloses(cd(x, 0.0)));
}

TEST_CASE("apply_function with the identity returns the operator") {
    const auto h = make(Kernel::hardy());
    const auto curve = spectrum_curve(*h.symbol());
    const auto gamma = auto_contour(curve, 0.25);
    const auto back = apply_function(HolomorphicFunction::identity(), gamma, h);
    CHECK(pair_sup_diff(back.pair(), h.pair()) <= 1e-8);
}

TEST_CASE("apply_function(z^2) equals composition") {
    const auto h = make(Kernel::hardy());
    const auto gamma = auto_contour(spectrum_curve(*h.symbol()), 0.25);
    const auto squared = apply_function(HolomorphicFunction::square(), gamma, h);
    const auto composed = compose(h, h);

    double qsup = 0.0;
    for (const auto& z : composed.pair().kplus) qsup = std::max(qsup, std::abs(z));
    CHECK(pair_sup_diff(squared.pair(), composed.pair()) <= 1e-6 * qsup);

    // Symbols computed through the standard fourier route agree too.
    const auto s1 = compute_symbol(HausdorffOperator::from_pair(squared.pair(),
                                                                h.aux(), kS));
    const auto s2 = compute_symbol(composed);
    double dev = 0.0;
    for (std::size_t i = 0; i < s1->size(); ++i)
        dev = std::max(dev, std::abs(s1->phi_plus[i] - s2->phi_plus[i]));
    CHECK(dev <= 1e-6 * operator_norm(*s2));
}

TEST_CASE("polynomials of a smooth operator match the closed-form symbol") {
    const auto h = make(Kernel::log_gaussian(1.0));
    const auto gamma = auto_contour(spectrum_curve(*h.symbol()), 0.25);
    // F(z) = z^3 - z^2.
    const auto F = HolomorphicFunction::polynomial({cd(0.0, 0.0), cd(-1.0, 0.0), cd(1.0, 0.0)});
    const auto result = apply_function(F, gamma, h);
    const auto sym = result.symbol();
    double dev = 0.0;
    for (std::size_t k = 0; k < sym->size(); ++k) {
        const double s = kS.node(k);
        const double expect = std::exp(-1.5 * s * s) - std::exp(-s * s);
        dev = std::max(dev, std::abs(sym->phi_plus[k] - cd(expect, 0.0)));
    }
    CHECK(dev <= 1e-8);
}

TEST_CASE("resolvent function gives phi/(mu - phi) on the branches") {
    // The resolvent kernel decays only at rate Re(1/2 - 1/mu) ~ 1/4, leaving
    // ~4e-5 of relative mass past t = -40; run with a matching tail budget.
    Tolerances tol;
    tol.conv_tail_tol = 1e-3;
    const auto h = HausdorffOperator(Kernel::hardy(), ScalingFunction::reciprocal(), kT, kS, tol);
    const auto sym0 = h.symbol();
    const auto gamma = auto_contour(spectrum_curve(*sym0), 0.25);
    const cd mu(4.0, 0.5);
    CHECK_FALSE(gamma.encloses(mu));
    const auto result = apply_function(HolomorphicFunction::resolvent(mu), gamma, h);
    const auto sym = result.symbol();
    double dev = 0.0;
    for (std::size_t k = 0; k < sym->size(); k += 7) {
        const cd phi = sym0->phi(k);
        const cd phis = sym0->phi_star(k);
        dev = std::max(dev, std::abs(sym->phi(k) - phi / (mu - phi)));
        dev = std::max(dev, std::abs(sym->phi_star(k) - phis / (mu - phis)));
    }
    CHECK(dev <= 1e-8);
}

TEST_CASE("polynomial consistency: z^n equals n-fold composition") {
    const auto h = make(Kernel::log_gaussian(1.0));
    const auto gamma = auto_contour(spectrum_curve(*h.symbol()), 0.25);
    const auto cubed = apply_function(HolomorphicFunction::cube(), gamma, h);
    const auto composed = compose(compose(h, h), h);
    const auto s1 = compute_symbol(HausdorffOperator::from_pair(cubed.pair(), h.aux(), kS));
    const auto s2 = compute_symbol(composed);
    double dev = 0.0;
    for (std::size_t i = 0; i < s1->size(); ++i)
        dev = std::max(dev, std::abs(s1->phi_plus[i] - s2->phi_plus[i]));
    CHECK(dev <= 1e-6);
}

TEST_CASE("contour independence holds through apply_function") {
    const auto h = make(Kernel::hardy());
    const auto circle = auto_contour(spectrum_curve(*h.symbol()), 0.3);
    const auto rect = Contour::rectangle(cd(-0.9, -1.4), cd(2.9, 1.4));
    const auto a = apply_function(HolomorphicFunction::square(), circle, h);
    const auto b = apply_function(HolomorphicFunction::square(), rect, h);
    CHECK(pair_sup_diff(a.pair(), b.pair()) <= 1e-8);
    const auto sa = a.symbol();
    const auto sb = b.symbol();
    double dev = 0.0;
    for (std::size_t i = 0; i < sa->size(); ++i)
        dev = std::max(dev, std::abs(sa->phi_plus[i] - sb->phi_plus[i]));
    CHECK(dev <= 1e-8);
}

TEST_CASE("spectral identity of the returned symbol") {
    const auto h = make(Kernel::hardy());
    const auto sym0 = h.symbol();
    const auto gamma = auto_contour(spectrum_curve(*sym0), 0.25);
    const auto F = HolomorphicFunction::square();
    const auto result = apply_function(F, gamma, h);
    const auto sym = result.symbol();
    double dev = 0.0;
    for (std::size_t k = 0; k < sym->size(); k += 3) {
        dev = std::max(dev, std::abs(sym->phi(k) - F(sym0->phi(k))));
        dev = std::max(dev, std::abs(sym->phi_star(k) - F(sym0->phi_star(k))));
    }
    CHECK(dev <= 1e-8);
}

TEST_CASE("contract violations") {
    const auto h = make(Kernel::hardy());
    const auto gamma = auto_contour(spectrum_curve(*h.symbol()), 0.25);

    const HolomorphicFunction affine{[](cd z) { return z + 1.0; }, "z+1", {}};
    CHECK_THROWS_AS(apply_function(affine, gamma, h), ContractViolationError);

    // Contour that misses part of the spectrum.
    const auto small = Contour::circle(cd(0.0, 0.0), 0.5);
    CHECK_THROWS_AS(apply_function(HolomorphicFunction::square(), small, h), ContourError);

    // Resolvent pole inside the contour.
    CHECK_THROWS_AS(apply_function(HolomorphicFunction::resolvent(cd(1.0, 0.0)), gamma, h),
                    ContourError);
}
