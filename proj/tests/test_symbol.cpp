#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <thread>

#include "hausdorff/operator.hpp"
#include "support/oracles.hpp"

using namespace hausdorff;

namespace {
const Grid kT = Grid::default_t_grid();
const Grid kS = Grid::default_s_grid();

HausdorffOperator make(const Kernel& k) {
    return HausdorffOperator(k, ScalingFunction::reciprocal(), kT, kS);
}

cd hardy_phi(double s) { return 1.0 / cd(0.5, -s); }
}  // namespace

TEST_CASE("hardy symbol against the closed form and the quadrature oracle") {
    const auto h = make(Kernel::hardy());
    const auto sym = compute_symbol(h);

    CHECK(std::abs(sym->phi_plus[4096] - cd(2.0, 0.0)) < 1e-5);
    CHECK(std::abs(sym->phi_plus[4096 + 64] - cd(0.4, 0.8)) < 2e-5);
    for (const auto& z : sym->phi_minus) CHECK(z == cd(0.0, 0.0));

    // Oracle: adaptive Simpson of K(u) |u|^{is} / sqrt(|a(u)|) du over (1, inf),
    // in u through u = 1/v^2 (bounded oscillatory integrand).
    for (const double s : {0.0, 1.0, 3.5}) {
        const auto oracle = 2.0 * oracles::simpson(
                                      [s](double v) -> oracles::cd {
                                          const double lv = std::log(v);
                                          return std::polar(1.0, -2.0 * s * lv);
                                      },
                                      0.0, 1.0, 1e-12);
        CHECK(std::abs(oracle - hardy_phi(s)) < 1e-9);  // validates the closed form
        CHECK(std::abs(sym->phi_plus_at(s) - oracle) < 2e-5);
    }

    // Symbol is cached on the handle.
    CHECK(compute_symbol(h).get() == sym.get());
}

TEST_CASE("log-gaussian symbol is machine-accurate (smooth kernel)") {
    const auto h = make(Kernel::log_gaussian(1.0));
    const auto sym = compute_symbol(h);
    double sup = 0.0;
    for (std::size_t k = 0; k < kS.size(); k += 3) {
        const double s = kS.node(k);
        sup = std::max(sup, std::abs(sym->phi_plus[k] - cd(std::exp(-0.5 * s * s), 0.0)));
    }
    CHECK(sup < 1e-9);
    CHECK(std::abs(sym->phi_plus[4096] - cd(1.0, 0.0)) < 1e-10);
}

TEST_CASE("zero kernel symbol") {
    const auto sym = compute_symbol(make(Kernel::zero()));
    for (std::size_t k = 0; k < sym->size(); ++k) {
        CHECK(sym->phi_plus[k] == cd(0.0, 0.0));
        CHECK(sym->phi_minus[k] == cd(0.0, 0.0));
    }
    CHECK(operator_norm(*sym) == 0.0);
}

TEST_CASE("symbol_at assembles the 2x2 matrix and rejects out-of-range s") {
    const auto sym = compute_symbol(make(Kernel::hardy()));
    const auto m = symbol_at(*sym, 0.0);
    CHECK(std::abs(m[0][0] - cd(2.0, 0.0)) < 1e-5);
    CHECK(std::abs(m[1][1] - cd(2.0, 0.0)) < 1e-5);
    CHECK(m[0][1] == cd(0.0, 0.0));
    CHECK(m[1][0] == m[0][1]);
    CHECK_THROWS_AS(symbol_at(*sym, 1e9), GridMismatchError);
}

TEST_CASE("even kernel has equal diagonal and off-diagonal entries") {
    const auto even = Kernel::custom(
        [](double u) -> cd {
            const double lu = std::log(std::abs(u));
            return 0.3989422804014327 * std::exp(-lu * lu / 2.0 - 1.5 * lu);
        },
        "even");
    const auto sym = compute_symbol(make(even));
    for (std::size_t k = 0; k < sym->size(); k += 97)
        CHECK(sym->phi_plus[k] == sym->phi_minus[k]);
}

TEST_CASE("conjugate symmetry for real kernels") {
    const auto sym = compute_symbol(make(Kernel::hardy()));
    // s_j = -s_{8192-j} on the lattice grid.
    for (std::size_t j = 1; j < kS.size(); j += 131) {
        const std::size_t mj = 8192 - j;
        if (mj >= kS.size()) continue;
        CHECK(std::abs(sym->phi_plus[mj] - std::conj(sym->phi_plus[j])) <
              1e-10 * std::max(1.0, std::abs(sym->phi_plus[j])));
    }
}

TEST_CASE("|phi(s)| is bounded by the l1 norm of the kernel pair") {
    for (const auto& k : {Kernel::hardy(), Kernel::log_gaussian(0.7)}) {
        const auto h = make(k);
        const auto sym = compute_symbol(h);
        for (std::size_t i = 0; i < sym->size(); i += 53) {
            CHECK(std::abs(sym->phi_plus[i]) <= h.pair().l1_plus * (1.0 + 1e-12) + 1e-15);
            CHECK(std::abs(sym->phi_minus[i]) <= h.pair().l1_minus * (1.0 + 1e-12) + 1e-15);
        }
    }
}

TEST_CASE("symbol entries vanish toward the grid edge for every preset") {
    for (const auto& k : {Kernel::hardy(), Kernel::log_gaussian(1.0),
                          Kernel::truncated_power(-2.5, 1.0)}) {
        const auto sym = compute_symbol(make(k));
        double sup = 0.0;
        for (std::size_t i = 0; i < sym->size(); ++i)
            sup = std::max(sup, std::abs(sym->phi(i)));
        const double edge = std::max(std::abs(sym->phi(0)), std::abs(sym->phi(sym->size() - 1)));
        CHECK(edge <= 1e-2 * sup);
    }
}

TEST_CASE("the symbol cache is compute-once under concurrent readers") {
    const auto h = make(Kernel::log_gaussian(1.0));
    std::vector<std::shared_ptr<const Symbol>> seen(4);
    std::vector<std::thread> pool;
    for (int i = 0; i < 4; ++i)
        pool.emplace_back([&h, &seen, i] { seen[i] = h.symbol(); });
    for (auto& th : pool) th.join();
    for (int i = 1; i < 4; ++i) CHECK(seen[i].get() == seen[0].get());
}

TEST_CASE("symbol product: closed form, commutativity, zero") {
    const auto hardy = compute_symbol(make(Kernel::hardy()));
    const auto lg = compute_symbol(make(Kernel::log_gaussian(1.0)));

    const auto sq = multiply_symbols(*hardy, *hardy);
    CHECK(std::abs(sq.phi_plus[4096] - cd(4.0, 0.0)) < 1e-4);

    const auto ab = multiply_symbols(*hardy, *lg);
    const auto ba = multiply_symbols(*lg, *hardy);
    for (std::size_t i = 0; i < ab.size(); ++i) {
        CHECK(ab.phi_plus[i] == ba.phi_plus[i]);  // bitwise commutative
        CHECK(ab.phi_minus[i] == ba.phi_minus[i]);
    }

    const auto z = multiply_symbols(*hardy, Symbol::zeros(kS));
    for (std::size_t i = 0; i < z.size(); ++i) CHECK(z.phi_plus[i] == cd(0.0, 0.0));
}

TEST_CASE("operator norm: closed-form values and refinement") {
    CHECK(operator_norm(*compute_symbol(make(Kernel::hardy()))) ==
          doctest::Approx(2.0).epsilon(1e-5));
    CHECK(operator_norm(*compute_symbol(make(Kernel::log_gaussian(1.0)))) ==
          doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("submultiplicativity on the grid") {
    const auto a = compute_symbol(make(Kernel::hardy()));
    const auto b = compute_symbol(make(Kernel::log_gaussian(1.0)));
    const auto ab = multiply_symbols(*a, *b);
    CHECK(operator_norm(ab) <= operator_norm(*a) * operator_norm(*b) * (1.0 + 1e-12));
}

TEST_CASE("normality certificate: commutator and 2x2 svd agreement") {
    const auto h = make(Kernel::custom(
        [](double u) -> cd {
            // Complex-valued kernel supported on both half-lines.
            const double lu = std::log(std::abs(u));
            const double base = std::exp(-lu * lu / 2.0 - 1.5 * lu);
            return u > 0.0 ? cd(base, 0.3 * base) : cd(0.5 * base, -0.2 * base);
        },
        "complex-two-sided"));
    const auto sym = compute_symbol(h);

    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> ds(kS.t_min(), kS.t_max());
    for (int trial = 0; trial < 1000; ++trial) {
        const double s = ds(rng);
        const auto m = symbol_at(*sym, s);
        const cd p = m[0][0], q = m[0][1];

        // Commutator of Phi and Phi^* (Phi = pI + qJ is normal).
        const cd c01 = p * std::conj(q) + q * std::conj(p) -
                       (std::conj(p) * q + std::conj(q) * p);
        const double norm2 = std::norm(p) + std::norm(q);
        CHECK(std::abs(c01) <= 1e-12 * std::max(1e-300, norm2));

        const double direct = oracles::svd2_max(p, q, q, p);
        const double eig = std::max(std::abs(p + q), std::abs(p - q));
        CHECK(std::abs(direct - eig) <= 1e-10 * std::max(1e-300, eig));
    }
}
