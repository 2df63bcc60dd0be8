#include "hausdorff/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "hausdorff/transforms.hpp"

namespace hausdorff {

namespace {

void require_compatible(const HausdorffOperator& hk, const HausdorffOperator& hl) {
    if (!hk.aux().same_algebra(hl.aux()))
        throw IncompatibleAlgebraError(
            "operators live in different algebras: scaling " + hk.aux().name() + " vs " +
            hl.aux().name());
    if (hk.t_grid() != hl.t_grid() || hk.s_grid() != hl.s_grid())
        throw GridMismatchError("operators must share t- and s-grids");
}

// K * L + M * N on the common grid; zero factors short-circuit symmetrically.
struct ConvSum {
    std::vector<cd> values;
    double truncation = 0.0;
};

ConvSum convolve_pair_sum(const SampledLine& k, const SampledLine& l, const SampledLine& m,
                          const SampledLine& n, double tail_tol) {
    ConvSum out;
    out.values.assign(k.size(), cd(0.0, 0.0));
    if (!k.all_zero() && !l.all_zero()) {
        auto c = convolve(k, l, tail_tol);
        out.values = std::move(c.line.values);
        out.truncation += c.truncation_mass;
    }
    if (!m.all_zero() && !n.all_zero()) {
        auto c = convolve(m, n, tail_tol);
        for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += c.line.values[i];
        out.truncation += c.truncation_mass;
    }
    return out;
}

}  // namespace

HausdorffOperator compose(const HausdorffOperator& hk, const HausdorffOperator& hl) {
    require_compatible(hk, hl);
    const auto& K = hk.pair();
    const auto& L = hl.pair();
    const double tail_tol = std::min(hk.tolerances().conv_tail_tol, hl.tolerances().conv_tail_tol);

    auto qp = convolve_pair_sum(K.plus_line(), L.plus_line(), K.minus_line(), L.minus_line(),
                                tail_tol);
    auto qm = convolve_pair_sum(K.plus_line(), L.minus_line(), K.minus_line(), L.plus_line(),
                                tail_tol);

    // Input window tails propagate through the convolution at worst as
    // ||K||_1 * tail(L) + ||L||_1 * tail(K).
    const double tail = qp.truncation + qm.truncation + K.l1_total() * L.tail_mass +
                        L.l1_total() * K.tail_mass;
    auto pair = KernelPair::from_arrays(K.grid, std::move(qp.values), std::move(qm.values), tail);
    return HausdorffOperator::from_pair(std::move(pair), hk.aux(), hk.s_grid(), hk.tolerances());
}

HausdorffOperator lincomb(cd alpha, const HausdorffOperator& hk, cd beta,
                          const HausdorffOperator& hl) {
    require_compatible(hk, hl);
    const auto& K = hk.pair();
    const auto& L = hl.pair();
    const std::size_t n = K.kplus.size();
    std::vector<cd> plus(n), minus(n);
    for (std::size_t i = 0; i < n; ++i) {
        plus[i] = alpha * K.kplus[i] + beta * L.kplus[i];
        minus[i] = alpha * K.kminus[i] + beta * L.kminus[i];
    }
    const double tail = std::abs(alpha) * K.tail_mass + std::abs(beta) * L.tail_mass;
    auto pair = KernelPair::from_arrays(K.grid, std::move(plus), std::move(minus), tail);
    return HausdorffOperator::from_pair(std::move(pair), hk.aux(), hk.s_grid(), hk.tolerances());
}

CommutativityReport check_commutativity(const HausdorffOperator& hk, const HausdorffOperator& hl,
                                        double tol) {
    const auto kl = compose(hk, hl);
    const auto lk = compose(hl, hk);

    CommutativityReport rep;
    rep.tol = tol;
    const auto& a = kl.pair();
    const auto& b = lk.pair();
    for (std::size_t i = 0; i < a.kplus.size(); ++i) {
        rep.max_kernel_deviation = std::max(rep.max_kernel_deviation,
                                            std::abs(a.kplus[i] - b.kplus[i]));
        rep.max_kernel_deviation = std::max(rep.max_kernel_deviation,
                                            std::abs(a.kminus[i] - b.kminus[i]));
    }
    const auto sa = kl.symbol();
    const auto sb = lk.symbol();
    for (std::size_t i = 0; i < sa->size(); ++i) {
        rep.max_symbol_deviation = std::max(rep.max_symbol_deviation,
                                            std::abs(sa->phi_plus[i] - sb->phi_plus[i]));
        rep.max_symbol_deviation = std::max(rep.max_symbol_deviation,
                                            std::abs(sa->phi_minus[i] - sb->phi_minus[i]));
    }
    rep.passed = rep.max_symbol_deviation <= tol && rep.max_kernel_deviation <= tol;
    return rep;
}

}  // namespace hausdorff
