#include "hausdorff/kernel_pair.hpp"

#include <cmath>
#include <memory>
#include <string>

namespace hausdorff {

namespace {

double trapezoid_l1(const Grid& g, const std::vector<cd>& v) {
    double acc = 0.0;
    for (const auto& z : v) acc += std::abs(z);
    acc -= 0.5 * (std::abs(v.front()) + std::abs(v.back()));
    return acc * g.step();
}

}  // namespace

KernelPair KernelPair::from_arrays(Grid grid, std::vector<cd> kplus, std::vector<cd> kminus,
                                   double tail_mass) {
    if (kplus.size() != grid.size() || kminus.size() != grid.size())
        throw GridMismatchError("kernel pair arrays do not match the grid");
    KernelPair p;
    p.grid = grid;
    p.kplus = std::move(kplus);
    p.kminus = std::move(kminus);
    p.l1_plus = trapezoid_l1(grid, p.kplus);
    p.l1_minus = trapezoid_l1(grid, p.kminus);
    p.tail_mass = tail_mass;
    return p;
}

KernelPair to_log_pair(const Kernel& k, const ScalingFunction& a, const Grid& grid,
                       const Tolerances& tol) {
    const auto report = admissibility(k, a, tol.quadrature);
    if (!report.admissible)
        throw NotAdmissibleError("kernel fails the boundedness condition for scaling " + a.name(),
                                 report);

    const std::size_t n = grid.size();
    if (!is_power_of_two(n)) throw GridMismatchError("kernel pair grid size must be a power of two");

    std::vector<cd> kp(n), km(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double t = grid.node(j);
        const double u = std::exp(-t);
        const double w = std::exp(-t) / a.weight_sqrt(t);
        kp[j] = k.eval(u) * w;
        km[j] = k.eval(-u) * w;
    }

    // Kernel mass outside [t_min, t_max], measured in the t coordinate.
    auto density = [&](double t) -> quad::cd {
        const double u = std::exp(-t);
        if (u == 0.0 || std::isinf(u)) return 0.0;
        const double kv = std::abs(k.eval(u)) + std::abs(k.eval(-u));
        if (kv == 0.0) return 0.0;
        return kv * (std::exp(-t) / a.weight_sqrt(t));
    };
    const auto left = quad::integrate_down(density, grid.t_min(), tol.quadrature);
    const auto right = quad::integrate_up(density, grid.t_max(), tol.quadrature);
    const double tail = left.real() + right.real();

    KernelPair p = KernelPair::from_arrays(grid, std::move(kp), std::move(km), tail);
    const double scale = p.l1_total();
    if (scale > 0.0 && tail > tol.tail_tol * scale) {
        const bool l = left.real() > tol.tail_tol * scale * 0.5;
        const bool r = right.real() > tol.tail_tol * scale * 0.5;
        const std::string end = (l && r) ? "both" : (l ? "left" : "right");
        throw GridTooSmallError("kernel mass outside the grid window exceeds tail_tol at the " +
                                    end + " end",
                                tail, end);
    }
    return p;
}

Kernel from_log_pair(const KernelPair& p, const ScalingFunction& a) {
    auto plus = std::make_shared<const SampledLine>(p.plus_line());
    auto minus = std::make_shared<const SampledLine>(p.minus_line());
    auto aux = std::make_shared<const ScalingFunction>(a);
    auto eval = [plus, minus, aux](double u) -> cd {
        const double t = -std::log(std::abs(u));
        const SampledLine& side = (u > 0.0) ? *plus : *minus;
        const cd q = side.interpolate(t);
        if (q == cd(0.0, 0.0)) return q;
        return q * std::exp(t) * aux->weight_sqrt(t);
    };
    return Kernel::custom(std::move(eval), "pullback");
}

}  // namespace hausdorff
