#include "hausdorff/grid_function.hpp"

#include <algorithm>
#include <cmath>

#include "hausdorff/errors.hpp"

namespace hausdorff {

GridFunction::GridFunction(Grid g, std::vector<cd> p, std::vector<cd> m)
    : t_grid(g), plus(std::move(p)), minus(std::move(m)) {
    if (plus.size() != t_grid.size() || minus.size() != t_grid.size())
        throw GridMismatchError("grid function components do not match the grid");
}

double GridFunction::l2_norm() const {
    if (l2_cache_) return *l2_cache_;
    const double h = t_grid.step();
    double acc = 0.0;
    for (std::size_t j = 0; j < plus.size(); ++j) {
        const double w = (j == 0 || j + 1 == plus.size()) ? 0.5 * h : h;
        acc += w * std::exp(-t_grid.node(j)) * (std::norm(plus[j]) + std::norm(minus[j]));
    }
    l2_cache_ = std::sqrt(acc);
    return *l2_cache_;
}

bool GridFunction::all_zero() const {
    auto zero = [](const cd& z) { return z == cd(0.0, 0.0); };
    return std::all_of(plus.begin(), plus.end(), zero) &&
           std::all_of(minus.begin(), minus.end(), zero);
}

cd GridFunction::inner_product(const GridFunction& f, const GridFunction& g) {
    if (f.t_grid != g.t_grid) throw GridMismatchError("inner product requires a shared grid");
    const double h = f.t_grid.step();
    cd acc(0.0, 0.0);
    for (std::size_t j = 0; j < f.plus.size(); ++j) {
        const double w = (j == 0 || j + 1 == f.plus.size()) ? 0.5 * h : h;
        acc += w * std::exp(-f.t_grid.node(j)) *
               (f.plus[j] * std::conj(g.plus[j]) + f.minus[j] * std::conj(g.minus[j]));
    }
    return acc;
}

GridFunction GridFunction::zeros(Grid g) {
    return GridFunction(g, std::vector<cd>(g.size(), cd(0.0, 0.0)),
                        std::vector<cd>(g.size(), cd(0.0, 0.0)));
}

GridFunction GridFunction::indicator_unit(Grid g) {
    std::vector<cd> p(g.size(), cd(0.0, 0.0)), m(g.size(), cd(0.0, 0.0));
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double t = g.node(j);
        // x = e^{-t} <= 1 <=> t >= 0; midpoint value at the jump node t = 0.
        if (t > 0.0)
            p[j] = 1.0;
        else if (t == 0.0)
            p[j] = 0.5;
    }
    return GridFunction(g, std::move(p), std::move(m));
}

GridFunction GridFunction::gaussian_bump(Grid g) {
    std::vector<cd> p(g.size()), m(g.size(), cd(0.0, 0.0));
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double t = g.node(j);
        // f(x) = x^{-1/2} e^{-ln(x)^2/2} at x = e^{-t}: f = e^{t/2 - t^2/2}.
        p[j] = std::exp(0.5 * t - 0.5 * t * t);
    }
    return GridFunction(g, std::move(p), std::move(m));
}

GridFunction GridFunction::odd_bump(Grid g) {
    GridFunction f = gaussian_bump(g);
    for (std::size_t j = 0; j < f.minus.size(); ++j) f.minus[j] = -f.plus[j];
    return f;
}

}  // namespace hausdorff
