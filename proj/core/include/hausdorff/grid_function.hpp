#pragma once

#include <optional>

#include "hausdorff/sampled_line.hpp"

namespace hausdorff {

/// An L2(R) function in split half-line form on logarithmic grids:
/// plus[j] = f(x_j) and minus[j] = f(-x_j) with x_j = e^{-t_j} on the shared
/// uniform t-grid.  ||f||_2^2 = int (|f+|^2 + |f-|^2) dx is computed in t
/// coordinates with weight e^{-t}.
struct GridFunction {
    Grid t_grid;
    std::vector<cd> plus;
    std::vector<cd> minus;

    GridFunction() = default;
    GridFunction(Grid g, std::vector<cd> p, std::vector<cd> m);

    std::size_t size() const { return plus.size(); }
    double l2_norm() const;
    bool all_zero() const;

    SampledLine plus_line() const { return SampledLine(t_grid, plus); }
    SampledLine minus_line() const { return SampledLine(t_grid, minus); }

    /// <f, g> = int f conj(g) dx over R, in t coordinates.
    static cd inner_product(const GridFunction& f, const GridFunction& g);

    static GridFunction zeros(Grid g);
    /// Indicator of [0, 1] (midpoint value at x = 1).
    static GridFunction indicator_unit(Grid g);
    /// Smooth bump f(x) = x^{-1/2} e^{-ln(x)^2 / 2} on x > 0.
    static GridFunction gaussian_bump(Grid g);
    /// Odd version of the bump: f(-x) = -f(x).
    static GridFunction odd_bump(Grid g);

private:
    mutable std::optional<double> l2_cache_;
};

}  // namespace hausdorff
