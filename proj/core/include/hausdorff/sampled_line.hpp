#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "hausdorff/grid.hpp"

namespace hausdorff {

using cd = std::complex<double>;

/// Complex samples on a uniform lattice grid; the shared carrier for
/// log-coordinate kernels, transforms and symbols.
struct SampledLine {
    Grid grid;
    std::vector<cd> values;

    SampledLine() = default;
    SampledLine(Grid g, std::vector<cd> v);

    std::size_t size() const { return values.size(); }

    /// Trapezoid estimate of the L1 norm.
    double l1() const;
    /// Trapezoid estimate of the L2 norm.
    double l2() const;
    double sup() const;

    bool all_zero() const;

    /// Linear interpolation at coordinate t; zero outside the grid window.
    cd interpolate(double t) const;

    static SampledLine zeros(Grid g);
    static SampledLine sample(Grid g, const std::function<cd(double)>& f);
};

}  // namespace hausdorff
