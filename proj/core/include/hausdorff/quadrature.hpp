#pragma once

#include <complex>
#include <cstddef>
#include <functional>

namespace hausdorff::quad {

using cd = std::complex<double>;

struct Options {
    double rel_tol = 1e-10;
    double abs_floor = 1e-14;
    std::size_t max_intervals = 200000;
    /// Partial L1 sums past this value declare the integral divergent.
    double divergence_threshold = 1e12;
};

struct Result {
    cd value{0.0, 0.0};
    double error_estimate = 0.0;
    bool converged = false;
    bool divergent = false;
    std::size_t evaluations = 0;

    double real() const { return value.real(); }
};

/// Adaptive Gauss-Kronrod (G7/K15) on a finite interval.  Nodes are interior,
/// so integrable endpoint singularities are handled by subdivision.
Result integrate(const std::function<cd(double)>& f, double a, double b,
                 const Options& opts = {});

/// [a, +inf), mapped through u = a + x/(1-x).
Result integrate_up(const std::function<cd(double)>& f, double a, const Options& opts = {});

/// (-inf, b], mapped through u = b - x/(1-x).
Result integrate_down(const std::function<cd(double)>& f, double b, const Options& opts = {});

/// (-inf, +inf), split at 0.
Result integrate_line(const std::function<cd(double)>& f, const Options& opts = {});

/// Combines two partial results (values add, flags propagate).
Result combine(const Result& a, const Result& b);

}  // namespace hausdorff::quad
