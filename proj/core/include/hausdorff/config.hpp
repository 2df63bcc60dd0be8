#pragma once

#include <cstdint>
#include <string>

#include "hausdorff/funcalc.hpp"
#include "hausdorff/grid_function.hpp"
#include "hausdorff/operator.hpp"

namespace hausdorff {

/// Fully validated run configuration parsed from a key = value document.
struct RunConfig {
    std::string kernel_spec = "hardy";
    std::string kernel2_spec;  // compose only
    std::string kernel_path;   // table for kernel = custom
    std::string kernel2_path;
    std::string scaling_spec = "reciprocal";
    std::string scaling_path;

    double t_lo = -40.0, t_hi = 40.0;
    std::size_t n = 1u << 14;
    double s_lo = -64.0, s_hi = 64.0;
    std::size_t ns = 1u << 13;

    Tolerances tol{};
    std::string output_dir = ".";
    std::uint64_t seed = 12345;
    std::size_t power_iters = 50;

    std::string function_spec = "square";   // funcalc
    std::string contour_spec = "auto:0.25";  // funcalc
    std::string input_spec = "indicator";    // apply

    Grid t_grid() const { return Grid::over_range(t_lo, t_hi, n); }
    Grid s_grid() const { return Grid::over_range(s_lo, s_hi, ns); }

    Kernel make_kernel() const;
    Kernel make_kernel2() const;
    ScalingFunction make_scaling() const;
    HausdorffOperator make_operator() const;
    HausdorffOperator make_operator2() const;
    GridFunction make_input() const;
    HolomorphicFunction make_function() const;
    /// Needs the operator's spectral curve for auto contours.
    Contour make_contour(const SpectralCurve& curve) const;
};

/// Parses and validates the key = value text (see README for the key list).
/// Unknown keys, duplicates, malformed values and non-power-of-two grids are
/// rejected with line-precise messages.
RunConfig parse_config(const std::string& text);

/// Reads the file and parses it.
RunConfig parse_config_file(const std::string& path);

}  // namespace hausdorff
