#pragma once

#include "hausdorff/kernel.hpp"
#include "hausdorff/sampled_line.hpp"
#include "hausdorff/scaling.hpp"

namespace hausdorff {

/// Numeric tolerances shared across the library.
struct Tolerances {
    /// Relative bound for kernel mass outside the sampled window.
    double tail_tol = 1e-8;
    /// Relative bound for convolution/composition truncation mass.
    double conv_tail_tol = 1e-6;
    quad::Options quadrature{};
};

/// Canonical operator representation: samples of the log-coordinate kernels
///   K+-(t) = K(+-e^{-t}) e^{-t} / sqrt(|a(e^{-t})|)
/// on a uniform lattice grid.  Composition is convolution of these arrays and
/// the symbol is their Fourier transform.
struct KernelPair {
    Grid grid;
    std::vector<cd> kplus;
    std::vector<cd> kminus;
    double l1_plus = 0.0;
    double l1_minus = 0.0;
    double tail_mass = 0.0;

    SampledLine plus_line() const { return SampledLine(grid, kplus); }
    SampledLine minus_line() const { return SampledLine(grid, kminus); }

    double l1_total() const { return l1_plus + l1_minus; }

    /// Assembles a pair from raw arrays, recomputing the L1 estimates.
    static KernelPair from_arrays(Grid grid, std::vector<cd> kplus, std::vector<cd> kminus,
                                  double tail_mass);
};

/// Samples the log-coordinate pair of (K, a) on `grid`.  Checks admissibility
/// first (throws NotAdmissibleError with the report) and estimates the kernel
/// mass left outside the window by adaptive quadrature (throws
/// GridTooSmallError naming the offending end when it exceeds tol.tail_tol).
KernelPair to_log_pair(const Kernel& k, const ScalingFunction& a, const Grid& grid,
                       const Tolerances& tol = {});

/// Pulls a kernel pair back to a pointwise kernel Q with
///   Q(+-e^{-t}) = Q+-(t) e^{t} sqrt(|a(e^{-t})|),
/// linear interpolation in t between nodes and zero outside the window.
Kernel from_log_pair(const KernelPair& p, const ScalingFunction& a);

}  // namespace hausdorff
