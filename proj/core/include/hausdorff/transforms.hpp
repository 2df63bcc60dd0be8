#pragma once

#include "hausdorff/sampled_line.hpp"

namespace hausdorff {

enum class Direction { forward, inverse };

/// Fourier transform of a sampled L1 function.
///
/// Convention (fixed once, used everywhere): the forward transform is
///   g^(s) = int g(t) e^{-i s t} dt,
/// so that |u|^{is} with u = e^{-t} becomes e^{-i s t}; the inverse is
///   g(t) = (2 pi)^{-1} int g^(s) e^{+i s t} ds.
///
/// Implementation: trapezoid rule accelerated by zero-padded fast chirp
/// convolution, with the grid-origin phases applied exactly.  For inputs whose
/// spectrum is contained in the target window (bandlimited-within-grid) the
/// absolute error is below 1e-8 * ||g||_1.
SampledLine fourier_l1(const SampledLine& g, const Grid& target, Direction dir);

struct ConvolutionResult {
    SampledLine line;
    /// L1 mass of the convolution that fell outside the common grid window.
    double truncation_mass = 0.0;
};

/// Linear (non-circular) convolution via zero-padding to 2n, scaled by the
/// grid step.  Both inputs must share one grid; the output is truncated back
/// to it.  Throws GridTooSmallError when the truncated mass exceeds
/// tail_tol * ||g1||_1 * ||g2||_1.
ConvolutionResult convolve(const SampledLine& g1, const SampledLine& g2,
                           double tail_tol = 1e-6);

/// Unitary Mellin transform on the half-line, realized on the critical line:
///   (M g)(s) = (2 pi)^{-1/2} int_0^inf g(x) x^{-1/2 - i s} dx.
/// `g` holds samples of g at x = e^{-t} on a t-grid; forward returns samples
/// on the target s-grid, inverse maps s-samples back to half-line samples on
/// the target t-grid.  M is unitary L2(0,inf) -> L2(R) (Plancherel holds to
/// the grid truncation level).
SampledLine mellin_halfline(const SampledLine& g, const Grid& target, Direction dir);

}  // namespace hausdorff
