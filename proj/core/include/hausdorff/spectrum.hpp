#pragma once

#include "hausdorff/symbol.hpp"

namespace hausdorff {

/// The spectrum of H_{K,a} as a pair of sampled plane curves: the closures of
/// phi(R) and phi_star(R) with 0 adjoined.  0 is always a member: phi+- vanish
/// at infinity, but grid truncation alone must never make 0 look regular.
struct SpectralCurve {
    Grid s_grid;
    std::vector<cd> branch_phi;
    std::vector<cd> branch_phi_star;
    bool includes_zero = true;
    double bounding_radius = 0.0;
};

SpectralCurve spectrum_curve(const Symbol& sym);

/// min over the sampled curves (with straight segments between adjacent
/// samples) and the adjoined origin of |lambda - point|.
double distance_to_spectrum(const SpectralCurve& c, cd lambda);

/// min over the s-grid of |Delta(lambda, s)| with
///   Delta = (lambda - phi_plus)^2 - phi_minus^2 = (lambda - phi)(lambda - phi_star);
/// positive iff lambda is resolvent-regular along the sampled curve.
double resolvent_regularity(const Symbol& sym, cd lambda);

}  // namespace hausdorff
