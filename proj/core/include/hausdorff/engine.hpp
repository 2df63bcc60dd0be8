#pragma once

#include <cstdint>

#include "hausdorff/grid_function.hpp"
#include "hausdorff/operator.hpp"

namespace hausdorff {

/// Ground-truth application of H_{K,a} by direct quadrature over u in log
/// coordinates:
///   (Hf)+(x) = int sqrt(a(e^{-tau})) [K+(tau) f+(x a) + K-(tau) f-(x a)] dtau
/// (and the mirrored row for (Hf)-), with linear interpolation of f at the
/// scaled arguments x*a(e^{-tau}); arguments outside the grid count as 0.
/// Throws when the input has more than 1% of its sup on the grid edge (mass
/// would silently leak past the window).
GridFunction apply_direct(const HausdorffOperator& h, const GridFunction& f);

/// Adjoint in L2(R): (H* g)(y) = int conj(K(u)) |a(u)|^{-1} g(y / a(u)) du.
/// With lattice-aligned shifts this is the exact discrete transpose of
/// apply_direct under the GridFunction inner product.
GridFunction adjoint_apply(const HausdorffOperator& h, const GridFunction& g);

/// The multiplier matrix diagonalizing H through the half-line Mellin
/// transform:
///   m+(s) = int_0^inf K(u) |a(u)|^{is - 1/2} du,
///   m-(s) = int_{-inf}^0 K(u) |a(u)|^{is - 1/2} du,
/// computed by adaptive quadrature per grid s and cached on the handle.  For
/// power-law a(u) = u^{-gamma} this equals the symbol reparametrized:
/// m+-(s) = phi+-(-gamma s).
std::shared_ptr<const Symbol> conjugation_multiplier(const HausdorffOperator& h);

/// Spectral route: forward Mellin both half-line components, multiply the
/// 2-vector by [[m+, m-], [m-, m+]] pointwise in s, inverse Mellin.
GridFunction apply_via_symbol(const HausdorffOperator& h, const GridFunction& f);

/// Power iteration on f -> H*(H f) from a seeded random start; returns the
/// square root of the final Rayleigh quotient (the top singular value of H).
/// Requires iters >= 20.
double estimate_norm(const HausdorffOperator& h, std::size_t iters, std::uint64_t seed);

}  // namespace hausdorff
