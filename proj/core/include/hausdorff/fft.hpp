#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hausdorff::fft {

using cd = std::complex<double>;

/// Unit complex number e^{i*angle} with the angle reduced in extended
/// precision; keeps chirp phases accurate for arguments up to ~1e5 rad.
cd unit_phase(long double angle);

/// In-place iterative radix-2 FFT.  Forward kernel e^{-2πi jk/N}, unscaled;
/// the inverse applies 1/N.  Size must be a power of two.
void fft_pow2(std::vector<cd>& a, bool inverse);

/// Generalized exponential sum (Bluestein chirp-z):
///   X_k = sum_j a_j e^{-i s_k t_j},  t_j = t0 + j*dt,  s_k = s0 + k*ds,
/// for k = 0..m-1.  dt and ds may be any nonzero reals (ds may be negative).
std::vector<cd> exponential_sum(const std::vector<cd>& a, double t0, double dt,
                                double s0, double ds, std::size_t m);

/// Frequency lattice dual to a time lattice of size N and step h:
/// step hs = 2π/(h*N) and origin s0 = -(N/2)*hs, so the N x N map
/// X_k = h * sum_j x_j e^{-i s_k t_j} is an exactly invertible scaled DFT.
struct DualLattice {
    double s0 = 0.0;
    double hs = 0.0;
};
DualLattice dual_lattice(double h, std::size_t N);

/// X_k = h * sum_j x_j e^{-i s_k t_j} on the dual lattice of (t0, h, N).
std::vector<cd> lattice_forward(const std::vector<cd>& x, double t0, double h);

/// Exact algebraic inverse of lattice_forward (round-trip is ~1 ulp).
std::vector<cd> lattice_inverse(const std::vector<cd>& X, double t0, double h);

}  // namespace hausdorff::fft
