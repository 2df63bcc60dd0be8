#pragma once

#include <cstddef>
#include <vector>

namespace hausdorff {

/// Uniform lattice grid t_j = t_min + j*step, j = 0..n-1.
///
/// Grids are half-open: a requested range [lo, hi) with n points yields
/// step = (hi - lo)/n and stored t_max = lo + (n-1)*step.  The origin of the
/// lattice is snapped so that t_min is an integer multiple of step; this makes
/// discrete convolutions of two grids close on the same lattice and puts 0 on
/// the lattice.
class Grid {
public:
    Grid() = default;
    Grid(double t_min, double step, std::size_t n);

    /// Grid with n points covering [lo, hi).  n must be a power of two.
    static Grid over_range(double lo, double hi, std::size_t n);

    double t_min() const { return t_min_; }
    double t_max() const { return t_min_ + static_cast<double>(n_ - 1) * step_; }
    double step() const { return step_; }
    std::size_t size() const { return n_; }

    double node(std::size_t j) const { return t_min_ + static_cast<double>(j) * step_; }

    /// Index of t_min on the lattice {k*step}: t_min = origin_index()*step exactly.
    long long origin_index() const { return origin_index_; }

    bool contains(double t) const { return t >= t_min() && t <= t_max(); }

    /// Fractional index of t relative to node 0 (may be out of [0, n-1]).
    double fractional_index(double t) const { return (t - t_min_) / step_; }

    bool operator==(const Grid& other) const {
        return t_min_ == other.t_min_ && step_ == other.step_ && n_ == other.n_;
    }
    bool operator!=(const Grid& other) const { return !(*this == other); }

    std::vector<double> nodes() const;

    /// Trapezoid quadrature weights: step at interior nodes, step/2 at the ends.
    std::vector<double> trapezoid_weights() const;

    /// Default log-coordinate grid: t in [-40, 40), n = 2^14.
    static Grid default_t_grid();
    /// Default symbol grid: s in [-64, 64), n = 2^13.
    static Grid default_s_grid();

private:
    double t_min_ = 0.0;
    double step_ = 1.0;
    std::size_t n_ = 0;
    long long origin_index_ = 0;
};

bool is_power_of_two(std::size_t n);

}  // namespace hausdorff
