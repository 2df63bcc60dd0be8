#include "hausdorff/grid.hpp"

#include <cmath>
#include <stdexcept>

#include "hausdorff/errors.hpp"

namespace hausdorff {

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

Grid::Grid(double t_min, double step, std::size_t n) : t_min_(t_min), step_(step), n_(n) {
    if (n_ < 2) throw GridMismatchError("grid needs at least 2 points");
    if (!(step_ > 0.0) || !std::isfinite(step_) || !std::isfinite(t_min_))
        throw GridMismatchError("grid step and origin must be finite, step > 0");
    // Snap the origin onto the lattice {k*step}.
    const double k = std::round(t_min_ / step_);
    origin_index_ = static_cast<long long>(k);
    t_min_ = k * step_;
}

Grid Grid::over_range(double lo, double hi, std::size_t n) {
    if (!(hi > lo)) throw GridMismatchError("grid range must satisfy hi > lo");
    if (!is_power_of_two(n)) throw GridMismatchError("grid size must be a power of two");
    return Grid(lo, (hi - lo) / static_cast<double>(n), n);
}

std::vector<double> Grid::nodes() const {
    std::vector<double> out(n_);
    for (std::size_t j = 0; j < n_; ++j) out[j] = node(j);
    return out;
}

std::vector<double> Grid::trapezoid_weights() const {
    std::vector<double> w(n_, step_);
    w.front() = 0.5 * step_;
    w.back() = 0.5 * step_;
    return w;
}

Grid Grid::default_t_grid() { return Grid::over_range(-40.0, 40.0, 1 << 14); }

Grid Grid::default_s_grid() { return Grid::over_range(-64.0, 64.0, 1 << 13); }

}  // namespace hausdorff
