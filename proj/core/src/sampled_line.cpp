#include "hausdorff/sampled_line.hpp"

#include <algorithm>
#include <cmath>

#include "hausdorff/errors.hpp"

namespace hausdorff {

SampledLine::SampledLine(Grid g, std::vector<cd> v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.size())
        throw GridMismatchError("sample count does not match the grid");
    if (!is_power_of_two(values.size()))
        throw GridMismatchError("sampled line size must be a power of two");
}

double SampledLine::l1() const {
    const double h = grid.step();
    double acc = 0.0;
    for (std::size_t j = 0; j < values.size(); ++j) acc += std::abs(values[j]);
    acc -= 0.5 * (std::abs(values.front()) + std::abs(values.back()));
    return acc * h;
}

double SampledLine::l2() const {
    const double h = grid.step();
    double acc = 0.0;
    for (std::size_t j = 0; j < values.size(); ++j) acc += std::norm(values[j]);
    acc -= 0.5 * (std::norm(values.front()) + std::norm(values.back()));
    return std::sqrt(acc * h);
}

double SampledLine::sup() const {
    double m = 0.0;
    for (const auto& z : values) m = std::max(m, std::abs(z));
    return m;
}

bool SampledLine::all_zero() const {
    return std::all_of(values.begin(), values.end(),
                       [](const cd& z) { return z == cd(0.0, 0.0); });
}

cd SampledLine::interpolate(double t) const {
    const double x = grid.fractional_index(t);
    if (x < 0.0 || x > static_cast<double>(values.size() - 1)) return cd(0.0, 0.0);
    const auto lo = static_cast<std::size_t>(x);
    if (lo + 1 >= values.size()) return values.back();
    const double w = x - static_cast<double>(lo);
    return values[lo] + w * (values[lo + 1] - values[lo]);
}

SampledLine SampledLine::zeros(Grid g) {
    return SampledLine(g, std::vector<cd>(g.size(), cd(0.0, 0.0)));
}

SampledLine SampledLine::sample(Grid g, const std::function<cd(double)>& f) {
    std::vector<cd> v(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) v[j] = f(g.node(j));
    return SampledLine(g, std::move(v));
}

}  // namespace hausdorff
