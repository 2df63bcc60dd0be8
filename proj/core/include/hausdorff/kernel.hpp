#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hausdorff/errors.hpp"
#include "hausdorff/quadrature.hpp"
#include "hausdorff/scaling.hpp"

namespace hausdorff {

/// Pointwise kernel K(u) on the punctured line.  No integrability is assumed
/// until admissibility() is checked.  Kernels with a cutoff take the midpoint
/// value at the jump so that grid sampling stays second-order accurate.
class Kernel {
public:
    enum class Preset { hardy, log_gaussian, truncated_power, zero, custom };

    /// K(u) = u^{-2} for u >= 1 (the classical Hardy averaging kernel).
    static Kernel hardy();
    /// K(u) = (2 pi sigma^2)^{-1/2} u^{-3/2} exp(-ln(u)^2 / (2 sigma^2)), u > 0.
    static Kernel log_gaussian(double sigma);
    /// K(u) = u^alpha for u >= cutoff > 0.
    static Kernel truncated_power(double alpha, double cutoff);
    static Kernel zero();
    /// Linear interpolation of (u, value) rows, u > 0 strictly increasing;
    /// zero outside the table range and on the negative axis.
    static Kernel custom_table(std::vector<std::pair<double, double>> table, std::string name);
    static Kernel custom(std::function<std::complex<double>(double)> eval, std::string name);

    std::complex<double> eval(double u) const;

    Preset preset() const { return preset_; }
    const std::string& name() const { return name_; }

private:
    Kernel() = default;
    Preset preset_ = Preset::custom;
    std::string name_;
    std::function<std::complex<double>(double)> eval_;
};

/// Adaptive quadrature of the boundedness integral of Eq-type
/// int |K(u)| / sqrt(|a(u)|) du over the punctured line, split at +-1.
/// The value doubles as the Minkowski upper bound for the L2 operator norm.
BoundednessReport admissibility(const Kernel& k, const ScalingFunction& a,
                                const quad::Options& opts = {});

}  // namespace hausdorff
