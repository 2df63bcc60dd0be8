#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace hausdorff {

/// The odd scaling function a(u): strictly decreasing and strictly positive on
/// (0, inf) with limit 0, extended to u < 0 by oddness.  Only the positive
/// branch is ever stored or evaluated; the odd extension is applied centrally
/// in odd_eval so callers cannot bypass it.
class ScalingFunction {
public:
    enum class Family { reciprocal, power, custom };

    /// a(u) = 1/u.
    static ScalingFunction reciprocal();
    /// a(u) = u^(-gamma), gamma > 0.
    static ScalingFunction power(double gamma);
    /// Piecewise log-log interpolation of (u, a(u)) samples, u > 0 strictly
    /// increasing, values strictly decreasing; power-law continuation outside.
    static ScalingFunction custom_table(std::vector<std::pair<double, double>> table,
                                        std::string name);
    /// In-process custom branch with explicit inverse.
    static ScalingFunction custom(std::function<double(double)> pos_eval,
                                  std::function<double(double)> pos_inverse,
                                  std::string name);

    /// a(u) for u > 0.
    double eval_positive(double u) const;
    /// Odd extension: a(-u) = -a(u).  u must be nonzero.
    double odd_eval(double u) const;
    /// Inverse of the positive branch.
    double inverse_positive(double y) const;

    /// sqrt(a(e^{-t})) -- the quadrature weight of the log-coordinate change.
    double weight_sqrt(double t) const;
    /// A(tau) = -ln a(e^{-tau}): the additive shift induced in log coordinates
    /// by the multiplicative scaling x -> x*a(u).  Exact (-gamma*tau) for the
    /// power family so lattice-aligned shifts stay lattice-aligned.
    double shift(double tau) const;

    Family family() const { return family_; }
    /// Exponent for the power family (reciprocal reports 1).
    double gamma() const { return gamma_; }
    bool is_power_family() const { return family_ != Family::custom; }
    const std::string& name() const { return name_; }

    /// Two scaling functions define the same algebra A_a.  reciprocal and
    /// power(1) compare equal; custom functions compare by identity.
    bool same_algebra(const ScalingFunction& other) const;

private:
    ScalingFunction() = default;
    void validate() const;

    Family family_ = Family::reciprocal;
    double gamma_ = 1.0;
    std::string name_;
    std::function<double(double)> pos_eval_;
    std::function<double(double)> pos_inverse_;
    std::shared_ptr<const std::vector<std::pair<double, double>>> table_;
};

}  // namespace hausdorff
