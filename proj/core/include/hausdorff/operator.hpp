#pragma once

#include <memory>
#include <mutex>
#include <optional>

#include "hausdorff/kernel_pair.hpp"
#include "hausdorff/symbol.hpp"

namespace hausdorff {

/// Handle for a Hausdorff operator H_{K,a} f(x) = int K(u) f(x a(u)) du.
/// Canonically represented by its log-coordinate kernel pair; the pointwise
/// kernel K(u) is derived data (from_log_pair) for operators built in pair
/// space.  Immutable after construction; the symbol/multiplier caches are
/// compute-once and safe for concurrent readers.
class HausdorffOperator {
public:
    /// Builds the pair from a pointwise kernel (checks admissibility).
    HausdorffOperator(Kernel k, ScalingFunction a, Grid t_grid, Grid s_grid,
                      Tolerances tol = {});

    /// Wraps an existing pair (composition / linear-combination results).
    static HausdorffOperator from_pair(KernelPair pair, ScalingFunction a, Grid s_grid,
                                       Tolerances tol = {});

    const KernelPair& pair() const { return pair_; }
    const ScalingFunction& aux() const { return aux_; }
    const Grid& t_grid() const { return pair_.grid; }
    const Grid& s_grid() const { return s_grid_; }
    const Tolerances& tolerances() const { return tol_; }

    /// The pointwise kernel: the source kernel when the operator was built
    /// from one, otherwise the pull-back of the pair (built lazily).
    const Kernel& kernel() const;

    /// Boundedness report: adaptive quadrature for source kernels; for
    /// pair-built operators the change of variables u = +-e^{-t} is exact and
    /// the integral equals l1_plus + l1_minus (+ tail).
    const BoundednessReport& boundedness() const { return report_; }

    /// Cached symbol (phi+- = Fourier transforms of the pair on s_grid).
    std::shared_ptr<const Symbol> symbol() const;

    /// Installs a precomputed symbol (functional-calculus results carry their
    /// F1/F2-valued symbol, consistent with the pair to truncation level).
    void set_cached_symbol(std::shared_ptr<const Symbol> sym) const;

    /// Cached diagonalization multiplier (see engine.hpp::conjugation_multiplier).
    std::shared_ptr<const Symbol> cached_multiplier() const;
    void set_cached_multiplier(std::shared_ptr<const Symbol> m) const;

private:
    HausdorffOperator() = default;

    struct Cache {
        std::mutex mu;
        std::shared_ptr<const Symbol> symbol;
        std::shared_ptr<const Symbol> multiplier;
        std::optional<Kernel> derived_kernel;
    };

    KernelPair pair_;
    ScalingFunction aux_ = ScalingFunction::reciprocal();
    Grid s_grid_;
    Tolerances tol_;
    BoundednessReport report_;
    std::optional<Kernel> source_kernel_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// phi+- = fourier_l1(K+-) on the handle's s-grid; cached on the handle.
std::shared_ptr<const Symbol> compute_symbol(const HausdorffOperator& h);

}  // namespace hausdorff
