#include "hausdorff/operator.hpp"

#include "hausdorff/transforms.hpp"

namespace hausdorff {

HausdorffOperator::HausdorffOperator(Kernel k, ScalingFunction a, Grid t_grid, Grid s_grid,
                                     Tolerances tol)
    : aux_(std::move(a)), s_grid_(s_grid), tol_(tol) {
    report_ = admissibility(k, aux_, tol_.quadrature);
    if (!report_.admissible)
        throw NotAdmissibleError("kernel " + k.name() + " is not admissible for scaling " +
                                     aux_.name(),
                                 report_);
    pair_ = to_log_pair(k, aux_, t_grid, tol_);
    source_kernel_ = std::move(k);
}

HausdorffOperator HausdorffOperator::from_pair(KernelPair pair, ScalingFunction a, Grid s_grid,
                                               Tolerances tol) {
    HausdorffOperator h;
    h.pair_ = std::move(pair);
    h.aux_ = std::move(a);
    h.s_grid_ = s_grid;
    h.tol_ = tol;
    h.report_.integral_value = h.pair_.l1_total() + h.pair_.tail_mass;
    h.report_.admissible = true;
    h.report_.quadrature_error_estimate = 0.0;
    return h;
}

const Kernel& HausdorffOperator::kernel() const {
    if (source_kernel_) return *source_kernel_;
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->derived_kernel) cache_->derived_kernel = from_log_pair(pair_, aux_);
    return *cache_->derived_kernel;
}

std::shared_ptr<const Symbol> HausdorffOperator::symbol() const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        if (cache_->symbol) return cache_->symbol;
    }
    auto plus = fourier_l1(pair_.plus_line(), s_grid_, Direction::forward);
    auto minus = fourier_l1(pair_.minus_line(), s_grid_, Direction::forward);
    auto sym = std::make_shared<const Symbol>(s_grid_, std::move(plus.values),
                                              std::move(minus.values));
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->symbol) cache_->symbol = std::move(sym);
    return cache_->symbol;
}

void HausdorffOperator::set_cached_symbol(std::shared_ptr<const Symbol> sym) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->symbol = std::move(sym);
}

std::shared_ptr<const Symbol> HausdorffOperator::cached_multiplier() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->multiplier;
}

void HausdorffOperator::set_cached_multiplier(std::shared_ptr<const Symbol> m) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->multiplier = std::move(m);
}

std::shared_ptr<const Symbol> compute_symbol(const HausdorffOperator& h) { return h.symbol(); }

}  // namespace hausdorff
