#include "hausdorff/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hausdorff {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Kernel Kernel::hardy() {
    Kernel k;
    k.preset_ = Preset::hardy;
    k.name_ = "hardy";
    k.eval_ = [](double u) -> std::complex<double> {
        if (u > 1.0) return std::exp(-2.0 * std::log(u));
        if (u == 1.0) return 0.5;
        return 0.0;
    };
    return k;
}

Kernel Kernel::log_gaussian(double sigma) {
    if (!(sigma > 0.0)) throw ConfigError("log_gaussian requires sigma > 0");
    Kernel k;
    k.preset_ = Preset::log_gaussian;
    k.name_ = "log_gaussian(" + std::to_string(sigma) + ")";
    const double norm_log = -0.5 * std::log(2.0 * kPi * sigma * sigma);
    k.eval_ = [sigma, norm_log](double u) -> std::complex<double> {
        if (!(u > 0.0)) return 0.0;
        const double lu = std::log(u);
        return std::exp(norm_log - lu * lu / (2.0 * sigma * sigma) - 1.5 * lu);
    };
    return k;
}

Kernel Kernel::truncated_power(double alpha, double cutoff) {
    if (!(cutoff > 0.0)) throw ConfigError("truncated_power requires cutoff > 0");
    Kernel k;
    k.preset_ = Preset::truncated_power;
    k.name_ = "truncated_power(" + std::to_string(alpha) + "," + std::to_string(cutoff) + ")";
    k.eval_ = [alpha, cutoff](double u) -> std::complex<double> {
        if (u > cutoff) return std::exp(alpha * std::log(u));
        if (u == cutoff) return 0.5 * std::exp(alpha * std::log(cutoff));
        return 0.0;
    };
    return k;
}

Kernel Kernel::zero() {
    Kernel k;
    k.preset_ = Preset::zero;
    k.name_ = "zero";
    k.eval_ = [](double) -> std::complex<double> { return 0.0; };
    return k;
}

Kernel Kernel::custom_table(std::vector<std::pair<double, double>> table, std::string name) {
    if (table.size() < 2) throw ConfigError("kernel table needs at least 2 rows");
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (!(table[i].first > 0.0)) throw ConfigError("kernel table u column must be positive");
        if (i > 0 && !(table[i].first > table[i - 1].first))
            throw ConfigError("kernel table u column must be strictly increasing");
    }
    Kernel k;
    k.preset_ = Preset::custom;
    k.name_ = std::move(name);
    auto tab = std::make_shared<const std::vector<std::pair<double, double>>>(std::move(table));
    k.eval_ = [tab](double u) -> std::complex<double> {
        const auto& t = *tab;
        if (u < t.front().first || u > t.back().first) return 0.0;
        const auto it = std::upper_bound(t.begin(), t.end(), u,
                                         [](double v, const auto& p) { return v < p.first; });
        const std::size_t hi = std::min<std::size_t>(t.size() - 1,
                                                     static_cast<std::size_t>(it - t.begin()));
        const std::size_t lo = hi - 1;
        const double w = (u - t[lo].first) / (t[hi].first - t[lo].first);
        return t[lo].second + w * (t[hi].second - t[lo].second);
    };
    return k;
}

Kernel Kernel::custom(std::function<std::complex<double>(double)> eval, std::string name) {
    Kernel k;
    k.preset_ = Preset::custom;
    k.name_ = std::move(name);
    k.eval_ = std::move(eval);
    return k;
}

std::complex<double> Kernel::eval(double u) const {
    if (u == 0.0) throw EvaluationError("kernel is undefined at u = 0");
    return eval_(u);
}

namespace {

// Power-tail divergence probe.  Quadrature alone cannot distinguish a
// log-divergent tail (integrand ~ 1/u) from a convergent one in double
// precision: underflow silently truncates the tail.  The integrand here is
// nonnegative, so a persistent local decay exponent <= 1 at u -> inf (or
// growth exponent >= 1 at u -> 0+) certifies divergence.
bool power_tail_diverges(const std::function<double(double)>& f) {
    for (const bool toward_zero : {false, true}) {
        int weak = 0;
        double prev = f(toward_zero ? std::exp2(-20.0) : std::exp2(20.0));
        for (int k = 2; k <= 25; ++k) {
            const double lg = 20.0 * k;
            const double u = std::exp2(toward_zero ? -lg : lg);
            const double v = f(u);
            if (std::isinf(v)) return true;
            if (v == 0.0 || prev == 0.0) {
                weak = 0;
                prev = v;
                continue;
            }
            // Local decay exponent toward the dangerous direction.
            const double p = (std::log2(prev) - std::log2(v)) / 20.0;
            const double limit = toward_zero ? -0.98 : 1.02;
            weak = (p <= limit) ? weak + 1 : 0;
            if (weak >= 3) return true;
            prev = v;
        }
    }
    return false;
}

}  // namespace

BoundednessReport admissibility(const Kernel& k, const ScalingFunction& a,
                                const quad::Options& opts) {
    auto integrand_pos = [&](double u) -> quad::cd {
        const double kv = std::abs(k.eval(u));
        if (kv == 0.0) return 0.0;
        return kv / std::sqrt(a.eval_positive(u));
    };
    auto integrand_neg = [&](double u) -> quad::cd {
        // |a(-u)| = a(u) for u > 0 by oddness.
        const double kv = std::abs(k.eval(-u));
        if (kv == 0.0) return 0.0;
        return kv / std::sqrt(a.eval_positive(u));
    };

    const std::function<quad::cd(double)> sides2[2] = {integrand_pos, integrand_neg};
    for (const auto& side : sides2) {
        auto magnitude = [&side](double u) { return std::abs(side(u).real()); };
        if (power_tail_diverges(magnitude)) {
            BoundednessReport rep;
            rep.integral_value = std::numeric_limits<double>::infinity();
            rep.admissible = false;
            return rep;
        }
    }

    const std::function<quad::cd(double)> sides[2] = {integrand_pos, integrand_neg};
    quad::Result total;
    total.converged = true;
    for (const auto& integrand : sides) {
        const auto inner = quad::integrate(integrand, 0.0, 1.0, opts);
        const auto outer = quad::integrate_up(integrand, 1.0, opts);
        total = quad::combine(total, quad::combine(inner, outer));
        if (total.divergent) break;
    }

    BoundednessReport rep;
    rep.quadrature_error_estimate = total.error_estimate;
    if (total.divergent || !total.converged) {
        rep.integral_value = std::numeric_limits<double>::infinity();
        rep.admissible = false;
    } else {
        rep.integral_value = total.real();
        rep.admissible = true;
    }
    return rep;
}

}  // namespace hausdorff
