#include "hausdorff/scaling.hpp"

#include <algorithm>
#include <cmath>

#include "hausdorff/errors.hpp"

namespace hausdorff {

namespace {

// Log-log linear interpolation of a strictly monotone table, with power-law
// continuation from the edge slopes.
double loglog_interp(const std::vector<std::pair<double, double>>& tab, double u) {
    const auto lx = std::log(u);
    std::size_t hi;
    if (u <= tab.front().first) {
        hi = 1;
    } else if (u >= tab.back().first) {
        hi = tab.size() - 1;
    } else {
        hi = static_cast<std::size_t>(
            std::upper_bound(tab.begin(), tab.end(), u,
                             [](double v, const auto& p) { return v < p.first; }) -
            tab.begin());
    }
    const double x0 = std::log(tab[hi - 1].first), x1 = std::log(tab[hi].first);
    const double y0 = std::log(tab[hi - 1].second), y1 = std::log(tab[hi].second);
    const double w = (lx - x0) / (x1 - x0);
    return std::exp(y0 + w * (y1 - y0));
}

double loglog_inverse(const std::vector<std::pair<double, double>>& tab, double y) {
    const auto ly = std::log(y);
    // Values are strictly decreasing in u.
    std::size_t hi;
    if (y >= tab.front().second) {
        hi = 1;
    } else if (y <= tab.back().second) {
        hi = tab.size() - 1;
    } else {
        hi = static_cast<std::size_t>(
            std::lower_bound(tab.begin(), tab.end(), y,
                             [](const auto& p, double v) { return p.second > v; }) -
            tab.begin());
    }
    const double x0 = std::log(tab[hi - 1].first), x1 = std::log(tab[hi].first);
    const double y0 = std::log(tab[hi - 1].second), y1 = std::log(tab[hi].second);
    const double w = (ly - y0) / (y1 - y0);
    return std::exp(x0 + w * (x1 - x0));
}

}  // namespace

ScalingFunction ScalingFunction::reciprocal() {
    ScalingFunction a;
    a.family_ = Family::reciprocal;
    a.gamma_ = 1.0;
    a.name_ = "reciprocal";
    a.validate();
    return a;
}

ScalingFunction ScalingFunction::power(double gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw ConfigError("power scaling requires gamma > 0");
    ScalingFunction a;
    a.family_ = Family::power;
    a.gamma_ = gamma;
    a.name_ = "power(" + std::to_string(gamma) + ")";
    a.validate();
    return a;
}

ScalingFunction ScalingFunction::custom_table(std::vector<std::pair<double, double>> table,
                                              std::string name) {
    if (table.size() < 2) throw ConfigError("scaling table needs at least 2 rows");
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (!(table[i].first > 0.0) || !(table[i].second > 0.0))
            throw ConfigError("scaling table entries must be positive");
        if (i > 0 && !(table[i].first > table[i - 1].first))
            throw ConfigError("scaling table u column must be strictly increasing");
        if (i > 0 && !(table[i].second < table[i - 1].second))
            throw ConfigError("scaling table values must be strictly decreasing");
    }
    ScalingFunction a;
    a.family_ = Family::custom;
    a.name_ = std::move(name);
    a.table_ = std::make_shared<const std::vector<std::pair<double, double>>>(std::move(table));
    auto tab = a.table_;
    a.pos_eval_ = [tab](double u) { return loglog_interp(*tab, u); };
    a.pos_inverse_ = [tab](double y) { return loglog_inverse(*tab, y); };
    a.validate();
    return a;
}

ScalingFunction ScalingFunction::custom(std::function<double(double)> pos_eval,
                                        std::function<double(double)> pos_inverse,
                                        std::string name) {
    ScalingFunction a;
    a.family_ = Family::custom;
    a.name_ = std::move(name);
    a.pos_eval_ = std::move(pos_eval);
    a.pos_inverse_ = std::move(pos_inverse);
    a.validate();
    return a;
}

double ScalingFunction::eval_positive(double u) const {
    if (!(u > 0.0)) throw EvaluationError("scaling function evaluated at u <= 0 on the positive branch");
    if (is_power_family()) return std::exp(-gamma_ * std::log(u));
    return pos_eval_(u);
}

double ScalingFunction::odd_eval(double u) const {
    if (u == 0.0) throw EvaluationError("scaling function is undefined at u = 0");
    return u > 0.0 ? eval_positive(u) : -eval_positive(-u);
}

double ScalingFunction::inverse_positive(double y) const {
    if (!(y > 0.0)) throw EvaluationError("scaling inverse requires y > 0");
    if (is_power_family()) return std::exp(-std::log(y) / gamma_);
    return pos_inverse_(y);
}

double ScalingFunction::weight_sqrt(double t) const {
    if (is_power_family()) return std::exp(0.5 * gamma_ * t);
    return std::sqrt(pos_eval_(std::exp(-t)));
}

double ScalingFunction::shift(double tau) const {
    if (is_power_family()) return -gamma_ * tau;
    return -std::log(pos_eval_(std::exp(-tau)));
}

bool ScalingFunction::same_algebra(const ScalingFunction& other) const {
    const bool p1 = is_power_family(), p2 = other.is_power_family();
    if (p1 != p2) return false;
    if (p1) return gamma_ == other.gamma_;
    return name_ == other.name_ &&
           ((table_ && other.table_ && *table_ == *other.table_) || (!table_ && !other.table_));
}

void ScalingFunction::validate() const {
    // Sampling range: wide enough that a geometric grid shows both the strict
    // decrease and the decay to <= 1e-6 of the initial value.  For the power
    // family the needed number of decades scales like 1/gamma.
    double u_lo, u_hi;
    if (is_power_family()) {
        const double decades = std::max(8.0, 3.5 / gamma_);
        u_lo = std::pow(10.0, -decades);
        u_hi = std::pow(10.0, decades);
    } else if (table_) {
        u_lo = table_->front().first;
        u_hi = table_->back().first;
        // Power-law continuation: extend the right end until decay is visible.
        const auto& tb = *table_;
        const double slope = (std::log(tb[tb.size() - 1].second) - std::log(tb[tb.size() - 2].second)) /
                             (std::log(tb[tb.size() - 1].first) - std::log(tb[tb.size() - 2].first));
        if (!(slope < 0.0))
            throw ConfigError("scaling table right edge must continue decreasing");
        const double start = pos_eval_(u_lo);
        const double need = std::log(start * 1e-7 / tb.back().second) / slope;  // log-u distance
        if (need > 0.0) u_hi = tb.back().first * std::exp(need);
    } else {
        u_lo = 1e-8;
        u_hi = 1e8;
    }

    const int n_check = 96;
    const double ratio = std::exp(std::log(u_hi / u_lo) / (n_check - 1));
    double prev = 0.0;
    double first = 0.0, last = 0.0;
    double u = u_lo;
    for (int i = 0; i < n_check; ++i, u *= ratio) {
        const double v = is_power_family() ? std::exp(-gamma_ * std::log(u)) : pos_eval_(u);
        if (!(v > 0.0) || !std::isfinite(v))
            throw ConfigError("scaling function must be finite and strictly positive on (0,inf)");
        if (i > 0 && !(v < prev))
            throw ConfigError("scaling function must be strictly decreasing on (0,inf)");
        if (i == 0) first = v;
        last = v;
        prev = v;

        const double back = is_power_family() ? std::exp(-std::log(v) / gamma_)
                                              : pos_inverse_(v);
        if (std::abs(back - u) > 1e-10 * std::abs(u))
            throw ConfigError("scaling inverse is inconsistent with the forward map");
    }
    if (!(last <= 1e-6 * first))
        throw ConfigError("scaling function does not decay to zero at +inf");
}

}  // namespace hausdorff
