#include "hausdorff/symbol.hpp"

#include <cmath>

#include "hausdorff/errors.hpp"

namespace hausdorff {

Symbol::Symbol(Grid grid, std::vector<cd> plus, std::vector<cd> minus)
    : s_grid(grid), phi_plus(std::move(plus)), phi_minus(std::move(minus)) {
    if (phi_plus.size() != s_grid.size() || phi_minus.size() != s_grid.size())
        throw GridMismatchError("symbol arrays do not match the s-grid");
}

std::vector<cd> Symbol::phi_curve() const {
    std::vector<cd> v(size());
    for (std::size_t i = 0; i < size(); ++i) v[i] = phi(i);
    return v;
}

std::vector<cd> Symbol::phi_star_curve() const {
    std::vector<cd> v(size());
    for (std::size_t i = 0; i < size(); ++i) v[i] = phi_star(i);
    return v;
}

namespace {

cd interp_at(const Grid& g, const std::vector<cd>& v, double s) {
    const double x = g.fractional_index(s);
    if (x < 0.0 || x > static_cast<double>(v.size() - 1))
        throw GridMismatchError("s outside the sampled symbol range");
    const auto lo = static_cast<std::size_t>(x);
    if (lo + 1 >= v.size()) return v.back();
    const double w = x - static_cast<double>(lo);
    return v[lo] + w * (v[lo + 1] - v[lo]);
}

}  // namespace

cd Symbol::phi_plus_at(double s) const { return interp_at(s_grid, phi_plus, s); }
cd Symbol::phi_minus_at(double s) const { return interp_at(s_grid, phi_minus, s); }

Symbol Symbol::zeros(Grid grid) {
    return Symbol(grid, std::vector<cd>(grid.size(), cd(0.0, 0.0)),
                  std::vector<cd>(grid.size(), cd(0.0, 0.0)));
}

std::array<std::array<cd, 2>, 2> symbol_at(const Symbol& sym, double s) {
    const cd p = sym.phi_plus_at(s);
    const cd m = sym.phi_minus_at(s);
    return {{{p, m}, {m, p}}};
}

Symbol multiply_symbols(const Symbol& a, const Symbol& b) {
    if (a.s_grid != b.s_grid) throw GridMismatchError("symbol product requires identical s-grids");
    const std::size_t n = a.size();
    std::vector<cd> plus(n), minus(n);
    for (std::size_t i = 0; i < n; ++i) {
        plus[i] = a.phi_plus[i] * b.phi_plus[i] + a.phi_minus[i] * b.phi_minus[i];
        minus[i] = a.phi_plus[i] * b.phi_minus[i] + a.phi_minus[i] * b.phi_plus[i];
    }
    return Symbol(a.s_grid, std::move(plus), std::move(minus));
}

namespace {

// Golden-section maximization of |linear interpolant| over [lo, hi].
double golden_max(const std::function<double(double)>& f, double lo, double hi) {
    const double gr = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 200 && (b - a) > 1e-13 * (std::abs(a) + std::abs(b) + 1.0); ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        }
    }
    return std::max(f1, f2);
}

double refined_branch_sup(const Grid& g, const std::vector<cd>& branch) {
    std::size_t argmax = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < branch.size(); ++i) {
        const double m = std::abs(branch[i]);
        if (m > best) {
            best = m;
            argmax = i;
        }
    }
    const std::size_t lo = argmax > 0 ? argmax - 1 : argmax;
    const std::size_t hi = argmax + 1 < branch.size() ? argmax + 1 : argmax;
    if (lo == hi) return best;
    auto f = [&](double s) {
        const double x = g.fractional_index(s);
        const auto i = static_cast<std::size_t>(x);
        if (i + 1 >= branch.size()) return std::abs(branch.back());
        const double w = x - static_cast<double>(i);
        return std::abs(branch[i] + w * (branch[i + 1] - branch[i]));
    };
    return std::max(best, golden_max(f, g.node(lo), g.node(hi)));
}

}  // namespace

double operator_norm(const Symbol& sym) {
    if (sym.size() == 0) return 0.0;
    const double sup_phi = refined_branch_sup(sym.s_grid, sym.phi_curve());
    const double sup_star = refined_branch_sup(sym.s_grid, sym.phi_star_curve());
    return std::max(sup_phi, sup_star);
}

}  // namespace hausdorff
