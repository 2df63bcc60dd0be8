#pragma once

#include <array>

#include "hausdorff/sampled_line.hpp"

namespace hausdorff {

/// The 2x2 matrix symbol of a Hausdorff operator, sampled on an s-grid:
///   Phi(s) = [[phi_plus, phi_minus], [phi_minus, phi_plus]].
/// Phi(s) = phi_plus*I + phi_minus*J with J = [[0,1],[1,0]]; I and J commute
/// and J is Hermitian-unitary, so Phi(s) is normal and its eigenvalues are the
/// curves phi = phi_plus + phi_minus and phi_star = phi_plus - phi_minus.
struct Symbol {
    Grid s_grid;
    std::vector<cd> phi_plus;
    std::vector<cd> phi_minus;

    Symbol() = default;
    Symbol(Grid grid, std::vector<cd> plus, std::vector<cd> minus);

    std::size_t size() const { return phi_plus.size(); }

    cd phi(std::size_t i) const { return phi_plus[i] + phi_minus[i]; }
    cd phi_star(std::size_t i) const { return phi_plus[i] - phi_minus[i]; }
    std::vector<cd> phi_curve() const;
    std::vector<cd> phi_star_curve() const;

    /// Linear interpolation of (phi_plus, phi_minus) at s.
    cd phi_plus_at(double s) const;
    cd phi_minus_at(double s) const;

    static Symbol zeros(Grid grid);
};

/// Phi(s) assembled as a full 2x2 matrix (row-major).  s must lie inside the
/// sampled range.
std::array<std::array<cd, 2>, 2> symbol_at(const Symbol& sym, double s);

/// Pointwise product in the symbol algebra:
///   (a*b)_plus = a+ b+ + a- b-,  (a*b)_minus = a+ b- + a- b+.
/// Bitwise commutative: multiply_symbols(a,b) == multiply_symbols(b,a).
Symbol multiply_symbols(const Symbol& a, const Symbol& b);

/// sup_s ||Phi(s)||_op = sup_s max(|phi(s)|, |phi_star(s)|), refined around the
/// discrete argmax by golden-section search on the interpolated curves.
double operator_norm(const Symbol& sym);

}  // namespace hausdorff
