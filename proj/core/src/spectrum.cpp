#include "hausdorff/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hausdorff {

SpectralCurve spectrum_curve(const Symbol& sym) {
    SpectralCurve c;
    c.s_grid = sym.s_grid;
    c.branch_phi = sym.phi_curve();
    c.branch_phi_star = sym.phi_star_curve();
    c.includes_zero = true;
    double r = 0.0;
    for (const auto& z : c.branch_phi) r = std::max(r, std::abs(z));
    for (const auto& z : c.branch_phi_star) r = std::max(r, std::abs(z));
    c.bounding_radius = r;
    return c;
}

namespace {

double distance_to_segment(cd p, cd a, cd b) {
    const cd ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

double distance_to_polyline(cd p, const std::vector<cd>& pts) {
    double best = std::abs(p - pts.front());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        best = std::min(best, distance_to_segment(p, pts[i], pts[i + 1]));
    return best;
}

}  // namespace

double distance_to_spectrum(const SpectralCurve& c, cd lambda) {
    double best = std::abs(lambda);  // the adjoined origin
    if (!c.branch_phi.empty()) best = std::min(best, distance_to_polyline(lambda, c.branch_phi));
    if (!c.branch_phi_star.empty())
        best = std::min(best, distance_to_polyline(lambda, c.branch_phi_star));
    return best;
}

double resolvent_regularity(const Symbol& sym, cd lambda) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < sym.size(); ++i) {
        const cd d = (lambda - sym.phi(i)) * (lambda - sym.phi_star(i));
        best = std::min(best, std::abs(d));
    }
    return best;
}

}  // namespace hausdorff
