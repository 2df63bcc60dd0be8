#pragma once

#include <string>
#include <utility>

#include "hausdorff/operator.hpp"
#include "hausdorff/spectrum.hpp"

namespace hausdorff {

/// A function holomorphic in a neighborhood of the spectrum with F(0) = 0
/// (the algebra A_a has no unit, so constants cannot appear).  Analyticity is
/// declared through `excluded_points`: the contour and its interior must stay
/// clear of them.
struct HolomorphicFunction {
    std::function<cd(cd)> eval;
    std::string name_tag;
    std::vector<cd> excluded_points;

    cd operator()(cd z) const { return eval(z); }

    static HolomorphicFunction identity();
    static HolomorphicFunction square();
    static HolomorphicFunction cube();
    /// c1*z + c2*z^2 + ... (constant term is identically zero).
    static HolomorphicFunction polynomial(std::vector<cd> coeffs_from_degree_one);
    /// F(z) = z / (mu - z); mu must lie outside the contour.
    static HolomorphicFunction resolvent(cd mu);

    /// Throws ContractViolationError unless |F(0)| <= 1e-12.
    void check_vanishes_at_zero() const;
};

/// Closed positively-oriented integration contour: a circle or an
/// axis-aligned rectangle, discretized into ordered quadrature nodes
/// (trapezoid on circles, composite Gauss-Legendre on polyline sides).
class Contour {
public:
    static Contour circle(cd center, double radius, std::size_t n_quad = 1024);
    static Contour rectangle(cd corner_lo, cd corner_hi, std::size_t n_quad = 1024);

    /// Quadrature nodes lambda_m and weights w_m with
    /// contour integral f =~ sum_m f(lambda_m) w_m; `mult` refines the count.
    void nodes(std::size_t mult, std::vector<cd>& lambda, std::vector<cd>& weight) const;

    /// Winding number around p from the discrete argument principle over the
    /// node polygon.
    int winding_number(cd p) const;
    /// Strict interior test (exact for both contour kinds).
    bool encloses(cd p) const;
    /// Distance from p to the contour path.
    double boundary_distance(cd p) const;

    std::size_t base_nodes() const { return n_quad_; }
    double extent() const;  // characteristic size (max |lambda|)
    bool is_circle() const { return kind_ == Kind::circle; }
    cd circle_center() const { return center_; }
    double circle_radius() const { return radius_; }

private:
    enum class Kind { circle, rectangle };
    Kind kind_ = Kind::circle;
    cd center_{0.0, 0.0};
    double radius_ = 0.0;
    cd lo_{0.0, 0.0}, hi_{0.0, 0.0};
    std::size_t n_quad_ = 1024;
};

/// Circle centered at the centroid of {0} and the sampled curves, with radius
/// (1 + margin) * max-distance.  Throws ContourError when the margin is too
/// small for the quadrature resolution.
Contour auto_contour(const SpectralCurve& c, double margin);

/// Matrix entries of F(Phi) through the resolvent contour integrals
///   F1(z1,z2) = (2 pi i)^{-1} contour-int F(l) (l - z2) / ((l - z2)^2 - z1^2) dl
///   F2(z1,z2) = (+z1) (2 pi i)^{-1} contour-int F(l) / ((l - z2)^2 - z1^2) dl.
/// The F2 prefactor carries the sign that matches the eigenprojection
/// identity F(Phi) = F(phi) P+ + F(phi*) P- (checked against f1_f2_eigen).
/// Node count doubles until two successive estimates agree to 1e-10.
std::pair<cd, cd> f1_f2_contour(const HolomorphicFunction& F, const Contour& gamma, cd z1, cd z2);

/// Closed eigenprojection form (the oracle for the contour route):
///   F1 = (F(z2 + z1) + F(z2 - z1)) / 2,  F2 = (F(z2 + z1) - F(z2 - z1)) / 2.
std::pair<cd, cd> f1_f2_eigen(const HolomorphicFunction& F, cd z1, cd z2);

/// F(H): evaluates (F1, F2) at (z1, z2) = (phi-(s), phi+(s)), assembles the
/// new symbol (diagonal F1, off-diagonal F2) and inverse-Fourier-transforms it
/// back to a kernel pair Q+-.  The inversion runs on an internal bijective
/// lattice pair (exact scaled DFT), so polynomial F reproduces repeated
/// composition at truncation level.  Preconditions: F(0) = 0, the contour
/// winds once around the sampled spectrum and 0, and |Delta| stays bounded
/// away from zero along the contour for every sampled s.
HausdorffOperator apply_function(const HolomorphicFunction& F, const Contour& gamma,
                                 const HausdorffOperator& h);

}  // namespace hausdorff
