#include "hausdorff/funcalc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hausdorff/fft.hpp"
#include "hausdorff/parallel.hpp"

namespace hausdorff {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647693;

// 8-point Gauss-Legendre rule on [-1, 1].
constexpr double kGlX[8] = {-0.9602898564975362, -0.7966664774136267, -0.5255324099163290,
                            -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                            0.7966664774136267,  0.9602898564975362};
constexpr double kGlW[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                            0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                            0.2223810344533745, 0.1012285362903763};
}  // namespace

HolomorphicFunction HolomorphicFunction::identity() {
    return {[](cd z) { return z; }, "z", {}};
}

HolomorphicFunction HolomorphicFunction::square() {
    return {[](cd z) { return z * z; }, "z^2", {}};
}

HolomorphicFunction HolomorphicFunction::cube() {
    return {[](cd z) { return z * z * z; }, "z^3", {}};
}

HolomorphicFunction HolomorphicFunction::polynomial(std::vector<cd> coeffs) {
    auto eval = [c = std::move(coeffs)](cd z) {
        cd acc(0.0, 0.0);
        for (std::size_t k = c.size(); k > 0; --k) acc = (acc + c[k - 1]) * z;
        return acc;
    };
    return {std::move(eval), "poly", {}};
}

HolomorphicFunction HolomorphicFunction::resolvent(cd mu) {
    auto eval = [mu](cd z) { return z / (mu - z); };
    return {std::move(eval), "resolvent", {mu}};
}

void HolomorphicFunction::check_vanishes_at_zero() const {
    if (std::abs(eval(cd(0.0, 0.0))) > 1e-12)
        throw ContractViolationError("functional calculus requires F(0) = 0; function '" +
                                     name_tag + "' violates it");
}

Contour Contour::circle(cd center, double radius, std::size_t n_quad) {
    if (!(radius > 0.0)) throw ContourError("contour circle needs a positive radius");
    Contour c;
    c.kind_ = Kind::circle;
    c.center_ = center;
    c.radius_ = radius;
    c.n_quad_ = std::max<std::size_t>(64, n_quad);
    return c;
}

Contour Contour::rectangle(cd corner_lo, cd corner_hi, std::size_t n_quad) {
    if (!(corner_hi.real() > corner_lo.real()) || !(corner_hi.imag() > corner_lo.imag()))
        throw ContourError("contour rectangle needs corner_lo < corner_hi componentwise");
    Contour c;
    c.kind_ = Kind::rectangle;
    c.lo_ = corner_lo;
    c.hi_ = corner_hi;
    c.n_quad_ = std::max<std::size_t>(64, n_quad);
    return c;
}

void Contour::nodes(std::size_t mult, std::vector<cd>& lambda, std::vector<cd>& weight) const {
    lambda.clear();
    weight.clear();
    const std::size_t total = n_quad_ * std::max<std::size_t>(1, mult);
    if (kind_ == Kind::circle) {
        lambda.reserve(total);
        weight.reserve(total);
        for (std::size_t m = 0; m < total; ++m) {
            const double th = kTwoPi * static_cast<double>(m) / static_cast<double>(total);
            const cd e(std::cos(th), std::sin(th));
            lambda.push_back(center_ + radius_ * e);
            weight.push_back(cd(0.0, 1.0) * radius_ * e * (kTwoPi / static_cast<double>(total)));
        }
        return;
    }
    // Counterclockwise polyline: four sides, composite 8-point Gauss-Legendre.
    const cd c1 = lo_, c2 = cd(hi_.real(), lo_.imag()), c3 = hi_, c4 = cd(lo_.real(), hi_.imag());
    const cd corners[5] = {c1, c2, c3, c4, c1};
    const std::size_t panels = std::max<std::size_t>(2, total / (4 * 8));
    for (int side = 0; side < 4; ++side) {
        const cd a = corners[side], b = corners[side + 1];
        const cd step = (b - a) / static_cast<double>(panels);
        for (std::size_t p = 0; p < panels; ++p) {
            const cd pa = a + static_cast<double>(p) * step;
            for (int g = 0; g < 8; ++g) {
                lambda.push_back(pa + 0.5 * (kGlX[g] + 1.0) * step);
                weight.push_back(0.5 * kGlW[g] * step);
            }
        }
    }
}

int Contour::winding_number(cd p) const {
    std::vector<cd> lambda, w;
    nodes(1, lambda, w);
    const std::size_t m = std::min<std::size_t>(lambda.size(), 512);
    const std::size_t stride = std::max<std::size_t>(1, lambda.size() / m);
    double total = 0.0;
    cd prev = lambda[0] - p;
    for (std::size_t i = stride; i <= lambda.size(); i += stride) {
        const cd cur = lambda[i % lambda.size()] - p;
        total += std::arg(cur / prev);
        prev = cur;
    }
    // Close the loop if the stride did not land exactly on the start.
    total += std::arg((lambda[0] - p) / prev);
    return static_cast<int>(std::lround(total / kTwoPi));
}

bool Contour::encloses(cd p) const {
    if (kind_ == Kind::circle) return std::abs(p - center_) < radius_;
    return p.real() > lo_.real() && p.real() < hi_.real() && p.imag() > lo_.imag() &&
           p.imag() < hi_.imag();
}

double Contour::boundary_distance(cd p) const {
    if (kind_ == Kind::circle) return std::abs(std::abs(p - center_) - radius_);
    const double dx = std::max({lo_.real() - p.real(), 0.0, p.real() - hi_.real()});
    const double dy = std::max({lo_.imag() - p.imag(), 0.0, p.imag() - hi_.imag()});
    if (dx > 0.0 || dy > 0.0) return std::hypot(dx, dy);  // outside
    const double ix = std::min(p.real() - lo_.real(), hi_.real() - p.real());
    const double iy = std::min(p.imag() - lo_.imag(), hi_.imag() - p.imag());
    return std::min(ix, iy);
}

double Contour::extent() const {
    if (kind_ == Kind::circle) return std::abs(center_) + radius_;
    return std::max(std::abs(lo_), std::abs(hi_));
}

Contour auto_contour(const SpectralCurve& c, double margin) {
    if (!(margin > 0.0)) throw ContourError("auto contour requires margin > 0");
    cd centroid(0.0, 0.0);
    std::size_t count = 1;  // the adjoined origin
    for (const auto& z : c.branch_phi) {
        centroid += z;
        ++count;
    }
    for (const auto& z : c.branch_phi_star) {
        centroid += z;
        ++count;
    }
    centroid /= static_cast<double>(count);

    double maxdist = std::abs(centroid);  // distance to the adjoined 0
    for (const auto& z : c.branch_phi) maxdist = std::max(maxdist, std::abs(z - centroid));
    for (const auto& z : c.branch_phi_star) maxdist = std::max(maxdist, std::abs(z - centroid));

    const double radius = maxdist > 0.0 ? (1.0 + margin) * maxdist : margin;
    Contour gamma = Contour::circle(centroid, radius);

    const double clearance = radius - maxdist;
    const double resolution = kTwoPi * radius / static_cast<double>(gamma.base_nodes());
    if (clearance < resolution)
        throw ContourError("auto contour margin is below the quadrature resolution");
    return gamma;
}

std::pair<cd, cd> f1_f2_eigen(const HolomorphicFunction& F, cd z1, cd z2) {
    const cd fp = F(z2 + z1);
    const cd fm = F(z2 - z1);
    return {0.5 * (fp + fm), 0.5 * (fp - fm)};
}

namespace {

struct NodeTable {
    std::vector<cd> lambda;
    std::vector<cd> w_over_2pii;  // quadrature weight / (2 pi i)
    std::vector<cd> f;            // F(lambda)
};

NodeTable build_table(const HolomorphicFunction& F, const Contour& gamma, std::size_t mult) {
    NodeTable t;
    std::vector<cd> w;
    gamma.nodes(mult, t.lambda, w);
    t.w_over_2pii.resize(w.size());
    t.f.resize(w.size());
    const cd inv_2pii = cd(0.0, -1.0) / kTwoPi;  // 1/(2 pi i)
    for (std::size_t m = 0; m < w.size(); ++m) {
        t.w_over_2pii[m] = w[m] * inv_2pii;
        t.f[m] = F(t.lambda[m]);
    }
    return t;
}

// Both contour integrals at one (z1, z2); also reports min |Delta| over nodes.
std::pair<cd, cd> table_f1_f2(const NodeTable& t, cd z1, cd z2, double* min_delta) {
    cd s1(0.0, 0.0), s2(0.0, 0.0);
    double md = std::numeric_limits<double>::infinity();
    const cd z1sq = z1 * z1;
    for (std::size_t m = 0; m < t.lambda.size(); ++m) {
        const cd d = t.lambda[m] - z2;
        const cd delta = d * d - z1sq;
        md = std::min(md, std::abs(delta));
        const cd base = t.f[m] * t.w_over_2pii[m] / delta;
        s1 += base * d;
        s2 += base;
    }
    if (min_delta) *min_delta = md;
    return {s1, z1 * s2};
}

}  // namespace

std::pair<cd, cd> f1_f2_contour(const HolomorphicFunction& F, const Contour& gamma, cd z1,
                                cd z2) {
    for (const cd pole : {z2 + z1, z2 - z1})
        if (gamma.winding_number(pole) != 1)
            throw ContourError("contour must wind exactly once around z2 +- z1");
    for (const cd q : F.excluded_points)
        if (gamma.encloses(q) || gamma.boundary_distance(q) == 0.0)
            throw ContourError("contour encloses a non-analyticity point of " + F.name_tag);

    const double scale = std::max(1.0, gamma.extent());
    std::pair<cd, cd> prev;
    for (std::size_t mult = 1; mult <= 64; mult *= 2) {
        const auto table = build_table(F, gamma, mult);
        double min_delta = 0.0;
        auto cur = table_f1_f2(table, z1, z2, &min_delta);
        if (min_delta < 1e-6 * scale * scale)
            throw ContourError("contour passes too close to a pole of the resolvent");
        if (mult > 1) {
            const double diff = std::abs(cur.first - prev.first) +
                                std::abs(cur.second - prev.second);
            const double ref = std::max(1.0, std::abs(cur.first) + std::abs(cur.second));
            if (diff <= 1e-10 * ref) return cur;
        }
        prev = cur;
    }
    return prev;
}

HausdorffOperator apply_function(const HolomorphicFunction& F, const Contour& gamma,
                                 const HausdorffOperator& h) {
    F.check_vanishes_at_zero();

    const auto sym = h.symbol();
    const auto curve = spectrum_curve(*sym);

    if (gamma.winding_number(cd(0.0, 0.0)) != 1)
        throw ContourError("contour must wind once around the adjoined origin");
    for (const auto& branch : {curve.branch_phi, curve.branch_phi_star})
        for (const auto& p : branch)
            if (!gamma.encloses(p))
                throw ContourError("contour does not enclose the sampled spectrum");
    // Spot-check the discrete argument principle on a subsample of the curve.
    const std::size_t stride = std::max<std::size_t>(1, curve.branch_phi.size() / 64);
    for (std::size_t i = 0; i < curve.branch_phi.size(); i += stride) {
        if (gamma.winding_number(curve.branch_phi[i]) != 1 ||
            gamma.winding_number(curve.branch_phi_star[i]) != 1)
            throw ContourError("contour winding is not 1 on the sampled spectrum");
    }
    for (const cd q : F.excluded_points)
        if (gamma.encloses(q) || gamma.boundary_distance(q) < 1e-9 * std::max(1.0, gamma.extent()))
            throw ContourError("contour interior touches a non-analyticity point of " +
                               F.name_tag);

    // Internal bijective lattice: window of size 2n starting at min(t_min, 2 t_min)
    // covers the support of Q for polynomial-type F; forward/inverse are exact DFTs.
    const Grid& tg = h.t_grid();
    const std::size_t n = tg.size();
    const std::size_t N = 2 * n;
    const double hstep = tg.step();
    const double T0 = std::min(tg.t_min(), 2.0 * tg.t_min());
    const auto offset = static_cast<std::size_t>(std::llround((tg.t_min() - T0) / hstep));

    std::vector<cd> embp(N, cd(0.0, 0.0)), embm(N, cd(0.0, 0.0));
    std::copy(h.pair().kplus.begin(), h.pair().kplus.end(), embp.begin() + offset);
    std::copy(h.pair().kminus.begin(), h.pair().kminus.end(), embm.begin() + offset);
    const auto phi_plus_dense = fft::lattice_forward(embp, T0, hstep);
    const auto phi_minus_dense = fft::lattice_forward(embm, T0, hstep);

    const double scale = std::max(1.0, gamma.extent());
    const double delta_floor = 1e-6 * scale * scale;

    // Evaluate (F1, F2) on the dense grid, doubling the contour nodes until
    // two full passes agree to 1e-10.
    std::vector<cd> f1(N), f2(N);
    double sup_change = std::numeric_limits<double>::infinity();
    double global_min_delta = std::numeric_limits<double>::infinity();
    std::vector<cd> prev_f1, prev_f2;
    for (std::size_t mult = 1; mult <= 16 && sup_change > 1e-10; mult *= 2) {
        const auto table = build_table(F, gamma, mult);
        std::vector<double> chunk_min((N + 4095) / 4096,
                                      std::numeric_limits<double>::infinity());
        parallel_for_chunks(N, 4096, [&](std::size_t b, std::size_t e) {
            double md_chunk = std::numeric_limits<double>::infinity();
            for (std::size_t k = b; k < e; ++k) {
                double md = 0.0;
                const auto v = table_f1_f2(table, phi_minus_dense[k], phi_plus_dense[k], &md);
                f1[k] = v.first;
                f2[k] = v.second;
                md_chunk = std::min(md_chunk, md);
            }
            chunk_min[b / 4096] = md_chunk;
        });
        global_min_delta = *std::min_element(chunk_min.begin(), chunk_min.end());
        if (global_min_delta < delta_floor)
            throw ContourError("resolvent determinant vanishes along the contour");
        if (!prev_f1.empty()) {
            sup_change = 0.0;
            for (std::size_t k = 0; k < N; ++k)
                sup_change = std::max({sup_change, std::abs(f1[k] - prev_f1[k]),
                                       std::abs(f2[k] - prev_f2[k])});
        }
        prev_f1 = f1;
        prev_f2 = f2;
    }

    auto qplus = fft::lattice_inverse(f1, T0, hstep);
    auto qminus = fft::lattice_inverse(f2, T0, hstep);

    // Restrict to the operator's grid; everything else is truncation mass.
    std::vector<cd> kp(n), km(n);
    double lost = 0.0;
    for (std::size_t k = 0; k < N; ++k) {
        const bool inside = k >= offset && k < offset + n;
        if (inside) {
            kp[k - offset] = qplus[k];
            km[k - offset] = qminus[k];
        } else {
            lost += std::abs(qplus[k]) + std::abs(qminus[k]);
        }
    }
    lost *= hstep;

    auto pair = KernelPair::from_arrays(tg, std::move(kp), std::move(km), lost);
    const double l1 = pair.l1_total();
    if (l1 > 0.0 && lost > h.tolerances().conv_tail_tol * l1)
        throw GridTooSmallError("functional-calculus kernel mass exceeds the grid window", lost,
                                "both");

    auto result = HausdorffOperator::from_pair(std::move(pair), h.aux(), h.s_grid(),
                                               h.tolerances());

    // Symbol on the public s-grid: diagonal F1, off-diagonal F2.
    {
        const auto table = build_table(F, gamma, 2);
        const std::size_t ns = sym->size();
        std::vector<cd> sp(ns), sm(ns);
        parallel_for_chunks(ns, 1024, [&](std::size_t b, std::size_t e) {
            for (std::size_t k = b; k < e; ++k) {
                const auto v = table_f1_f2(table, sym->phi_minus[k], sym->phi_plus[k], nullptr);
                sp[k] = v.first;
                sm[k] = v.second;
            }
        });
        result.set_cached_symbol(
            std::make_shared<const Symbol>(h.s_grid(), std::move(sp), std::move(sm)));
    }
    return result;
}

}  // namespace hausdorff
