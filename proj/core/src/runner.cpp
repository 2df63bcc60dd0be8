#include "hausdorff/runner.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "hausdorff/algebra.hpp"
#include "hausdorff/csv.hpp"
#include "hausdorff/engine.hpp"
#include "hausdorff/transforms.hpp"
#include "hausdorff/version.hpp"

namespace hausdorff {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Checks {
    json list = json::array();
    bool all_pass = true;

    void add(const std::string& name, double value, double threshold) {
        const bool pass = value <= threshold;
        list.push_back({{"name", name}, {"value", value}, {"threshold", threshold},
                        {"pass", pass}});
        all_pass = all_pass && pass;
    }
    void add_interval(const std::string& name, double value, double lo, double hi) {
        const bool pass = value >= lo && value <= hi;
        list.push_back({{"name", name}, {"value", value}, {"min", lo}, {"max", hi},
                        {"pass", pass}});
        all_pass = all_pass && pass;
    }
};

double sup_diff(const std::vector<cd>& a, const std::vector<cd>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double symbol_sup_diff(const Symbol& a, const Symbol& b) {
    return std::max(sup_diff(a.phi_plus, b.phi_plus), sup_diff(a.phi_minus, b.phi_minus));
}

double rel_l2_deviation(const GridFunction& a, const GridFunction& b) {
    const Grid& g = a.t_grid;
    double num = 0.0, den = 0.0;
    const double h = g.step();
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double w = ((j == 0 || j + 1 == a.size()) ? 0.5 * h : h) * std::exp(-g.node(j));
        num += w * (std::norm(a.plus[j] - b.plus[j]) + std::norm(a.minus[j] - b.minus[j]));
        den += w * (std::norm(b.plus[j]) + std::norm(b.minus[j]));
    }
    return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

// Deviation of Smb(H o K) from Smb(H) * Smb(K) relative to the norm product.
double homomorphism_deviation(const HausdorffOperator& hk, const HausdorffOperator& hl) {
    const auto composed = compose(hk, hl);
    const auto lhs = composed.symbol();
    const auto rhs = multiply_symbols(*hk.symbol(), *hl.symbol());
    const double scale = std::max(1e-300, operator_norm(*hk.symbol()) *
                                              operator_norm(*hl.symbol()));
    return symbol_sup_diff(*lhs, rhs) / scale;
}

json norm_block(const HausdorffOperator& h, const RunConfig& cfg, Checks& checks,
                const std::string& tag) {
    const double sym_norm = operator_norm(*h.symbol());
    const double bound = h.boundedness().integral_value;
    const double power = estimate_norm(h, cfg.power_iters, cfg.seed);
    // Discrete Minkowski bound: |phi(s)| <= l1(K+) + l1(K-) holds exactly for
    // the sampled transform; the l1 sums equal the boundedness integral up to
    // the O(h^2) trapezoid error (1e-6 on the default grid).
    const double l1 = h.pair().l1_total();
    checks.add(tag + ".norm_le_l1", sym_norm, l1 * (1.0 + 1e-12));
    if (bound > 0.0) {
        const double hstep = h.t_grid().step();
        checks.add(tag + ".l1_vs_minkowski_rel", std::abs(l1 / bound - 1.0),
                   std::max(1e-5, hstep * hstep));
    }
    if (sym_norm > 0.0)
        checks.add(tag + ".power_vs_symbol_rel", std::abs(power - sym_norm) / sym_norm, 0.02);
    return json{{"symbol_norm", sym_norm}, {"minkowski_bound", bound},
                {"power_iteration", power}};
}

struct Artifacts {
    fs::path dir;
    std::vector<std::string> written;

    std::string path(const std::string& name) {
        const auto p = dir / name;
        written.push_back(p.string());
        return p.string();
    }
    void discard_all() {
        for (const auto& f : written) {
            std::error_code ec;
            fs::remove(f, ec);
        }
    }
};

json run_verify(const RunConfig& cfg, Artifacts& art, Checks& checks, std::ostream& log);

}  // namespace

RunReport run(const RunConfig& cfg, const std::string& subcommand, std::ostream& log) {
    Artifacts art;
    art.dir = cfg.output_dir;
    std::error_code ec;
    fs::create_directories(art.dir, ec);
    {
        std::ofstream probe(art.dir / ".write_probe");
        if (!probe) throw ConfigError("output directory is not writable: " + cfg.output_dir);
    }
    fs::remove(art.dir / ".write_probe", ec);

    Checks checks;
    json report;
    report["schema"] = kSchemaVersion;
    report["subcommand"] = subcommand;

    try {
        if (subcommand == "symbol") {
            const auto h = cfg.make_operator();
            write_symbol_csv(art.path("symbol.csv"), *h.symbol());
            report["operator_norm"] = operator_norm(*h.symbol());
            report["l1_plus"] = h.pair().l1_plus;
            report["l1_minus"] = h.pair().l1_minus;
        } else if (subcommand == "norm") {
            const auto h = cfg.make_operator();
            report.update(norm_block(h, cfg, checks, "norm"));
            if (!h.aux().is_power_family()) {
                // For power-law scalings the diagonalization multiplier is a
                // reparametrized copy of the symbol, so the sup norms agree.
                // For a general scaling that relation is not available; report
                // the measured gap as data rather than asserting either side.
                const double m_norm = operator_norm(*conjugation_multiplier(h));
                report["symbol_vs_multiplier_norm_gap"] =
                    std::abs(m_norm - report["symbol_norm"].get<double>());
                report["multiplier_norm"] = m_norm;
            }
        } else if (subcommand == "spectrum") {
            const auto h = cfg.make_operator();
            const auto curve = spectrum_curve(*h.symbol());
            write_spectrum_csv(art.path("spectrum.csv"), curve);
            report["bounding_radius"] = curve.bounding_radius;
            report["includes_zero"] = curve.includes_zero;
        } else if (subcommand == "compose") {
            const auto hk = cfg.make_operator();
            const auto hl = cfg.make_operator2();
            const auto composed = compose(hk, hl);
            write_kernel_csv(art.path("kernel.csv"), composed);
            write_symbol_csv(art.path("symbol.csv"), *composed.symbol());
            const double dev = homomorphism_deviation(hk, hl);
            checks.add("compose.homomorphism_rel", dev, 1e-6);
            report["homomorphism_deviation"] = dev;
            report["truncation_mass"] = composed.pair().tail_mass;
        } else if (subcommand == "funcalc") {
            const auto h = cfg.make_operator();
            const auto F = cfg.make_function();
            const auto curve = spectrum_curve(*h.symbol());
            const auto gamma = cfg.make_contour(curve);
            const auto result = apply_function(F, gamma, h);
            write_symbol_csv(art.path("symbol.csv"), *result.symbol());
            write_kernel_csv(art.path("kernel.csv"), result);
            // Spectral identity of the F-symbol against the eigenvalue curves.
            const auto sym = h.symbol();
            const auto rsym = result.symbol();
            double dev = 0.0;
            for (std::size_t i = 0; i < sym->size(); ++i) {
                dev = std::max(dev, std::abs(rsym->phi(i) - F(sym->phi(i))));
                dev = std::max(dev, std::abs(rsym->phi_star(i) - F(sym->phi_star(i))));
            }
            checks.add("funcalc.spectral_identity", dev, 1e-8 * std::max(1.0, operator_norm(*rsym)));
            report["result_norm"] = operator_norm(*rsym);
            report["tail_mass"] = result.pair().tail_mass;
        } else if (subcommand == "apply") {
            const auto h = cfg.make_operator();
            const auto f = cfg.make_input();
            const auto direct = apply_direct(h, f);
            const auto spectral = apply_via_symbol(h, f);
            write_function_csv(art.path("apply_direct.csv"), direct);
            write_function_csv(art.path("apply_symbol.csv"), spectral);
            // Raw sampled-line dump (s, re, im): the Mellin image of the input.
            write_line_csv(art.path("mellin_input.csv"),
                           mellin_halfline(f.plus_line(), h.s_grid(), Direction::forward));
            const double dev = rel_l2_deviation(spectral, direct);
            checks.add("apply.route_equivalence_rel_l2", dev, 1e-3);
            report["route_deviation"] = dev;
            report["output_l2"] = direct.l2_norm();
            report["minkowski_check"] =
                direct.l2_norm() <= h.boundedness().integral_value * f.l2_norm() * 1.01;
        } else if (subcommand == "verify") {
            report["matrix"] = run_verify(cfg, art, checks, log);
        } else {
            throw ConfigError("unknown subcommand: " + subcommand);
        }
    } catch (...) {
        art.discard_all();
        throw;
    }

    report["checks"] = checks.list;
    report["pass"] = checks.all_pass;

    RunReport out;
    out.report_json = report.dump(2);
    {
        const auto p = art.dir / "report.json";
        std::ofstream js(p);
        js << out.report_json << "\n";
        if (!js) {
            art.discard_all();
            throw Error("failed writing report.json");
        }
        art.written.push_back(p.string());
    }
    out.files_written = art.written;
    out.exit_code = checks.all_pass ? 0 : 1;
    log << "[" << subcommand << "] " << (checks.all_pass ? "all checks passed" : "CHECKS FAILED")
        << " (" << out.files_written.size() << " artifacts in " << cfg.output_dir << ")\n";
    return out;
}

namespace {

json run_verify(const RunConfig& cfg, Artifacts& art, Checks& checks, std::ostream& log) {
    (void)art;
    json out;
    const Grid tg = cfg.t_grid();
    const Grid sg = cfg.s_grid();
    const auto a = ScalingFunction::reciprocal();

    std::vector<std::pair<std::string, Kernel>> presets = {
        {"hardy", Kernel::hardy()},
        {"log_gaussian", Kernel::log_gaussian(1.0)},
        {"truncated_power", Kernel::truncated_power(-2.5, 1.0)},
    };
    std::vector<HausdorffOperator> ops;
    for (auto& [name, k] : presets) ops.emplace_back(k, a, tg, sg, cfg.tol);

    // Norm reconciliation per preset.
    for (std::size_t i = 0; i < ops.size(); ++i) {
        log << "verify: norms for " << presets[i].first << "\n";
        out["norms"][presets[i].first] = norm_block(ops[i], cfg, checks, presets[i].first);
    }

    // Symbol homomorphism across ordered pairs.
    for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = 0; j < ops.size(); ++j) {
            const double dev = homomorphism_deviation(ops[i], ops[j]);
            checks.add("homomorphism." + presets[i].first + "*" + presets[j].first, dev, 1e-6);
        }

    // Commutativity.
    for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            const auto rep = check_commutativity(ops[i], ops[j], 1e-8);
            checks.add("commutativity.symbol." + presets[i].first + "/" + presets[j].first,
                       rep.max_symbol_deviation, 1e-8);
            checks.add("commutativity.kernel." + presets[i].first + "/" + presets[j].first,
                       rep.max_kernel_deviation, 1e-6);
        }

    // Route equivalence across the preset x test-function matrix.
    const std::vector<std::pair<std::string, GridFunction>> inputs = {
        {"gaussian_bump", GridFunction::gaussian_bump(tg)},
        {"indicator", GridFunction::indicator_unit(tg)},
        {"odd_bump", GridFunction::odd_bump(tg)},
    };
    for (std::size_t i = 0; i < ops.size(); ++i) {
        log << "verify: route equivalence for " << presets[i].first << "\n";
        for (const auto& [fname, f] : inputs) {
            const auto direct = apply_direct(ops[i], f);
            const auto spectral = apply_via_symbol(ops[i], f);
            const double dev = rel_l2_deviation(spectral, direct);
            checks.add("route." + presets[i].first + "." + fname, dev, 1e-3);
            out["route"][presets[i].first][fname] = dev;
        }
    }

    // Functional calculus against composition (the z^2 oracle).
    {
        log << "verify: functional calculus\n";
        const auto& hardy = ops[0];
        const auto curve = spectrum_curve(*hardy.symbol());
        const auto gamma = auto_contour(curve, 0.25);
        const auto squared = apply_function(HolomorphicFunction::square(), gamma, hardy);
        const auto composed = compose(hardy, hardy);
        double qdev = sup_diff(squared.pair().kplus, composed.pair().kplus);
        qdev = std::max(qdev, sup_diff(squared.pair().kminus, composed.pair().kminus));
        double qsup = 0.0;
        for (const auto& z : composed.pair().kplus) qsup = std::max(qsup, std::abs(z));
        checks.add("funcalc.square_vs_compose.kernel_rel", qdev / qsup, 1e-6);

        auto sq_sym = fourier_l1(squared.pair().plus_line(), sg, Direction::forward);
        auto co_sym = fourier_l1(composed.pair().plus_line(), sg, Direction::forward);
        checks.add("funcalc.square_vs_compose.symbol", sup_diff(sq_sym.values, co_sym.values),
                   1e-6 * operator_norm(*hardy.symbol()) * operator_norm(*hardy.symbol()));

        const auto identity = apply_function(HolomorphicFunction::identity(), gamma, hardy);
        double idev = sup_diff(identity.pair().kplus, hardy.pair().kplus);
        idev = std::max(idev, sup_diff(identity.pair().kminus, hardy.pair().kminus));
        checks.add("funcalc.identity_roundtrip", idev, 1e-8);
    }

    // Transform foundations.
    {
        log << "verify: transform foundations\n";
        const auto gauss = GridFunction::gaussian_bump(tg);
        const auto mg = mellin_halfline(gauss.plus_line(), sg, Direction::forward);
        const double plancherel = std::abs(mg.l2() / gauss.l2_norm() - 1.0);
        checks.add("mellin.plancherel", plancherel, 1e-6);
        const auto back = mellin_halfline(mg, tg, Direction::inverse);
        double rt = 0.0, ref = 0.0;
        for (std::size_t j = 0; j < back.size(); ++j) {
            rt += std::norm(back.values[j] - gauss.plus[j]) * std::exp(-tg.node(j));
            ref += std::norm(gauss.plus[j]) * std::exp(-tg.node(j));
        }
        checks.add("mellin.inversion_rel_l2", std::sqrt(rt / ref), 1e-6);

        const auto g1 = ops[0].pair().plus_line();
        const auto g2 = ops[1].pair().plus_line();
        const auto conv = convolve(g1, g2, cfg.tol.conv_tail_tol);
        const auto lhs = fourier_l1(conv.line, sg, Direction::forward);
        auto f1 = fourier_l1(g1, sg, Direction::forward);
        const auto f2 = fourier_l1(g2, sg, Direction::forward);
        for (std::size_t k = 0; k < f1.size(); ++k) f1.values[k] *= f2.values[k];
        checks.add("convolution_theorem", sup_diff(lhs.values, f1.values),
                   1e-6 * g1.l1() * g2.l1());

        const auto spec = fourier_l1(g2, sg, Direction::forward);
        const auto back2 = fourier_l1(spec, tg, Direction::inverse);
        double num = 0.0, den = 0.0;
        for (std::size_t j = 0; j < back2.size(); ++j) {
            num += std::abs(back2.values[j] - g2.values[j]);
            den += std::abs(g2.values[j]);
        }
        checks.add("fourier.inversion_rel_l1", num / den, 1e-6);
    }
    return out;
}

}  // namespace

}  // namespace hausdorff
