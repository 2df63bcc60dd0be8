#include "hausdorff/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hausdorff/errors.hpp"
#include "hausdorff/version.hpp"

namespace hausdorff {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    out << "# schema: " << kSchemaVersion << "\n";
    return out;
}

}  // namespace

void write_symbol_csv(const std::string& path, const Symbol& sym) {
    auto out = open_out(path);
    out << "s,re_phi_plus,im_phi_plus,re_phi_minus,im_phi_minus\n";
    for (std::size_t i = 0; i < sym.size(); ++i) {
        out << fmt(sym.s_grid.node(i)) << ',' << fmt(sym.phi_plus[i].real()) << ','
            << fmt(sym.phi_plus[i].imag()) << ',' << fmt(sym.phi_minus[i].real()) << ','
            << fmt(sym.phi_minus[i].imag()) << '\n';
    }
    if (!out) throw Error("failed writing " + path);
}

void write_spectrum_csv(const std::string& path, const SpectralCurve& curve) {
    auto out = open_out(path);
    out << "branch,s,re_z,im_z\n";
    for (std::size_t i = 0; i < curve.branch_phi.size(); ++i)
        out << "phi," << fmt(curve.s_grid.node(i)) << ',' << fmt(curve.branch_phi[i].real())
            << ',' << fmt(curve.branch_phi[i].imag()) << '\n';
    for (std::size_t i = 0; i < curve.branch_phi_star.size(); ++i)
        out << "phi_star," << fmt(curve.s_grid.node(i)) << ','
            << fmt(curve.branch_phi_star[i].real()) << ','
            << fmt(curve.branch_phi_star[i].imag()) << '\n';
    if (curve.includes_zero) out << "zero_adjoined,,0,0\n";
    if (!out) throw Error("failed writing " + path);
}

void write_kernel_csv(const std::string& path, const HausdorffOperator& h) {
    auto out = open_out(path);
    out << "u,re,im\n";
    const Grid& g = h.t_grid();
    const auto& pair = h.pair();
    auto pullback = [&](const cd& q, double t) -> cd {
        if (q == cd(0.0, 0.0)) return q;
        return q * std::exp(t) * h.aux().weight_sqrt(t);
    };
    // u = -e^{-t} ascends with t.
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double t = g.node(j);
        const cd v = pullback(pair.kminus[j], t);
        out << fmt(-std::exp(-t)) << ',' << fmt(v.real()) << ',' << fmt(v.imag()) << '\n';
    }
    // u = e^{-t} descends with t.
    for (std::size_t j = g.size(); j > 0; --j) {
        const double t = g.node(j - 1);
        const cd v = pullback(pair.kplus[j - 1], t);
        out << fmt(std::exp(-t)) << ',' << fmt(v.real()) << ',' << fmt(v.imag()) << '\n';
    }
    if (!out) throw Error("failed writing " + path);
}

void write_line_csv(const std::string& path, const SampledLine& line) {
    auto out = open_out(path);
    out << "s,re,im\n";
    for (std::size_t i = 0; i < line.size(); ++i)
        out << fmt(line.grid.node(i)) << ',' << fmt(line.values[i].real()) << ','
            << fmt(line.values[i].imag()) << '\n';
    if (!out) throw Error("failed writing " + path);
}

void write_function_csv(const std::string& path, const GridFunction& f) {
    auto out = open_out(path);
    out << "x,re,im\n";
    const Grid& g = f.t_grid;
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double x = -std::exp(-g.node(j));
        out << fmt(x) << ',' << fmt(f.minus[j].real()) << ',' << fmt(f.minus[j].imag()) << '\n';
    }
    for (std::size_t j = g.size(); j > 0; --j) {
        const double x = std::exp(-g.node(j - 1));
        out << fmt(x) << ',' << fmt(f.plus[j - 1].real()) << ',' << fmt(f.plus[j - 1].imag())
            << '\n';
    }
    if (!out) throw Error("failed writing " + path);
}

std::vector<std::pair<double, double>> read_table_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open table file: " + path);
    std::vector<std::pair<double, double>> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string a, b;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b)) {
            throw ConfigError("table file " + path + " is not two-column CSV", line_no);
        }
        try {
            rows.emplace_back(std::stod(a), std::stod(b));
        } catch (const std::exception&) {
            if (line_no == 1 && rows.empty()) continue;  // header row
            throw ConfigError("table file " + path + ": non-numeric row", line_no);
        }
    }
    if (rows.size() < 2) throw ConfigError("table file " + path + " needs at least 2 data rows");
    return rows;
}

}  // namespace hausdorff
