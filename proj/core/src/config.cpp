#include "hausdorff/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "hausdorff/csv.hpp"

namespace hausdorff {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Splits "name" or "name(a,b,...)" into the name and raw argument list.
struct SpecCall {
    std::string name;
    std::vector<std::string> args;
};

SpecCall parse_spec(const std::string& spec) {
    SpecCall c;
    const auto open = spec.find('(');
    if (open == std::string::npos) {
        c.name = trim(spec);
        return c;
    }
    if (spec.back() != ')') throw ConfigError("malformed spec: " + spec);
    c.name = trim(spec.substr(0, open));
    std::string inner = spec.substr(open + 1, spec.size() - open - 2);
    std::istringstream ss(inner);
    std::string piece;
    while (std::getline(ss, piece, ',')) c.args.push_back(trim(piece));
    return c;
}

double arg_number(const SpecCall& c, std::size_t i, const std::string& what) {
    if (i >= c.args.size()) throw ConfigError(what + ": missing argument " + std::to_string(i + 1));
    try {
        return std::stod(c.args[i]);
    } catch (const std::exception&) {
        throw ConfigError(what + ": non-numeric argument '" + c.args[i] + "'");
    }
}

double parse_number(const std::string& v, const std::string& key, int line) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': expected a number, got '" + v + "'", line);
    }
}

std::size_t parse_size(const std::string& v, const std::string& key, int line) {
    const double x = parse_number(v, key, line);
    if (!(x > 0.0) || x != std::floor(x))
        throw ConfigError("key '" + key + "': expected a positive integer", line);
    return static_cast<std::size_t>(x);
}

Kernel kernel_from_spec(const std::string& spec, const std::string& path) {
    const auto c = parse_spec(spec);
    if (c.name == "hardy") return Kernel::hardy();
    if (c.name == "zero") return Kernel::zero();
    if (c.name == "log_gaussian") return Kernel::log_gaussian(arg_number(c, 0, "log_gaussian"));
    if (c.name == "truncated_power")
        return Kernel::truncated_power(arg_number(c, 0, "truncated_power"),
                                       arg_number(c, 1, "truncated_power"));
    if (c.name == "custom") {
        const std::string file = !c.args.empty() ? c.args[0] : path;
        if (file.empty()) throw ConfigError("custom kernel needs a table file (custom(file) or path=)");
        return Kernel::custom_table(read_table_csv(file), "custom(" + file + ")");
    }
    throw ConfigError("unknown kernel preset: " + c.name);
}

ScalingFunction scaling_from_spec(const std::string& spec, const std::string& path) {
    const auto c = parse_spec(spec);
    if (c.name == "reciprocal") return ScalingFunction::reciprocal();
    if (c.name == "power") return ScalingFunction::power(arg_number(c, 0, "power"));
    if (c.name == "custom") {
        const std::string file = !c.args.empty() ? c.args[0] : path;
        if (file.empty())
            throw ConfigError("custom scaling needs a table file (custom(file) or scaling_path=)");
        return ScalingFunction::custom_table(read_table_csv(file), "custom(" + file + ")");
    }
    throw ConfigError("unknown scaling preset: " + c.name);
}

}  // namespace

Kernel RunConfig::make_kernel() const { return kernel_from_spec(kernel_spec, kernel_path); }

Kernel RunConfig::make_kernel2() const {
    if (kernel2_spec.empty()) throw ConfigError("this subcommand needs kernel2 =");
    return kernel_from_spec(kernel2_spec, kernel2_path);
}

ScalingFunction RunConfig::make_scaling() const {
    return scaling_from_spec(scaling_spec, scaling_path);
}

HausdorffOperator RunConfig::make_operator() const {
    return HausdorffOperator(make_kernel(), make_scaling(), t_grid(), s_grid(), tol);
}

HausdorffOperator RunConfig::make_operator2() const {
    return HausdorffOperator(make_kernel2(), make_scaling(), t_grid(), s_grid(), tol);
}

GridFunction RunConfig::make_input() const {
    const Grid g = t_grid();
    if (input_spec == "indicator") return GridFunction::indicator_unit(g);
    if (input_spec == "gaussian_bump") return GridFunction::gaussian_bump(g);
    if (input_spec == "odd_bump") return GridFunction::odd_bump(g);
    throw ConfigError("unknown input preset: " + input_spec);
}

HolomorphicFunction RunConfig::make_function() const {
    const auto colon = function_spec.find(':');
    const std::string name = function_spec.substr(0, colon);
    if (name == "identity") return HolomorphicFunction::identity();
    if (name == "square") return HolomorphicFunction::square();
    if (name == "cube") return HolomorphicFunction::cube();
    if (name == "resolvent") {
        if (colon == std::string::npos)
            throw ConfigError("resolvent needs a pole: resolvent:re[,im]");
        const auto c = parse_spec("f(" + function_spec.substr(colon + 1) + ")");
        const double re = arg_number(c, 0, "resolvent");
        const double im = c.args.size() > 1 ? arg_number(c, 1, "resolvent") : 0.0;
        return HolomorphicFunction::resolvent(cd(re, im));
    }
    if (name == "poly") {
        if (colon == std::string::npos) throw ConfigError("poly needs coefficients: poly:c1,c2,...");
        const auto c = parse_spec("f(" + function_spec.substr(colon + 1) + ")");
        std::vector<cd> coeffs;
        for (std::size_t i = 0; i < c.args.size(); ++i)
            coeffs.emplace_back(arg_number(c, i, "poly"), 0.0);
        if (coeffs.empty()) throw ConfigError("poly needs at least one coefficient");
        return HolomorphicFunction::polynomial(std::move(coeffs));
    }
    throw ConfigError("unknown function: " + function_spec);
}

Contour RunConfig::make_contour(const SpectralCurve& curve) const {
    const auto colon = contour_spec.find(':');
    const std::string name = contour_spec.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : contour_spec.substr(colon + 1);
    const auto c = parse_spec("f(" + args + ")");
    if (name == "auto") return auto_contour(curve, arg_number(c, 0, "auto contour"));
    if (name == "circle")
        return Contour::circle(cd(arg_number(c, 0, "circle"), arg_number(c, 1, "circle")),
                               arg_number(c, 2, "circle"));
    if (name == "rect")
        return Contour::rectangle(cd(arg_number(c, 0, "rect"), arg_number(c, 1, "rect")),
                                  cd(arg_number(c, 2, "rect"), arg_number(c, 3, "rect")));
    throw ConfigError("unknown contour spec: " + contour_spec);
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    std::set<std::string> seen;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected key = value", line_no);
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw ConfigError("expected key = value", line_no);
        if (!seen.insert(key).second)
            throw ConfigError("duplicate key '" + key + "'", line_no);

        if (key == "kernel") cfg.kernel_spec = val;
        else if (key == "kernel2") cfg.kernel2_spec = val;
        else if (key == "path" || key == "kernel_path") cfg.kernel_path = val;
        else if (key == "kernel2_path") cfg.kernel2_path = val;
        else if (key == "scaling") cfg.scaling_spec = val;
        else if (key == "scaling_path") cfg.scaling_path = val;
        else if (key == "t_min") cfg.t_lo = parse_number(val, key, line_no);
        else if (key == "t_max") cfg.t_hi = parse_number(val, key, line_no);
        else if (key == "n") cfg.n = parse_size(val, key, line_no);
        else if (key == "s_min") cfg.s_lo = parse_number(val, key, line_no);
        else if (key == "s_max") cfg.s_hi = parse_number(val, key, line_no);
        else if (key == "ns") cfg.ns = parse_size(val, key, line_no);
        else if (key == "tail_tol") cfg.tol.tail_tol = parse_number(val, key, line_no);
        else if (key == "conv_tail_tol") cfg.tol.conv_tail_tol = parse_number(val, key, line_no);
        else if (key == "quad_rel_tol") cfg.tol.quadrature.rel_tol = parse_number(val, key, line_no);
        else if (key == "quad_abs_floor")
            cfg.tol.quadrature.abs_floor = parse_number(val, key, line_no);
        else if (key == "output_dir") cfg.output_dir = val;
        else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_size(val, key, line_no));
        else if (key == "power_iters") cfg.power_iters = parse_size(val, key, line_no);
        else if (key == "function") cfg.function_spec = val;
        else if (key == "contour") cfg.contour_spec = val;
        else if (key == "input") cfg.input_spec = val;
        else throw ConfigError("unknown key '" + key + "'", line_no);
    }

    if (!is_power_of_two(cfg.n))
        throw ConfigError("n = " + std::to_string(cfg.n) + " is not a power of two");
    if (!is_power_of_two(cfg.ns))
        throw ConfigError("ns = " + std::to_string(cfg.ns) + " is not a power of two");
    if (!(cfg.t_hi > cfg.t_lo) || !(cfg.s_hi > cfg.s_lo))
        throw ConfigError("grid ranges must be nonempty");
    if (!(cfg.tol.tail_tol > 0.0) || !(cfg.tol.conv_tail_tol > 0.0) ||
        !(cfg.tol.quadrature.rel_tol > 0.0) || !(cfg.tol.quadrature.abs_floor > 0.0))
        throw ConfigError("tolerances must be positive");
    if (cfg.power_iters < 20) throw ConfigError("power_iters must be at least 20");
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

}  // namespace hausdorff
