#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hausdorff/errors.hpp"
#include "hausdorff/runner.hpp"
#include "hausdorff/version.hpp"

namespace {

struct SubArgs {
    std::string config_path;
    std::string output_dir;
    std::vector<std::string> overrides;
    std::string function_spec;
    std::string contour_spec;
    std::string input_spec;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Merges --set overrides into the config text: overridden keys are dropped
// from the file body so the parser's duplicate detection stays meaningful.
std::string merged_config_text(const SubArgs& args) {
    std::set<std::string> overridden;
    for (const auto& kv : args.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw hausdorff::ConfigError("--set expects key=value, got '" + kv + "'");
        overridden.insert(trim(kv.substr(0, eq)));
    }

    std::ostringstream merged;
    if (!args.config_path.empty()) {
        std::ifstream in(args.config_path);
        if (!in) throw hausdorff::ConfigError("cannot open config file: " + args.config_path);
        std::string line;
        while (std::getline(in, line)) {
            const auto hash = line.find('#');
            const std::string body = trim(hash == std::string::npos ? line : line.substr(0, hash));
            const auto eq = body.find('=');
            if (eq != std::string::npos && overridden.count(trim(body.substr(0, eq)))) continue;
            merged << line << "\n";
        }
    }
    for (const auto& kv : args.overrides) merged << kv << "\n";
    return merged.str();
}

hausdorff::RunConfig load_config(const SubArgs& args) {
    auto cfg = hausdorff::parse_config(merged_config_text(args));
    if (!args.output_dir.empty()) cfg.output_dir = args.output_dir;
    if (!args.function_spec.empty()) cfg.function_spec = args.function_spec;
    if (!args.contour_spec.empty()) cfg.contour_spec = args.contour_spec;
    if (!args.input_spec.empty()) cfg.input_spec = args.input_spec;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symbol calculus for generalized Hausdorff operators on L2(R)"};
    app.set_version_flag("--version", hausdorff::kVersion);
    app.require_subcommand(1);

    const std::vector<std::string> names = {"symbol",  "norm",  "spectrum", "compose",
                                            "funcalc", "apply", "verify"};
    std::map<std::string, SubArgs> args;
    for (const auto& name : names) {
        auto* sub = app.add_subcommand(name);
        auto& a = args[name];
        sub->add_option("-c,--config", a.config_path, "key = value config file");
        sub->add_option("-o,--out", a.output_dir, "output directory");
        sub->add_option("--set", a.overrides, "override a config key (key=value)");
        if (name == "funcalc") {
            sub->add_option("--function", a.function_spec,
                            "square|cube|identity|resolvent:re[,im]|poly:c1,c2,...");
            sub->add_option("--contour", a.contour_spec, "auto:margin|circle:cx,cy,r|rect:...");
        }
        if (name == "apply")
            sub->add_option("--input", a.input_spec, "indicator|gaussian_bump|odd_bump");
    }

    CLI11_PARSE(app, argc, argv);

    const std::string sub = app.get_subcommands().front()->get_name();
    try {
        const auto cfg = load_config(args[sub]);
        const auto rep = hausdorff::run(cfg, sub, std::cout);
        return rep.exit_code;
    } catch (const hausdorff::ConfigError& e) {
        std::cerr << "config error";
        if (e.line_number > 0) std::cerr << " (line " << e.line_number << ")";
        std::cerr << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
