#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hausdorff/runner.hpp"

using namespace hausdorff;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string small_grid_keys() {
    return "t_min = -40\nt_max = 40\nn = 1024\ns_min = -64\ns_max = 64\nns = 512\n";
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("hausdorff_test_" + tag);
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("minimal config gets the documented defaults") {
    const auto cfg = parse_config("kernel = hardy\nscaling = reciprocal\n");
    CHECK(cfg.n == 16384);
    CHECK(cfg.ns == 8192);
    CHECK(cfg.t_lo == -40.0);
    CHECK(cfg.s_hi == 64.0);
    CHECK(cfg.tol.tail_tol == 1e-8);
    CHECK(cfg.tol.quadrature.rel_tol == 1e-10);
    CHECK(cfg.seed == 12345);
    CHECK(cfg.power_iters == 50);
    CHECK_NOTHROW(cfg.make_operator());
}

TEST_CASE("config rejections are line-precise") {
    try {
        parse_config("kernel = hardy\nn = 1000\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("power of two") != std::string::npos);
    }

    try {
        parse_config("kernel = hardy\nbogus_key = 3\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line_number == 2);
    }

    try {
        parse_config("n = 512\nn = 1024\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line_number == 2);
    }

    CHECK_THROWS_AS(parse_config("tail_tol = -1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("n = twelve\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("kernel\n"), ConfigError);
}

TEST_CASE("custom kernel with a missing table file") {
    const auto cfg = parse_config("kernel = custom\npath = missing.csv\n");
    CHECK_THROWS_AS(cfg.make_kernel(), ConfigError);
}

TEST_CASE("symbol subcommand writes artifacts and reports") {
    TempDir dir("symbol");
    auto cfg = parse_config("kernel = hardy\n" + small_grid_keys());
    cfg.output_dir = dir.path.string();
    std::ostringstream log;
    const auto rep = run(cfg, "symbol", log);
    CHECK(rep.exit_code == 0);
    CHECK(fs::exists(dir.path / "symbol.csv"));
    CHECK(fs::exists(dir.path / "report.json"));
    const auto text = slurp((dir.path / "symbol.csv").string());
    CHECK(text.rfind("# schema: hausdorff-1", 0) == 0);
    CHECK(text.find("s,re_phi_plus,im_phi_plus,re_phi_minus,im_phi_minus") != std::string::npos);
    CHECK(rep.report_json.find("operator_norm") != std::string::npos);
}

TEST_CASE("spectrum of the zero kernel is the adjoined origin") {
    TempDir dir("spectrum");
    auto cfg = parse_config("kernel = zero\n" + small_grid_keys());
    cfg.output_dir = dir.path.string();
    std::ostringstream log;
    const auto rep = run(cfg, "spectrum", log);
    CHECK(rep.exit_code == 0);
    const auto text = slurp((dir.path / "spectrum.csv").string());
    CHECK(text.find("zero_adjoined,,0,0") != std::string::npos);
    CHECK(text.find("phi,") != std::string::npos);
}

TEST_CASE("norm subcommand reconciles the three routes") {
    TempDir dir("norm");
    auto cfg = parse_config("kernel = hardy\npower_iters = 40\nn = 4096\nns = 1024\n");
    cfg.output_dir = dir.path.string();
    std::ostringstream log;
    const auto rep = run(cfg, "norm", log);
    CHECK(rep.exit_code == 0);
    CHECK(rep.report_json.find("symbol_norm") != std::string::npos);
    CHECK(rep.report_json.find("minkowski_bound") != std::string::npos);
    CHECK(rep.report_json.find("power_iteration") != std::string::npos);
}

TEST_CASE("compose subcommand checks the homomorphism") {
    TempDir dir("compose");
    auto cfg = parse_config("kernel = hardy\nkernel2 = log_gaussian(1.0)\n" + small_grid_keys());
    cfg.output_dir = dir.path.string();
    std::ostringstream log;
    const auto rep = run(cfg, "compose", log);
    CHECK(rep.exit_code == 0);
    CHECK(fs::exists(dir.path / "kernel.csv"));
    CHECK(fs::exists(dir.path / "symbol.csv"));
}

TEST_CASE("apply subcommand emits both routes") {
    TempDir dir("apply");
    // ns must keep the alias period 2*pi/h_s above the t-window width.
    auto cfg = parse_config("kernel = hardy\ninput = gaussian_bump\nn = 4096\nns = 2048\n");
    cfg.output_dir = dir.path.string();
    std::ostringstream log;
    const auto rep = run(cfg, "apply", log);
    CHECK(rep.exit_code == 0);
    CHECK(fs::exists(dir.path / "apply_direct.csv"));
    CHECK(fs::exists(dir.path / "apply_symbol.csv"));
}

TEST_CASE("funcalc subcommand applies z^2 with an auto contour") {
    TempDir dir("funcalc");
    auto cfg = parse_config("kernel = hardy\nfunction = square\ncontour = auto:0.25\nn = 2048\nns = 1024\n");
    cfg.output_dir = dir.path.string();
    std::ostringstream log;
    const auto rep = run(cfg, "funcalc", log);
    CHECK(rep.exit_code == 0);
    CHECK(fs::exists(dir.path / "kernel.csv"));
}

TEST_CASE("verify subcommand reconciles the preset matrix on a reduced grid") {
    TempDir dir("verify");
    auto cfg = parse_config("power_iters = 25\nn = 4096\nns = 2048\n");
    cfg.output_dir = dir.path.string();
    std::ostringstream log;
    const auto rep = run(cfg, "verify", log);
    CHECK(rep.exit_code == 0);
    CHECK(rep.report_json.find("\"pass\": true") != std::string::npos);
    CHECK(rep.report_json.find("homomorphism") != std::string::npos);
    CHECK(rep.report_json.find("route") != std::string::npos);
}

TEST_CASE("identical config and seed give byte-identical outputs") {
    TempDir dir1("det1"), dir2("det2");
    const std::string text = "kernel = hardy\nseed = 777\npower_iters = 25\nn = 1024\nns = 512\n";
    std::ostringstream log;
    for (const auto* d : {&dir1, &dir2}) {
        auto cfg = parse_config(text);
        cfg.output_dir = d->path.string();
        const auto rep = run(cfg, "norm", log);
        CHECK(rep.exit_code == 0);
    }
    CHECK(slurp((dir1.path / "report.json").string()) ==
          slurp((dir2.path / "report.json").string()));

    TempDir dir3("det3"), dir4("det4");
    for (const auto* d : {&dir3, &dir4}) {
        auto cfg = parse_config("kernel = log_gaussian(0.8)\n" + small_grid_keys());
        cfg.output_dir = d->path.string();
        run(cfg, "symbol", log);
    }
    CHECK(slurp((dir3.path / "symbol.csv").string()) ==
          slurp((dir4.path / "symbol.csv").string()));
}

TEST_CASE("errors surface with context and partial outputs are removed") {
    TempDir dir("fail");
    auto cfg = parse_config("kernel = truncated_power(-1.0,1.0)\n" + small_grid_keys());
    cfg.output_dir = dir.path.string();
    std::ostringstream log;
    CHECK_THROWS_AS(run(cfg, "symbol", log), NotAdmissibleError);
    CHECK_FALSE(fs::exists(dir.path / "symbol.csv"));
    CHECK_FALSE(fs::exists(dir.path / "report.json"));

    CHECK_THROWS_AS(run(cfg, "nonsense", log), ConfigError);
}
