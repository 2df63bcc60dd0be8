#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hausdorff/config.hpp"

namespace hausdorff {

struct RunReport {
    int exit_code = 0;
    std::string report_json;  // also written to <output_dir>/report.json
    std::vector<std::string> files_written;
};

/// Executes one subcommand of {symbol, norm, spectrum, compose, funcalc,
/// apply, verify}: writes the declared artifacts into cfg.output_dir and
/// returns the JSON report.  Exit code is 0 iff every internal check passed;
/// on an error partial outputs are removed before the exception propagates.
RunReport run(const RunConfig& cfg, const std::string& subcommand, std::ostream& log);

}  // namespace hausdorff
