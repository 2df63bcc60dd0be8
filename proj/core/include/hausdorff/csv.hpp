#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hausdorff/grid_function.hpp"
#include "hausdorff/operator.hpp"
#include "hausdorff/spectrum.hpp"

namespace hausdorff {

/// All writers stamp the schema version as a leading comment line and format
/// doubles with 17 significant digits, so identical inputs give byte-identical
/// files.

void write_symbol_csv(const std::string& path, const Symbol& sym);
void write_spectrum_csv(const std::string& path, const SpectralCurve& curve);
/// Pulled-back kernel K(u) at the grid nodes, u ascending (negative block
/// first).
void write_kernel_csv(const std::string& path, const HausdorffOperator& h);
void write_line_csv(const std::string& path, const SampledLine& line);
/// Half-line components as rows (x, re, im); x < 0 rows carry f(-|x|).
void write_function_csv(const std::string& path, const GridFunction& f);

/// Two-column numeric CSV (u, value); a non-numeric first row is treated as a
/// header and skipped.
std::vector<std::pair<double, double>> read_table_csv(const std::string& path);

}  // namespace hausdorff
