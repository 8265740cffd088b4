#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "gqaoa/charfn.hpp"
#include "gqaoa/experiments.hpp"
#include "gqaoa/optimize.hpp"
#include "gqaoa/problems.hpp"

namespace gqaoa::io {

using nlohmann::json;

// Text form: optional '#' comment lines, a header line `n=<int>`, then 2^n
// whitespace-separated decimals in index order. JSON form: {"n": int,
// "values": [...]}. The parser picks JSON when the first non-blank character
// is '{'.
Spectrum parse_spectrum(const std::string& text);
Spectrum read_spectrum(const std::filesystem::path& path);
// Values are written with 17 significant digits so they round-trip exactly.
std::string format_spectrum_text(const Spectrum& spectrum, const std::string& comment = {});
json spectrum_json(const Spectrum& spectrum);

// {"kind": "npp"|"rcm", "n": int, "seed": int, "values": [numbers or weights]}
json instance_json(const NppInstance& instance);
json instance_json(const RcmInstance& instance);

// {"p", "gammas", "betas", "value", "starts", "seed", "converged", "per_start"}
json result_json(const OptimizationResult& result);

std::string depth_sweep_csv(const DepthSweepTable& table, const std::string& comment = {});
std::string convergence_csv(const ConvergenceTable& table, const std::string& comment = {});
std::string landscape_csv(const LandscapeGrid& grid, const std::string& comment = {});

// Writes to a sibling temporary file and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace gqaoa::io
