#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "gafzeros/spectral.hpp"

namespace gafzeros::cli {

/*
 * Seeded, deterministic experiments: identical config and seed produce
 * byte-identical CSV/JSON/SVG artifacts (no timestamps, fixed-order
 * reductions, integer tallies).
 *
 * Exit codes: 0 success, 2 config error, 3 numeric failure, 4 verification
 * failure.
 */

struct ExperimentConfig {
  spectral::SpectralMeasure measure = spectral::SpectralMeasure::lebesgue();
  std::string sampler = "iid";  // "iid" | "periodic" | "toeplitz"
  int period = 1;               // block length of the periodic sampler
  long n = 100;                 // polynomial degree
  long runs = 1;
  std::uint64_t seed_base = 0;
  std::string output_dir = ".";
  bool emit_csv = true;
  bool emit_json = true;
  bool emit_svg = true;
};

nlohmann::json config_to_json(const ExperimentConfig& config);
// Requires "measure"; everything else falls back to the defaults above.
// Enforces runs >= 1 and N >= 1 via std::invalid_argument.
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);

// Samples `runs` polynomials, finds and classifies their roots, and writes
// zeros.csv / zeros.svg. Returns 3 when more than 1% of runs fail the
// root-finder gate (artifacts for the successful runs are still written).
int cmd_sample_zeros(const ExperimentConfig& config);

// Writes g_r(theta) = pi (1-r^2)^2 rho_1(r e^{i theta}) as intensity.csv
// (columns theta,r,g) and intensity.svg, one curve per radius.
int cmd_intensity(const ExperimentConfig& config,
                  const std::vector<double>& theta_grid,
                  const std::vector<double>& r_list);

// Monte Carlo count histograms for the unit disk and both inside half-planes:
// counts_disk.csv, counts_left.csv, counts_right.csv, and summary.json with
// mean/variance/SE per region. Failure policy as cmd_sample_zeros.
int cmd_mc_counts(const ExperimentConfig& config);

// Runs the named suite ("identities", "correlations", "kernels", or "all"),
// prints a residual table, and returns 0 iff every check passes, else 4.
// Unknown suite names throw std::invalid_argument.
int cmd_verify(const std::string& suite, std::ostream& out);

}  // namespace gafzeros::cli
