#include "gafzeros/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <ostream>

#include "gafzeros/corr.hpp"
#include "gafzeros/gauss.hpp"
#include "gafzeros/serialize.hpp"
#include "gafzeros/verify.hpp"
#include "gafzeros/zeros.hpp"

namespace gafzeros::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

gauss::CoefficientSampler make_sampler(const ExperimentConfig& config) {
  if (config.sampler == "iid") return gauss::CoefficientSampler::iid();
  if (config.sampler == "periodic") {
    return gauss::CoefficientSampler::periodic(config.period);
  }
  if (config.sampler == "toeplitz") {
    const spectral::CovarianceEvaluator ev(config.measure);
    return gauss::CoefficientSampler::toeplitz_sqrt(
        ev, static_cast<int>(config.n) + 1);
  }
  throw std::invalid_argument("unknown sampler tag: " + config.sampler);
}

fs::path prepare_output_dir(const ExperimentConfig& config) {
  const fs::path dir(config.output_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw std::invalid_argument("output directory is not writable: " +
                                config.output_dir);
  }
  return dir;
}

std::vector<serialize::ZeroRow> classify_rows(const std::vector<zeros::McZeroRun>& runs) {
  std::vector<serialize::ZeroRow> rows;
  for (const zeros::McZeroRun& run : runs) {
    if (run.failed) continue;
    for (const cx& z : run.roots) {
      serialize::ZeroRow row;
      row.run_id = run.run_id;
      row.seed = run.seed;
      row.z = z;
      const double a = std::abs(z);
      row.klass = std::abs(a - 1.0) <= 1e-9 ? "bd" : (a < 1.0 ? "in" : "out");
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

long failed_count(const std::vector<zeros::McZeroRun>& runs) {
  long failed = 0;
  for (const zeros::McZeroRun& run : runs) {
    if (run.failed) ++failed;
  }
  return failed;
}

json summary_entry(const zeros::HistogramSummary& h) {
  return json{{"mean", h.mean}, {"variance", h.variance}, {"se", h.se}};
}

}  // namespace

json config_to_json(const ExperimentConfig& config) {
  json j;
  j["measure"] = serialize::measure_to_json(config.measure);
  j["sampler"] = config.sampler;
  j["period"] = config.period;
  j["N"] = config.n;
  j["runs"] = config.runs;
  j["seedBase"] = config.seed_base;
  j["outputDir"] = config.output_dir;
  j["emitCsv"] = config.emit_csv;
  j["emitJson"] = config.emit_json;
  j["emitSvg"] = config.emit_svg;
  return j;
}

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object() || !j.contains("measure")) {
    throw std::invalid_argument("config requires a 'measure' object");
  }
  ExperimentConfig config;
  config.measure = serialize::measure_from_json(j["measure"]);
  if (j.contains("sampler")) config.sampler = j["sampler"].get<std::string>();
  if (j.contains("period")) config.period = j["period"].get<int>();
  if (j.contains("N")) config.n = j["N"].get<long>();
  if (j.contains("runs")) config.runs = j["runs"].get<long>();
  if (j.contains("seedBase")) config.seed_base = j["seedBase"].get<std::uint64_t>();
  if (j.contains("outputDir")) config.output_dir = j["outputDir"].get<std::string>();
  if (j.contains("emitCsv")) config.emit_csv = j["emitCsv"].get<bool>();
  if (j.contains("emitJson")) config.emit_json = j["emitJson"].get<bool>();
  if (j.contains("emitSvg")) config.emit_svg = j["emitSvg"].get<bool>();
  if (config.runs < 1) throw std::invalid_argument("runs must be at least 1");
  if (config.n < 1) throw std::invalid_argument("N must be at least 1");
  if (config.sampler != "iid" && config.sampler != "periodic" &&
      config.sampler != "toeplitz") {
    throw std::invalid_argument("unknown sampler tag: " + config.sampler);
  }
  if (config.sampler == "periodic" && config.period < 1) {
    throw std::invalid_argument("periodic sampler needs period >= 1");
  }
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::string text;
  try {
    text = serialize::read_text_file(path);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config parse error: ") + e.what());
  }
  return config_from_json(j);
}

int cmd_sample_zeros(const ExperimentConfig& config) {
  const fs::path dir = prepare_output_dir(config);
  const gauss::CoefficientSampler sampler = make_sampler(config);
  const std::vector<zeros::McZeroRun> runs =
      zeros::mc_zero_runs(sampler, config.n, config.runs, config.seed_base);

  const std::vector<serialize::ZeroRow> rows = classify_rows(runs);
  if (config.emit_csv) {
    serialize::write_text_file((dir / "zeros.csv").string(),
                               serialize::zeros_csv(rows));
  }
  if (config.emit_svg) {
    serialize::write_text_file((dir / "zeros.svg").string(),
                               serialize::zeros_svg(rows, 1.0));
  }

  const long failed = failed_count(runs);
  if (static_cast<double>(failed) >
      0.01 * static_cast<double>(config.runs)) {
    std::fprintf(stderr, "root finder failed on %ld of %ld runs\n", failed,
                 config.runs);
    return 3;
  }
  return 0;
}

int cmd_intensity(const ExperimentConfig& config,
                  const std::vector<double>& theta_grid,
                  const std::vector<double>& r_list) {
  if (theta_grid.empty() || r_list.empty()) {
    throw std::invalid_argument("intensity needs a theta grid and radii");
  }
  const fs::path dir = prepare_output_dir(config);
  const spectral::CovarianceEvaluator ev(config.measure);

  std::string csv = "theta,r,g\n";
  std::vector<serialize::Curve> curves;
  for (const double r : r_list) {
    serialize::Curve curve;
    curve.label = "r=" + serialize::format_double(r);
    const double scale = kPi * (1.0 - r * r) * (1.0 - r * r);
    for (const double theta : theta_grid) {
      const double g = scale * corr::rho1_ek(ev, std::polar(r, theta));
      csv += serialize::format_double(theta);
      csv += ',';
      csv += serialize::format_double(r);
      csv += ',';
      csv += serialize::format_double(g);
      csv += '\n';
      curve.x.push_back(theta);
      curve.y.push_back(g);
    }
    curves.push_back(std::move(curve));
  }

  if (config.emit_csv) {
    serialize::write_text_file((dir / "intensity.csv").string(), csv);
  }
  if (config.emit_svg) {
    serialize::write_text_file((dir / "intensity.svg").string(),
                               serialize::curves_svg(curves, "theta", "g"));
  }
  return 0;
}

int cmd_mc_counts(const ExperimentConfig& config) {
  const fs::path dir = prepare_output_dir(config);
  const gauss::CoefficientSampler sampler = make_sampler(config);
  const std::vector<zeros::McZeroRun> runs =
      zeros::mc_zero_runs(sampler, config.n, config.runs, config.seed_base);

  const zeros::HistogramSummary disk =
      zeros::histogram_from_runs(runs, zeros::CountRegion::Disk);
  const zeros::HistogramSummary left =
      zeros::histogram_from_runs(runs, zeros::CountRegion::LeftHalfInside);
  const zeros::HistogramSummary right =
      zeros::histogram_from_runs(runs, zeros::CountRegion::RightHalfInside);

  if (config.emit_csv) {
    serialize::write_text_file((dir / "counts_disk.csv").string(),
                               serialize::histogram_csv(disk.tally));
    serialize::write_text_file((dir / "counts_left.csv").string(),
                               serialize::histogram_csv(left.tally));
    serialize::write_text_file((dir / "counts_right.csv").string(),
                               serialize::histogram_csv(right.tally));
  }
  if (config.emit_json) {
    json summary;
    summary["N"] = config.n;
    summary["sampler"] = config.sampler;
    summary["seedBase"] = config.seed_base;
    summary["runs"] = disk.runs;
    summary["failedRuns"] = disk.failed_runs;
    summary["disk"] = summary_entry(disk);
    summary["leftHalf"] = summary_entry(left);
    summary["rightHalf"] = summary_entry(right);
    serialize::write_text_file((dir / "summary.json").string(),
                               summary.dump(2) + "\n");
  }

  const long failed = failed_count(runs);
  if (static_cast<double>(failed) > 0.01 * static_cast<double>(config.runs)) {
    std::fprintf(stderr, "root finder failed on %ld of %ld runs\n", failed,
                 config.runs);
    return 3;
  }
  return 0;
}

int cmd_verify(const std::string& suite, std::ostream& out) {
  std::vector<verify::Check> checks;
  const auto append = [&checks](std::vector<verify::Check> more) {
    checks.insert(checks.end(), more.begin(), more.end());
  };
  if (suite == "identities") {
    append(verify::identity_suite());
  } else if (suite == "correlations") {
    append(verify::correlation_suite());
  } else if (suite == "kernels") {
    append(verify::kernel_suite());
  } else if (suite == "all") {
    append(verify::identity_suite());
    append(verify::correlation_suite());
    append(verify::kernel_suite());
  } else {
    throw std::invalid_argument("unknown verify suite: " + suite);
  }

  bool ok = true;
  char line[160];
  for (const verify::Check& c : checks) {
    std::snprintf(line, sizeof(line), "%-34s residual %.3e  tol %.1e  %s",
                  c.name.c_str(), c.residual, c.tolerance,
                  c.pass ? "PASS" : "FAIL");
    out << line << '\n';
    ok = ok && c.pass;
  }
  out << (ok ? "all checks passed" : "verification failures present") << '\n';
  return ok ? 0 : 4;
}

}  // namespace gafzeros::cli
