#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gafzeros/cli.hpp"
#include "gafzeros/common.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

void add_common(CLI::App* cmd, CommonArgs* args, bool config_required) {
  auto* config = cmd->add_option("--config", args->config_path,
                                 "experiment config JSON file");
  if (config_required) config->required();
  cmd->add_option("--out", args->out_dir, "override the config output directory");
  cmd->add_option("--seed", args->seed, "override the config seed base")
      ->each([args](const std::string&) { args->seed_set = true; });
}

gafzeros::cli::ExperimentConfig resolve(const CommonArgs& args) {
  gafzeros::cli::ExperimentConfig config = gafzeros::cli::load_config(args.config_path);
  if (!args.out_dir.empty()) config.output_dir = args.out_dir;
  if (args.seed_set) config.seed_base = args.seed;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for zeros of Gaussian analytic functions"};
  app.require_subcommand(1);

  CommonArgs sample_args, intensity_args, counts_args;
  int theta_count = 181;
  std::vector<double> radii = {0.25, 0.5, 0.75};
  std::string suite = "all";

  CLI::App* sample = app.add_subcommand("sample-zeros",
                                        "sample polynomials and classify their roots");
  add_common(sample, &sample_args, true);

  CLI::App* intensity = app.add_subcommand(
      "intensity", "evaluate g_r(theta) = pi (1-r^2)^2 rho_1(r e^{i theta})");
  add_common(intensity, &intensity_args, true);
  intensity->add_option("--theta-count", theta_count, "theta samples over (-pi, pi]")
      ->check(CLI::PositiveNumber);
  intensity->add_option("--r", radii, "radii of the evaluated curves");

  CLI::App* counts = app.add_subcommand("mc-counts",
                                        "Monte Carlo zero-count histograms");
  add_common(counts, &counts_args, true);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite,
                     "identities | correlations | kernels | all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sample->parsed()) {
      return gafzeros::cli::cmd_sample_zeros(resolve(sample_args));
    }
    if (intensity->parsed()) {
      std::vector<double> thetas(static_cast<std::size_t>(theta_count));
      for (int i = 0; i < theta_count; ++i) {
        thetas[static_cast<std::size_t>(i)] =
            -gafzeros::kPi +
            gafzeros::kTwoPi * static_cast<double>(i + 1) / static_cast<double>(theta_count);
      }
      return gafzeros::cli::cmd_intensity(resolve(intensity_args), thetas, radii);
    }
    if (counts->parsed()) {
      return gafzeros::cli::cmd_mc_counts(resolve(counts_args));
    }
    if (verify->parsed()) {
      return gafzeros::cli::cmd_verify(suite, std::cout);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const gafzeros::NumericFailure& e) {
    std::cerr << "numeric failure: " << e.what() << " (residual " << e.detail()
              << ")\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return 3;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
