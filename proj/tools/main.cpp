#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "repgas/errors.hpp"
#include "repgas/threading.hpp"

namespace {

// Exit codes: 0 every check passed, 1 some check failed, 2 configuration or
// IO problem (including command-line misuse).

struct CommonFlags {
  std::string config_path;
  std::string out_dir = ".";
  int threads = 0;
  std::uint64_t seed = 0;
  CLI::Option* seed_option = nullptr;

  void attach(CLI::App* sub, bool with_config) {
    if (with_config)
      sub->add_option("--config", config_path, "run configuration file")
          ->required();
    sub->add_option("--out", out_dir, "output directory for CSV artifacts");
    sub->add_option("--threads", threads,
                    "worker threads (0 keeps the hardware default)");
    seed_option =
        sub->add_option("--seed", seed, "quadrature seed (overrides config)");
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"repulsive-gas partition function toolkit"};
  app.require_subcommand(1);

  CommonFlags zscan_flags, identity_flags, contraction_flags, info_flags,
      hyper_flags;
  std::string graph_file;
  double hyper_range = 1.0;

  CLI::App* zscan = app.add_subcommand(
      "zscan", "partition scan over the zero-free activity disk");
  zscan_flags.attach(zscan, true);

  CLI::App* identity = app.add_subcommand(
      "identity", "density and partition identity residuals");
  identity_flags.attach(identity, true);

  CLI::App* contraction = app.add_subcommand(
      "contraction", "contraction functional over [0, 1/B_R]");
  contraction_flags.attach(contraction, true);

  CLI::App* hypergraph = app.add_subcommand(
      "hypergraph", "exact hypergraph gas analysis of an edge-list file");
  hypergraph->add_option("file", graph_file, "edge-list file (\"N k\" header)")
      ->required();
  hypergraph->add_option("--range", hyper_range,
                         "interaction range of the interval embedding");
  hyper_flags.attach(hypergraph, false);

  CLI::App* info =
      app.add_subcommand("info", "derived scales of a configuration");
  info_flags.attach(info, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    CommonFlags* flags = &zscan_flags;
    if (identity->parsed()) flags = &identity_flags;
    if (contraction->parsed()) flags = &contraction_flags;
    if (hypergraph->parsed()) flags = &hyper_flags;
    if (info->parsed()) flags = &info_flags;

    if (flags->threads > 0) repgas::set_worker_threads(flags->threads);

    if (hypergraph->parsed())
      return repgas::tools::cmd_hypergraph(graph_file, hyper_range,
                                           flags->out_dir);

    repgas::tools::RunConfig config =
        repgas::tools::RunConfig::load(flags->config_path);
    if (flags->seed_option && flags->seed_option->count() > 0)
      config.quadrature.seed = flags->seed;

    if (zscan->parsed())
      return repgas::tools::cmd_zscan(config, flags->out_dir);
    if (identity->parsed())
      return repgas::tools::cmd_identity(config, flags->out_dir);
    if (contraction->parsed())
      return repgas::tools::cmd_contraction(config, flags->out_dir);
    return repgas::tools::cmd_info(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
