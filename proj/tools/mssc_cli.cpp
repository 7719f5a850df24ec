// Command-line surface for the clustering library: exact k-means,
// local-solution certification, exact global solving, DC optimality
// checks, local-solution enumeration, and stability probes.
//
// Exit status: 0 success, 2 input error, 3 budget/guard refusal.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mssc/error.hpp"
#include "mssc/io.hpp"

namespace {

using namespace mssc;

struct RunConfig {
  std::string subcommand;
  std::string input_path;
  std::size_t k = 0;
  double epsilon = 0.0;
  std::size_t max_iter = 1000;
  std::string init = "first-k";
  std::optional<std::string> explicit_centroids;
  std::uint64_t seed = 0;
  double delta = 0.0;  // 0 = derive from the data separation
  std::size_t trials = 200;
  double eps_tie = kDefaultEpsTie;
  double eps_bary = 1e-9;
  double aubin_eps = std::numeric_limits<double>::infinity();
  bool families = false;
  std::optional<std::string> output_path;
};

CentroidSystem centroids_from_config(const RunConfig& cfg) {
  if (!cfg.explicit_centroids) throw input_error("--centroids is required here");
  CentroidSystem x = parse_centroid_literal(*cfg.explicit_centroids);
  if (cfg.k != 0 && cfg.k != x.count()) {
    throw input_error("--k " + std::to_string(cfg.k) + " does not match the " +
                      std::to_string(x.count()) + " centroids given");
  }
  return x;
}

int run(const RunConfig& cfg) {
  const DataSet data = read_dataset(cfg.input_path, cfg.eps_tie);
  const CertifyOptions certify_opts{cfg.eps_tie, cfg.eps_bary};

  if (cfg.subcommand == "kmeans") {
    CentroidSystem init = [&] {
      if (cfg.init == "explicit") {
        const CentroidSystem given = centroids_from_config(cfg);
        return initial_centroids(data, given.count(), InitStrategy::Explicit, cfg.seed, given);
      }
      if (cfg.k == 0) throw input_error("--k is required unless --init explicit");
      const InitStrategy strategy =
          cfg.init == "first-k" ? InitStrategy::FirstK : InitStrategy::RandomPoints;
      return initial_centroids(data, cfg.k, strategy, cfg.seed);
    }();
    const KMeansResult result = kmeans(data, init, cfg.epsilon, cfg.max_iter, cfg.eps_tie);
    write_report(to_json(result, cfg.epsilon, cfg.max_iter), cfg.output_path);
    return 0;
  }

  if (cfg.subcommand == "certify") {
    const CentroidSystem x = centroids_from_config(cfg);
    const CertificationReport report = classify(data, x, true, certify_opts);
    write_report(to_json(report), cfg.output_path);
    return 0;
  }

  if (cfg.subcommand == "global") {
    if (cfg.k == 0) throw input_error("--k is required");
    const GlobalSolveResult result = global_solve(data, cfg.k, kDefaultCandidateBudget,
                                                  cfg.eps_tie);
    write_report(to_json(result), cfg.output_path);
    return 0;
  }

  if (cfg.subcommand == "dc-check") {
    const CentroidSystem x = centroids_from_config(cfg);
    const DcCheckResult result = dc_optimality_check(data, x, cfg.eps_tie);
    write_report(to_json(result, x), cfg.output_path);
    return 0;
  }

  if (cfg.subcommand == "local-enum") {
    if (cfg.k == 0) throw input_error("--k is required");
    const auto solutions =
        enumerate_core_local_solutions(data, cfg.k, kDefaultCandidateBudget, certify_opts);
    std::optional<std::vector<LocalFamily>> families;
    if (cfg.families) {
      families = describe_local_families(data, cfg.k, kDefaultCandidateBudget, certify_opts);
    }
    write_report(to_json(solutions, families), cfg.output_path);
    return 0;
  }

  if (cfg.subcommand == "stability") {
    if (cfg.k == 0) throw input_error("--k is required");
    const double delta = cfg.delta > 0.0 ? cfg.delta : default_probe_delta(data);
    std::vector<StabilityProbeReport> probes;
    probes.push_back(probe_value_lipschitz(data, cfg.k, delta, cfg.trials, cfg.seed));
    probes.push_back(probe_global_upper_lipschitz(data, cfg.k, delta, cfg.trials, cfg.seed));
    const CentroidSystem xbar = [&] {
      if (cfg.explicit_centroids) return centroids_from_config(cfg);
      // Default reference point: the first global solution.
      const GlobalSolveResult solved = global_solve(data, cfg.k, kDefaultCandidateBudget,
                                                    cfg.eps_tie);
      return solved.global_solutions.front();
    }();
    AubinOptions aubin;
    aubin.eps = cfg.aubin_eps;
    aubin.certify = certify_opts;
    probes.push_back(probe_aubin_local(data, xbar, delta, cfg.trials, cfg.seed, aubin));
    write_report(to_json(probes, cfg.seed), cfg.output_path);
    return 0;
  }

  throw input_error("unknown subcommand: " + cfg.subcommand);
}

void add_common_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--input", cfg.input_path, "CSV file, one point per row")->required();
  cmd->add_option("--eps-tie", cfg.eps_tie, "relative distance-tie tolerance");
  cmd->add_option("--output", cfg.output_path, "write the JSON report here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Minimum sum-of-squares clustering: exact algorithms, local-solution "
               "certification, and stability probes"};
  app.require_subcommand(1);

  CLI::App* km = app.add_subcommand("kmeans", "Run the exact k-means iteration");
  add_common_flags(km, cfg);
  km->add_option("--k", cfg.k, "number of clusters");
  km->add_option("--epsilon", cfg.epsilon, "convergence tolerance on centroid shifts");
  km->add_option("--max-iter", cfg.max_iter, "iteration cap");
  km->add_option("--init", cfg.init, "first-k | random-points | explicit")
      ->check(CLI::IsMember({"first-k", "random-points", "explicit"}));
  km->add_option("--centroids", cfg.explicit_centroids,
                 "explicit initial centroids, e.g. \"0,0.5;1,0\"");
  km->add_option("--seed", cfg.seed, "seed for random-points initialization");

  CLI::App* cert = app.add_subcommand("certify",
                                      "Certify a centroid system against the local-solution "
                                      "characterization and the exact optimal value");
  add_common_flags(cert, cfg);
  cert->add_option("--centroids", cfg.explicit_centroids, "centroid system to certify")
      ->required();
  cert->add_option("--k", cfg.k, "cross-check on the centroid count");
  cert->add_option("--eps-bary", cfg.eps_bary, "relative barycenter residual tolerance");

  CLI::App* glob = app.add_subcommand("global", "Exact global solve by partition enumeration");
  add_common_flags(glob, cfg);
  glob->add_option("--k", cfg.k, "number of clusters")->required();

  CLI::App* dc = app.add_subcommand("dc-check", "DC necessary optimality condition");
  add_common_flags(dc, cfg);
  dc->add_option("--centroids", cfg.explicit_centroids, "centroid system to check")->required();
  dc->add_option("--k", cfg.k, "cross-check on the centroid count");

  CLI::App* local = app.add_subcommand("local-enum",
                                       "Enumerate all nontrivial local solutions with every "
                                       "slot attractive");
  add_common_flags(local, cfg);
  local->add_option("--k", cfg.k, "number of clusters")->required();
  local->add_flag("--families", cfg.families,
                  "also describe the one-free-slot local-solution families");
  local->add_option("--eps-bary", cfg.eps_bary, "relative barycenter residual tolerance");

  CLI::App* stab = app.add_subcommand("stability",
                                      "Value, global-map, and local-map stability probes");
  add_common_flags(stab, cfg);
  stab->add_option("--k", cfg.k, "number of clusters")->required();
  stab->add_option("--delta", cfg.delta,
                   "perturbation radius (sum norm); 0 derives it from the data separation");
  stab->add_option("--trials", cfg.trials, "trials per probe");
  stab->add_option("--seed", cfg.seed, "base seed for the per-trial streams");
  stab->add_option("--centroids", cfg.explicit_centroids,
                   "reference local solution for the Aubin probe (default: first global "
                   "solution)");
  stab->add_option("--aubin-eps", cfg.aubin_eps,
                   "admission radius around the reference for k-means-found members");
  stab->add_option("--eps-bary", cfg.eps_bary, "relative barycenter residual tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  try {
    return run(cfg);
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const refusal_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
