// netbayes: Bayesian inference for binary social networks.
//
// Subcommands: fit-ergm, fit-lsm, fit-lpcm, simulate, gof, convert, summary.
// Exit status: 0 success, 1 runtime failure, 2 configuration error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "netbayes/ergm_bayes.hpp"
#include "netbayes/exact.hpp"
#include "netbayes/gof.hpp"
#include "netbayes/graph.hpp"
#include "netbayes/lpcm.hpp"
#include "netbayes/lsm_mcmc.hpp"
#include "netbayes/lsm_vb.hpp"
#include "netbayes/mcmc_summary.hpp"
#include "netbayes/run_io.hpp"
#include "netbayes/svg.hpp"

using nlohmann::json;
using namespace netbayes;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

std::string default_out_root() {
  if (const char* env = std::getenv("NETBAYES_OUT")) return env;
  return ".";
}

std::string resolve_out(const std::string& out) {
  std::filesystem::path p(out);
  if (p.is_absolute()) return out;
  return (std::filesystem::path(default_out_root()) / p).string();
}

Graph load_graph(const std::string& path, int skip_lines,
                 const std::string& format, bool directed, int n_nodes) {
  if (format == "matrix") return Graph::from_matrix_file(path, skip_lines, directed);
  if (format == "edgelist") return Graph::from_edge_list_file(path, n_nodes, directed);
  throw ConfigError("unknown data format '" + format +
                    "' (expected matrix or edgelist)");
}

// Run `body`, writing a manifest into out_dir on both success and failure.
int run_with_manifest(const std::string& out_dir, const std::string& command,
                      const json& config, const std::function<void()>& body) {
  Timer timer;
  try {
    std::filesystem::create_directories(out_dir);
    body();
    write_manifest(out_dir, command, config, timer.seconds(), "ok");
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    try {
      write_manifest(out_dir, command, config, timer.seconds(), "config-error",
                     e.what());
    } catch (...) {
    }
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    try {
      write_manifest(out_dir, command, config, timer.seconds(), "failed",
                     e.what());
    } catch (...) {
    }
    return 1;
  }
}

std::vector<double> parse_theta(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stod(tok));
    } catch (...) {
      throw ConfigError("--theta: bad number '" + tok + "'");
    }
  }
  if (out.empty()) throw ConfigError("--theta: empty");
  return out;
}

json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse: ") + e.what());
  }
  return j;
}

void write_positions_csv(const Eigen::MatrixXd& Z, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "node";
  for (int k = 0; k < Z.cols(); ++k) out << ",x" << (k + 1);
  out << '\n';
  for (int i = 0; i < Z.rows(); ++i) {
    out << (i + 1);
    for (int k = 0; k < Z.cols(); ++k) out << ',' << format_double(Z(i, k));
    out << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayesian inference for binary social networks (ERGM exchange "
               "algorithm, latent space models, posterior-predictive GoF)"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  // ---- shared data options helper ----
  struct DataOpts {
    std::string path;
    int skip_lines = 0;
    std::string format = "matrix";
    bool directed = false;
    int n_nodes = -1;
  };
  auto add_data_opts = [](CLI::App* cmd, DataOpts& d, bool required = true) {
    auto* o = cmd->add_option("--data", d.path, "network data file");
    if (required) o->required();
    cmd->add_option("--skip-lines", d.skip_lines,
                    "header lines to skip (matrix format)");
    cmd->add_option("--format", d.format, "matrix|edgelist (default matrix)");
    cmd->add_flag("--directed", d.directed, "treat the network as directed");
    cmd->add_option("--n-nodes", d.n_nodes,
                    "node count for edgelist input (default: max index)");
  };

  // ---- fit-ergm ----
  auto* fit = app.add_subcommand("fit-ergm",
                                 "approximate exchange algorithm posterior");
  DataOpts fit_data;
  add_data_opts(fit, fit_data);
  std::string fit_model_path, fit_out = "ergm-fit", fit_prior = "gaussian";
  FitConfig fit_cfg;
  double fit_prior_var = 100.0;
  int fit_lag = 200;
  fit->add_option("--model-config", fit_model_path, "model terms JSON")->required();
  fit->add_option("--main-iters", fit_cfg.main_iters, "iterations per chain");
  fit->add_option("--aux-iters", fit_cfg.aux_iters, "auxiliary simulation toggles");
  fit->add_option("--n-chains", fit_cfg.n_chains, "number of ADS chains");
  fit->add_option("--burn-in", fit_cfg.burn_in, "discarded iterations (default main/4)");
  fit->add_option("--seed", fit_cfg.seed, "RNG seed");
  fit->add_option("--ads-gamma", fit_cfg.ads_gamma, "ADS move scale");
  fit->add_option("--ads-noise-sd", fit_cfg.ads_noise_sd, "ADS noise sd");
  fit->add_option("--prior", fit_prior, "gaussian|flat (default gaussian)");
  fit->add_option("--prior-var", fit_prior_var, "gaussian prior variance (default 100)");
  fit->add_option("--lag", fit_lag, "autocorrelation lag for the summary");
  fit->add_option("--out", fit_out, "output directory");

  // ---- fit-lsm ----
  auto* lsm_cmd = app.add_subcommand("fit-lsm", "latent space model (MCMC or VB)");
  DataOpts lsm_data;
  add_data_opts(lsm_cmd, lsm_data);
  std::string lsm_method = "mcmc", lsm_metric = "ed", lsm_out = "lsm-fit";
  int lsm_d = 2, lsm_iters = 5000, lsm_burn = 1000, lsm_max_iters = 500,
      lsm_nstarts = 1, lsm_thin = 1;
  double lsm_tol = 1e-6;
  bool lsm_randomz = false;
  uint64_t lsm_seed = 1;
  lsm_cmd->add_option("--dim", lsm_d, "latent dimension d");
  lsm_cmd->add_option("--method", lsm_method, "mcmc|vb");
  lsm_cmd->add_option("--metric", lsm_metric, "ed|sed|bilinear (vb: sed only)");
  lsm_cmd->add_option("--iters", lsm_iters, "MCMC iterations");
  lsm_cmd->add_option("--burn-in", lsm_burn, "MCMC burn-in");
  lsm_cmd->add_option("--thin", lsm_thin, "MCMC thinning");
  lsm_cmd->add_option("--max-iters", lsm_max_iters, "VB sweep limit");
  lsm_cmd->add_option("--tol", lsm_tol, "VB convergence tolerance");
  lsm_cmd->add_option("--n-starts", lsm_nstarts, "VB multi-start count");
  lsm_cmd->add_flag("--random-z", lsm_randomz, "VB: random starts instead of FR");
  lsm_cmd->add_option("--seed", lsm_seed, "RNG seed");
  lsm_cmd->add_option("--out", lsm_out, "output directory");

  // ---- fit-lpcm ----
  auto* lpcm_cmd = app.add_subcommand("fit-lpcm", "latent position cluster model");
  DataOpts lpcm_data;
  add_data_opts(lpcm_cmd, lpcm_data);
  std::string lpcm_out = "lpcm-fit";
  int lpcm_d = 2, lpcm_G = 2, lpcm_iters = 5000, lpcm_burn = 1000, lpcm_thin = 1;
  uint64_t lpcm_seed = 1;
  lpcm_cmd->add_option("--dim", lpcm_d, "latent dimension d");
  lpcm_cmd->add_option("--clusters", lpcm_G, "number of clusters G")->required();
  lpcm_cmd->add_option("--iters", lpcm_iters, "MCMC iterations");
  lpcm_cmd->add_option("--burn-in", lpcm_burn, "MCMC burn-in");
  lpcm_cmd->add_option("--thin", lpcm_thin, "MCMC thinning");
  lpcm_cmd->add_option("--seed", lpcm_seed, "RNG seed");
  lpcm_cmd->add_option("--out", lpcm_out, "output directory");

  // ---- simulate ----
  auto* sim_cmd = app.add_subcommand("simulate", "draw statistic vectors from an ERGM");
  DataOpts sim_data;
  add_data_opts(sim_cmd, sim_data, /*required=*/false);
  std::string sim_model_path, sim_theta_str, sim_out, sim_proposal = "tnt";
  int sim_n = -1;
  long long sim_aux = 3000, sim_nsamples = 100, sim_thin = 100;
  uint64_t sim_seed = 1;
  sim_cmd->add_option("--model-config", sim_model_path, "model terms JSON")->required();
  sim_cmd->add_option("--theta", sim_theta_str, "comma-separated parameter vector")->required();
  sim_cmd->add_option("--n", sim_n, "node count (start from the empty graph)");
  sim_cmd->add_option("--aux-iters", sim_aux, "burn-in toggles");
  sim_cmd->add_option("--n-samples", sim_nsamples, "number of samples");
  sim_cmd->add_option("--thin", sim_thin, "toggles between samples");
  sim_cmd->add_option("--proposal", sim_proposal, "tnt|randomdyad");
  sim_cmd->add_option("--seed", sim_seed, "RNG seed");
  sim_cmd->add_option("--out", sim_out, "output directory (default: stats to stdout)");

  // ---- gof ----
  auto* gof_cmd = app.add_subcommand("gof", "posterior-predictive goodness of fit");
  DataOpts gof_data;
  add_data_opts(gof_cmd, gof_data);
  std::string gof_fit_dir, gof_out = "gof-out";
  GofConfig gof_cfg;
  gof_cmd->add_option("--fit", gof_fit_dir, "fit output directory")->required();
  gof_cmd->add_option("--n-sim", gof_cfg.n_sim, "simulated networks");
  gof_cmd->add_option("--aux-iters", gof_cfg.aux_iters, "toggles per ERGM simulation");
  gof_cmd->add_option("--n-deg", gof_cfg.n_deg, "degree bins");
  gof_cmd->add_option("--n-esp", gof_cfg.n_esp, "esp bins");
  gof_cmd->add_option("--n-dist", gof_cfg.n_dist, "distance bins");
  gof_cmd->add_option("--seed", gof_cfg.seed, "RNG seed");
  gof_cmd->add_option("--out", gof_out, "output directory");

  // ---- convert ----
  auto* conv_cmd = app.add_subcommand("convert", "matrix <-> edge-list conversion");
  std::string conv_in, conv_out_path, conv_from = "matrix", conv_to = "edgelist";
  int conv_skip = 0, conv_n = -1;
  bool conv_directed = false;
  conv_cmd->add_option("--in", conv_in, "input file")->required();
  conv_cmd->add_option("--out", conv_out_path, "output file")->required();
  conv_cmd->add_option("--from", conv_from, "matrix|edgelist");
  conv_cmd->add_option("--to", conv_to, "matrix|edgelist");
  conv_cmd->add_option("--skip-lines", conv_skip, "header lines (matrix input)");
  conv_cmd->add_option("--n-nodes", conv_n, "node count (edgelist input)");
  conv_cmd->add_flag("--directed", conv_directed, "directed network");

  // ---- summary ----
  auto* sum_cmd = app.add_subcommand("summary", "recompute summaries from draws.csv");
  std::string sum_fit_dir, sum_out;
  int sum_lag = 200;
  sum_cmd->add_option("--fit", sum_fit_dir, "fit output directory")->required();
  sum_cmd->add_option("--lag", sum_lag, "autocorrelation lag");
  sum_cmd->add_option("--out", sum_out, "output directory (default: fit dir)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  // ---------- fit-ergm ----------
  if (*fit) {
    const std::string out_dir = resolve_out(fit_out);
    json cfg_echo{{"data", fit_data.path},
                  {"skip_lines", fit_data.skip_lines},
                  {"format", fit_data.format},
                  {"model_config", fit_model_path},
                  {"main_iters", fit_cfg.main_iters},
                  {"aux_iters", fit_cfg.aux_iters},
                  {"n_chains", fit_cfg.n_chains},
                  {"burn_in", fit_cfg.effective_burn_in()},
                  {"seed", fit_cfg.seed},
                  {"ads_gamma", fit_cfg.ads_gamma},
                  {"ads_noise_sd", fit_cfg.ads_noise_sd},
                  {"prior", fit_prior},
                  {"prior_var", fit_prior_var},
                  {"kind", "ergm"}};
    return run_with_manifest(out_dir, "fit-ergm", cfg_echo, [&] {
      const ModelSpec model = model_from_file(fit_model_path);
      cfg_echo["model"] = model_to_json(model);
      const Graph y = load_graph(fit_data.path, fit_data.skip_lines,
                                 fit_data.format, fit_data.directed,
                                 fit_data.n_nodes);
      Prior prior = fit_prior == "flat"
                        ? Prior::flat()
                        : Prior::gaussian(Eigen::VectorXd::Zero(model.size()),
                                          fit_prior_var *
                                              Eigen::MatrixXd::Identity(
                                                  model.size(), model.size()));
      if (fit_prior != "flat" && fit_prior != "gaussian")
        throw ConfigError("--prior must be gaussian or flat");
      try {
        fit_cfg.validate();
      } catch (const std::exception& e) {
        throw ConfigError(e.what());
      }
      const PosteriorDraws draws = fit_ergm(y, model, prior, fit_cfg);
      const SummaryReport rep =
          summarize(draws, std::min(fit_lag, draws.kept_iters - 1));
      write_draws_csv(draws, out_dir + "/draws.csv");
      write_summary_json(rep, out_dir + "/summary.json");
      write_acf_csv(rep, out_dir + "/acf.csv");
      svg_diagnostics(draws, rep, out_dir + "/diagnostics.svg");
      std::cout << "posterior mean:";
      for (double v : rep.pooled_mean) std::cout << ' ' << v;
      std::cout << "\nposterior sd:";
      for (double v : rep.pooled_sd) std::cout << ' ' << v;
      std::cout << "\noverall acceptance rate: " << rep.overall_accept << '\n';
    });
  }

  // ---------- fit-lsm ----------
  if (*lsm_cmd) {
    const std::string out_dir = resolve_out(lsm_out);
    json cfg_echo{{"data", lsm_data.path},     {"skip_lines", lsm_data.skip_lines},
                  {"format", lsm_data.format}, {"dim", lsm_d},
                  {"method", lsm_method},      {"metric", lsm_metric},
                  {"seed", lsm_seed},          {"kind", "lsm"}};
    return run_with_manifest(out_dir, "fit-lsm", cfg_echo, [&] {
      const Graph y = load_graph(lsm_data.path, lsm_data.skip_lines,
                                 lsm_data.format, lsm_data.directed,
                                 lsm_data.n_nodes);
      LsmPrior prior;
      if (lsm_method == "vb") {
        if (lsm_metric != "sed")
          throw ConfigError("--method vb requires --metric sed");
        VbConfig cfg;
        cfg.d = lsm_d;
        cfg.max_iters = lsm_max_iters;
        cfg.tol = lsm_tol;
        cfg.n_starts = lsm_nstarts;
        cfg.random_z = lsm_randomz;
        cfg.seed = lsm_seed;
        const VariationalState vb = fit_lsm_vb(y, prior, cfg);
        if (!vb.converged)
          std::cerr << "warning: VB did not converge in " << lsm_max_iters
                    << " sweeps (ELBO trace written to elbo.csv)\n";
        write_positions_csv(vb.Zmean, out_dir + "/positions.csv");
        {
          json ja{{"xi", vb.xi},
                  {"psi2", vb.psi2},
                  {"sigma", std::vector<double>(vb.sigma.data(),
                                                vb.sigma.data() + vb.sigma.size())},
                  {"elbo", vb.elbo()},
                  {"converged", vb.converged},
                  {"best_start", vb.start_index}};
          std::ofstream fa(out_dir + "/alpha.json");
          fa << ja.dump(2) << '\n';
        }
        {
          std::ofstream fe(out_dir + "/elbo.csv");
          fe << "iter,elbo\n";
          for (size_t t = 0; t < vb.elbo_trace.size(); ++t)
            fe << t << ',' << format_double(vb.elbo_trace[t]) << '\n';
        }
        svg_latent_plot(y, vb.Zmean, {}, "latent positions (VB, SED)",
                        out_dir + "/latent.svg");
        std::cout << "ELBO: " << vb.elbo() << " (converged: " << vb.converged
                  << ")\n";
      } else if (lsm_method == "mcmc") {
        LsmMcmcConfig cfg;
        cfg.iters = lsm_iters;
        cfg.burn_in = lsm_burn;
        cfg.thin = lsm_thin;
        cfg.seed = lsm_seed;
        try {
          cfg.validate();
        } catch (const std::exception& e) {
          throw ConfigError(e.what());
        }
        const Metric metric = metric_from_string(lsm_metric);
        const LsmDraws draws = fit_lsm_mcmc(y, lsm_d, metric, prior, cfg);
        write_positions_csv(draws.z_mean, out_dir + "/positions.csv");
        {
          json ja{{"mean", draws.alpha_mean},
                  {"sd", draws.alpha_sd},
                  {"accept_rate_z",
                   static_cast<double>(draws.accept_z) / draws.propose_z},
                  {"accept_rate_alpha",
                   static_cast<double>(draws.accept_alpha) / draws.propose_alpha}};
          std::ofstream fa(out_dir + "/alpha.json");
          fa << ja.dump(2) << '\n';
        }
        std::filesystem::create_directories(out_dir + "/draws");
        {
          std::ofstream fa(out_dir + "/draws/alpha.csv");
          fa << "iter,alpha\n";
          for (size_t t = 0; t < draws.alpha.size(); ++t)
            fa << (t + 1) << ',' << format_double(draws.alpha[t]) << '\n';
          std::ofstream fz(out_dir + "/draws/z.csv");
          fz << "iter,node";
          for (int k = 0; k < lsm_d; ++k) fz << ",x" << (k + 1);
          fz << '\n';
          for (size_t t = 0; t < draws.Z.size(); ++t)
            for (int i = 0; i < y.n(); ++i) {
              fz << (t + 1) << ',' << (i + 1);
              for (int k = 0; k < lsm_d; ++k)
                fz << ',' << format_double(draws.Z[t](i, k));
              fz << '\n';
            }
        }
        svg_latent_plot(y, draws.z_mean, {}, "latent positions (MCMC, " +
                        lsm_metric + ")", out_dir + "/latent.svg");
        std::cout << "alpha posterior mean: " << draws.alpha_mean << '\n';
      } else {
        throw ConfigError("--method must be mcmc or vb");
      }
    });
  }

  // ---------- fit-lpcm ----------
  if (*lpcm_cmd) {
    const std::string out_dir = resolve_out(lpcm_out);
    json cfg_echo{{"data", lpcm_data.path},
                  {"skip_lines", lpcm_data.skip_lines},
                  {"format", lpcm_data.format},
                  {"dim", lpcm_d},
                  {"clusters", lpcm_G},
                  {"iters", lpcm_iters},
                  {"burn_in", lpcm_burn},
                  {"seed", lpcm_seed},
                  {"kind", "lpcm"}};
    return run_with_manifest(out_dir, "fit-lpcm", cfg_echo, [&] {
      const Graph y = load_graph(lpcm_data.path, lpcm_data.skip_lines,
                                 lpcm_data.format, lpcm_data.directed,
                                 lpcm_data.n_nodes);
      LpcmPrior prior;
      LsmMcmcConfig cfg;
      cfg.iters = lpcm_iters;
      cfg.burn_in = lpcm_burn;
      cfg.thin = lpcm_thin;
      cfg.seed = lpcm_seed;
      try {
        cfg.validate();
      } catch (const std::exception& e) {
        throw ConfigError(e.what());
      }
      const LpcmDraws draws = fit_lpcm_mcmc(y, lpcm_d, lpcm_G, prior, cfg);
      write_positions_csv(draws.z_mean, out_dir + "/positions.csv");
      {
        std::ofstream fc(out_dir + "/clusters.csv");
        fc << "node,cluster";
        for (int g = 0; g < lpcm_G; ++g) fc << ",p" << (g + 1);
        fc << '\n';
        for (int i = 0; i < y.n(); ++i) {
          fc << (i + 1) << ',' << (draws.modal_labels[i] + 1);
          for (int g = 0; g < lpcm_G; ++g)
            fc << ',' << format_double(draws.label_freq[i][g]);
          fc << '\n';
        }
      }
      {
        json ja{{"mean", draws.alpha_mean}};
        std::ofstream fa(out_dir + "/alpha.json");
        fa << ja.dump(2) << '\n';
      }
      svg_latent_plot(y, draws.z_mean, draws.modal_labels,
                      "latent positions (LPCM, G=" + std::to_string(lpcm_G) + ")",
                      out_dir + "/latent.svg");
      std::cout << "cluster sizes:";
      std::vector<int> sizes(lpcm_G, 0);
      for (int lab : draws.modal_labels) ++sizes[lab];
      for (int s : sizes) std::cout << ' ' << s;
      std::cout << '\n';
    });
  }

  // ---------- simulate ----------
  if (*sim_cmd) {
    try {
      const ModelSpec model = model_from_file(sim_model_path);
      const std::vector<double> theta = parse_theta(sim_theta_str);
      if (theta.size() != model.size())
        throw ConfigError("--theta length does not match model terms");
      Graph start = [&] {
        if (!sim_data.path.empty())
          return load_graph(sim_data.path, sim_data.skip_lines, sim_data.format,
                            sim_data.directed, sim_data.n_nodes);
        if (sim_n < 1)
          throw ConfigError("simulate: need --data or --n for the start graph");
        return Graph(sim_n, sim_data.directed);
      }();
      SimConfig cfg;
      cfg.aux_iters = sim_aux;
      cfg.seed = sim_seed;
      if (sim_proposal == "tnt")
        cfg.proposal = Proposal::TieNoTie;
      else if (sim_proposal == "randomdyad")
        cfg.proposal = Proposal::RandomDyad;
      else
        throw ConfigError("--proposal must be tnt or randomdyad");
      Timer timer;
      const auto stats = sample_stats(theta, model, start, cfg, sim_nsamples,
                                      sim_thin);
      std::ostringstream csv;
      const auto names = model.term_names();
      for (size_t k = 0; k < names.size(); ++k)
        csv << (k ? "," : "") << names[k];
      csv << '\n';
      for (const auto& row : stats) {
        for (size_t k = 0; k < row.size(); ++k)
          csv << (k ? "," : "") << format_double(row[k]);
        csv << '\n';
      }
      if (sim_out.empty()) {
        std::cout << csv.str();
      } else {
        const std::string out_dir = resolve_out(sim_out);
        std::filesystem::create_directories(out_dir);
        std::ofstream f(out_dir + "/samples.csv");
        f << csv.str();
        write_manifest(out_dir, "simulate",
                       json{{"model_config", sim_model_path},
                            {"theta", theta},
                            {"aux_iters", sim_aux},
                            {"n_samples", sim_nsamples},
                            {"thin", sim_thin},
                            {"seed", sim_seed}},
                       timer.seconds(), "ok");
      }
      return 0;
    } catch (const ConfigError& e) {
      std::cerr << "config error: " << e.what() << '\n';
      return 2;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 1;
    }
  }

  // ---------- gof ----------
  if (*gof_cmd) {
    const std::string out_dir = resolve_out(gof_out);
    json cfg_echo{{"fit", gof_fit_dir},       {"data", gof_data.path},
                  {"n_sim", gof_cfg.n_sim},   {"aux_iters", gof_cfg.aux_iters},
                  {"n_deg", gof_cfg.n_deg},   {"n_esp", gof_cfg.n_esp},
                  {"n_dist", gof_cfg.n_dist}, {"seed", gof_cfg.seed}};
    return run_with_manifest(out_dir, "gof", cfg_echo, [&] {
      const Graph y = load_graph(gof_data.path, gof_data.skip_lines,
                                 gof_data.format, gof_data.directed,
                                 gof_data.n_nodes);
      const json manifest = load_config_file(gof_fit_dir + "/manifest.json");
      const std::string kind =
          manifest.at("config").value("kind", std::string("ergm"));
      GofSummary summary;
      if (kind == "ergm") {
        const ModelSpec model = model_from_json(manifest.at("config").at("model"));
        const PosteriorDraws draws =
            read_draws_csv(gof_fit_dir + "/draws.csv", model);
        summary = gof_ergm(draws, y, model, gof_cfg);
      } else if (kind == "lsm" || kind == "lpcm") {
        const std::string method = manifest.at("config").value("method", "mcmc");
        if (method == "vb") {
          const json ja = load_config_file(gof_fit_dir + "/alpha.json");
          VariationalState vb;
          vb.xi = ja.at("xi").get<double>();
          vb.psi2 = ja.at("psi2").get<double>();
          const auto sig = ja.at("sigma").get<std::vector<double>>();
          vb.sigma = Eigen::Map<const Eigen::VectorXd>(sig.data(), sig.size());
          // positions.csv -> Zmean
          std::ifstream fp(gof_fit_dir + "/positions.csv");
          if (!fp) throw std::runtime_error("cannot open positions.csv");
          std::string line;
          std::getline(fp, line);
          std::vector<std::vector<double>> rows;
          while (std::getline(fp, line)) {
            std::stringstream ls(line);
            std::string tok;
            std::vector<double> row;
            while (std::getline(ls, tok, ',')) row.push_back(std::stod(tok));
            rows.push_back({row.begin() + 1, row.end()});
          }
          vb.Zmean.resize(rows.size(), sig.size());
          for (size_t i = 0; i < rows.size(); ++i)
            for (size_t k = 0; k < sig.size(); ++k) vb.Zmean(i, k) = rows[i][k];
          summary = gof_lsm(vb, y, gof_cfg);
        } else {
          // re-load kept draws from the draws directory
          const int d = manifest.at("config").value("dim", 2);
          LsmDraws draws;
          std::ifstream fa(gof_fit_dir + "/draws/alpha.csv");
          if (!fa) throw std::runtime_error("cannot open draws/alpha.csv");
          std::string line;
          std::getline(fa, line);
          while (std::getline(fa, line)) {
            const auto pos = line.find(',');
            draws.alpha.push_back(std::stod(line.substr(pos + 1)));
          }
          std::ifstream fz(gof_fit_dir + "/draws/z.csv");
          if (!fz) throw std::runtime_error("cannot open draws/z.csv");
          std::getline(fz, line);
          draws.Z.assign(draws.alpha.size(), Eigen::MatrixXd::Zero(y.n(), d));
          while (std::getline(fz, line)) {
            std::stringstream ls(line);
            std::string tok;
            std::vector<double> row;
            while (std::getline(ls, tok, ',')) row.push_back(std::stod(tok));
            const int t = static_cast<int>(row[0]) - 1;
            const int i = static_cast<int>(row[1]) - 1;
            for (int k = 0; k < d; ++k) draws.Z[t](i, k) = row[2 + k];
          }
          const Metric metric = metric_from_string(
              manifest.at("config").value("metric", std::string("ed")));
          summary = gof_lsm(draws, y, metric, gof_cfg);
        }
      } else {
        throw ConfigError("gof: unknown fit kind '" + kind + "' in manifest");
      }
      emit_gof(summary, out_dir);
      std::cout << "envelope coverage: degree "
                << summary.degree.envelope_coverage() << ", esp "
                << summary.esp.envelope_coverage() << ", distance "
                << summary.dist.envelope_coverage() << '\n';
    });
  }

  // ---------- convert ----------
  if (*conv_cmd) {
    try {
      const Graph g = conv_from == "matrix"
                          ? Graph::from_matrix_file(conv_in, conv_skip, conv_directed)
                          : Graph::from_edge_list_file(conv_in, conv_n, conv_directed);
      std::ofstream out(conv_out_path);
      if (!out) throw std::runtime_error("cannot write " + conv_out_path);
      if (conv_to == "matrix")
        g.write_matrix(out);
      else if (conv_to == "edgelist")
        g.write_edge_list(out);
      else
        throw ConfigError("--to must be matrix or edgelist");
      return 0;
    } catch (const ConfigError& e) {
      std::cerr << "config error: " << e.what() << '\n';
      return 2;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 1;
    }
  }

  // ---------- summary ----------
  if (*sum_cmd) {
    const std::string out_dir =
        sum_out.empty() ? sum_fit_dir : resolve_out(sum_out);
    json cfg_echo{{"fit", sum_fit_dir}, {"lag", sum_lag}};
    return run_with_manifest(out_dir, "summary", cfg_echo, [&] {
      const json manifest = load_config_file(sum_fit_dir + "/manifest.json");
      const ModelSpec model = model_from_json(manifest.at("config").at("model"));
      const PosteriorDraws draws = read_draws_csv(sum_fit_dir + "/draws.csv", model);
      const SummaryReport rep =
          summarize(draws, std::min(sum_lag, draws.kept_iters - 1));
      write_summary_json(rep, out_dir + "/summary.json");
      write_acf_csv(rep, out_dir + "/acf.csv");
      svg_diagnostics(draws, rep, out_dir + "/diagnostics.svg");
      std::cout << "pooled mean:";
      for (double v : rep.pooled_mean) std::cout << ' ' << v;
      std::cout << '\n';
    });
  }

  return 2;
}
