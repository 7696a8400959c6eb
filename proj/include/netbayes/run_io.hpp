#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "netbayes/ergm_bayes.hpp"
#include "netbayes/mcmc_summary.hpp"
#include "netbayes/netstats.hpp"

namespace netbayes {

inline constexpr const char* kVersion = "netbayes 0.1.0";

// Raised on malformed configuration; the CLI maps it to exit status 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ModelSpec <-> JSON: [{"term": "edges"}, {"term": "gwesp", "phi": 0.6}, ...]
ModelSpec model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const ModelSpec& model);
ModelSpec model_from_file(const std::string& path);

// draws.csv: header "chain,iter,<term names>", one row per kept draw.
void write_draws_csv(const PosteriorDraws& draws, const std::string& path);
PosteriorDraws read_draws_csv(const std::string& path, const ModelSpec& model);

void write_summary_json(const SummaryReport& rep, const std::string& path);
void write_acf_csv(const SummaryReport& rep, const std::string& path);

// manifest.json: config echo, seed, version, wall-clock seconds, status.
// Written for every run directory, also on failure (with the error recorded).
void write_manifest(const std::string& out_dir, const std::string& command,
                    const nlohmann::json& config, double wall_seconds,
                    const std::string& status,
                    const std::string& error = std::string());

std::string format_double(double v);  // shortest round-trip text (%.17g)

}  // namespace netbayes
