#include "netbayes/run_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace netbayes {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ModelSpec model_from_json(const json& j) {
  const json* terms = &j;
  if (j.is_object()) {
    if (!j.contains("terms"))
      throw ConfigError("model config: expected a \"terms\" array");
    terms = &j.at("terms");
  }
  if (!terms->is_array() || terms->empty())
    throw ConfigError("model config: terms must be a non-empty array");
  ModelSpec model;
  for (size_t t = 0; t < terms->size(); ++t) {
    const json& jt = (*terms)[t];
    if (!jt.is_object() || !jt.contains("term"))
      throw ConfigError("model config: terms[" + std::to_string(t) +
                        "] must be an object with a \"term\" field");
    const std::string name = jt.at("term").get<std::string>();
    StatTerm term;
    if (name == "edges") {
      term.kind = TermKind::Edges;
    } else if (name == "gwesp" || name == "gwnsp") {
      term.kind = name == "gwesp" ? TermKind::Gwesp : TermKind::Gwnsp;
      if (!jt.contains("phi"))
        throw ConfigError("model config: terms[" + std::to_string(t) + "] (" +
                          name + ") requires \"phi\"");
      term.phi = jt.at("phi").get<double>();
    } else {
      throw ConfigError("model config: unknown term \"" + name +
                        "\" (expected edges, gwesp, or gwnsp)");
    }
    model.terms.push_back(term);
  }
  try {
    model.validate();
  } catch (const std::exception& e) {
    throw ConfigError(std::string("model config: ") + e.what());
  }
  return model;
}

json model_to_json(const ModelSpec& model) {
  json terms = json::array();
  for (const auto& t : model.terms) {
    json jt;
    switch (t.kind) {
      case TermKind::Edges:
        jt["term"] = "edges";
        break;
      case TermKind::Gwesp:
        jt["term"] = "gwesp";
        jt["phi"] = t.phi;
        break;
      case TermKind::Gwnsp:
        jt["term"] = "gwnsp";
        jt["phi"] = t.phi;
        break;
    }
    terms.push_back(jt);
  }
  return json{{"terms", terms}};
}

ModelSpec model_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open model config: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("model config " + path + ": " + e.what());
  }
  return model_from_json(j);
}

void write_draws_csv(const PosteriorDraws& draws, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "chain,iter";
  for (const auto& name : draws.model.term_names()) out << ',' << name;
  out << '\n';
  for (int c = 0; c < draws.n_chains; ++c)
    for (int t = 0; t < draws.kept_iters; ++t) {
      out << (c + 1) << ',' << (t + 1);
      for (int k = 0; k < draws.p; ++k)
        out << ',' << format_double(draws.at(c, t, k));
      out << '\n';
    }
}

PosteriorDraws read_draws_csv(const std::string& path, const ModelSpec& model) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
  const int p = static_cast<int>(model.size());
  std::vector<std::vector<std::vector<double>>> chains;  // [chain][iter][param]
  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    std::vector<double> row;
    while (std::getline(ls, tok, ',')) row.push_back(std::stod(tok));
    if (static_cast<int>(row.size()) != p + 2)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected " + std::to_string(p + 2) +
                               " columns");
    const int chain = static_cast<int>(row[0]) - 1;
    if (chain < 0) throw std::runtime_error(path + ": bad chain index");
    if (static_cast<size_t>(chain) >= chains.size())
      chains.resize(chain + 1);
    chains[chain].push_back({row.begin() + 2, row.end()});
  }
  if (chains.empty()) throw std::runtime_error(path + ": no draws");
  PosteriorDraws out;
  out.n_chains = static_cast<int>(chains.size());
  out.kept_iters = static_cast<int>(chains[0].size());
  out.p = p;
  out.model = model;
  out.main_iters = out.kept_iters;  // acceptance unknown from csv alone
  out.accept_count.assign(out.n_chains, 0);
  for (const auto& ch : chains)
    if (static_cast<int>(ch.size()) != out.kept_iters)
      throw std::runtime_error(path + ": chains of unequal length");
  out.draws.resize(static_cast<size_t>(out.n_chains) * out.kept_iters * p);
  for (int c = 0; c < out.n_chains; ++c)
    for (int t = 0; t < out.kept_iters; ++t)
      for (int k = 0; k < p; ++k)
        out.draws[(static_cast<size_t>(c) * out.kept_iters + t) * p + k] =
            chains[c][t][k];
  return out;
}

void write_summary_json(const SummaryReport& rep, const std::string& path) {
  json j;
  j["parameters"] = rep.param_names;
  json per_chain = json::array();
  for (size_t c = 0; c < rep.chain_mean.size(); ++c) {
    per_chain.push_back(json{{"chain", c + 1},
                             {"mean", rep.chain_mean[c]},
                             {"sd", rep.chain_sd[c]},
                             {"acceptance_rate", rep.chain_accept[c]}});
  }
  j["per_chain"] = per_chain;
  j["pooled"] = json{{"mean", rep.pooled_mean},
                     {"sd", rep.pooled_sd},
                     {"acceptance_rate", rep.overall_accept}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

void write_acf_csv(const SummaryReport& rep, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "parameter,lag,acf\n";
  for (size_t k = 0; k < rep.acf.size(); ++k)
    for (size_t l = 0; l < rep.acf[k].size(); ++l)
      out << rep.param_names[k] << ',' << l << ','
          << format_double(rep.acf[k][l]) << '\n';
}

void write_manifest(const std::string& out_dir, const std::string& command,
                    const json& config, double wall_seconds,
                    const std::string& status, const std::string& error) {
  std::filesystem::create_directories(out_dir);
  json j;
  j["command"] = command;
  j["config"] = config;
  j["version"] = kVersion;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", wall_seconds);
  j["wall_clock_seconds"] = std::stod(buf);
  j["status"] = status;
  if (!error.empty()) j["error"] = error;
  std::ofstream out(out_dir + "/manifest.json");
  if (!out) throw std::runtime_error("cannot write manifest.json in " + out_dir);
  out << j.dump(2) << '\n';
}

}  // namespace netbayes
