#ifndef SVAR_CONFIG_HPP
#define SVAR_CONFIG_HPP

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "svar/mh.hpp"
#include "svar/prior.hpp"
#include "svar/restrictions.hpp"
#include "svar/time_series.hpp"

namespace svar {

// Sparse restriction entries as written in the config; indices are validated
// against the data dimensions when the restriction set is assembled.
struct SignIrfEntry {
  int variable = 0, shock = 0, horizon = 0, code = kUnset;
};
struct SignBEntry {
  int variable = 0, shock = 0, code = kUnset;
};

struct NarrativeEntry {
  std::string kind = "shock-sign";
  int sign = -1;
  int shock = 1;
  int variable = 1;
  std::string start_label;  // period label, used when start_row == 0
  int start_row = 0;        // 1-based row of the raw data
  int length = 1;
};

struct ConditionEntry {
  int variable = 1, horizon = 1;
  double value = 0.0;
};

struct RunConfig {
  // data
  std::string data_path;
  Period start{1, 0};
  int frequency = 1;

  // model
  int p = 1;
  std::vector<bool> stationary;  // empty = all non-stationary

  // restrictions
  std::vector<SignIrfEntry> sign_irf;
  std::vector<SignBEntry> sign_B;
  std::vector<NarrativeEntry> narrative;

  // hyper-parameters
  double mu = 1.0, delta = 1.0, lambda = 0.2;
  std::vector<double> psi;  // empty = AR(p) residual-variance default
  bool soc = true, sur = true;
  HyperPrior hyper_prior;
  HyperFlags estimate{false, false, false, false};
  Eigen::Index hyper_S = 15000, hyper_burn_in = 5000;

  // sampler
  Eigen::Index S = 1000;
  int max_tries = 100;
  Eigen::Index narrative_M = 1000;
  std::uint64_t seed = 1;
  int threads = 1;

  // outputs
  std::string out_dir = ".";
  double probability = 0.68;
  int irf_horizon = 0;         // 0 = not requested
  int fevd_horizon = 0;
  bool hd = false;
  bool shocks = false;
  bool fitted = false;
  int forecast_horizon = 0;
  int cond_forecast_horizon = 0;
  std::vector<ConditionEntry> conditions;
  bool save_draws = false;
};

namespace detail {

using json = nlohmann::json;

[[noreturn]] inline void config_fail(const std::string& key, const std::string& what) {
  throw ConfigError("config key '" + key + "': " + what);
}

inline const json* find(const json& j, const std::string& key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

template <typename T>
T get_as(const json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    config_fail(key, "has the wrong type");
  }
}

template <typename T>
void read(const json& j, const std::string& section, const std::string& key, T& out) {
  if (const json* v = find(j, key)) out = get_as<T>(*v, section + "." + key);
}

inline void check_keys(const json& j, const std::string& section,
                       std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok) config_fail(section.empty() ? it.key() : section + "." + it.key(),
                         "is not a recognized setting");
  }
}

}  // namespace detail

inline RunConfig parse_run_config(const nlohmann::json& j) {
  using detail::config_fail;
  using detail::find;
  using detail::get_as;
  using detail::read;
  using nlohmann::json;

  RunConfig cfg;
  detail::check_keys(j, "", {"data", "model", "restrictions", "hyper", "sampler",
                             "outputs"});

  const json* data = find(j, "data");
  if (!data) config_fail("data", "is required");
  detail::check_keys(*data, "data", {"path", "start", "frequency"});
  if (!find(*data, "path")) config_fail("data.path", "is required");
  cfg.data_path = get_as<std::string>(*find(*data, "path"), "data.path");
  read(*data, "data", "frequency", cfg.frequency);
  if (cfg.frequency < 1) config_fail("data.frequency", "must be positive");
  if (const json* s = find(*data, "start"))
    cfg.start = parse_period(get_as<std::string>(*s, "data.start"), cfg.frequency);

  if (const json* model = find(j, "model")) {
    detail::check_keys(*model, "model", {"p", "stationary"});
    read(*model, "model", "p", cfg.p);
    if (cfg.p < 1) config_fail("model.p", "must be at least 1");
    if (const json* st = find(*model, "stationary"))
      cfg.stationary = get_as<std::vector<bool>>(*st, "model.stationary");
  }

  if (const json* r = find(j, "restrictions")) {
    detail::check_keys(*r, "restrictions", {"sign_irf", "sign_B", "narrative"});
    if (const json* si = find(*r, "sign_irf")) {
      if (!si->is_array()) config_fail("restrictions.sign_irf", "must be an array");
      for (std::size_t i = 0; i < si->size(); ++i) {
        std::string key = "restrictions.sign_irf[" + std::to_string(i + 1) + "]";
        auto row = get_as<std::vector<json>>((*si)[i], key);
        if (row.size() != 4)
          config_fail(key, "must be [variable, shock, horizon, code]");
        SignIrfEntry e;
        e.variable = get_as<int>(row[0], key);
        e.shock = get_as<int>(row[1], key);
        e.horizon = get_as<int>(row[2], key);
        e.code = get_as<int>(row[3], key);
        if (e.code != -1 && e.code != 0 && e.code != 1)
          config_fail(key, "code must be -1, 0 or 1, got " + std::to_string(e.code));
        cfg.sign_irf.push_back(e);
      }
    }
    if (const json* sb = find(*r, "sign_B")) {
      if (!sb->is_array()) config_fail("restrictions.sign_B", "must be an array");
      for (std::size_t i = 0; i < sb->size(); ++i) {
        std::string key = "restrictions.sign_B[" + std::to_string(i + 1) + "]";
        auto row = get_as<std::vector<json>>((*sb)[i], key);
        if (row.size() != 3) config_fail(key, "must be [variable, shock, code]");
        SignBEntry e;
        e.variable = get_as<int>(row[0], key);
        e.shock = get_as<int>(row[1], key);
        e.code = get_as<int>(row[2], key);
        if (e.code != -1 && e.code != 1)
          config_fail(key, "code must be -1 or 1, got " + std::to_string(e.code));
        cfg.sign_B.push_back(e);
      }
    }
    if (const json* na = find(*r, "narrative")) {
      if (!na->is_array()) config_fail("restrictions.narrative", "must be an array");
      for (std::size_t i = 0; i < na->size(); ++i) {
        std::string key = "restrictions.narrative[" + std::to_string(i + 1) + "]";
        const json& entry = (*na)[i];
        detail::check_keys(entry, key,
                           {"kind", "sign", "shock", "variable", "start", "length"});
        NarrativeEntry e;
        read(entry, key, "kind", e.kind);
        if (e.kind != "shock-sign" && e.kind != "hd-most-important" &&
            e.kind != "hd-least-important" && e.kind != "hd-overwhelming" &&
            e.kind != "hd-negligible")
          config_fail(key + ".kind", "unknown narrative kind '" + e.kind + "'");
        read(entry, key, "sign", e.sign);
        read(entry, key, "shock", e.shock);
        read(entry, key, "variable", e.variable);
        read(entry, key, "length", e.length);
        const json* st = find(entry, "start");
        if (!st) config_fail(key + ".start", "is required");
        if (st->is_string()) e.start_label = st->get<std::string>();
        else e.start_row = get_as<int>(*st, key + ".start");
        cfg.narrative.push_back(e);
      }
    }
  }

  if (const json* h = find(j, "hyper")) {
    detail::check_keys(*h, "hyper",
                       {"mu", "delta", "lambda", "psi", "soc", "sur", "estimate",
                        "S", "burn_in", "prior"});
    read(*h, "hyper", "mu", cfg.mu);
    read(*h, "hyper", "delta", cfg.delta);
    read(*h, "hyper", "lambda", cfg.lambda);
    if (const json* psi = find(*h, "psi"))
      cfg.psi = get_as<std::vector<double>>(*psi, "hyper.psi");
    read(*h, "hyper", "soc", cfg.soc);
    read(*h, "hyper", "sur", cfg.sur);
    if (const json* est = find(*h, "estimate")) {
      detail::check_keys(*est, "hyper.estimate", {"mu", "delta", "lambda", "psi"});
      read(*est, "hyper.estimate", "mu", cfg.estimate.mu);
      read(*est, "hyper.estimate", "delta", cfg.estimate.delta);
      read(*est, "hyper.estimate", "lambda", cfg.estimate.lambda);
      read(*est, "hyper.estimate", "psi", cfg.estimate.psi);
    }
    long hyper_S = cfg.hyper_S, hyper_burn = cfg.hyper_burn_in;
    read(*h, "hyper", "S", hyper_S);
    read(*h, "hyper", "burn_in", hyper_burn);
    cfg.hyper_S = hyper_S;
    cfg.hyper_burn_in = hyper_burn;
    if (const json* hp = find(*h, "prior")) {
      detail::check_keys(*hp, "hyper.prior",
                         {"mu_shape", "mu_scale", "delta_shape", "delta_scale",
                          "lambda_shape", "lambda_scale", "psi_shape", "psi_scale"});
      read(*hp, "hyper.prior", "mu_shape", cfg.hyper_prior.mu_shape);
      read(*hp, "hyper.prior", "mu_scale", cfg.hyper_prior.mu_scale);
      read(*hp, "hyper.prior", "delta_shape", cfg.hyper_prior.delta_shape);
      read(*hp, "hyper.prior", "delta_scale", cfg.hyper_prior.delta_scale);
      read(*hp, "hyper.prior", "lambda_shape", cfg.hyper_prior.lambda_shape);
      read(*hp, "hyper.prior", "lambda_scale", cfg.hyper_prior.lambda_scale);
      read(*hp, "hyper.prior", "psi_shape", cfg.hyper_prior.psi_shape);
      read(*hp, "hyper.prior", "psi_scale", cfg.hyper_prior.psi_scale);
    }
    if (!(cfg.mu > 0)) config_fail("hyper.mu", "must be positive");
    if (!(cfg.delta > 0)) config_fail("hyper.delta", "must be positive");
    if (!(cfg.lambda > 0)) config_fail("hyper.lambda", "must be positive");
    for (double v : cfg.psi)
      if (!(v > 0)) config_fail("hyper.psi", "entries must be positive");
    bool any = cfg.estimate.mu || cfg.estimate.delta || cfg.estimate.lambda ||
               cfg.estimate.psi;
    if (any && !(cfg.hyper_S > cfg.hyper_burn_in && cfg.hyper_burn_in >= 1))
      config_fail("hyper.S", "need S > burn_in >= 1 for hyper estimation");
  }

  if (const json* s = find(j, "sampler")) {
    detail::check_keys(*s, "sampler", {"S", "max_tries", "M", "seed", "threads"});
    long S = cfg.S, M = cfg.narrative_M;
    read(*s, "sampler", "S", S);
    read(*s, "sampler", "M", M);
    cfg.S = S;
    cfg.narrative_M = M;
    read(*s, "sampler", "max_tries", cfg.max_tries);
    std::uint64_t seed = cfg.seed;
    read(*s, "sampler", "seed", seed);
    cfg.seed = seed;
    read(*s, "sampler", "threads", cfg.threads);
    if (cfg.S < 1) config_fail("sampler.S", "must be at least 1");
    if (cfg.max_tries < 1) config_fail("sampler.max_tries", "must be at least 1");
    if (cfg.narrative_M < 1) config_fail("sampler.M", "must be at least 1");
    if (cfg.threads < 1) config_fail("sampler.threads", "must be at least 1");
  }

  if (const json* o = find(j, "outputs")) {
    detail::check_keys(*o, "outputs",
                       {"directory", "probability", "irf_horizon", "fevd_horizon",
                        "hd", "shocks", "fitted", "forecast_horizon",
                        "conditional_forecast", "save_draws"});
    read(*o, "outputs", "directory", cfg.out_dir);
    read(*o, "outputs", "probability", cfg.probability);
    if (!(cfg.probability > 0.0 && cfg.probability < 1.0))
      config_fail("outputs.probability", "must lie strictly between 0 and 1");
    read(*o, "outputs", "irf_horizon", cfg.irf_horizon);
    read(*o, "outputs", "fevd_horizon", cfg.fevd_horizon);
    read(*o, "outputs", "hd", cfg.hd);
    read(*o, "outputs", "shocks", cfg.shocks);
    read(*o, "outputs", "fitted", cfg.fitted);
    read(*o, "outputs", "forecast_horizon", cfg.forecast_horizon);
    read(*o, "outputs", "save_draws", cfg.save_draws);
    for (const char* k : {"irf_horizon", "fevd_horizon", "forecast_horizon"}) {
      int v = std::string(k) == "irf_horizon" ? cfg.irf_horizon
            : std::string(k) == "fevd_horizon" ? cfg.fevd_horizon
                                               : cfg.forecast_horizon;
      if (v < 0) config_fail(std::string("outputs.") + k, "must be non-negative");
    }
    if (const json* cf = find(*o, "conditional_forecast")) {
      detail::check_keys(*cf, "outputs.conditional_forecast",
                         {"horizon", "conditions"});
      read(*cf, "outputs.conditional_forecast", "horizon", cfg.cond_forecast_horizon);
      if (cfg.cond_forecast_horizon < 1)
        config_fail("outputs.conditional_forecast.horizon", "must be at least 1");
      if (const json* cs = find(*cf, "conditions")) {
        if (!cs->is_array())
          config_fail("outputs.conditional_forecast.conditions", "must be an array");
        for (std::size_t i = 0; i < cs->size(); ++i) {
          std::string key = "outputs.conditional_forecast.conditions[" +
                            std::to_string(i + 1) + "]";
          auto row = get_as<std::vector<json>>((*cs)[i], key);
          if (row.size() != 3) config_fail(key, "must be [variable, horizon, value]");
          ConditionEntry e;
          e.variable = get_as<int>(row[0], key);
          e.horizon = get_as<int>(row[1], key);
          e.value = get_as<double>(row[2], key);
          cfg.conditions.push_back(e);
        }
      }
    }
  }
  return cfg;
}

inline RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");
  return parse_run_config(j);
}

// Assemble the restriction set once the data dimensions are known.
inline RestrictionSet build_restrictions(const RunConfig& cfg, const TimeSeries& ts) {
  const Eigen::Index N = ts.cols();
  RestrictionSet r(N);
  for (std::size_t i = 0; i < cfg.sign_irf.size(); ++i) {
    const auto& e = cfg.sign_irf[i];
    try {
      r.set_irf(e.variable, e.shock, e.horizon, e.code);
    } catch (const ConfigError& err) {
      throw ConfigError("config key 'restrictions.sign_irf[" + std::to_string(i + 1) +
                        "]': " + err.what());
    }
  }
  for (std::size_t i = 0; i < cfg.sign_B.size(); ++i) {
    const auto& e = cfg.sign_B[i];
    try {
      r.set_B(e.variable, e.shock, e.code);
    } catch (const ConfigError& err) {
      throw ConfigError("config key 'restrictions.sign_B[" + std::to_string(i + 1) +
                        "]': " + err.what());
    }
  }
  for (std::size_t i = 0; i < cfg.narrative.size(); ++i) {
    const auto& e = cfg.narrative[i];
    std::string key = "restrictions.narrative[" + std::to_string(i + 1) + "]";
    NarrativeRestriction nr;
    if (e.kind == "shock-sign") nr.kind = NarrativeKind::shock_sign;
    else if (e.kind == "hd-most-important") nr.kind = NarrativeKind::hd_most_important;
    else if (e.kind == "hd-least-important") nr.kind = NarrativeKind::hd_least_important;
    else if (e.kind == "hd-overwhelming") nr.kind = NarrativeKind::hd_overwhelming;
    else nr.kind = NarrativeKind::hd_negligible;
    nr.sign = e.sign;
    nr.shock = e.shock;
    nr.variable = e.variable;
    nr.length = e.length;
    Eigen::Index row;
    if (!e.start_label.empty()) {
      try {
        row = ts.period_index(e.start_label);
      } catch (const ConfigError& err) {
        throw ConfigError("config key '" + key + ".start': " + err.what());
      }
    } else {
      row = e.start_row;
    }
    long eff = static_cast<long>(row) - cfg.p;
    if (eff < 1)
      throw ConfigError("config key '" + key + ".start': period " +
                        std::to_string(row) +
                        " lies before the effective sample (first usable row is " +
                        std::to_string(cfg.p + 1) + ")");
    nr.start = static_cast<int>(eff);
    try {
      nr.validate(N, ts.rows() - cfg.p);
    } catch (const ConfigError& err) {
      throw ConfigError("config key '" + key + "': " + err.what());
    }
    r.add_narrative(nr);
  }
  try {
    r.validate(ts.rows() - cfg.p);
  } catch (const ConfigError& err) {
    throw ConfigError("config key 'restrictions': " + std::string(err.what()));
  }
  return r;
}

}  // namespace svar

#endif
