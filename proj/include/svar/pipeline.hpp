#ifndef SVAR_PIPELINE_HPP
#define SVAR_PIPELINE_HPP

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "svar/analysis.hpp"
#include "svar/config.hpp"
#include "svar/identification.hpp"
#include "svar/marginal.hpp"
#include "svar/mh.hpp"
#include "svar/posterior.hpp"
#include "svar/prior.hpp"

namespace svar {

struct RunResult {
  std::uint64_t seed = 0;
  Eigen::Index draws_requested = 0;
  Eigen::Index draws_retained = 0;
  long proposed_rotations = 0;
  double acceptance_rate = 0.0;
  double ess = 0.0;
  double runtime_seconds = 0.0;
  Eigen::Index t_eff = 0, dummy_rows = 0, augmented_rows = 0;
  bool hyper_estimated = false;
  double hyper_acceptance_rate = 0.0;
  std::vector<std::string> files;
};

namespace detail {

inline std::ofstream open_output(const std::string& dir, const std::string& name,
                                 std::vector<std::string>& files) {
  std::string path = dir + "/" + name;
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write output file '" + path + "'");
  out << std::setprecision(17);
  files.push_back(path);
  return out;
}

// flat accumulator: one draw vector per summary cell
class SummaryGrid {
 public:
  SummaryGrid(std::size_t cells, std::size_t reserve) : acc_(cells) {
    for (auto& v : acc_) v.reserve(reserve);
  }
  void push(std::size_t cell, double v) { acc_[cell].push_back(v); }
  const std::vector<double>& at(std::size_t cell) const { return acc_[cell]; }

 private:
  std::vector<std::vector<double>> acc_;
};

}  // namespace detail

inline RunResult run(const RunConfig& cfg, std::ostream& progress = std::cerr) {
  auto t0 = std::chrono::steady_clock::now();
  RunResult res;
  res.seed = cfg.seed;
  res.draws_requested = cfg.S;

  TimeSeries ts = load_csv(cfg.data_path, cfg.start, cfg.frequency);
  const Eigen::Index N = ts.cols();
  if (!cfg.stationary.empty() &&
      static_cast<Eigen::Index>(cfg.stationary.size()) != N)
    throw ConfigError("config key 'model.stationary': expected " + std::to_string(N) +
                      " flags, got " + std::to_string(cfg.stationary.size()));
  if (!cfg.psi.empty() && static_cast<Eigen::Index>(cfg.psi.size()) != N)
    throw ConfigError("config key 'hyper.psi': expected " + std::to_string(N) +
                      " entries, got " + std::to_string(cfg.psi.size()));

  DesignMatrices design = build_design(ts, cfg.p);
  res.t_eff = design.t_eff();
  RestrictionSet restrictions = build_restrictions(cfg, ts);

  MinnesotaHyper base;
  base.mu = cfg.mu;
  base.delta = cfg.delta;
  base.lambda = cfg.lambda;
  if (cfg.psi.empty()) {
    base.psi = default_psi(ts, cfg.p);
  } else {
    base.psi = Eigen::Map<const Eigen::VectorXd>(
        cfg.psi.data(), static_cast<Eigen::Index>(cfg.psi.size()));
  }
  base.validate();

  {
    DummyObs d = dummy_obs(base, ts, cfg.p, cfg.soc, cfg.sur);
    res.dummy_rows = d.rows();
    res.augmented_rows = res.t_eff + res.dummy_rows;
  }

  std::filesystem::create_directories(cfg.out_dir);
  RngFactory rngs(cfg.seed);

  // hyper-parameter estimation (optional)
  HyperDraws hyper_draws;
  const bool estimate_any = cfg.estimate.mu || cfg.estimate.delta ||
                            cfg.estimate.lambda || cfg.estimate.psi;
  HyperPrior hp = cfg.hyper_prior;
  hp.estimate_mu = cfg.estimate.mu;
  hp.estimate_delta = cfg.estimate.delta;
  hp.estimate_lambda = cfg.estimate.lambda;
  hp.estimate_psi = cfg.estimate.psi;
  if (estimate_any) {
    progress << "estimating hyper-parameters (" << cfg.hyper_S << " draws, "
             << cfg.hyper_burn_in << " burn-in)\n";
    auto log_post = [&](const MinnesotaHyper& h) {
      NIWPrior prior = minnesota_niw(h, cfg.p, N, cfg.stationary);
      DummyObs d = dummy_obs(h, ts, cfg.p, cfg.soc, cfg.sur);
      return log_marginal_likelihood(prior, design, d) + log_hyperprior(h, hp);
    };
    Rng hrng = rngs.stream(rng_domain::hyper, 0);
    hyper_draws = sample_hyper(log_post, base, cfg.estimate, cfg.hyper_S,
                               cfg.hyper_burn_in, hrng);
    res.hyper_estimated = true;
    res.hyper_acceptance_rate = hyper_draws.acceptance_rate;

    std::ofstream trace = detail::open_output(cfg.out_dir, "hyper_trace.csv", res.files);
    for (std::size_t j = 0; j < hyper_draws.labels.size(); ++j)
      trace << hyper_draws.labels[j] << ",";
    trace << "log_posterior\n";
    for (Eigen::Index r = 0; r < hyper_draws.draws.rows(); ++r) {
      for (Eigen::Index j = 0; j < hyper_draws.draws.cols(); ++j)
        trace << hyper_draws.draws(r, j) << ",";
      trace << hyper_draws.log_posterior(r) << "\n";
    }
  }

  // reduced-form posterior sampling
  progress << "sampling " << cfg.S << " posterior draws\n";
  std::vector<ReducedFormDraw> rf;
  if (!estimate_any) {
    NIWPrior prior = minnesota_niw(base, cfg.p, N, cfg.stationary);
    DummyObs d = dummy_obs(base, ts, cfg.p, cfg.soc, cfg.sur);
    NIWPosterior post = niw_update(prior, design, d);
    rf = sample_niw(post, cfg.S, rngs, cfg.threads);
  } else {
    // draw s pairs with hyper-draw ceil((s+1) Sh / S): uniform thinning of
    // the hyper chain across the posterior sample
    const Eigen::Index Sh = hyper_draws.draws.rows();
    std::vector<Eigen::Index> pick(static_cast<std::size_t>(cfg.S));
    for (Eigen::Index s = 0; s < cfg.S; ++s)
      pick[static_cast<std::size_t>(s)] =
          ((s + 1) * Sh + cfg.S - 1) / cfg.S - 1;  // ceil((s+1) Sh / S) - 1
    std::unordered_map<Eigen::Index, std::shared_ptr<const NIWPosterior>> cache;
    for (Eigen::Index idx : pick)
      if (!cache.count(idx)) {
        MinnesotaHyper h = hyper_draws.hyper_at(idx, base);
        NIWPrior prior = minnesota_niw(h, cfg.p, N, cfg.stationary);
        DummyObs d = dummy_obs(h, ts, cfg.p, cfg.soc, cfg.sur);
        cache[idx] = std::make_shared<const NIWPosterior>(niw_update(prior, design, d));
      }
    rf.resize(static_cast<std::size_t>(cfg.S));
    for (Eigen::Index s = 0; s < cfg.S; ++s) {
      rf[static_cast<std::size_t>(s)] = sample_niw_one(
          *cache[pick[static_cast<std::size_t>(s)]],
          rngs.stream(rng_domain::posterior, static_cast<std::uint64_t>(s)));
      if ((s + 1) % 1000 == 0) progress << "  draw " << (s + 1) << "/" << cfg.S << "\n";
    }
  }

  // identification
  progress << "identifying structural draws\n";
  IdentifyOptions opts;
  opts.max_tries = cfg.max_tries;
  opts.narrative_M = cfg.narrative_M;
  opts.threads = cfg.threads;
  WeightedStructuralSample sample = identify(rf, design, restrictions, rngs, opts);
  res.draws_retained = static_cast<Eigen::Index>(sample.draws.size());
  res.proposed_rotations = sample.proposed_rotations;
  res.acceptance_rate =
      static_cast<double>(res.draws_retained) /
      static_cast<double>(std::max<long>(1, sample.proposed_rotations));
  res.ess = sample.ess;

  {
    std::ofstream w = detail::open_output(cfg.out_dir, "weights.csv", res.files);
    w << "draw,weight\n";
    for (std::size_t i = 0; i < sample.draws.size(); ++i)
      w << (i + 1) << "," << sample.draws[i].weight << "\n";
  }

  // importance resampling; outputs are computed on the resampled draws
  Rng rs_rng = rngs.stream(rng_domain::resample, 0);
  WeightedStructuralSample final_sample =
      resample(sample, res.draws_retained, rs_rng);
  const std::size_t S_out = final_sample.draws.size();

  // output accumulators and optional draw-level files
  using detail::SummaryGrid;
  const Eigen::Index Hirf = cfg.irf_horizon, Hfevd = cfg.fevd_horizon;
  const Eigen::Index Te = design.t_eff();
  std::unique_ptr<SummaryGrid> irf_acc, fevd_acc, shock_acc, hd_acc, fit_acc,
      fore_acc, cfore_acc;
  std::ofstream irf_draws, fevd_draws, shock_draws, hd_draws, fit_draws, fore_draws,
      cfore_draws;
  if (Hirf > 0 || restrictions.any_sign() || restrictions.any_zero()) {
    irf_acc = std::make_unique<SummaryGrid>(
        static_cast<std::size_t>(N * N * (Hirf + 1)), S_out);
    if (cfg.save_draws) {
      irf_draws = detail::open_output(cfg.out_dir, "irf.csv", res.files);
      irf_draws << "draw,variable,shock,horizon,value\n";
    }
  }
  if (Hfevd > 0) {
    fevd_acc = std::make_unique<SummaryGrid>(
        static_cast<std::size_t>(N * N * (Hfevd + 1)), S_out);
    if (cfg.save_draws) {
      fevd_draws = detail::open_output(cfg.out_dir, "fevd.csv", res.files);
      fevd_draws << "draw,variable,shock,horizon,value\n";
    }
  }
  if (cfg.shocks) {
    shock_acc = std::make_unique<SummaryGrid>(static_cast<std::size_t>(N * Te), S_out);
    if (cfg.save_draws) {
      shock_draws = detail::open_output(cfg.out_dir, "shocks.csv", res.files);
      shock_draws << "draw,shock,period,value\n";
    }
  }
  if (cfg.hd) {
    hd_acc = std::make_unique<SummaryGrid>(static_cast<std::size_t>(N * N * Te), S_out);
    if (cfg.save_draws) {
      hd_draws = detail::open_output(cfg.out_dir, "hd.csv", res.files);
      hd_draws << "draw,variable,shock,period,value\n";
    }
  }
  if (cfg.fitted) {
    fit_acc = std::make_unique<SummaryGrid>(static_cast<std::size_t>(N * Te), S_out);
    if (cfg.save_draws) {
      fit_draws = detail::open_output(cfg.out_dir, "fitted.csv", res.files);
      fit_draws << "draw,variable,period,value\n";
    }
  }
  if (cfg.forecast_horizon > 0) {
    fore_acc = std::make_unique<SummaryGrid>(
        static_cast<std::size_t>(N * cfg.forecast_horizon), S_out);
    if (cfg.save_draws) {
      fore_draws = detail::open_output(cfg.out_dir, "forecast.csv", res.files);
      fore_draws << "draw,variable,horizon,value\n";
    }
  }
  std::vector<ForecastCondition> conds;
  if (cfg.cond_forecast_horizon > 0) {
    for (const auto& c : cfg.conditions) conds.push_back({c.variable, c.horizon, c.value});
    cfore_acc = std::make_unique<SummaryGrid>(
        static_cast<std::size_t>(N * cfg.cond_forecast_horizon), S_out);
    if (cfg.save_draws) {
      cfore_draws =
          detail::open_output(cfg.out_dir, "conditional_forecast.csv", res.files);
      cfore_draws << "draw,variable,horizon,value\n";
    }
  }

  progress << "computing outputs over " << S_out << " retained draws\n";
  for (std::size_t s = 0; s < S_out; ++s) {
    const StructuralDraw& d = final_sample.draws[s];
    if (irf_acc) {
      auto irf = impulse_responses(d, cfg.p, Hirf);
      for (Eigen::Index h = 0; h <= Hirf; ++h)
        for (Eigen::Index i = 0; i < N; ++i)
          for (Eigen::Index j = 0; j < N; ++j) {
            double v = irf[static_cast<std::size_t>(h)](i, j);
            irf_acc->push(static_cast<std::size_t>((h * N + i) * N + j), v);
            if (cfg.save_draws)
              irf_draws << (s + 1) << "," << (i + 1) << "," << (j + 1) << "," << h
                        << "," << v << "\n";
          }
    }
    if (fevd_acc) {
      auto shares = variance_decomposition(impulse_responses(d, cfg.p, Hfevd));
      for (Eigen::Index h = 0; h <= Hfevd; ++h)
        for (Eigen::Index i = 0; i < N; ++i)
          for (Eigen::Index j = 0; j < N; ++j) {
            double v = shares[static_cast<std::size_t>(h)](i, j);
            fevd_acc->push(static_cast<std::size_t>((h * N + i) * N + j), v);
            if (cfg.save_draws)
              fevd_draws << (s + 1) << "," << (i + 1) << "," << (j + 1) << "," << h
                         << "," << v << "\n";
          }
    }
    if (shock_acc || hd_acc) {
      Eigen::MatrixXd eps = structural_shocks(d, design);
      if (shock_acc)
        for (Eigen::Index t = 0; t < Te; ++t)
          for (Eigen::Index j = 0; j < N; ++j) {
            shock_acc->push(static_cast<std::size_t>(t * N + j), eps(t, j));
            if (cfg.save_draws)
              shock_draws << (s + 1) << "," << (j + 1) << "," << (t + 1) << ","
                          << eps(t, j) << "\n";
          }
      if (hd_acc) {
        HistoricalDecomposition hd = historical_decomposition(d, eps, design);
        for (Eigen::Index t = 0; t < Te; ++t)
          for (Eigen::Index i = 0; i < N; ++i)
            for (Eigen::Index j = 0; j < N; ++j) {
              double v = hd.contributions[static_cast<std::size_t>(t)](i, j);
              hd_acc->push(static_cast<std::size_t>((t * N + i) * N + j), v);
              if (cfg.save_draws)
                hd_draws << (s + 1) << "," << (i + 1) << "," << (j + 1) << ","
                         << (t + 1) << "," << v << "\n";
            }
      }
    }
    if (fit_acc) {
      Rng frng = rngs.stream(rng_domain::fitted, static_cast<std::uint64_t>(s));
      Eigen::MatrixXd fit = fitted_values(d, design, frng);
      for (Eigen::Index t = 0; t < Te; ++t)
        for (Eigen::Index i = 0; i < N; ++i) {
          fit_acc->push(static_cast<std::size_t>(t * N + i), fit(t, i));
          if (cfg.save_draws)
            fit_draws << (s + 1) << "," << (i + 1) << "," << (t + 1) << ","
                      << fit(t, i) << "\n";
        }
    }
    ReducedFormDraw rd{d.A, d.Sigma};
    if (fore_acc) {
      Rng frng = rngs.stream(rng_domain::forecast, static_cast<std::uint64_t>(s));
      Eigen::MatrixXd path = forecast_path(rd, design, cfg.forecast_horizon, frng);
      for (Eigen::Index h = 0; h < cfg.forecast_horizon; ++h)
        for (Eigen::Index i = 0; i < N; ++i) {
          fore_acc->push(static_cast<std::size_t>(h * N + i), path(h, i));
          if (cfg.save_draws)
            fore_draws << (s + 1) << "," << (i + 1) << "," << (h + 1) << ","
                       << path(h, i) << "\n";
        }
    }
    if (cfore_acc) {
      Rng frng = rngs.stream(rng_domain::forecast,
                             0x8000000000000000ULL + static_cast<std::uint64_t>(s));
      Eigen::MatrixXd path =
          conditional_forecast_path(rd, design, cfg.cond_forecast_horizon, conds, frng);
      for (Eigen::Index h = 0; h < cfg.cond_forecast_horizon; ++h)
        for (Eigen::Index i = 0; i < N; ++i) {
          cfore_acc->push(static_cast<std::size_t>(h * N + i), path(h, i));
          if (cfg.save_draws)
            cfore_draws << (s + 1) << "," << (i + 1) << "," << (h + 1) << ","
                        << path(h, i) << "\n";
        }
    }
    if ((s + 1) % 1000 == 0)
      progress << "  draw " << (s + 1) << "/" << S_out << "\n";
  }

  auto write_summary = [&](const SummaryGrid& grid, const std::string& name,
                           const std::string& header, auto cell_prefix,
                           std::size_t cells) {
    std::ofstream out = detail::open_output(cfg.out_dir, name, res.files);
    out << header << ",mean,sd,lower,upper\n";
    for (std::size_t c = 0; c < cells; ++c) {
      Summary s = summarize(grid.at(c), cfg.probability);
      cell_prefix(out, c);
      out << s.mean << "," << s.sd << "," << s.lower << "," << s.upper << "\n";
    }
  };

  if (irf_acc)
    write_summary(*irf_acc, "irf_summary.csv", "variable,shock,horizon",
                  [&](std::ofstream& out, std::size_t c) {
                    auto h = c / static_cast<std::size_t>(N * N);
                    auto i = (c / static_cast<std::size_t>(N)) % static_cast<std::size_t>(N);
                    auto j = c % static_cast<std::size_t>(N);
                    out << (i + 1) << "," << (j + 1) << "," << h << ",";
                  },
                  static_cast<std::size_t>(N * N * (Hirf + 1)));
  if (fevd_acc)
    write_summary(*fevd_acc, "fevd_summary.csv", "variable,shock,horizon",
                  [&](std::ofstream& out, std::size_t c) {
                    auto h = c / static_cast<std::size_t>(N * N);
                    auto i = (c / static_cast<std::size_t>(N)) % static_cast<std::size_t>(N);
                    auto j = c % static_cast<std::size_t>(N);
                    out << (i + 1) << "," << (j + 1) << "," << h << ",";
                  },
                  static_cast<std::size_t>(N * N * (Hfevd + 1)));
  if (shock_acc)
    write_summary(*shock_acc, "shocks_summary.csv", "shock,period",
                  [&](std::ofstream& out, std::size_t c) {
                    out << (c % static_cast<std::size_t>(N) + 1) << ","
                        << (c / static_cast<std::size_t>(N) + 1) << ",";
                  },
                  static_cast<std::size_t>(N * Te));
  if (hd_acc)
    write_summary(*hd_acc, "hd_summary.csv", "variable,shock,period",
                  [&](std::ofstream& out, std::size_t c) {
                    auto t = c / static_cast<std::size_t>(N * N);
                    auto i = (c / static_cast<std::size_t>(N)) % static_cast<std::size_t>(N);
                    auto j = c % static_cast<std::size_t>(N);
                    out << (i + 1) << "," << (j + 1) << "," << (t + 1) << ",";
                  },
                  static_cast<std::size_t>(N * N * Te));
  if (fit_acc)
    write_summary(*fit_acc, "fitted_summary.csv", "variable,period",
                  [&](std::ofstream& out, std::size_t c) {
                    out << (c % static_cast<std::size_t>(N) + 1) << ","
                        << (c / static_cast<std::size_t>(N) + 1) << ",";
                  },
                  static_cast<std::size_t>(N * Te));
  if (fore_acc)
    write_summary(*fore_acc, "forecast_summary.csv", "variable,horizon",
                  [&](std::ofstream& out, std::size_t c) {
                    out << (c % static_cast<std::size_t>(N) + 1) << ","
                        << (c / static_cast<std::size_t>(N) + 1) << ",";
                  },
                  static_cast<std::size_t>(N * cfg.forecast_horizon));
  if (cfore_acc)
    write_summary(*cfore_acc, "conditional_forecast_summary.csv", "variable,horizon",
                  [&](std::ofstream& out, std::size_t c) {
                    out << (c % static_cast<std::size_t>(N) + 1) << ","
                        << (c / static_cast<std::size_t>(N) + 1) << ",";
                  },
                  static_cast<std::size_t>(N * cfg.cond_forecast_horizon));

  res.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  nlohmann::json manifest;
  manifest["seed"] = res.seed;
  manifest["draws_requested"] = res.draws_requested;
  manifest["draws_retained"] = res.draws_retained;
  manifest["proposed_rotations"] = res.proposed_rotations;
  manifest["acceptance_rate"] = res.acceptance_rate;
  manifest["ess"] = res.ess;
  manifest["runtime_seconds"] = res.runtime_seconds;
  manifest["module_versions"] = {
      {"core_data", "1.0.0"},  {"priors", "1.0.0"},        {"hyper_sampler", "1.0.0"},
      {"posterior_sampler", "1.0.0"}, {"identification", "1.0.0"},
      {"analysis", "1.0.0"},   {"cli", "1.0.0"}};
  manifest["dimensions"] = {{"t_eff", res.t_eff},
                            {"dummy_rows", res.dummy_rows},
                            {"augmented_rows", res.augmented_rows}};
  if (res.hyper_estimated) {
    manifest["hyper"] = {{"estimated", true},
                         {"acceptance_rate", res.hyper_acceptance_rate},
                         {"draws", cfg.hyper_S - cfg.hyper_burn_in}};
  }
  {
    std::string path = cfg.out_dir + "/manifest.json";
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write output file '" + path + "'");
    out << manifest.dump(2) << "\n";
    res.files.push_back(path);
  }
  progress << "done in " << res.runtime_seconds << " s, ess " << res.ess << "\n";
  return res;
}

// Parse + full validation against the data, without sampling.
inline void validate_run(const RunConfig& cfg, std::ostream& out = std::cout) {
  TimeSeries ts = load_csv(cfg.data_path, cfg.start, cfg.frequency);
  const Eigen::Index N = ts.cols();
  if (!cfg.stationary.empty() &&
      static_cast<Eigen::Index>(cfg.stationary.size()) != N)
    throw ConfigError("config key 'model.stationary': expected " + std::to_string(N) +
                      " flags, got " + std::to_string(cfg.stationary.size()));
  if (!cfg.psi.empty() && static_cast<Eigen::Index>(cfg.psi.size()) != N)
    throw ConfigError("config key 'hyper.psi': expected " + std::to_string(N) +
                      " entries, got " + std::to_string(cfg.psi.size()));
  DesignMatrices design = build_design(ts, cfg.p);
  build_restrictions(cfg, ts);
  MinnesotaHyper base;
  base.mu = cfg.mu;
  base.delta = cfg.delta;
  base.lambda = cfg.lambda;
  base.psi = cfg.psi.empty()
                 ? default_psi(ts, cfg.p)
                 : Eigen::Map<const Eigen::VectorXd>(
                       cfg.psi.data(), static_cast<Eigen::Index>(cfg.psi.size()));
  base.validate();
  cfg.hyper_prior.validate();
  out << "config OK: N=" << N << ", T=" << ts.rows() << ", p=" << cfg.p
      << ", T_eff=" << design.t_eff() << ", K=" << design.n_regressors()
      << ", draws=" << cfg.S << "\n";
}

}  // namespace svar

#endif
