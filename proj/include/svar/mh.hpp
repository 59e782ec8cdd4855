#ifndef SVAR_MH_HPP
#define SVAR_MH_HPP

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "svar/prior.hpp"
#include "svar/rng.hpp"

namespace svar {

struct MhChain {
  Eigen::MatrixXd draws;          // kept x d, on the sampled (unconstrained) scale
  Eigen::VectorXd log_posterior;  // kept
  double acceptance_rate = 0.0;
};

// Random-walk Metropolis with covariance adaptation: after a 100-iteration
// warm-up the proposal covariance is (2.38^2/d) * running sample covariance
// + 1e-8 I, updated recursively every iteration.
inline MhChain adaptive_rwmh_core(
    const std::function<double(const Eigen::VectorXd&)>& log_target,
    const Eigen::VectorXd& init, Eigen::Index total, Eigen::Index burn_in, Rng& rng) {
  const Eigen::Index d = init.size();
  if (d < 1) throw ConfigError("sampler dimension must be at least 1");
  if (burn_in < 1 || total <= burn_in)
    throw ConfigError("need total draws > burn_in >= 1");

  double lp = log_target(init);
  if (!std::isfinite(lp))
    throw NumericalError("log target is not finite at the initial point");

  constexpr Eigen::Index warmup = 100;
  const double jump = 2.38 * 2.38 / static_cast<double>(d);

  Eigen::VectorXd x = init;
  Eigen::VectorXd mean = init;
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(d, d);
  Eigen::MatrixXd prop_chol =
      (0.01 * Eigen::MatrixXd::Identity(d, d)).llt().matrixL();

  MhChain out;
  out.draws.resize(total - burn_in, d);
  out.log_posterior.resize(total - burn_in);
  Eigen::Index accepted = 0;

  for (Eigen::Index s = 0; s < total; ++s) {
    Eigen::VectorXd cand = x + prop_chol * rng.normal_vector(d);
    double lp_cand = log_target(cand);
    if (std::isfinite(lp_cand) && std::log(rng.uniform()) < lp_cand - lp) {
      x = cand;
      lp = lp_cand;
      ++accepted;
    }

    // recursive mean / covariance over all past states
    double n = static_cast<double>(s + 1);
    Eigen::VectorXd delta = x - mean;
    mean += delta / n;
    cov = ((n - 1.0) / n) * cov + ((n - 1.0) / (n * n)) * (delta * delta.transpose());
    if (s >= warmup) {
      Eigen::MatrixXd prop =
          jump * cov + 1e-8 * Eigen::MatrixXd::Identity(d, d);
      prop_chol = prop.llt().matrixL();
    }

    if (s >= burn_in) {
      out.draws.row(s - burn_in) = x.transpose();
      out.log_posterior(s - burn_in) = lp;
    }
  }
  out.acceptance_rate = static_cast<double>(accepted) / static_cast<double>(total);
  return out;
}

// Hyper-parameter draws on the positive scale.
struct HyperDraws {
  Eigen::MatrixXd draws;          // kept x d, columns follow `labels`
  std::vector<std::string> labels;
  Eigen::VectorXd log_posterior;
  double acceptance_rate = 0.0;

  MinnesotaHyper hyper_at(Eigen::Index row, const MinnesotaHyper& base) const {
    MinnesotaHyper h = base;
    for (Eigen::Index j = 0; j < draws.cols(); ++j) {
      const std::string& lab = labels[static_cast<std::size_t>(j)];
      double v = draws(row, j);
      if (lab == "mu") h.mu = v;
      else if (lab == "delta") h.delta = v;
      else if (lab == "lambda") h.lambda = v;
      else h.psi(std::stoi(lab.substr(3)) - 1) = v;  // "psiK"
    }
    return h;
  }
};

struct HyperFlags {
  bool mu = true, delta = true, lambda = true, psi = true;
};

// Metropolis over log-transformed hyper-parameters; the log-Jacobian
// (sum of the sampled logs) keeps the target on the positive scale.
inline HyperDraws sample_hyper(
    const std::function<double(const MinnesotaHyper&)>& log_posterior,
    const MinnesotaHyper& init, const HyperFlags& flags, Eigen::Index total,
    Eigen::Index burn_in, Rng& rng) {
  init.validate();
  const Eigen::Index N = init.psi.size();

  std::vector<std::string> labels;
  if (flags.mu) labels.push_back("mu");
  if (flags.delta) labels.push_back("delta");
  if (flags.lambda) labels.push_back("lambda");
  if (flags.psi)
    for (Eigen::Index i = 0; i < N; ++i)
      labels.push_back("psi" + std::to_string(i + 1));
  const Eigen::Index d = static_cast<Eigen::Index>(labels.size());
  if (d == 0) throw ConfigError("no hyper-parameter group selected for estimation");

  auto unpack = [&](const Eigen::VectorXd& theta) {
    MinnesotaHyper h = init;
    for (Eigen::Index j = 0; j < d; ++j) {
      const std::string& lab = labels[static_cast<std::size_t>(j)];
      double v = std::exp(theta(j));
      if (lab == "mu") h.mu = v;
      else if (lab == "delta") h.delta = v;
      else if (lab == "lambda") h.lambda = v;
      else h.psi(std::stoi(lab.substr(3)) - 1) = v;
    }
    return h;
  };

  Eigen::VectorXd theta0(d);
  {
    MinnesotaHyper h = init;
    for (Eigen::Index j = 0; j < d; ++j) {
      const std::string& lab = labels[static_cast<std::size_t>(j)];
      double v = lab == "mu" ? h.mu
               : lab == "delta" ? h.delta
               : lab == "lambda" ? h.lambda
                                 : h.psi(std::stoi(lab.substr(3)) - 1);
      theta0(j) = std::log(v);
    }
  }

  auto target = [&](const Eigen::VectorXd& theta) {
    if ((theta.array().abs() > 600.0).any())
      return -std::numeric_limits<double>::infinity();
    double jac = theta.sum();
    try {
      return log_posterior(unpack(theta)) + jac;
    } catch (const NumericalError&) {
      return -std::numeric_limits<double>::infinity();
    }
  };

  MhChain chain = adaptive_rwmh_core(target, theta0, total, burn_in, rng);

  HyperDraws out;
  out.labels = labels;
  out.draws = chain.draws.array().exp();
  out.log_posterior = chain.log_posterior;
  out.acceptance_rate = chain.acceptance_rate;
  return out;
}

}  // namespace svar

#endif
