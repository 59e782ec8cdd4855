#ifndef SVAR_PRIOR_HPP
#define SVAR_PRIOR_HPP

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "svar/time_series.hpp"

namespace svar {

// Hyper-parameters of the hierarchical Minnesota prior.
struct MinnesotaHyper {
  double mu = 1.0;      // sum-of-coefficients tightness
  double delta = 1.0;   // single-unit-root tightness
  double lambda = 0.2;  // overall shrinkage
  Eigen::VectorXd psi;  // per-variable scales

  void validate() const {
    if (!(mu > 0) || !std::isfinite(mu)) throw ConfigError("hyper mu must be positive");
    if (!(delta > 0) || !std::isfinite(delta))
      throw ConfigError("hyper delta must be positive");
    if (!(lambda > 0) || !std::isfinite(lambda))
      throw ConfigError("hyper lambda must be positive");
    if (psi.size() == 0) throw ConfigError("hyper psi is empty");
    for (Eigen::Index i = 0; i < psi.size(); ++i)
      if (!(psi(i) > 0) || !std::isfinite(psi(i)))
        throw ConfigError("hyper psi[" + std::to_string(i + 1) + "] must be positive");
  }
};

// Gamma hyper-priors (shape-scale) for mu, delta, lambda; inverse gamma for
// each psi component. Groups with the estimate flag off are held fixed.
struct HyperPrior {
  double mu_shape = 2.618033988749895, mu_scale = 0.6180339887498949;
  double delta_shape = 2.618033988749895, delta_scale = 0.6180339887498949;
  double lambda_shape = 1.370156, lambda_scale = 0.5403124;
  double psi_shape = 0.0002, psi_scale = 0.0002;
  bool estimate_mu = true, estimate_delta = true;
  bool estimate_lambda = true, estimate_psi = true;

  void validate() const {
    const double v[] = {mu_shape, mu_scale, delta_shape, delta_scale,
                        lambda_shape, lambda_scale, psi_shape, psi_scale};
    for (double x : v)
      if (!(x > 0) || !std::isfinite(x))
        throw ConfigError("hyper-prior parameters must be strictly positive");
  }
};

// Matrix-normal inverse-Wishart prior (B_bar, Omega, S0, nu0).
struct NIWPrior {
  Eigen::MatrixXd B_bar;  // K x N location
  Eigen::MatrixXd Omega;  // K x K row covariance
  Eigen::MatrixXd S0;     // N x N scale
  double nu0 = 0.0;       // degrees of freedom, > N - 1
};

// Sum-of-coefficients and single-unit-root dummy observations. Disabled
// blocks carry zero rows so the augmented design equals the raw design.
struct DummyObs {
  Eigen::MatrixXd Ysoc, Xsoc;  // N x N, N x K (or 0 rows)
  Eigen::MatrixXd Ysur, Xsur;  // 1 x N, 1 x K (or 0 rows)

  Eigen::Index rows() const { return Ysoc.rows() + Ysur.rows(); }

  Eigen::MatrixXd stackY() const { return stack(Ysoc, Ysur); }
  Eigen::MatrixXd stackX() const { return stack(Xsoc, Xsur); }

  static Eigen::MatrixXd stack(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    Eigen::MatrixXd out(a.rows() + b.rows(), std::max(a.cols(), b.cols()));
    if (a.rows() > 0) out.topRows(a.rows()) = a;
    if (b.rows() > 0) out.bottomRows(b.rows()) = b;
    return out;
  }

  static DummyObs none(Eigen::Index N, Eigen::Index K) {
    DummyObs d;
    d.Ysoc.resize(0, N);
    d.Xsoc.resize(0, K);
    d.Ysur.resize(0, N);
    d.Xsur.resize(0, K);
    return d;
  }
};

// Dummies prepended to the raw design.
inline void augment_design(const DesignMatrices& design, const DummyObs& dummies,
                           Eigen::MatrixXd& Ystar, Eigen::MatrixXd& Xstar) {
  const Eigen::Index Td = dummies.rows();
  Ystar.resize(Td + design.Y.rows(), design.Y.cols());
  Xstar.resize(Td + design.X.rows(), design.X.cols());
  if (Td > 0) {
    Ystar.topRows(Td) = dummies.stackY();
    Xstar.topRows(Td) = dummies.stackX();
  }
  Ystar.bottomRows(design.Y.rows()) = design.Y;
  Xstar.bottomRows(design.X.rows()) = design.X;
}

// Residual variance of a univariate AR(p)-with-constant least squares fit,
// one component per variable.
inline Eigen::VectorXd default_psi(const TimeSeries& ts, int p) {
  const Eigen::Index T = ts.rows(), N = ts.cols();
  if (T <= p + 2) throw ConfigError("sample too short for AR(p) psi estimate");
  const Eigen::Index Te = T - p, K = p + 1;
  Eigen::VectorXd psi(N);
  for (Eigen::Index j = 0; j < N; ++j) {
    Eigen::VectorXd y = ts.values().col(j).tail(Te);
    Eigen::MatrixXd X(Te, K);
    for (int l = 1; l <= p; ++l)
      X.col(l - 1) = ts.values().col(j).segment(p - l, Te);
    X.col(K - 1).setOnes();
    double var_y = (y.array() - y.mean()).square().sum() / static_cast<double>(Te);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    qr.setThreshold(1e-10);
    if (qr.rank() < K || !(var_y > 0))
      throw NumericalError("singular AR regression for variable " +
                           ts.names()[static_cast<std::size_t>(j)]);
    Eigen::VectorXd beta = qr.solve(y);
    double ssr = (y - X * beta).squaredNorm();
    double dof = static_cast<double>(Te - K);
    double s2 = ssr / (dof > 0 ? dof : 1.0);
    if (!(s2 > 1e-12 * var_y) || !std::isfinite(s2))
      throw NumericalError("zero residual variance for variable " +
                           ts.names()[static_cast<std::size_t>(j)]);
    psi(j) = s2;
  }
  return psi;
}

// Minnesota NIW prior: random-walk location for non-stationary variables,
// lag-decaying diagonal Omega, S0 = diag(psi), nu0 = N + 2.
inline NIWPrior minnesota_niw(const MinnesotaHyper& hyper, int p, Eigen::Index N,
                              const std::vector<bool>& stationary = {}) {
  hyper.validate();
  if (hyper.psi.size() != N) throw ConfigError("psi length does not match N");
  if (!stationary.empty() && static_cast<Eigen::Index>(stationary.size()) != N)
    throw ConfigError("stationary flag count does not match N");
  const Eigen::Index K = N * p + 1;
  NIWPrior prior;
  prior.B_bar = Eigen::MatrixXd::Zero(K, N);
  for (Eigen::Index j = 0; j < N; ++j) {
    bool stat = !stationary.empty() && stationary[static_cast<std::size_t>(j)];
    if (!stat) prior.B_bar(j, j) = 1.0;
  }
  Eigen::VectorXd omega_diag(K);
  for (int l = 1; l <= p; ++l)
    for (Eigen::Index j = 0; j < N; ++j)
      omega_diag(N * (l - 1) + j) =
          hyper.lambda * hyper.lambda / (static_cast<double>(l) * l * hyper.psi(j));
  omega_diag(K - 1) = 1e6;  // effectively flat constant term
  prior.Omega = omega_diag.asDiagonal();
  prior.S0 = hyper.psi.asDiagonal();
  prior.nu0 = static_cast<double>(N) + 2.0;
  return prior;
}

// Dummy observations from the mean of the first p sample rows.
inline DummyObs dummy_obs(const MinnesotaHyper& hyper, const TimeSeries& ts, int p,
                          bool soc_enabled = true, bool sur_enabled = true) {
  hyper.validate();
  const Eigen::Index N = ts.cols(), K = N * p + 1;
  if (ts.rows() < p) throw ConfigError("sample shorter than lag order");
  Eigen::RowVectorXd ybar = ts.values().topRows(p).colwise().mean();

  DummyObs d = DummyObs::none(N, K);
  if (soc_enabled) {
    d.Ysoc = (ybar.transpose() / hyper.mu).asDiagonal();
    d.Xsoc = Eigen::MatrixXd::Zero(N, K);
    for (int l = 0; l < p; ++l) d.Xsoc.block(0, N * l, N, N) = d.Ysoc;
  }
  if (sur_enabled) {
    d.Ysur = ybar / hyper.delta;
    d.Xsur = Eigen::MatrixXd::Zero(1, K);
    for (int l = 0; l < p; ++l) d.Xsur.block(0, N * l, 1, N) = d.Ysur;
    d.Xsur(0, K - 1) = 1.0 / hyper.delta;
  }
  return d;
}

inline double log_gamma_density(double x, double shape, double scale) {
  if (!(x > 0)) return -std::numeric_limits<double>::infinity();
  return -shape * std::log(scale) - std::lgamma(shape) + (shape - 1.0) * std::log(x) -
         x / scale;
}

inline double log_inverse_gamma_density(double x, double shape, double scale) {
  if (!(x > 0)) return -std::numeric_limits<double>::infinity();
  return shape * std::log(scale) - std::lgamma(shape) - (shape + 1.0) * std::log(x) -
         scale / x;
}

// Sum of hyper-prior log densities over the estimated groups.
inline double log_hyperprior(const MinnesotaHyper& hyper, const HyperPrior& hp) {
  hyper.validate();
  hp.validate();
  double lp = 0.0;
  if (hp.estimate_mu) lp += log_gamma_density(hyper.mu, hp.mu_shape, hp.mu_scale);
  if (hp.estimate_delta)
    lp += log_gamma_density(hyper.delta, hp.delta_shape, hp.delta_scale);
  if (hp.estimate_lambda)
    lp += log_gamma_density(hyper.lambda, hp.lambda_shape, hp.lambda_scale);
  if (hp.estimate_psi)
    for (Eigen::Index i = 0; i < hyper.psi.size(); ++i)
      lp += log_inverse_gamma_density(hyper.psi(i), hp.psi_shape, hp.psi_scale);
  return lp;
}

}  // namespace svar

#endif
