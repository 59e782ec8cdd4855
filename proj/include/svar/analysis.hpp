#ifndef SVAR_ANALYSIS_HPP
#define SVAR_ANALYSIS_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "svar/posterior.hpp"
#include "svar/rng.hpp"
#include "svar/structural.hpp"
#include "svar/time_series.hpp"

namespace svar {

// Reduced-form moving-average coefficients Psi_0 = I, Psi_h for h = 1..H.
inline std::vector<Eigen::MatrixXd> ma_coefficients(const Eigen::MatrixXd& A, int p,
                                                    Eigen::Index H) {
  const Eigen::Index N = A.cols();
  std::vector<Eigen::MatrixXd> psi;
  psi.reserve(static_cast<std::size_t>(H) + 1);
  psi.push_back(Eigen::MatrixXd::Identity(N, N));
  for (Eigen::Index h = 1; h <= H; ++h) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(N, N);
    for (int l = 1; l <= std::min<Eigen::Index>(h, p); ++l)
      m += A.block(N * (l - 1), 0, N, N).transpose() * psi[static_cast<std::size_t>(h - l)];
    psi.push_back(std::move(m));
  }
  return psi;
}

// Structural impulse responses Theta_h = Psi_h B, h = 0..H.
inline std::vector<Eigen::MatrixXd> impulse_responses(const StructuralDraw& draw, int p,
                                                      Eigen::Index H) {
  auto psi = ma_coefficients(draw.A, p, H);
  std::vector<Eigen::MatrixXd> theta;
  theta.reserve(psi.size());
  for (const auto& m : psi) theta.push_back(m * draw.B);
  return theta;
}

// Forecast error variance shares, entry (i, j) at horizon h.
inline std::vector<Eigen::MatrixXd> variance_decomposition(
    const std::vector<Eigen::MatrixXd>& irf) {
  if (irf.empty()) throw ConfigError("empty impulse response input");
  const Eigen::Index N = irf[0].rows();
  std::vector<Eigen::MatrixXd> shares;
  Eigen::MatrixXd cum = Eigen::MatrixXd::Zero(N, N);
  for (const auto& theta : irf) {
    cum += theta.array().square().matrix();
    Eigen::VectorXd total = cum.rowwise().sum();
    for (Eigen::Index i = 0; i < N; ++i)
      if (!(total(i) > 0))
        throw NumericalError("zero forecast error variance for variable " +
                             std::to_string(i + 1));
    shares.push_back(cum.array().colwise() / total.array());
  }
  return shares;
}

// Structural shocks: u = Y - X A, eps_t = Q' P^{-1} u_t, returned T_eff x N.
inline Eigen::MatrixXd structural_shocks(const StructuralDraw& draw,
                                         const DesignMatrices& design) {
  Eigen::MatrixXd U = design.Y - design.X * draw.A;
  Eigen::MatrixXd P = chol_lower(draw.Sigma, "Sigma");
  // eps_t' = u_t' P^{-T} Q
  Eigen::MatrixXd W = P.triangularView<Eigen::Lower>().solve(U.transpose());
  return W.transpose() * draw.Q;
}

struct HistoricalDecomposition {
  // contributions[t](i, j): contribution of shock j to variable i at period t
  std::vector<Eigen::MatrixXd> contributions;  // T_eff entries, N x N
  Eigen::MatrixXd remainder;                   // T_eff x N
};

// H(i,j,t) = sum_{s=0}^{t-1} Theta(i,j,s) eps(j, t-s); the remainder carries
// initial conditions and the deterministic part.
inline HistoricalDecomposition historical_decomposition(const StructuralDraw& draw,
                                                        const Eigen::MatrixXd& shocks,
                                                        const DesignMatrices& design) {
  const Eigen::Index Te = design.t_eff(), N = design.n_vars();
  auto theta = impulse_responses(draw, design.p, Te - 1);
  HistoricalDecomposition hd;
  hd.contributions.assign(static_cast<std::size_t>(Te), Eigen::MatrixXd::Zero(N, N));
  for (Eigen::Index t = 0; t < Te; ++t) {
    Eigen::MatrixXd& c = hd.contributions[static_cast<std::size_t>(t)];
    for (Eigen::Index s = 0; s <= t; ++s)
      c += theta[static_cast<std::size_t>(s)] *
           shocks.row(t - s).asDiagonal().toDenseMatrix();
    // column j of c is now Theta contributions scaled by eps(j, .)
  }
  hd.remainder.resize(Te, N);
  for (Eigen::Index t = 0; t < Te; ++t)
    hd.remainder.row(t) =
        design.Y.row(t) -
        hd.contributions[static_cast<std::size_t>(t)].rowwise().sum().transpose();
  return hd;
}

// Contribution matrix at a single period: column j holds the accumulated
// effect of shock j. Cheaper than the full decomposition when only a few
// periods are inspected (narrative checks); theta must reach horizon t.
inline Eigen::MatrixXd hd_contribution_at(const std::vector<Eigen::MatrixXd>& theta,
                                          const Eigen::MatrixXd& shocks,
                                          Eigen::Index t) {
  const Eigen::Index N = shocks.cols();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(N, N);
  for (Eigen::Index s = 0; s <= t; ++s)
    c += theta[static_cast<std::size_t>(s)] *
         shocks.row(t - s).asDiagonal().toDenseMatrix();
  return c;
}

// One fitted-value sample: X A plus a fresh N(0, Sigma) innovation per period.
inline Eigen::MatrixXd fitted_values(const StructuralDraw& draw,
                                     const DesignMatrices& design, Rng& rng,
                                     bool add_noise = true) {
  Eigen::MatrixXd fit = design.X * draw.A;
  if (add_noise) {
    Eigen::MatrixXd P = chol_lower(draw.Sigma, "Sigma");
    for (Eigen::Index t = 0; t < fit.rows(); ++t)
      fit.row(t) += (P * rng.normal_vector(fit.cols())).transpose();
  }
  return fit;
}

// Time-invariant conditional standard deviations: sqrt(diag(Sigma)).
inline Eigen::VectorXd conditional_sd(const StructuralDraw& draw) {
  return draw.Sigma.diagonal().array().sqrt();
}

// One simulated future path, H_f x N.
inline Eigen::MatrixXd forecast_path(const ReducedFormDraw& draw,
                                     const DesignMatrices& design, Eigen::Index H_f,
                                     Rng& rng) {
  const Eigen::Index N = design.n_vars(), K = design.n_regressors();
  const int p = design.p;
  Eigen::MatrixXd P = chol_lower(draw.Sigma, "Sigma");
  // lag window: most recent observation first
  std::vector<Eigen::RowVectorXd> lags;
  for (int l = 1; l <= p; ++l) lags.push_back(design.Y.row(design.t_eff() - l));
  Eigen::MatrixXd path(H_f, N);
  for (Eigen::Index h = 0; h < H_f; ++h) {
    Eigen::RowVectorXd x(K);
    for (int l = 0; l < p; ++l) x.segment(N * l, N) = lags[static_cast<std::size_t>(l)];
    x(K - 1) = 1.0;
    Eigen::RowVectorXd y = x * draw.A + (P * rng.normal_vector(N)).transpose();
    path.row(h) = y;
    lags.insert(lags.begin(), y);
    lags.pop_back();
  }
  return path;
}

// Hard condition on a future observation (1-based variable, horizon).
struct ForecastCondition {
  int variable = 1;
  int horizon = 1;
  double value = 0.0;
};

// Conditional forecast: future reduced-form innovations are one Gaussian
// vector; conditions are linear constraints on future observations; sample
// from the exact conditional distribution, then roll paths forward.
inline Eigen::MatrixXd conditional_forecast_path(
    const ReducedFormDraw& draw, const DesignMatrices& design, Eigen::Index H_f,
    const std::vector<ForecastCondition>& conditions, Rng& rng) {
  const Eigen::Index N = design.n_vars(), K = design.n_regressors();
  const int p = design.p;
  if (conditions.empty()) return forecast_path(draw, design, H_f, rng);

  // deterministic path (all innovations zero)
  Eigen::MatrixXd det_path(H_f, N);
  {
    std::vector<Eigen::RowVectorXd> lags;
    for (int l = 1; l <= p; ++l) lags.push_back(design.Y.row(design.t_eff() - l));
    for (Eigen::Index h = 0; h < H_f; ++h) {
      Eigen::RowVectorXd x(K);
      for (int l = 0; l < p; ++l) x.segment(N * l, N) = lags[static_cast<std::size_t>(l)];
      x(K - 1) = 1.0;
      Eigen::RowVectorXd y = x * draw.A;
      det_path.row(h) = y;
      lags.insert(lags.begin(), y);
      lags.pop_back();
    }
  }

  // y_{T+h} = det(h) + sum_{s<h} Psi_{h-1-s} eta_s  => linear map R from the
  // stacked innovations eta (H_f N) to the stacked constrained observations
  auto psi = ma_coefficients(draw.A, p, H_f - 1);
  const Eigen::Index m = static_cast<Eigen::Index>(conditions.size());
  if (m > N * H_f) throw ConfigError("more conditions than future observations");
  Eigen::MatrixXd R = Eigen::MatrixXd::Zero(m, N * H_f);
  Eigen::VectorXd r(m);
  for (Eigen::Index c = 0; c < m; ++c) {
    const auto& cond = conditions[static_cast<std::size_t>(c)];
    if (cond.variable < 1 || cond.variable > N)
      throw ConfigError("condition variable index outside 1.." + std::to_string(N));
    if (cond.horizon < 1 || cond.horizon > H_f)
      throw ConfigError("condition horizon outside 1.." + std::to_string(H_f));
    Eigen::Index h = cond.horizon - 1, i = cond.variable - 1;
    for (Eigen::Index s = 0; s <= h; ++s)
      R.block(c, N * s, 1, N) = psi[static_cast<std::size_t>(h - s)].row(i);
    r(c) = cond.value - det_path(h, i);
  }

  // eta ~ N(0, I_{H_f} kron Sigma); conditioning by kriging
  Eigen::MatrixXd SigmaRt(N * H_f, m);  // Cov(eta) R'
  for (Eigen::Index s = 0; s < H_f; ++s)
    SigmaRt.middleRows(N * s, N) = draw.Sigma * R.middleCols(N * s, N).transpose();
  Eigen::MatrixXd G = R * SigmaRt;  // R Cov R'
  Eigen::LDLT<Eigen::MatrixXd> ldlt(0.5 * (G + G.transpose()));
  if (ldlt.info() != Eigen::Success)
    throw ConfigError("inconsistent or duplicate forecast conditions");
  {
    Eigen::VectorXd dvec = ldlt.vectorD();
    double dmax = dvec.maxCoeff();
    for (Eigen::Index i = 0; i < dvec.size(); ++i)
      if (!(dvec(i) > 1e-12 * std::max(dmax, 1.0)))
        throw ConfigError("forecast conditions are not linearly independent");
  }

  Eigen::MatrixXd P = chol_lower(draw.Sigma, "Sigma");
  Eigen::VectorXd eta0(N * H_f);
  for (Eigen::Index s = 0; s < H_f; ++s)
    eta0.segment(N * s, N) = P * rng.normal_vector(N);
  Eigen::VectorXd eta = eta0 + SigmaRt * ldlt.solve(r - R * eta0);

  // roll forward with the conditioned innovations
  Eigen::MatrixXd path(H_f, N);
  std::vector<Eigen::RowVectorXd> lags;
  for (int l = 1; l <= p; ++l) lags.push_back(design.Y.row(design.t_eff() - l));
  for (Eigen::Index h = 0; h < H_f; ++h) {
    Eigen::RowVectorXd x(K);
    for (int l = 0; l < p; ++l) x.segment(N * l, N) = lags[static_cast<std::size_t>(l)];
    x(K - 1) = 1.0;
    Eigen::RowVectorXd y = x * draw.A + eta.segment(N * h, N).transpose();
    path.row(h) = y;
    lags.insert(lags.begin(), y);
    lags.pop_back();
  }
  return path;
}

// Per-element posterior summary at quantile levels (1 +- probability)/2.
struct Summary {
  double mean = 0.0, sd = 0.0, lower = 0.0, upper = 0.0;
};

// Linear interpolation between order statistics (type-7 quantile).
inline double quantile(std::vector<double> v, double q) {
  if (v.empty()) throw ConfigError("quantile of an empty sample");
  std::sort(v.begin(), v.end());
  const double h = q * (static_cast<double>(v.size()) - 1.0);
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

inline Summary summarize(const std::vector<double>& draws, double probability) {
  if (draws.empty()) throw ConfigError("summary of an empty draw set");
  if (!(probability > 0.0 && probability < 1.0))
    throw ConfigError("probability must lie strictly between 0 and 1");
  Summary s;
  const double n = static_cast<double>(draws.size());
  for (double v : draws) s.mean += v;
  s.mean /= n;
  double ss = 0.0;
  for (double v : draws) ss += (v - s.mean) * (v - s.mean);
  s.sd = n > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  s.lower = quantile(draws, 0.5 * (1.0 - probability));
  s.upper = quantile(draws, 0.5 * (1.0 + probability));
  return s;
}

}  // namespace svar

#endif
