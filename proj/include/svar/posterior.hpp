#ifndef SVAR_POSTERIOR_HPP
#define SVAR_POSTERIOR_HPP

#include <cmath>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "svar/prior.hpp"
#include "svar/rng.hpp"
#include "svar/time_series.hpp"

namespace svar {

namespace rng_domain {
constexpr std::uint64_t posterior = 0x01;
constexpr std::uint64_t rotation = 0x02;
constexpr std::uint64_t narrative = 0x03;
constexpr std::uint64_t forecast = 0x04;
constexpr std::uint64_t fitted = 0x05;
constexpr std::uint64_t resample = 0x06;
constexpr std::uint64_t hyper = 0x07;
}  // namespace rng_domain

struct NIWPosterior {
  Eigen::MatrixXd B_post;      // K x N
  Eigen::MatrixXd Omega_post;  // K x K
  Eigen::MatrixXd S_post;      // N x N
  double nu_post = 0.0;
};

struct ReducedFormDraw {
  Eigen::MatrixXd A;      // K x N
  Eigen::MatrixXd Sigma;  // N x N
};

inline double log_det_spd(const Eigen::MatrixXd& m, const char* what) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success)
    throw NumericalError(std::string("Cholesky factorization of ") + what + " failed");
  return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

inline Eigen::MatrixXd chol_lower(const Eigen::MatrixXd& m, const char* what) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success)
    throw NumericalError(std::string("Cholesky factorization of ") + what + " failed");
  return llt.matrixL();
}

// Update from an explicit (possibly empty) sample.
inline NIWPosterior niw_update_raw(const NIWPrior& prior, const Eigen::MatrixXd& Ystar,
                                   const Eigen::MatrixXd& Xstar) {
  const Eigen::Index K = prior.B_bar.rows();
  Eigen::LLT<Eigen::MatrixXd> omega_llt(prior.Omega);
  if (omega_llt.info() != Eigen::Success)
    throw NumericalError("prior Omega is not positive definite");
  Eigen::MatrixXd omega_inv = omega_llt.solve(Eigen::MatrixXd::Identity(K, K));

  Eigen::MatrixXd precision = omega_inv + Xstar.transpose() * Xstar;
  precision = 0.5 * (precision + precision.transpose()).eval();
  Eigen::LLT<Eigen::MatrixXd> prec_llt(precision);
  if (prec_llt.info() != Eigen::Success)
    throw NumericalError("augmented regressor cross-product is not positive definite");

  NIWPosterior post;
  post.Omega_post = prec_llt.solve(Eigen::MatrixXd::Identity(K, K));
  post.Omega_post = 0.5 * (post.Omega_post + post.Omega_post.transpose()).eval();
  post.B_post = prec_llt.solve(omega_inv * prior.B_bar + Xstar.transpose() * Ystar);
  post.S_post = prior.S0 + Ystar.transpose() * Ystar +
                prior.B_bar.transpose() * omega_inv * prior.B_bar -
                post.B_post.transpose() * precision * post.B_post;
  post.S_post = 0.5 * (post.S_post + post.S_post.transpose()).eval();
  post.nu_post = prior.nu0 + static_cast<double>(Ystar.rows());
  return post;
}

// Conjugate update with dummy observations prepended to the design.
inline NIWPosterior niw_update(const NIWPrior& prior, const DesignMatrices& design,
                               const DummyObs& dummies) {
  Eigen::MatrixXd Ystar, Xstar;
  augment_design(design, dummies, Ystar, Xstar);
  return niw_update_raw(prior, Ystar, Xstar);
}

// One inverse-Wishart draw via the Bartlett decomposition.
inline Eigen::MatrixXd sample_inverse_wishart(const Eigen::MatrixXd& scale, double dof,
                                              Rng& rng) {
  const Eigen::Index N = scale.rows();
  Eigen::MatrixXd C = chol_lower(scale, "inverse-Wishart scale");
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(N, N);
  for (Eigen::Index i = 0; i < N; ++i) {
    A(i, i) = std::sqrt(rng.chi_squared(dof - static_cast<double>(i)));
    for (Eigen::Index j = 0; j < i; ++j) A(i, j) = rng.normal();
  }
  Eigen::MatrixXd W =
      A.triangularView<Eigen::Lower>().solve(Eigen::MatrixXd(C.transpose()));
  Eigen::MatrixXd sigma = W.transpose() * W;
  return 0.5 * (sigma + sigma.transpose());
}

// One (A, Sigma) draw: Sigma ~ IW(S_post, nu_post), then the coefficient
// matrix from its conditional matrix-normal.
inline ReducedFormDraw sample_niw_one(const NIWPosterior& post, Rng rng) {
  ReducedFormDraw draw;
  draw.Sigma = sample_inverse_wishart(post.S_post, post.nu_post, rng);
  Eigen::MatrixXd L_omega = chol_lower(post.Omega_post, "posterior Omega");
  Eigen::MatrixXd L_sigma = chol_lower(draw.Sigma, "sampled Sigma");
  Eigen::MatrixXd Z = rng.normal_matrix(post.B_post.rows(), post.B_post.cols());
  draw.A = post.B_post + L_omega * Z * L_sigma.transpose();
  return draw;
}

// Independent draws with per-draw RNG streams; identical output for any
// thread count.
inline std::vector<ReducedFormDraw> sample_niw(const NIWPosterior& post,
                                               Eigen::Index count,
                                               const RngFactory& rngs,
                                               int threads = 1) {
  if (count < 1) throw ConfigError("draw count must be at least 1");
  std::vector<ReducedFormDraw> draws(static_cast<std::size_t>(count));
  auto work = [&](Eigen::Index begin, Eigen::Index end) {
    for (Eigen::Index i = begin; i < end; ++i)
      draws[static_cast<std::size_t>(i)] = sample_niw_one(
          post, rngs.stream(rng_domain::posterior, static_cast<std::uint64_t>(i)));
  };
  if (threads <= 1) {
    work(0, count);
  } else {
    std::vector<std::thread> pool;
    Eigen::Index chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      Eigen::Index b = t * chunk, e = std::min(count, b + chunk);
      if (b >= e) break;
      pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
  }
  return draws;
}

}  // namespace svar

#endif
