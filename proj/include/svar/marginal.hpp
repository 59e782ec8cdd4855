#ifndef SVAR_MARGINAL_HPP
#define SVAR_MARGINAL_HPP

#include <cmath>

#include <Eigen/Dense>

#include "svar/posterior.hpp"
#include "svar/prior.hpp"

namespace svar {

// ln p(sample | prior) of a T* x N sample under the NIW prior, from the
// closed-form matrix-variate-t evidence.
inline double log_evidence(const NIWPrior& prior, const Eigen::MatrixXd& Ystar,
                           const Eigen::MatrixXd& Xstar) {
  const double Tstar = static_cast<double>(Ystar.rows());
  const Eigen::Index N = prior.S0.rows();
  if (Tstar == 0) return 0.0;

  NIWPosterior post = niw_update_raw(prior, Ystar, Xstar);

  double out = -0.5 * Tstar * static_cast<double>(N) * std::log(M_PI);
  for (Eigen::Index i = 1; i <= N; ++i)
    out += std::lgamma(0.5 * (Tstar + prior.nu0 + 1.0 - static_cast<double>(i))) -
           std::lgamma(0.5 * (prior.nu0 + 1.0 - static_cast<double>(i)));
  out += 0.5 * static_cast<double>(N) *
         (log_det_spd(post.Omega_post, "posterior Omega") -
          log_det_spd(prior.Omega, "prior Omega"));
  out += 0.5 * prior.nu0 * log_det_spd(prior.S0, "prior scale");
  out -= 0.5 * (prior.nu0 + Tstar) * log_det_spd(post.S_post, "posterior scale");
  return out;
}

// ln p(data | hyper): evidence of the dummy-augmented sample minus the
// evidence of the dummies alone, so dummies act as prior information.
inline double log_marginal_likelihood(const NIWPrior& prior,
                                      const DesignMatrices& design,
                                      const DummyObs& dummies) {
  Eigen::MatrixXd Ystar, Xstar;
  augment_design(design, dummies, Ystar, Xstar);
  double full = log_evidence(prior, Ystar, Xstar);
  double dummy_only = log_evidence(prior, dummies.stackY(), dummies.stackX());
  return full - dummy_only;
}

}  // namespace svar

#endif
