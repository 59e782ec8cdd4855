#include <catch2/catch_amalgamated.hpp>

#include "svar/prior.hpp"
#include "svar/rng.hpp"

using namespace svar;

namespace {

MinnesotaHyper default_hyper(Eigen::Index N) {
  MinnesotaHyper h;
  h.psi = Eigen::VectorXd::Ones(N);
  return h;
}

}  // namespace

TEST_CASE("default_psi recovers white-noise variance") {
  Rng rng(42);
  const Eigen::Index T = 20000;
  const double sigma2 = 2.5;
  Eigen::MatrixXd v(T, 2);
  for (Eigen::Index t = 0; t < T; ++t) {
    v(t, 0) = std::sqrt(sigma2) * rng.normal();
    v(t, 1) = v(t, 0);  // identical columns
  }
  TimeSeries ts(v, {"a", "b"});
  Eigen::VectorXd psi = default_psi(ts, 2);
  REQUIRE(psi(0) == Catch::Approx(sigma2).epsilon(0.10));
  REQUIRE(psi(0) == Catch::Approx(psi(1)));
}

TEST_CASE("default_psi flags degenerate fits") {
  // exact AR(1) recursion: residual variance is numerically zero
  Eigen::MatrixXd v(50, 1);
  v(0, 0) = 1.0;
  for (int t = 1; t < 50; ++t) v(t, 0) = 0.9 * v(t - 1, 0);
  TimeSeries ts(v, {"x"});
  REQUIRE_THROWS_AS(default_psi(ts, 1), NumericalError);
  // constant series: singular regression
  Eigen::MatrixXd c = Eigen::MatrixXd::Ones(50, 1);
  TimeSeries tsc(c, {"x"});
  REQUIRE_THROWS_AS(default_psi(tsc, 1), NumericalError);
}

TEST_CASE("minnesota_niw lag-decaying variances") {
  MinnesotaHyper h = default_hyper(3);
  NIWPrior prior = minnesota_niw(h, 2, 3);
  // lambda = 0.2: lag-1 variance 0.04, lag-2 variance 0.01
  REQUIRE(prior.Omega(0, 0) == Catch::Approx(0.04));
  REQUIRE(prior.Omega(3, 3) == Catch::Approx(0.01));
  REQUIRE(prior.Omega(6, 6) == Catch::Approx(1e6));
  // random-walk prior mean
  REQUIRE(prior.B_bar(0, 0) == 1.0);
  REQUIRE(prior.B_bar(1, 0) == 0.0);
  REQUIRE(prior.nu0 == 5.0);
  REQUIRE(prior.S0.diagonal().isApprox(h.psi));

  NIWPrior stat = minnesota_niw(h, 2, 3, {true, true, true});
  REQUIRE(stat.B_bar.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("doubling lambda scales lag variances by four") {
  MinnesotaHyper h = default_hyper(2);
  h.psi << 0.5, 2.0;
  NIWPrior a = minnesota_niw(h, 3, 2);
  h.lambda *= 2.0;
  NIWPrior b = minnesota_niw(h, 3, 2);
  for (Eigen::Index i = 0; i < 6; ++i)
    REQUIRE(b.Omega(i, i) == Catch::Approx(4.0 * a.Omega(i, i)));
  REQUIRE(b.Omega(6, 6) == a.Omega(6, 6));
  REQUIRE(b.B_bar == a.B_bar);
  REQUIRE(b.S0 == a.S0);
  REQUIRE(b.nu0 == a.nu0);
}

TEST_CASE("minnesota_niw Omega is positive diagonal") {
  MinnesotaHyper h = default_hyper(4);
  h.psi << 0.1, 1.0, 10.0, 0.5;
  NIWPrior prior = minnesota_niw(h, 4, 4);
  Eigen::MatrixXd off = prior.Omega;
  off.diagonal().setZero();
  REQUIRE(off.cwiseAbs().maxCoeff() == 0.0);
  REQUIRE((prior.Omega.diagonal().array() > 0.0).all());
}

TEST_CASE("dummy observations hand cases") {
  Eigen::MatrixXd v(4, 1);
  v << 2, 5, 6, 7;  // first p=1 rows mean = 2
  TimeSeries ts(v, {"x"});
  MinnesotaHyper h = default_hyper(1);

  SECTION("sum of coefficients, mu=1") {
    DummyObs d = dummy_obs(h, ts, 1);
    REQUIRE(d.Ysoc(0, 0) == 2.0);
    REQUIRE(d.Xsoc(0, 0) == 2.0);
    REQUIRE(d.Xsoc(0, 1) == 0.0);
  }
  SECTION("single unit root, delta=1") {
    DummyObs d = dummy_obs(h, ts, 1);
    REQUIRE(d.Ysur(0, 0) == 2.0);
    REQUIRE(d.Xsur(0, 0) == 2.0);
    REQUIRE(d.Xsur(0, 1) == 1.0);
  }
  SECTION("mu -> infinity drives the dummies to zero") {
    h.mu = 1e300;
    DummyObs d = dummy_obs(h, ts, 1);
    REQUIRE(d.Ysoc.cwiseAbs().maxCoeff() < 1e-290);
    REQUIRE(d.Xsoc.cwiseAbs().maxCoeff() < 1e-290);
  }
  SECTION("disabled blocks leave the augmented design unchanged") {
    DummyObs d = dummy_obs(h, ts, 1, false, false);
    REQUIRE(d.rows() == 0);
    DesignMatrices design = build_design(ts, 1);
    Eigen::MatrixXd Ys, Xs;
    augment_design(design, d, Ys, Xs);
    REQUIRE(Ys == design.Y);
    REQUIRE(Xs == design.X);
  }
}

TEST_CASE("log_hyperprior") {
  HyperPrior hp;
  MinnesotaHyper h = default_hyper(2);

  SECTION("paper lambda prior has mode at the default lambda") {
    REQUIRE((hp.lambda_shape - 1.0) * hp.lambda_scale == Catch::Approx(0.2).margin(1e-4));
  }
  SECTION("all estimate flags off gives zero") {
    HyperPrior off = hp;
    off.estimate_mu = off.estimate_delta = off.estimate_lambda = off.estimate_psi = false;
    REQUIRE(log_hyperprior(h, off) == 0.0);
  }
  SECTION("gamma log density matches a quadrature-normalized numeric pdf") {
    // integrate the unnormalized gamma kernel numerically and compare
    const double shape = hp.lambda_shape, scale = hp.lambda_scale;
    auto kernel = [&](double x) { return std::pow(x, shape - 1.0) * std::exp(-x / scale); };
    double norm = 0.0;
    const int n = 400000;
    const double hi = 60.0, step = hi / n;
    for (int i = 0; i < n; ++i) {
      double x0 = i * step, x1 = x0 + step;
      norm += 0.5 * (kernel(x0 + 1e-300) + kernel(x1)) * step;
    }
    double expected = std::log(kernel(0.2) / norm);
    REQUIRE(log_gamma_density(0.2, shape, scale) == Catch::Approx(expected).margin(1e-5));
  }
  SECTION("strictly concave in log lambda for shape > 1") {
    HyperPrior only = hp;
    only.estimate_mu = only.estimate_delta = only.estimate_psi = false;
    auto f = [&](double loglam) {
      MinnesotaHyper g = h;
      g.lambda = std::exp(loglam);
      return log_hyperprior(g, only);
    };
    const double step = 0.05;
    for (double x = -3.0; x < 2.0; x += step) {
      double second = f(x - step) - 2.0 * f(x) + f(x + step);
      REQUIRE(second < 0.0);
    }
  }
}
