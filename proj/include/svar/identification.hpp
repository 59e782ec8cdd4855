#ifndef SVAR_IDENTIFICATION_HPP
#define SVAR_IDENTIFICATION_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "svar/analysis.hpp"
#include "svar/restrictions.hpp"
#include "svar/rotations.hpp"
#include "svar/structural.hpp"

namespace svar {

// Sign check for one shock column over IRF and structural-matrix codes.
// Before failing, the negated column is tested and adopted when it satisfies
// every code (the sign of each column is unidentified).
struct SignCheckResult {
  bool pass = false;
  bool flipped = false;
};

inline SignCheckResult check_sign_column(const std::vector<Eigen::MatrixXd>& irf,
                                         const Eigen::MatrixXd& B,
                                         const RestrictionSet& restrictions,
                                         Eigen::Index shock0) {
  const Eigen::Index n = B.rows();
  auto holds = [&](double flip) {
    for (Eigen::Index h = 0; h < restrictions.horizons(); ++h) {
      if (h >= static_cast<Eigen::Index>(irf.size())) break;
      for (Eigen::Index i = 0; i < n; ++i) {
        int code = restrictions.irf_code(i, shock0, h);
        if (code != 1 && code != -1) continue;
        if (code * flip * irf[static_cast<std::size_t>(h)](i, shock0) <= 0.0)
          return false;
      }
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      int code = restrictions.B_code(i, shock0);
      if (code != 1 && code != -1) continue;
      if (code * flip * B(i, shock0) <= 0.0) return false;
    }
    return true;
  };
  if (holds(1.0)) return {true, false};
  if (holds(-1.0)) return {true, true};
  return {false, false};
}

// Dominance predicate on one contribution matrix.
inline bool hd_kind_holds(const Eigen::MatrixXd& H, const NarrativeRestriction& r) {
  const Eigen::Index i = r.variable - 1, j = r.shock - 1;
  double own = std::abs(H(i, j));
  double others_max = 0.0, others_sum = 0.0;
  for (Eigen::Index k = 0; k < H.cols(); ++k) {
    if (k == j) continue;
    others_max = std::max(others_max, std::abs(H(i, k)));
    others_sum += std::abs(H(i, k));
  }
  switch (r.kind) {
    case NarrativeKind::hd_most_important: return own > others_max;
    case NarrativeKind::hd_least_important: return own < others_max;
    case NarrativeKind::hd_overwhelming: return own > others_sum;
    case NarrativeKind::hd_negligible: return own < others_sum;
    default: throw ConfigError("not a historical-decomposition restriction");
  }
}

// Narrative predicate on precomputed shocks / historical decomposition.
inline bool narrative_satisfied(const Eigen::MatrixXd& shocks,
                                const HistoricalDecomposition* hd,
                                const NarrativeRestriction& r) {
  const Eigen::Index Te = shocks.rows();
  if (r.start < 1 || r.start + r.length - 1 > Te)
    throw ConfigError("narrative window outside the effective sample");
  const Eigen::Index j = r.shock - 1;
  for (int k = 0; k < r.length; ++k) {
    const Eigen::Index t = r.start - 1 + k;
    if (r.kind == NarrativeKind::shock_sign) {
      double v = shocks(t, j);
      if (!(r.sign > 0 ? v > 0.0 : v < 0.0)) return false;
    } else {
      if (hd == nullptr) throw ConfigError("historical decomposition required");
      if (!hd_kind_holds(hd->contributions[static_cast<std::size_t>(t)], r))
        return false;
    }
  }
  return true;
}

// Same predicate but with the contribution matrices computed on demand from
// the structural impulse responses; avoids the full decomposition when only
// a few periods are restricted.
inline bool narrative_satisfied(const Eigen::MatrixXd& shocks,
                                const std::vector<Eigen::MatrixXd>& theta,
                                const NarrativeRestriction& r) {
  const Eigen::Index Te = shocks.rows();
  if (r.start < 1 || r.start + r.length - 1 > Te)
    throw ConfigError("narrative window outside the effective sample");
  const Eigen::Index j = r.shock - 1;
  for (int k = 0; k < r.length; ++k) {
    const Eigen::Index t = r.start - 1 + k;
    if (r.kind == NarrativeKind::shock_sign) {
      double v = shocks(t, j);
      if (!(r.sign > 0 ? v > 0.0 : v < 0.0)) return false;
    } else {
      if (!hd_kind_holds(hd_contribution_at(theta, shocks, t), r)) return false;
    }
  }
  return true;
}

// Largest zero-based effective period any narrative restriction touches.
inline Eigen::Index narrative_max_period(const std::vector<NarrativeRestriction>& rs) {
  Eigen::Index t_max = 0;
  for (const auto& r : rs)
    t_max = std::max<Eigen::Index>(t_max, r.start + r.length - 2);
  return t_max;
}

inline bool narrative_needs_hd(const std::vector<NarrativeRestriction>& rs) {
  return std::any_of(rs.begin(), rs.end(), [](const NarrativeRestriction& r) {
    return r.kind != NarrativeKind::shock_sign;
  });
}

inline bool all_narratives_satisfied(const Eigen::MatrixXd& shocks,
                                     const HistoricalDecomposition* hd,
                                     const std::vector<NarrativeRestriction>& rs) {
  return std::all_of(rs.begin(), rs.end(), [&](const NarrativeRestriction& r) {
    return narrative_satisfied(shocks, hd, r);
  });
}

inline bool all_narratives_satisfied(const Eigen::MatrixXd& shocks,
                                     const std::vector<Eigen::MatrixXd>& theta,
                                     const std::vector<NarrativeRestriction>& rs) {
  return std::all_of(rs.begin(), rs.end(), [&](const NarrativeRestriction& r) {
    return narrative_satisfied(shocks, theta, r);
  });
}

// Importance weight 1 / p-hat, where p-hat is the fraction of M simulations
// (standard-normal shocks over the restricted periods, everything else held
// at the draw's values) satisfying the full narrative set.
inline double narrative_weight(const StructuralDraw& draw,
                               const DesignMatrices& design,
                               const RestrictionSet& restrictions, Eigen::Index M,
                               Rng& rng) {
  const auto& rs = restrictions.narrative();
  if (rs.empty()) return 1.0;
  if (M < 1) throw ConfigError("narrative simulation count must be at least 1");

  Eigen::MatrixXd shocks = structural_shocks(draw, design);
  std::vector<Eigen::Index> periods;  // union of restricted windows, 0-based
  for (const auto& r : rs)
    for (int k = 0; k < r.length; ++k) periods.push_back(r.start - 1 + k);
  std::sort(periods.begin(), periods.end());
  periods.erase(std::unique(periods.begin(), periods.end()), periods.end());

  const bool needs_hd = narrative_needs_hd(rs);
  const Eigen::Index n = design.n_vars();
  std::vector<Eigen::MatrixXd> theta;
  if (needs_hd)
    theta = impulse_responses(draw, design.p, narrative_max_period(rs));

  Eigen::Index hits = 0;
  Eigen::MatrixXd sim = shocks;
  for (Eigen::Index m = 0; m < M; ++m) {
    for (Eigen::Index t : periods) sim.row(t) = rng.normal_vector(n).transpose();
    if (needs_hd) {
      if (all_narratives_satisfied(sim, theta, rs)) ++hits;
    } else {
      if (all_narratives_satisfied(sim, nullptr, rs)) ++hits;
    }
  }
  double p_hat = std::max<double>(static_cast<double>(hits), 1.0) /
                 static_cast<double>(M);
  return 1.0 / p_hat;
}

inline double ess(const Eigen::VectorXd& weights) {
  if (weights.size() == 0) throw ConfigError("empty weight vector");
  double s = weights.sum(), s2 = weights.squaredNorm();
  if (!(s > 0.0)) throw ConfigError("all importance weights are zero");
  return s * s / s2;
}

// Stratified resampling proportional to weights; output weights are all 1.
inline WeightedStructuralSample resample(const WeightedStructuralSample& sample,
                                         Eigen::Index S_out, Rng& rng) {
  const Eigen::Index S = static_cast<Eigen::Index>(sample.draws.size());
  if (S == 0) throw ConfigError("cannot resample an empty sample");
  Eigen::VectorXd w = sample.weights();
  double total = w.sum();
  if (!(total > 0.0)) throw ConfigError("all importance weights are zero");

  Eigen::VectorXd cum(S);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < S; ++i) {
    acc += w(i) / total;
    cum(i) = acc;
  }
  WeightedStructuralSample out;
  out.reduced_form_draws = sample.reduced_form_draws;
  out.proposed_rotations = sample.proposed_rotations;
  Eigen::Index idx = 0;
  for (Eigen::Index k = 0; k < S_out; ++k) {
    double u = (static_cast<double>(k) + rng.uniform()) / static_cast<double>(S_out);
    while (idx < S - 1 && cum(idx) < u) ++idx;
    StructuralDraw d = sample.draws[static_cast<std::size_t>(idx)];
    d.weight = 1.0;
    out.draws.push_back(std::move(d));
  }
  out.ess = static_cast<double>(S_out);
  return out;
}

// Raised when no proposed rotation satisfies the restrictions; callers that
// need to distinguish this from other numerical failures (the CLI exit-code
// contract) can catch it specifically.
struct ZeroAcceptedError : NumericalError {
  using NumericalError::NumericalError;
};

struct IdentifyOptions {
  int max_tries = 100;          // rotations per reduced-form draw
  Eigen::Index narrative_M = 1000;
  int threads = 1;
};

// Accept-reject over rotations with importance reweighting: for each
// reduced-form draw, propose rotations until signs, zeros and narrative
// restrictions hold (or the retry budget is spent); accepted draws carry
// weight = zero-restriction volume element x narrative weight.
inline WeightedStructuralSample identify(const std::vector<ReducedFormDraw>& rf_draws,
                                         const DesignMatrices& design,
                                         const RestrictionSet& restrictions,
                                         const RngFactory& rngs,
                                         const IdentifyOptions& opts = {}) {
  restrictions.validate(design.t_eff());
  const Eigen::Index n = design.n_vars();
  const Eigen::Index S = static_cast<Eigen::Index>(rf_draws.size());
  const Eigen::Index H_check = restrictions.max_restricted_horizon();
  const bool has_zero = restrictions.any_zero();
  const auto& narrative = restrictions.narrative();
  const bool needs_hd = narrative_needs_hd(narrative);

  std::vector<std::optional<StructuralDraw>> slots(static_cast<std::size_t>(S));
  std::vector<long> tries(static_cast<std::size_t>(S), 0);

  auto work = [&](Eigen::Index begin, Eigen::Index end) {
    for (Eigen::Index s = begin; s < end; ++s) {
      const ReducedFormDraw& rf = rf_draws[static_cast<std::size_t>(s)];
      Rng rot_rng = rngs.stream(rng_domain::rotation, static_cast<std::uint64_t>(s));
      Rng narr_rng = rngs.stream(rng_domain::narrative, static_cast<std::uint64_t>(s));
      Eigen::MatrixXd P = chol_lower(rf.Sigma, "Sigma");

      for (int attempt = 0; attempt < opts.max_tries; ++attempt) {
        ++tries[static_cast<std::size_t>(s)];
        Eigen::MatrixXd Q = has_zero
            ? zero_restricted_q(rf.A, rf.Sigma, restrictions, design.p, rot_rng)
            : haar_sample(n, rot_rng);

        StructuralDraw cand;
        cand.A = rf.A;
        cand.Sigma = rf.Sigma;
        cand.Q = Q;
        cand.B = P * Q;
        auto irf = impulse_responses(cand, design.p, H_check);

        bool ok = true;
        for (Eigen::Index j = 0; j < n && ok; ++j) {
          auto res = check_sign_column(irf, cand.B, restrictions, j);
          if (!res.pass) {
            ok = false;
          } else if (res.flipped) {
            cand.Q.col(j) = -cand.Q.col(j);
            cand.B.col(j) = -cand.B.col(j);
            for (auto& th : irf) th.col(j) = -th.col(j);
          }
        }
        if (!ok) continue;

        if (!narrative.empty()) {
          Eigen::MatrixXd shocks = structural_shocks(cand, design);
          if (needs_hd) {
            auto theta = impulse_responses(cand, design.p,
                                           narrative_max_period(narrative));
            if (!all_narratives_satisfied(shocks, theta, narrative)) continue;
          } else {
            if (!all_narratives_satisfied(shocks, nullptr, narrative)) continue;
          }
        }

        cand.weight =
            zero_volume_element(cand.A, cand.Sigma, restrictions, design.p, cand.Q);
        if (!narrative.empty())
          cand.weight *=
              narrative_weight(cand, design, restrictions, opts.narrative_M, narr_rng);
        slots[static_cast<std::size_t>(s)] = std::move(cand);
        break;
      }
    }
  };

  if (opts.threads <= 1) {
    work(0, S);
  } else {
    std::vector<std::thread> pool;
    Eigen::Index chunk = (S + opts.threads - 1) / opts.threads;
    for (int t = 0; t < opts.threads; ++t) {
      Eigen::Index b = t * chunk, e = std::min(S, b + chunk);
      if (b >= e) break;
      pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
  }

  WeightedStructuralSample out;
  out.reduced_form_draws = S;
  for (Eigen::Index s = 0; s < S; ++s) {
    out.proposed_rotations += tries[static_cast<std::size_t>(s)];
    if (slots[static_cast<std::size_t>(s)])
      out.draws.push_back(std::move(*slots[static_cast<std::size_t>(s)]));
  }
  if (out.draws.empty())
    throw ZeroAcceptedError(
        "no rotation satisfied the restrictions: " + std::to_string(S) +
        " reduced-form draws, " + std::to_string(out.proposed_rotations) +
        " proposed rotations, 0 accepted");
  out.ess = ess(out.weights());
  return out;
}

}  // namespace svar

#endif
