#ifndef SVAR_RESTRICTIONS_HPP
#define SVAR_RESTRICTIONS_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "svar/time_series.hpp"

namespace svar {

// Sign/zero code on a single restriction cell. kUnset leaves a cell free.
constexpr int kUnset = 127;

enum class NarrativeKind {
  shock_sign,
  hd_most_important,
  hd_least_important,
  hd_overwhelming,
  hd_negligible,
};

inline std::string to_string(NarrativeKind k) {
  switch (k) {
    case NarrativeKind::shock_sign: return "shock-sign";
    case NarrativeKind::hd_most_important: return "hd-most-important";
    case NarrativeKind::hd_least_important: return "hd-least-important";
    case NarrativeKind::hd_overwhelming: return "hd-overwhelming";
    case NarrativeKind::hd_negligible: return "hd-negligible";
  }
  return "?";
}

// One narrative restriction over a window of effective-sample periods.
// Indices are 1-based; `variable` only applies to the hd kinds.
struct NarrativeRestriction {
  NarrativeKind kind = NarrativeKind::shock_sign;
  int sign = -1;      // for shock_sign
  int shock = 1;      // column index
  int variable = 1;   // row index, hd kinds
  int start = 1;      // first period of the window (effective sample)
  int length = 1;

  void validate(Eigen::Index N, Eigen::Index T_eff) const {
    if (shock < 1 || shock > N)
      throw ConfigError("narrative shock index " + std::to_string(shock) +
                        " outside 1.." + std::to_string(N));
    if (kind != NarrativeKind::shock_sign && (variable < 1 || variable > N))
      throw ConfigError("narrative variable index " + std::to_string(variable) +
                        " outside 1.." + std::to_string(N));
    if (kind == NarrativeKind::shock_sign && sign != 1 && sign != -1)
      throw ConfigError("narrative sign must be +1 or -1");
    if (start < 1 || length < 1 || start + length - 1 > T_eff)
      throw ConfigError("narrative window [" + std::to_string(start) + ", " +
                        std::to_string(start + length - 1) +
                        "] outside the effective sample 1.." + std::to_string(T_eff));
  }
};

// Sign restrictions on impulse responses and on the structural matrix, plus
// narrative restrictions. sign_irf slice h holds codes for horizon h; zero
// codes are only allowed there.
class RestrictionSet {
 public:
  RestrictionSet() = default;

  explicit RestrictionSet(Eigen::Index N, Eigen::Index horizons = 1)
      : N_(N),
        sign_irf_(static_cast<std::size_t>(horizons),
                  Eigen::MatrixXi::Constant(N, N, kUnset)),
        sign_B_(Eigen::MatrixXi::Constant(N, N, kUnset)) {}

  Eigen::Index n_vars() const { return N_; }
  Eigen::Index horizons() const { return static_cast<Eigen::Index>(sign_irf_.size()); }

  // 1-based variable/shock, 0-based horizon.
  void set_irf(int variable, int shock, int horizon, int code) {
    check_cell(variable, shock);
    if (code != -1 && code != 0 && code != 1)
      throw ConfigError("sign_irf code must be -1, 0 or 1, got " + std::to_string(code));
    if (horizon < 0) throw ConfigError("restriction horizon must be non-negative");
    while (horizons() <= horizon)
      sign_irf_.push_back(Eigen::MatrixXi::Constant(N_, N_, kUnset));
    sign_irf_[static_cast<std::size_t>(horizon)](variable - 1, shock - 1) = code;
  }

  void set_B(int variable, int shock, int code) {
    check_cell(variable, shock);
    if (code != -1 && code != 1)
      throw ConfigError("sign_B code must be -1 or 1, got " + std::to_string(code));
    sign_B_(variable - 1, shock - 1) = code;
  }

  void add_narrative(const NarrativeRestriction& r) { narrative_.push_back(r); }

  int irf_code(Eigen::Index variable0, Eigen::Index shock0, Eigen::Index horizon) const {
    if (horizon >= horizons()) return kUnset;
    return sign_irf_[static_cast<std::size_t>(horizon)](variable0, shock0);
  }
  int B_code(Eigen::Index variable0, Eigen::Index shock0) const {
    return sign_B_(variable0, shock0);
  }
  const std::vector<NarrativeRestriction>& narrative() const { return narrative_; }

  // zero-restricted (variable0, horizon) cells for one shock column
  std::vector<std::pair<Eigen::Index, Eigen::Index>> zeros(Eigen::Index shock0) const {
    std::vector<std::pair<Eigen::Index, Eigen::Index>> out;
    for (Eigen::Index h = 0; h < horizons(); ++h)
      for (Eigen::Index i = 0; i < N_; ++i)
        if (sign_irf_[static_cast<std::size_t>(h)](i, shock0) == 0)
          out.emplace_back(i, h);
    return out;
  }

  bool any_zero() const {
    for (Eigen::Index j = 0; j < N_; ++j)
      if (!zeros(j).empty()) return true;
    return false;
  }

  bool any_sign() const {
    for (const auto& m : sign_irf_)
      if ((m.array() == 1).any() || (m.array() == -1).any()) return true;
    return (sign_B_.array() != kUnset).any();
  }

  // largest horizon carrying any code
  Eigen::Index max_restricted_horizon() const {
    Eigen::Index h_max = 0;
    for (Eigen::Index h = 0; h < horizons(); ++h)
      if ((sign_irf_[static_cast<std::size_t>(h)].array() != kUnset).any()) h_max = h;
    return h_max;
  }

  void validate(Eigen::Index T_eff) const {
    for (const auto& r : narrative_) r.validate(N_, T_eff);
    // feasibility of the recursive zero construction: ordered by descending
    // zero count, shock j may carry at most N - j zeros
    std::vector<Eigen::Index> counts;
    for (Eigen::Index j = 0; j < N_; ++j)
      counts.push_back(static_cast<Eigen::Index>(zeros(j).size()));
    std::sort(counts.rbegin(), counts.rend());
    for (Eigen::Index j = 0; j < N_; ++j)
      if (counts[static_cast<std::size_t>(j)] > N_ - (j + 1))
        throw ConfigError("infeasible zero pattern: a shock in position " +
                          std::to_string(j + 1) + " carries " +
                          std::to_string(counts[static_cast<std::size_t>(j)]) +
                          " zeros, at most " + std::to_string(N_ - (j + 1)) +
                          " are allowed");
  }

 private:
  void check_cell(int variable, int shock) const {
    if (variable < 1 || variable > N_ || shock < 1 || shock > N_)
      throw ConfigError("restriction cell (" + std::to_string(variable) + ", " +
                        std::to_string(shock) + ") outside 1.." + std::to_string(N_));
  }

  Eigen::Index N_ = 0;
  std::vector<Eigen::MatrixXi> sign_irf_;
  Eigen::MatrixXi sign_B_;
  std::vector<NarrativeRestriction> narrative_;
};

}  // namespace svar

#endif
