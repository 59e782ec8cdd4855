#ifndef SVAR_STRUCTURAL_HPP
#define SVAR_STRUCTURAL_HPP

#include <vector>

#include <Eigen/Dense>

namespace svar {

// One identified draw: reduced form (A, Sigma), rotation Q, impact matrix
// B = P Q with P the lower Cholesky factor of Sigma, and importance weight.
struct StructuralDraw {
  Eigen::MatrixXd A;      // K x N
  Eigen::MatrixXd Sigma;  // N x N
  Eigen::MatrixXd Q;      // N x N orthogonal
  Eigen::MatrixXd B;      // N x N impact matrix
  double weight = 1.0;
};

struct WeightedStructuralSample {
  std::vector<StructuralDraw> draws;
  double ess = 0.0;
  // acceptance statistics from the identification loop
  long proposed_rotations = 0;
  long reduced_form_draws = 0;

  Eigen::VectorXd weights() const {
    Eigen::VectorXd w(static_cast<Eigen::Index>(draws.size()));
    for (std::size_t i = 0; i < draws.size(); ++i)
      w(static_cast<Eigen::Index>(i)) = draws[i].weight;
    return w;
  }
};

}  // namespace svar

#endif
