#ifndef SVAR_ROTATIONS_HPP
#define SVAR_ROTATIONS_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "svar/analysis.hpp"
#include "svar/posterior.hpp"
#include "svar/restrictions.hpp"
#include "svar/rng.hpp"

namespace svar {

// Haar draw over O(N): QR of a standard-normal matrix with the triangular
// factor normalized to a positive diagonal.
inline Eigen::MatrixXd haar_sample(Eigen::Index N, Rng& rng) {
  Eigen::MatrixXd Z = rng.normal_matrix(N, N);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(Z);
  Eigen::MatrixXd Q = qr.householderQ();
  Eigen::MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < N; ++j)
    if (R(j, j) < 0) Q.col(j) = -Q.col(j);
  return Q;
}

namespace detail {

// Fixed generic reference matrix; projecting its columns onto a null space
// and re-orthonormalizing gives a basis that varies smoothly with the
// constraint matrix.
inline const Eigen::MatrixXd& reference_matrix(Eigen::Index n) {
  static thread_local Eigen::MatrixXd ref;
  if (ref.rows() < n) {
    ref.resize(n, n);
    std::uint64_t state = 0x5eed5eed5eed5eedULL;
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i) {
        state = splitmix64(state);
        ref(i, j) = static_cast<double>(state >> 11) / 9007199254740992.0 - 0.5;
      }
  }
  return ref;
}

}  // namespace detail

// Orthonormal basis (n x dim) of the null space of M (rows x n), where
// dim = n - rows is the expected dimension; errors if M is rank deficient.
inline Eigen::MatrixXd null_basis(const Eigen::MatrixXd& M, Eigen::Index n) {
  const Eigen::Index rows = M.rows();
  const Eigen::Index dim = n - rows;
  if (dim < 0) throw NumericalError("over-determined null-space request");
  if (rows == 0) return Eigen::MatrixXd::Identity(n, n);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double tol = 1e-12 * std::max(1.0, sv(0));
  for (Eigen::Index i = 0; i < rows; ++i)
    if (!(sv(i) > tol))
      throw NumericalError("constraint matrix is rank deficient beyond the expected "
                           "null-space dimension");
  if (dim == 0) return Eigen::MatrixXd(n, 0);

  // project the fixed reference columns onto the null space, orthonormalize
  Eigen::MatrixXd Vr = svd.matrixV().leftCols(rows);
  Eigen::MatrixXd proj =
      detail::reference_matrix(n).topLeftCorner(n, dim) -
      Vr * (Vr.transpose() * detail::reference_matrix(n).topLeftCorner(n, dim));
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(proj);
  Eigen::MatrixXd Qfull = qr.householderQ();
  Eigen::MatrixXd B = Qfull.leftCols(dim);
  Eigen::MatrixXd R = qr.matrixQR().topLeftCorner(dim, dim).triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    if (!(std::abs(R(j, j)) > 1e-10))
      throw NumericalError("degenerate null-space projection");
    if (R(j, j) < 0) B.col(j) = -B.col(j);
  }
  return B;
}

// Rows of the linear map q_j -> zero-restricted IRF entries for one shock:
// IRF(i, j, h) = (Psi_h P q_j)_i, so each zero contributes row (Psi_h P)_i.
inline Eigen::MatrixXd zero_constraint_rows(
    const std::vector<Eigen::MatrixXd>& psi, const Eigen::MatrixXd& P,
    const std::vector<std::pair<Eigen::Index, Eigen::Index>>& zeros) {
  const Eigen::Index n = P.rows();
  Eigen::MatrixXd F(static_cast<Eigen::Index>(zeros.size()), n);
  for (std::size_t r = 0; r < zeros.size(); ++r) {
    auto [i, h] = zeros[r];
    F.row(static_cast<Eigen::Index>(r)) =
        psi[static_cast<std::size_t>(h)].row(i) * P;
  }
  return F;
}

// Shock columns ordered by descending zero count (stable in user order).
inline std::vector<Eigen::Index> zero_processing_order(const RestrictionSet& r) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(r.n_vars()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return r.zeros(a).size() > r.zeros(b).size();
  });
  return order;
}

// Recursive construction of a rotation satisfying every zero restriction:
// column j is a uniform direction in the null space of the stacked zero
// rows and previously drawn columns.
inline Eigen::MatrixXd zero_restricted_q(const Eigen::MatrixXd& A,
                                         const Eigen::MatrixXd& Sigma,
                                         const RestrictionSet& restrictions, int p,
                                         Rng& rng) {
  const Eigen::Index n = Sigma.rows();
  Eigen::MatrixXd P = chol_lower(Sigma, "Sigma");
  auto psi = ma_coefficients(A, p, restrictions.max_restricted_horizon());
  auto order = zero_processing_order(restrictions);

  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(n, n);
  std::vector<Eigen::Index> drawn;
  for (Eigen::Index jj = 0; jj < n; ++jj) {
    Eigen::Index j = order[static_cast<std::size_t>(jj)];
    Eigen::MatrixXd F = zero_constraint_rows(psi, P, restrictions.zeros(j));
    Eigen::MatrixXd M(F.rows() + jj, n);
    M.topRows(F.rows()) = F;
    for (Eigen::Index k = 0; k < jj; ++k)
      M.row(F.rows() + k) = Q.col(drawn[static_cast<std::size_t>(k)]).transpose();
    if (M.rows() >= n)
      throw ConfigError("infeasible zero pattern for shock " + std::to_string(j + 1));
    Eigen::MatrixXd B = null_basis(M, n);
    Eigen::VectorXd x = rng.normal_vector(B.cols());
    Q.col(j) = B * (x / x.norm());
    drawn.push_back(j);
  }
  return Q;
}

// Volume element of the recursive zero-restricted draw map, normalized so
// the unrestricted (pure Haar) case has weight exactly 1. Used as the
// importance weight that corrects the draws towards the measure that is
// uniform over the zero-restricted set of rotations.
inline double zero_volume_element(const Eigen::MatrixXd& A, const Eigen::MatrixXd& Sigma,
                                  const RestrictionSet& restrictions, int p,
                                  const Eigen::MatrixXd& Q) {
  if (!restrictions.any_zero()) return 1.0;
  const Eigen::Index n = Sigma.rows();
  Eigen::MatrixXd P = chol_lower(Sigma, "Sigma");
  auto psi = ma_coefficients(A, p, restrictions.max_restricted_horizon());
  auto order = zero_processing_order(restrictions);

  // per level l (processing order): T_l = tangent directions of the l-th
  // sphere, V_l = the complementary directions that absorb drag from
  // earlier levels
  std::vector<Eigen::MatrixXd> T(static_cast<std::size_t>(n)),
      V(static_cast<std::size_t>(n)), F(static_cast<std::size_t>(n));
  std::vector<Eigen::Index> tau(static_cast<std::size_t>(n));
  for (Eigen::Index l = 0; l < n; ++l) {
    Eigen::Index j = order[static_cast<std::size_t>(l)];
    F[static_cast<std::size_t>(l)] = zero_constraint_rows(psi, P, restrictions.zeros(j));
    const Eigen::MatrixXd& Fl = F[static_cast<std::size_t>(l)];

    Eigen::MatrixXd M0(Fl.rows() + 1, n);  // [F_l; q_l']
    M0.topRows(Fl.rows()) = Fl;
    M0.row(Fl.rows()) = Q.col(j).transpose();
    Eigen::MatrixXd B0 = null_basis(M0, n);

    Eigen::MatrixXd Mt(Fl.rows() + 1 + l, n);  // add earlier columns
    Mt.topRows(Fl.rows() + 1) = M0;
    for (Eigen::Index k = 0; k < l; ++k)
      Mt.row(Fl.rows() + 1 + k) = Q.col(order[static_cast<std::size_t>(k)]).transpose();
    Eigen::MatrixXd Bt = null_basis(Mt, n);
    T[static_cast<std::size_t>(l)] = Bt;
    tau[static_cast<std::size_t>(l)] = Bt.cols();

    // V_l: orthogonal complement of T_l inside span(B0), dimension l
    Eigen::MatrixXd c = B0.transpose() * Bt;  // (dim B0) x tau, orthonormal columns
    Eigen::Index d0 = B0.cols();
    if (l == 0) {
      V[0] = Eigen::MatrixXd(n, 0);
    } else {
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(c);
      Eigen::MatrixXd Qc = qr.householderQ();
      V[static_cast<std::size_t>(l)] = B0 * Qc.rightCols(d0 - Bt.cols());
    }
  }

  const Eigen::Index dim =
      std::accumulate(tau.begin(), tau.end(), Eigen::Index(0));
  if (dim == 0) return 1.0;

  // drag vectors: column per tangent coordinate, stacked over levels
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n * n, dim);
  Eigen::Index col = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index tcol = 0; tcol < tau[static_cast<std::size_t>(i)]; ++tcol, ++col) {
      std::vector<Eigen::VectorXd> dq(static_cast<std::size_t>(n),
                                      Eigen::VectorXd::Zero(n));
      dq[static_cast<std::size_t>(i)] = T[static_cast<std::size_t>(i)].col(tcol);
      for (Eigen::Index l = i + 1; l < n; ++l) {
        const Eigen::MatrixXd& Vl = V[static_cast<std::size_t>(l)];
        Eigen::MatrixXd C(l, Vl.cols());
        Eigen::VectorXd b(l);
        for (Eigen::Index m = 0; m < l; ++m) {
          C.row(m) = Q.col(order[static_cast<std::size_t>(m)]).transpose() * Vl;
          b(m) = -dq[static_cast<std::size_t>(m)]
                      .dot(Q.col(order[static_cast<std::size_t>(l)]));
        }
        Eigen::VectorXd cvec = C.fullPivLu().solve(b);
        dq[static_cast<std::size_t>(l)] = Vl * cvec;
        D.block(n * l, col, n, 1) = dq[static_cast<std::size_t>(l)];
      }
    }
  }

  Eigen::MatrixXd gram =
      Eigen::MatrixXd::Identity(dim, dim) + D.transpose() * D;
  double logdet = log_det_spd(gram, "volume-element Gram matrix");
  // normalize by the unrestricted value 2^{dim/2}
  return std::exp(0.5 * logdet - 0.5 * static_cast<double>(dim) * std::log(2.0));
}

}  // namespace svar

#endif
