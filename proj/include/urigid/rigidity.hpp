#pragma once

#include "urigid/configuration.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace urigid {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Stress = Eigen::VectorXd;

/// Squared edge lengths, one per edge in list order.
template <typename Derived>
DenseVector<typename Derived::Scalar> squared_edge_lengths(const Eigen::MatrixBase<Derived>& points,
                                                           std::span<const Edge> edges) {
  DenseVector<typename Derived::Scalar> out(static_cast<Index>(edges.size()));
  for (std::size_t k = 0; k < edges.size(); ++k)
    out(static_cast<Index>(k)) = (points.row(edges[k].i) - points.row(edges[k].j)).squaredNorm();
  return out;
}

/// Jacobian of the squared edge lengths with respect to the coordinates.
///
/// Row k belongs to edge (i, j): 2(p_i - p_j) in the column block of node i,
/// 2(p_j - p_i) in the block of node j. Blocks have width d and are laid out
/// node by node.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> rigidity_matrix(const Eigen::MatrixBase<Derived>& points,
                                                      std::span<const Edge> edges) {
  using Scalar = typename Derived::Scalar;
  const Index d = points.cols();
  DenseMatrix<Scalar> R = DenseMatrix<Scalar>::Zero(static_cast<Index>(edges.size()), points.rows() * d);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto [i, j] = edges[k];
    const auto diff = (points.row(i) - points.row(j)).eval();
    R.block(static_cast<Index>(k), i * d, 1, d) = Scalar(2) * diff;
    R.block(static_cast<Index>(k), j * d, 1, d) = Scalar(-2) * diff;
  }
  return R;
}

inline Eigen::MatrixXd rigidity_matrix(const Framework& fw) { return rigidity_matrix(fw.config.coords(), fw.edges); }

/// Weighted graph Laplacian with edge weights `w`.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> stress_matrix(Index n, std::span<const Edge> edges,
                                                    const Eigen::MatrixBase<Derived>& w) {
  using Scalar = typename Derived::Scalar;
  if (w.size() != static_cast<Index>(edges.size())) throw Error("stress has the wrong number of entries");
  DenseMatrix<Scalar> omega = DenseMatrix<Scalar>::Zero(n, n);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto [i, j] = edges[k];
    const Scalar wk = w(static_cast<Index>(k));
    omega(i, j) -= wk;
    omega(j, i) -= wk;
    omega(i, i) += wk;
    omega(j, j) += wk;
  }
  return omega;
}

inline Eigen::MatrixXd stress_matrix(const Framework& fw, const Stress& w) {
  return stress_matrix(fw.num_nodes(), fw.edges, w);
}

/// Number of singular values above `rel_tol * sigma_max`.
template <typename Derived>
Index numerical_rank(const Eigen::MatrixBase<Derived>& m, typename Derived::RealScalar rel_tol = tol::rank) {
  using Matrix = DenseMatrix<typename Derived::Scalar>;
  if (m.size() == 0) return 0;
  const Eigen::BDCSVD<Matrix> svd(m.eval());
  const auto& sv = svd.singularValues();
  if (sv(0) <= 0) return 0;
  return (sv.array() > rel_tol * sv(0)).count();
}

struct FlexStressCount {
  Index rank_R = 0;   // from the singular values of R
  Index rank_Rt = 0;  // from a pivoted QR of R^T
  Index m = 0;        // flexes: (dn - d(d+1)/2) - rank_R
  Index s = 0;        // selfstresses: e - rank_Rt
};

/// Flex and selfstress counts from two independent rank computations.
/// Throws NotFullDimensional unless the configuration spans R^d.
FlexStressCount count_flexes_and_stresses(const Framework& fw);

/// Orthonormal basis of the left nullspace of R, each vector normalised so
/// its first entry of magnitude above tol::eq is positive.
std::vector<Stress> selfstress_basis(const Framework& fw);

/// True when the symmetric outer products of the edge vectors span the
/// d(d+1)/2-dimensional space of symmetric matrices, i.e. the framework
/// admits no nontrivial affine motion preserving its edge lengths.
bool affine_motions_blocked(const Framework& fw);

enum class RigidityClass { flexible, inf_rigid, candidate_superstable, simplex, inconclusive };

std::string_view to_string(RigidityClass c);
RigidityClass rigidity_class_from_string(std::string_view name);

struct RigidityReport {
  Index rank_R = 0;
  Index m = 0;
  Index s = 0;
  bool maxwell_ok = false;
  Eigen::VectorXd omega_spectrum;  // ascending, for the sign-corrected stress
  Index omega_rank = 0;
  bool psd = false;
  bool affine_ok = false;
  bool superstable = false;
  RigidityClass classification = RigidityClass::inconclusive;
  Stress stress;  // sign-corrected unit selfstress; empty when s != 1
};

/// Superstability certificate: PSD stress matrix of rank n-d-1 together with
/// blocked affine motions. Frameworks on at most d+1 nodes are reported as
/// simplices (superstable iff complete). Throws StressSearchUnsupported when
/// there is more than one independent selfstress.
RigidityReport superstability_test(const Framework& fw);

/// Report for frameworks where `superstability_test` cannot decide: counts
/// only, classification `inconclusive`.
RigidityReport inconclusive_report(const Framework& fw);

/// All pairwise distances agree within tol::cong times the diameter of `p`.
/// `q` may live in a higher dimension.
bool congruence_check(const Configuration& p, const Configuration& q, double rel_tol = tol::cong);

/// Edge count of a (d+1)-lateration graph on n nodes.
Index lateration_edge_count(Index n, int d);

}  // namespace urigid
