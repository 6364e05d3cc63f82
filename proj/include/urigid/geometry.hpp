#pragma once

#include "urigid/configuration.hpp"

#include <array>
#include <map>
#include <vector>

namespace urigid {

/// Dimension of the affine span of the rows of `points`.
///
/// Rank of the centered coordinate matrix; singular values below
/// `rel_tol * sigma_max` count as zero.
template <typename Derived>
Index affine_rank(const Eigen::MatrixBase<Derived>& points,
                  typename Derived::RealScalar rel_tol = tol::rank) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (points.rows() <= 1) return 0;
  const Matrix centered = points.rowwise() - points.colwise().mean();
  const Eigen::JacobiSVD<Matrix> svd(centered);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0) return 0;
  return (sv.array() > rel_tol * sv(0)).count();
}

template <typename Scalar>
Index affine_rank(const BasicConfiguration<Scalar>& config) {
  return affine_rank(config.coords());
}

/// Counterclockwise strict hull vertices, starting at the smallest index.
struct HullResult2D {
  std::vector<Index> boundary;
};

/// Triangulated hull with outward (counterclockwise seen from outside) faces.
struct HullResult3D {
  std::vector<std::array<Index, 3>> faces;
  /// Hull edge -> indices into `faces` of its two incident triangles.
  std::map<Edge, std::array<Index, 2>> adjacency;

  std::vector<Index> vertices() const;
};

/// Strict convex hull of a planar point set. Points in the interior of a hull
/// edge are not part of the boundary.
HullResult2D convex_hull_2d(const Configuration& config);

/// Convex hull of a spatial point set. Coplanar facets are re-triangulated as
/// a fan from their lowest-index corner, so the output depends only on the
/// point set and not on insertion order.
HullResult3D convex_hull_3d(const Configuration& config);

struct CenterSelection {
  Index center;
  std::pair<Index, Index> neighbors;  // (predecessor, successor) on the boundary
};

CenterSelection select_center_2d(const HullResult2D& hull);

struct CentralEdgeSelection {
  Edge central;
  std::pair<Index, Index> neighbors;  // ascending
};

CentralEdgeSelection select_central_edge_3d(const HullResult3D& hull);

/// Twice the signed area of (a, b, c); positive for a left turn.
inline double orient2d(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c) {
  return (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
}

/// Strict hull of a subset of planar points; `tol` is an absolute distance.
/// Returned counterclockwise and rotated to start at the smallest index.
std::vector<Index> strict_hull_2d(const std::vector<Eigen::Vector2d>& points,
                                  const std::vector<Index>& ids, double tol);

}  // namespace urigid
