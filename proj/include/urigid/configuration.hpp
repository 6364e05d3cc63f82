#pragma once

#include <Eigen/Dense>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace urigid {

using Index = Eigen::Index;
using NodeId = std::int64_t;

// Numerical tolerances shared by every module. Geometric tolerances are
// relative to the bounding-box diagonal of the input, rank tolerances are
// relative to the largest singular value.
namespace tol {
inline constexpr double geom = 1e-9;
inline constexpr double rank = 1e-9;
inline constexpr double eq = 1e-8;
inline constexpr double psd = 1e-8;
inline constexpr double cong = 1e-8;
}  // namespace tol

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define URIGID_DEFINE_ERROR(Name)              \
  class Name : public Error {                  \
   public:                                     \
    using Error::Error;                        \
  }

URIGID_DEFINE_ERROR(DegenerateInput);
URIGID_DEFINE_ERROR(ProjectionDegenerate);
URIGID_DEFINE_ERROR(NoValidPartition);
URIGID_DEFINE_ERROR(NotFullDimensional);
URIGID_DEFINE_ERROR(StressSearchUnsupported);
URIGID_DEFINE_ERROR(TooManyFolds);
URIGID_DEFINE_ERROR(UnknownId);
URIGID_DEFINE_ERROR(DuplicateId);
URIGID_DEFINE_ERROR(ParseError);

#undef URIGID_DEFINE_ERROR

/// Undirected edge stored with i < j.
struct Edge {
  Index i = 0;
  Index j = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Index a, Index b) { return a < b ? Edge{a, b} : Edge{b, a}; }

using EdgeList = std::vector<Edge>;

/// n points in `dim`-dimensional space, one point per row.
///
/// Labels are optional stable node identifiers; when absent the row index is
/// the identifier.
template <typename Scalar>
class BasicConfiguration {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Point = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  BasicConfiguration() = default;

  explicit BasicConfiguration(Matrix coords, std::vector<NodeId> labels = {})
      : coords_(std::move(coords)), labels_(std::move(labels)) {
    if (coords_.cols() < 1) throw Error("configuration needs at least one coordinate column");
    if (!coords_.allFinite()) throw Error("configuration has non-finite coordinates");
    if (!labels_.empty() && static_cast<Index>(labels_.size()) != coords_.rows())
      throw Error("configuration label count does not match point count");
  }

  int dim() const { return static_cast<int>(coords_.cols()); }
  Index size() const { return coords_.rows(); }
  const Matrix& coords() const { return coords_; }

  Point point(Index i) const { return coords_.row(i).transpose(); }

  const std::vector<NodeId>& labels() const { return labels_; }
  NodeId label(Index i) const { return labels_.empty() ? static_cast<NodeId>(i) : labels_[i]; }

  /// Length of the diagonal of the axis-aligned bounding box.
  Scalar bbox_diagonal() const {
    if (coords_.rows() == 0) return Scalar(0);
    return (coords_.colwise().maxCoeff() - coords_.colwise().minCoeff()).norm();
  }

  /// Absolute geometric tolerance for orientation predicates.
  Scalar geom_tolerance() const { return Scalar(tol::geom) * bbox_diagonal(); }

 private:
  Matrix coords_;
  std::vector<NodeId> labels_;
};

using Configuration = BasicConfiguration<double>;

/// A graph paired with a configuration of its nodes.
struct Framework {
  Configuration config;
  EdgeList edges;

  Index num_nodes() const { return config.size(); }
  Index num_edges() const { return static_cast<Index>(edges.size()); }
  int dim() const { return config.dim(); }
};

/// Throws unless every edge is in range, loop-free and unique.
void check_simple_graph(const Framework& fw);

/// Sorts lexicographically and removes duplicates.
void canonicalize(EdgeList& edges);

EdgeList complete_graph(Index n);

/// d*n - d(d+1)/2 + 1 for n >= d+2, the complete-graph count below that.
Index minimal_edge_count(Index n, int d);

}  // namespace urigid
