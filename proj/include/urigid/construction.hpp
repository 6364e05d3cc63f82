#pragma once

#include "urigid/configuration.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace urigid {

enum class FanKind { fan2d, fan3d, multifan2d, multifan3d };

std::string_view to_string(FanKind kind);
FanKind fan_kind_from_string(std::string_view name);

/// Combinatorial witness of a Grünbaum-type construction.
///
/// A planar fan has one center and one peripheral order running from
/// `neighbors.first` to `neighbors.second`. A spatial fan has a central edge
/// whose two endpoints both join every peripheral node; its peripheral order
/// is angular in the projection along the central edge. A two-fan framework
/// has two centers joined by a shared spoke: `peripheral_order[k]` belongs to
/// `centers[k]`, starts with the other center and ends at one neighbor.
///
/// `folds` lists one spoke per hinge between consecutive fan triangles. In 3D
/// the hinge is the triangle spanned by the central edge and the listed
/// peripheral node; the spoke from the first central node is stored.
struct FanDecomposition {
  FanKind kind = FanKind::fan2d;
  std::vector<Index> centers;
  std::optional<Edge> central_edge;
  std::pair<Index, Index> neighbors{0, 0};
  std::vector<std::vector<Index>> peripheral_order;
  EdgeList folds;
  Edge closing_edge;

  Index fold_count() const { return static_cast<Index>(folds.size()); }
};

struct Construction {
  Framework framework;
  FanDecomposition fan;
};

/// Nonconvex Grünbaum polygon on a planar point set: 2n-2 edges for n >= 4,
/// the complete graph for n = 3.
Construction build_grunbaum_2d(const Configuration& config);

/// 3D Grünbaum framework: 3n-5 edges for n >= 5, the complete graph for n = 4.
Construction build_grunbaum_3d(const Configuration& config);

/// Two planar fans sharing the spoke between their centers, closed by a single
/// edge between the fan ends. Candidate center pairs are tried in index order
/// and the first pair whose centers lie strictly on opposite sides of the
/// closing edge and whose framework is certified superstable is returned.
Construction build_multifan_2d(const Configuration& config, int num_centers = 2);

/// Two-fan decomposition for the center pair (c1, c2). The nodes strictly left
/// of the directed line c1->c2 go to c1 when `c1_takes_left`, the rest to c2.
/// Returns nullopt when a node lies on that line, a side is empty, or the
/// centers are not strictly on opposite sides of the closing edge.
std::optional<FanDecomposition> two_fan_decomposition(const Configuration& config, Index c1, Index c2,
                                                      bool c1_takes_left);

struct BuildOptions {
  int multifan_centers = 0;  // 0 selects the single-fan builder
};

Construction build_framework(const Configuration& config, const BuildOptions& options = {});

struct ValidationResult {
  bool ok = true;
  std::vector<std::string> reasons;

  explicit operator bool() const { return ok; }
};

/// Checks that the edge set is exactly the one described by the fan.
ValidationResult validate_decomposition(const Framework& fw, const FanDecomposition& fan);

}  // namespace urigid
