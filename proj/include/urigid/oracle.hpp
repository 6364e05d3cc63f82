#pragma once

#include "urigid/configuration.hpp"
#include "urigid/construction.hpp"

#include <cstdint>
#include <vector>

namespace urigid {

inline constexpr Index default_max_folds = 20;

/// The 2^f realizations of an open fan (closing edge removed).
///
/// The first fan triangle is pinned, which removes the global reflection;
/// bit k of a sign mask reverses the turning direction of triangle k+2.
/// Mask 0 is the unfolded fan and reproduces the input configuration.
/// Realizations are built on demand since there can be up to 2^20 of them.
class FanConfigurationSet {
 public:
  FanConfigurationSet(const FanDecomposition& fan, const Configuration& config);

  Index folds() const { return folds_; }
  std::uint64_t count() const { return std::uint64_t{1} << folds_; }

  /// +1 / -1 per fold.
  std::vector<int> sign_vector(std::uint64_t mask) const;
  Configuration realization(std::uint64_t mask) const;

  /// Neighbor distance per sign mask, computed from the polar description.
  const std::vector<double>& neighbor_distances() const { return distances_; }

  /// Fan edges: everything but the closing edge.
  const EdgeList& fan_edges() const { return fan_edges_; }

 private:
  double neighbor_distance(std::uint64_t mask) const;

  Configuration original_;
  std::vector<Index> order_;
  Eigen::VectorXd origin_, axis_, e1_, e2_;
  Eigen::VectorXd height_, radius_, increment_;
  double start_angle_ = 0;
  Index folds_ = 0;
  std::vector<double> distances_;
  EdgeList fan_edges_;
};

FanConfigurationSet enumerate_fan_2d(const FanDecomposition& fan, const Configuration& config,
                                     Index max_folds = default_max_folds);
FanConfigurationSet enumerate_fan_3d(const FanDecomposition& fan, const Configuration& config,
                                     Index max_folds = default_max_folds);

struct UnfoldedMaximum {
  double unfolded = 0;
  double runner_up = 0;               // best folded distance; 0 when there are no folds
  std::vector<std::uint64_t> argmax;  // masks within tol::eq (relative) of the maximum
  bool unique = false;                // argmax == {0}
  bool strict = false;                // every folded distance is below the unfolded one
};

UnfoldedMaximum check_unfolded_maximum(const FanConfigurationSet& set);

/// Largest relative length error over all realizations and fan edges.
double max_fan_edge_error(const FanConfigurationSet& set);

struct FlexTrial {
  Configuration config;
  double residual = 0;  // max relative squared-length error over the edges
  bool converged = false;
};

/// Looks for admissible configurations near a lifted, perturbed copy of the
/// framework. Each trial zero-pads the coordinates to `ambient_dim`, adds
/// uniform noise in [-magnitude, magnitude], then drives the squared-length
/// residuals to zero with damped Newton steps.
std::vector<FlexTrial> perturbation_flex_search(const Framework& fw, int ambient_dim, int trials, double magnitude,
                                                std::uint64_t seed = 0);

}  // namespace urigid
