#include "urigid/oracle.hpp"

#include "urigid/random.hpp"
#include "urigid/rigidity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace urigid {

namespace {

double wrap_angle(double a) {
  while (a > std::numbers::pi) a -= 2 * std::numbers::pi;
  while (a <= -std::numbers::pi) a += 2 * std::numbers::pi;
  return a;
}

// Relative residual: max over edges of |len^2 - target^2| / target^2.
double relative_residual(const Eigen::VectorXd& r, const Eigen::VectorXd& target) {
  double worst = 0;
  for (Index k = 0; k < r.size(); ++k) {
    const double denom = target(k) > 0 ? target(k) : 1.0;
    worst = std::max(worst, std::abs(r(k)) / denom);
  }
  return worst;
}

// Damped Newton on E = |r|^2 / 2 with r the squared-length residuals. The
// exact Hessian is J^T J + 2 L(r) (x) I, where L(r) is the graph Laplacian
// weighted by the residuals. Gauss-Newton drops the second term and then
// crawls towards flat realizations in lifted dimensions, where only that term
// carries curvature. Each step also tries 2x and 3x extrapolation, which is
// the exact step for the quartic energy near such a realization.
// Returns the final relative residual; `x` is updated in place.
double solve_lengths(Eigen::MatrixXd& x, const EdgeList& edges, const Eigen::VectorXd& target) {
  constexpr int max_iterations = 20000;
  constexpr double stop_residual = 1e-15;
  // Round-off in the squared lengths sets a floor; a window that does not
  // cut the energy by stall_gain ends the solve.
  constexpr int stall_window = 100;
  constexpr double stall_gain = 0.99;
  using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Index n = x.rows(), k = x.cols();

  Eigen::VectorXd r = squared_edge_lengths(x, edges) - target;
  double energy = r.squaredNorm();
  double checkpoint = energy;
  double mu = -1;
  for (int it = 0; it < max_iterations; ++it) {
    if (relative_residual(r, target) < stop_residual) break;
    if (it % stall_window == stall_window - 1) {
      if (energy > stall_gain * checkpoint) break;
      checkpoint = energy;
    }
    const Eigen::MatrixXd J = rigidity_matrix(x, edges);
    Eigen::MatrixXd H = J.transpose() * J;
    const Eigen::MatrixXd L = stress_matrix(n, edges, r);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (L(i, j) != 0) H.block(i * k, j * k, k, k).diagonal().array() += 2 * L(i, j);
    const Eigen::VectorXd g = J.transpose() * r;
    if (mu < 0) mu = 1e-6 * std::max(H.diagonal().cwiseAbs().maxCoeff(), 1e-300);

    bool accepted = false;
    while (!accepted && mu < 1e30) {
      Eigen::MatrixXd A = H;
      A.diagonal().array() += mu;
      const Eigen::LLT<Eigen::MatrixXd> llt(A);
      if (llt.info() != Eigen::Success) {
        mu *= 4;
        continue;
      }
      const Eigen::VectorXd step = llt.solve(-g);
      Eigen::MatrixXd trial;
      Eigen::VectorXd rt;
      double et = energy;
      for (double alpha : {1.0, 2.0, 3.0}) {
        Eigen::MatrixXd candidate = x + alpha * Eigen::Map<const RowMajor>(step.data(), n, k);
        Eigen::VectorXd rc = squared_edge_lengths(candidate, edges) - target;
        const double ec = rc.squaredNorm();
        if (ec >= et) break;
        trial = std::move(candidate);
        rt = std::move(rc);
        et = ec;
      }
      if (et < energy) {
        x = std::move(trial);
        r = std::move(rt);
        energy = et;
        mu = std::max(mu / 3, 1e-300);
        accepted = true;
      } else {
        mu *= 4;
      }
    }
    if (!accepted) break;
  }
  return relative_residual(r, target);
}

}  // namespace

FanConfigurationSet::FanConfigurationSet(const FanDecomposition& fan, const Configuration& config)
    : original_(config) {
  if (fan.peripheral_order.size() != 1) throw Error("fan enumeration needs a single-fan decomposition");
  order_ = fan.peripheral_order.front();
  const Index k = static_cast<Index>(order_.size());
  if (k < 2) throw Error("fan needs at least two peripheral nodes");
  folds_ = k - 2;
  const int d = config.dim();

  if (fan.kind == FanKind::fan2d) {
    if (d != 2) throw Error("planar fan on a non-planar configuration");
    origin_ = config.point(fan.centers.at(0));
    axis_ = Eigen::VectorXd::Zero(2);
    e1_ = Eigen::Vector2d::UnitX();
    e2_ = Eigen::Vector2d::UnitY();
  } else if (fan.kind == FanKind::fan3d) {
    if (d != 3 || !fan.central_edge) throw Error("spatial fan needs a central edge in 3D");
    origin_ = config.point(fan.central_edge->i);
    const Eigen::Vector3d t = (config.point(fan.central_edge->j) - origin_).normalized();
    const Eigen::Vector3d r0 = config.point(order_.front()) - origin_;
    const Eigen::Vector3d q0 = r0 - t * t.dot(r0);
    axis_ = t;
    e1_ = q0.normalized();
    e2_ = t.cross(Eigen::Vector3d(e1_));
  } else {
    throw Error("fan enumeration supports single planar or spatial fans");
  }

  height_.resize(k);
  radius_.resize(k);
  increment_ = Eigen::VectorXd::Zero(k);
  Eigen::VectorXd angle(k);
  for (Index q = 0; q < k; ++q) {
    const Eigen::VectorXd r = config.point(order_[q]) - origin_;
    height_(q) = axis_.dot(r);
    const Eigen::VectorXd planar = r - axis_ * height_(q);
    radius_(q) = planar.norm();
    angle(q) = std::atan2(planar.dot(e2_), planar.dot(e1_));
    if (q > 0) increment_(q) = wrap_angle(angle(q) - angle(q - 1));
  }
  start_angle_ = angle(0);

  // Fan edges: spokes from the hub(s) and consecutive peripheral pairs.
  std::vector<Index> hubs = fan.kind == FanKind::fan3d ? std::vector<Index>{fan.central_edge->i, fan.central_edge->j}
                                                       : std::vector<Index>{fan.centers.at(0)};
  for (Index hub : hubs)
    for (Index x : order_) fan_edges_.push_back(make_edge(hub, x));
  for (Index q = 0; q + 1 < k; ++q) fan_edges_.push_back(make_edge(order_[q], order_[q + 1]));
  if (fan.kind == FanKind::fan3d) fan_edges_.push_back(*fan.central_edge);
  canonicalize(fan_edges_);
  fan_edges_.erase(std::remove(fan_edges_.begin(), fan_edges_.end(), fan.closing_edge), fan_edges_.end());

  distances_.resize(count());
  for (std::uint64_t mask = 0; mask < count(); ++mask) distances_[mask] = neighbor_distance(mask);
}

std::vector<int> FanConfigurationSet::sign_vector(std::uint64_t mask) const {
  std::vector<int> out(static_cast<std::size_t>(folds_));
  for (Index j = 0; j < folds_; ++j) out[static_cast<std::size_t>(j)] = (mask >> j) & 1 ? -1 : 1;
  return out;
}

double FanConfigurationSet::neighbor_distance(std::uint64_t mask) const {
  const Index k = static_cast<Index>(order_.size());
  double total = 0;
  for (Index q = 1; q < k; ++q) {
    const bool flipped = q >= 2 && ((mask >> (q - 2)) & 1);
    total += flipped ? -increment_(q) : increment_(q);
  }
  const double dh = height_(0) - height_(k - 1);
  const double r0 = radius_(0), r1 = radius_(k - 1);
  return std::sqrt(std::max(0.0, dh * dh + r0 * r0 + r1 * r1 - 2 * r0 * r1 * std::cos(total)));
}

Configuration FanConfigurationSet::realization(std::uint64_t mask) const {
  Eigen::MatrixXd coords = original_.coords();
  double angle = start_angle_;
  for (Index q = 0; q < static_cast<Index>(order_.size()); ++q) {
    if (q > 0) {
      const bool flipped = q >= 2 && ((mask >> (q - 2)) & 1);
      angle += flipped ? -increment_(q) : increment_(q);
    }
    const Eigen::VectorXd p =
        origin_ + axis_ * height_(q) + radius_(q) * (std::cos(angle) * e1_ + std::sin(angle) * e2_);
    coords.row(order_[static_cast<std::size_t>(q)]) = p.transpose();
  }
  return Configuration(std::move(coords), original_.labels());
}

FanConfigurationSet enumerate_fan_2d(const FanDecomposition& fan, const Configuration& config, Index max_folds) {
  if (fan.kind != FanKind::fan2d) throw Error("enumerate_fan_2d needs a planar single fan");
  const Index f = fan.peripheral_order.empty() ? 0 : static_cast<Index>(fan.peripheral_order.front().size()) - 2;
  if (f > max_folds) throw TooManyFolds("fan has " + std::to_string(f) + " folds, above the enumeration cap");
  return FanConfigurationSet(fan, config);
}

FanConfigurationSet enumerate_fan_3d(const FanDecomposition& fan, const Configuration& config, Index max_folds) {
  if (fan.kind != FanKind::fan3d) throw Error("enumerate_fan_3d needs a spatial single fan");
  const Index f = fan.peripheral_order.empty() ? 0 : static_cast<Index>(fan.peripheral_order.front().size()) - 2;
  if (f > max_folds) throw TooManyFolds("fan has " + std::to_string(f) + " folds, above the enumeration cap");
  return FanConfigurationSet(fan, config);
}

UnfoldedMaximum check_unfolded_maximum(const FanConfigurationSet& set) {
  const auto& dist = set.neighbor_distances();
  UnfoldedMaximum out;
  out.unfolded = dist.front();
  double best = out.unfolded;
  out.runner_up = 0;
  for (std::uint64_t mask = 1; mask < dist.size(); ++mask) {
    out.runner_up = std::max(out.runner_up, dist[mask]);
    best = std::max(best, dist[mask]);
  }
  for (std::uint64_t mask = 0; mask < dist.size(); ++mask)
    if (dist[mask] >= best * (1 - tol::eq)) out.argmax.push_back(mask);
  out.unique = out.argmax.size() == 1 && out.argmax.front() == 0;
  out.strict = dist.size() == 1 || out.runner_up < out.unfolded;
  return out;
}

double max_fan_edge_error(const FanConfigurationSet& set) {
  const EdgeList& edges = set.fan_edges();
  const Configuration base = set.realization(0);
  const Eigen::VectorXd target = squared_edge_lengths(base.coords(), edges).cwiseSqrt();
  double worst = 0;
  for (std::uint64_t mask = 0; mask < set.count(); ++mask) {
    const Eigen::VectorXd len = squared_edge_lengths(set.realization(mask).coords(), edges).cwiseSqrt();
    for (Index k = 0; k < len.size(); ++k) worst = std::max(worst, std::abs(len(k) - target(k)) / target(k));
  }
  return worst;
}

std::vector<FlexTrial> perturbation_flex_search(const Framework& fw, int ambient_dim, int trials, double magnitude,
                                                std::uint64_t seed) {
  const int d = fw.dim();
  if (ambient_dim < d) throw Error("ambient dimension must be at least the framework dimension");
  if (trials < 1) throw Error("need at least one trial");
  const Index n = fw.num_nodes();
  const Eigen::VectorXd target = squared_edge_lengths(fw.config.coords(), fw.edges);
  Eigen::MatrixXd lifted = Eigen::MatrixXd::Zero(n, ambient_dim);
  lifted.leftCols(d) = fw.config.coords();

  std::vector<FlexTrial> out;
  out.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    Eigen::MatrixXd x = lifted;
    for (Index i = 0; i < n; ++i)
      for (int a = 0; a < ambient_dim; ++a) x(i, a) += rng.uniform(-magnitude, magnitude);
    FlexTrial trial;
    trial.residual = solve_lengths(x, fw.edges, target);
    trial.converged = trial.residual < tol::eq;
    trial.config = Configuration(std::move(x), fw.config.labels());
    out.push_back(std::move(trial));
  }
  return out;
}

}  // namespace urigid
