#include "urigid/construction.hpp"

#include "urigid/geometry.hpp"
#include "urigid/rigidity.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace urigid {

namespace {

struct AngularKey {
  double angle;
  double radius;
  Index index;

  friend auto operator<=>(const AngularKey&, const AngularKey&) = default;
};

// Orders `nodes` by (angle, radius, index), keeping `first` in front and
// `last` at the back when given.
std::vector<Index> angular_order(std::vector<AngularKey> keys, std::optional<Index> first,
                                 std::optional<Index> last) {
  std::sort(keys.begin(), keys.end());
  std::vector<Index> order;
  if (first) order.push_back(*first);
  for (const AngularKey& k : keys)
    if (k.index != first && k.index != last) order.push_back(k.index);
  if (last) order.push_back(*last);
  return order;
}

struct EdgeRole {
  enum Kind { spoke, peripheral, closing, central } kind;
};

std::map<Edge, EdgeRole::Kind> expected_edges(const FanDecomposition& fan) {
  std::map<Edge, EdgeRole::Kind> out;
  auto add = [&](Index a, Index b, EdgeRole::Kind k) { out.emplace(make_edge(a, b), k); };
  const bool spatial = fan.kind == FanKind::fan3d || fan.kind == FanKind::multifan3d;
  if (spatial && fan.central_edge) add(fan.central_edge->i, fan.central_edge->j, EdgeRole::central);
  for (std::size_t k = 0; k < fan.peripheral_order.size(); ++k) {
    const auto& order = fan.peripheral_order[k];
    std::vector<Index> hubs;
    if (spatial && fan.central_edge) hubs = {fan.central_edge->i, fan.central_edge->j};
    else if (k < fan.centers.size()) hubs = {fan.centers[k]};
    for (Index hub : hubs)
      for (Index x : order) add(hub, x, EdgeRole::spoke);
    for (std::size_t q = 0; q + 1 < order.size(); ++q) add(order[q], order[q + 1], EdgeRole::peripheral);
  }
  add(fan.closing_edge.i, fan.closing_edge.j, EdgeRole::closing);
  return out;
}

EdgeList expected_folds(const FanDecomposition& fan) {
  EdgeList folds;
  const bool spatial = fan.kind == FanKind::fan3d || fan.kind == FanKind::multifan3d;
  for (std::size_t k = 0; k < fan.peripheral_order.size(); ++k) {
    const auto& order = fan.peripheral_order[k];
    Index hub = 0;
    if (spatial && fan.central_edge) hub = fan.central_edge->i;
    else if (k < fan.centers.size()) hub = fan.centers[k];
    for (std::size_t q = 1; q + 1 < order.size(); ++q) folds.push_back(make_edge(hub, order[q]));
  }
  if (fan.kind == FanKind::multifan2d && fan.centers.size() == 2)
    folds.push_back(make_edge(fan.centers[0], fan.centers[1]));
  std::sort(folds.begin(), folds.end());
  return folds;
}

Framework assemble(const Configuration& config, const FanDecomposition& fan) {
  Framework fw{config, {}};
  for (const auto& [e, role] : expected_edges(fan)) fw.edges.push_back(e);
  canonicalize(fw.edges);
  return fw;
}

double cross2(const Eigen::Vector2d& a, const Eigen::Vector2d& b) { return a.x() * b.y() - a.y() * b.x(); }

Eigen::Vector2d pt2(const Configuration& c, Index i) { return c.coords().row(i).transpose().head<2>(); }

void require_planar(const Configuration& config) {
  if (config.dim() != 2) throw Error("expected a planar configuration");
  if (config.size() < 3 || affine_rank(config) < 2) throw DegenerateInput("points are collinear");
}

}  // namespace

std::string_view to_string(FanKind kind) {
  switch (kind) {
    case FanKind::fan2d: return "fan2d";
    case FanKind::fan3d: return "fan3d";
    case FanKind::multifan2d: return "multifan2d";
    case FanKind::multifan3d: return "multifan3d";
  }
  return "fan2d";
}

FanKind fan_kind_from_string(std::string_view name) {
  for (FanKind k : {FanKind::fan2d, FanKind::fan3d, FanKind::multifan2d, FanKind::multifan3d})
    if (to_string(k) == name) return k;
  throw ParseError("unknown fan kind: " + std::string(name));
}

Construction build_grunbaum_2d(const Configuration& config) {
  require_planar(config);
  const double tol = config.geom_tolerance();
  const CenterSelection sel = select_center_2d(convex_hull_2d(config));
  const Index c = sel.center;
  const auto [u, v] = sel.neighbors;

  const Eigen::Vector2d pc = pt2(config, c);
  const Eigen::Vector2d du = pt2(config, u) - pc;
  const double turn = cross2(du, pt2(config, v) - pc) > 0 ? 1.0 : -1.0;

  std::vector<AngularKey> keys;
  for (Index x = 0; x < config.size(); ++x) {
    if (x == c) continue;
    const Eigen::Vector2d d = pt2(config, x) - pc;
    if (d.norm() <= tol) throw DegenerateInput("a node coincides with the fan center");
    keys.push_back({std::max(0.0, std::atan2(turn * cross2(du, d), du.dot(d))), d.norm(), x});
  }

  FanDecomposition fan;
  fan.kind = FanKind::fan2d;
  fan.centers = {c};
  fan.neighbors = {u, v};
  fan.peripheral_order = {angular_order(std::move(keys), u, v)};
  fan.closing_edge = make_edge(u, v);
  fan.folds = expected_folds(fan);
  return {assemble(config, fan), fan};
}

Construction build_grunbaum_3d(const Configuration& config) {
  if (config.dim() != 3) throw Error("expected a spatial configuration");
  if (config.size() < 4 || affine_rank(config) < 3) throw DegenerateInput("points are coplanar");
  const double tol = config.geom_tolerance();
  const CentralEdgeSelection sel = select_central_edge_3d(convex_hull_3d(config));
  const Index a = sel.central.i, b = sel.central.j;
  const auto [u, v] = sel.neighbors;

  const Eigen::Vector3d pa = config.point(a);
  const Eigen::Vector3d axis = (config.point(b) - pa).normalized();
  auto project = [&](const Eigen::Vector3d& p) -> Eigen::Vector3d {
    const Eigen::Vector3d r = p - pa;
    return r - axis * axis.dot(r);
  };
  const Eigen::Vector3d e1 = project(config.point(u)).normalized();
  const Eigen::Vector3d e2 = axis.cross(e1);
  auto raw_angle = [&](const Eigen::Vector3d& q) { return std::atan2(q.dot(e2), q.dot(e1)); };
  // The hull interior lies strictly inside the wedge at the central edge.
  const Eigen::Vector3d centroid = config.coords().colwise().mean().transpose();
  const double turn = raw_angle(project(centroid)) >= 0 ? 1.0 : -1.0;

  std::vector<AngularKey> keys;
  std::vector<Eigen::Vector3d> projected;
  for (Index x = 0; x < config.size(); ++x) {
    if (x == a || x == b) continue;
    const Eigen::Vector3d q = project(config.point(x));
    if (q.norm() <= tol) throw ProjectionDegenerate("a node projects onto the central edge");
    for (const Eigen::Vector3d& other : projected)
      if ((other - q).norm() <= tol) throw ProjectionDegenerate("two nodes coincide in projection along the central edge");
    projected.push_back(q);
    keys.push_back({std::max(0.0, turn * raw_angle(q)), q.norm(), x});
  }

  FanDecomposition fan;
  fan.kind = FanKind::fan3d;
  fan.centers = {a, b};
  fan.central_edge = Edge{a, b};
  fan.neighbors = {u, v};
  fan.peripheral_order = {angular_order(std::move(keys), u, v)};
  fan.closing_edge = make_edge(u, v);
  fan.folds = expected_folds(fan);
  return {assemble(config, fan), fan};
}

std::optional<FanDecomposition> two_fan_decomposition(const Configuration& config, Index c1, Index c2,
                                                      bool c1_takes_left) {
  const double tol = config.geom_tolerance();
  const Eigen::Vector2d p1 = pt2(config, c1), p2 = pt2(config, c2);
  const double base = (p2 - p1).norm();
  if (base <= tol) return std::nullopt;

  std::vector<AngularKey> left, right;
  for (Index x = 0; x < config.size(); ++x) {
    if (x == c1 || x == c2) continue;
    const double side = orient2d(p1, p2, pt2(config, x)) / base;
    if (std::abs(side) <= tol) return std::nullopt;
    (side > 0 ? left : right).push_back({0, 0, x});
  }
  if (left.empty() || right.empty()) return std::nullopt;

  auto keyed = [&](std::vector<AngularKey> keys, Index hub, Index other) {
    const Eigen::Vector2d ref = pt2(config, other) - pt2(config, hub);
    for (AngularKey& k : keys) {
      const Eigen::Vector2d d = pt2(config, k.index) - pt2(config, hub);
      k.angle = std::atan2(std::abs(cross2(ref, d)), ref.dot(d));
      k.radius = d.norm();
    }
    return keys;
  };
  auto& mine = c1_takes_left ? left : right;
  auto& theirs = c1_takes_left ? right : left;

  FanDecomposition fan;
  fan.kind = FanKind::multifan2d;
  fan.centers = {c1, c2};
  fan.peripheral_order = {angular_order(keyed(mine, c1, c2), c2, std::nullopt),
                          angular_order(keyed(theirs, c2, c1), c1, std::nullopt)};
  const Index u = fan.peripheral_order[0].back();
  const Index v = fan.peripheral_order[1].back();
  fan.neighbors = {u, v};
  fan.closing_edge = make_edge(u, v);
  fan.folds = expected_folds(fan);

  const Eigen::Vector2d pu = pt2(config, u), pv = pt2(config, v);
  const double chord = (pv - pu).norm();
  const double s1 = orient2d(pu, pv, p1) / chord;
  const double s2 = orient2d(pu, pv, p2) / chord;
  if (std::abs(s1) <= tol || std::abs(s2) <= tol || (s1 > 0) == (s2 > 0)) return std::nullopt;
  return fan;
}

Construction build_multifan_2d(const Configuration& config, int num_centers) {
  if (num_centers != 2) throw Error("only two-fan frameworks are supported");
  require_planar(config);
  if (config.size() < 5) throw NoValidPartition("two-fan frameworks need at least five nodes");

  const Index n = config.size();
  for (Index c1 = 0; c1 < n; ++c1) {
    for (Index c2 = c1 + 1; c2 < n; ++c2) {
      for (bool c1_takes_left : {true, false}) {
        const auto fan = two_fan_decomposition(config, c1, c2, c1_takes_left);
        if (!fan) continue;
        Construction out{assemble(config, *fan), *fan};
        try {
          if (superstability_test(out.framework).superstable) return out;
        } catch (const Error&) {
          // Rejected candidate; keep searching.
        }
      }
    }
  }
  throw NoValidPartition("no center pair lies on opposite sides of its closing edge");
}

Construction build_framework(const Configuration& config, const BuildOptions& options) {
  if (options.multifan_centers > 0) {
    if (config.dim() != 2) throw Error("multi-fan construction is only available in 2D");
    return build_multifan_2d(config, options.multifan_centers);
  }
  if (config.dim() == 2) return build_grunbaum_2d(config);
  if (config.dim() == 3) return build_grunbaum_3d(config);
  throw Error("configurations must be 2D or 3D");
}

ValidationResult validate_decomposition(const Framework& fw, const FanDecomposition& fan) {
  ValidationResult res;
  auto fail = [&](std::string reason) {
    res.ok = false;
    if (std::find(res.reasons.begin(), res.reasons.end(), reason) == res.reasons.end())
      res.reasons.push_back(std::move(reason));
  };

  const Index n = fw.num_nodes();
  std::set<Edge> actual;
  for (const Edge& e : fw.edges) {
    if (e.i < 0 || e.j < 0 || e.i >= n || e.j >= n) {
      fail("index out of range");
      continue;
    }
    if (e.i == e.j || !actual.insert(make_edge(e.i, e.j)).second) fail("not simple");
  }

  std::size_t expected_fans = 0;
  switch (fan.kind) {
    case FanKind::fan2d:
      expected_fans = 1;
      if (fan.centers.size() != 1) fail("wrong number of centers");
      break;
    case FanKind::multifan2d:
      expected_fans = 2;
      if (fan.centers.size() != 2) fail("wrong number of centers");
      break;
    case FanKind::fan3d:
      expected_fans = 1;
      if (!fan.central_edge) fail("missing central edge");
      break;
    case FanKind::multifan3d:
      fail("unsupported kind");
      return res;
  }
  if (fan.peripheral_order.size() != expected_fans) {
    fail("wrong number of peripheral orders");
    return res;
  }
  for (const auto& order : fan.peripheral_order)
    if (order.size() < 2) fail("peripheral order too short");
  if (!res.ok) return res;

  auto in_range = [&](Index x) { return x >= 0 && x < n; };
  std::vector<int> covered(static_cast<std::size_t>(n), 0);
  auto cover = [&](Index x) {
    if (!in_range(x)) fail("index out of range");
    else ++covered[static_cast<std::size_t>(x)];
  };
  if (fan.kind == FanKind::fan3d) {
    cover(fan.central_edge->i);
    cover(fan.central_edge->j);
  } else {
    for (Index c : fan.centers) cover(c);
  }
  for (std::size_t k = 0; k < fan.peripheral_order.size(); ++k) {
    const auto& order = fan.peripheral_order[k];
    // In a two-fan framework each order starts at the other center.
    const std::size_t skip = fan.kind == FanKind::multifan2d ? 1 : 0;
    if (skip && order.front() != fan.centers[1 - k]) fail("two-fan order must start at the other center");
    for (std::size_t q = skip; q < order.size(); ++q) cover(order[q]);
  }
  if (!res.ok) return res;
  if (std::any_of(covered.begin(), covered.end(), [](int c) { return c != 1; })) fail("node coverage");

  std::pair<Index, Index> ends;
  if (fan.kind == FanKind::multifan2d)
    ends = {fan.peripheral_order[0].back(), fan.peripheral_order[1].back()};
  else
    ends = {fan.peripheral_order[0].front(), fan.peripheral_order[0].back()};
  if (ends != fan.neighbors) fail("neighbors do not end the peripheral order");
  if (fan.closing_edge != make_edge(fan.neighbors.first, fan.neighbors.second))
    fail("closing edge does not join neighbors");

  const auto expected = expected_edges(fan);
  for (const auto& [e, role] : expected) {
    if (actual.count(e)) continue;
    switch (role) {
      case EdgeRole::spoke: fail("missing center spoke"); break;
      case EdgeRole::peripheral: fail("missing peripheral edge"); break;
      case EdgeRole::closing: fail("missing closing edge"); break;
      case EdgeRole::central: fail("missing central edge"); break;
    }
  }
  for (const Edge& e : actual)
    if (!expected.count(e)) fail("unexpected edge");

  EdgeList folds = fan.folds;
  for (Edge& e : folds) e = make_edge(e.i, e.j);
  std::sort(folds.begin(), folds.end());
  const EdgeList want = expected_folds(fan);
  if (folds.size() != want.size()) fail("fold count mismatch");
  else if (folds != want) fail("fold mismatch");
  return res;
}

}  // namespace urigid
