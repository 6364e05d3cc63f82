#include "urigid/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace urigid {

namespace {

Eigen::Vector2d point2(const Configuration& c, Index i) { return c.coords().row(i).transpose().head<2>(); }
Eigen::Vector3d point3(const Configuration& c, Index i) { return c.coords().row(i).transpose().head<3>(); }

void rotate_to_min(std::vector<Index>& cycle) {
  if (cycle.empty()) return;
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
}

struct Plane {
  Eigen::Vector3d normal;
  double offset = 0;

  double distance(const Eigen::Vector3d& p) const { return normal.dot(p) - offset; }
};

Plane plane_through(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& c) {
  Plane pl;
  pl.normal = (b - a).cross(c - a);
  const double len = pl.normal.norm();
  if (len > 0) pl.normal /= len;
  pl.offset = pl.normal.dot(a);
  return pl;
}

struct HullFace {
  std::array<Index, 3> v;
  Plane plane;
  bool alive = true;
};

// Incremental hull in index order. Output may contain coplanar neighbours
// and non-strict vertices; the caller canonicalises facets afterwards.
std::vector<HullFace> incremental_hull(const Configuration& config, double tol) {
  const Index n = config.size();
  auto p = [&](Index i) { return point3(config, i); };

  const Index i0 = 0;
  Index i1 = 0;
  double best = 0;
  for (Index i = 0; i < n; ++i) {
    const double d = (p(i) - p(i0)).norm();
    if (d > best) best = d, i1 = i;
  }
  if (best <= tol) throw DegenerateInput("all points coincide");

  const Eigen::Vector3d axis = (p(i1) - p(i0)).normalized();
  Index i2 = 0;
  best = 0;
  for (Index i = 0; i < n; ++i) {
    const Eigen::Vector3d r = p(i) - p(i0);
    const double d = (r - axis * axis.dot(r)).norm();
    if (d > best) best = d, i2 = i;
  }
  if (best <= tol) throw DegenerateInput("points are collinear");

  const Plane base = plane_through(p(i0), p(i1), p(i2));
  Index i3 = 0;
  best = 0;
  for (Index i = 0; i < n; ++i) {
    const double d = std::abs(base.distance(p(i)));
    if (d > best) best = d, i3 = i;
  }
  if (best <= tol) throw DegenerateInput("points are coplanar");

  std::vector<HullFace> faces;
  auto add_face = [&](Index a, Index b, Index c) {
    faces.push_back({{a, b, c}, plane_through(p(a), p(b), p(c)), true});
  };
  const std::array<Index, 4> tet{i0, i1, i2, i3};
  for (int k = 0; k < 4; ++k) {
    std::array<Index, 3> f{};
    int m = 0;
    for (int q = 0; q < 4; ++q)
      if (q != k) f[m++] = tet[q];
    if (plane_through(p(f[0]), p(f[1]), p(f[2])).distance(p(tet[k])) > 0) std::swap(f[1], f[2]);
    add_face(f[0], f[1], f[2]);
  }

  for (Index q = 0; q < n; ++q) {
    if (std::find(tet.begin(), tet.end(), q) != tet.end()) continue;
    const Eigen::Vector3d pq = p(q);
    std::set<std::pair<Index, Index>> visible_edges;
    bool any = false;
    for (HullFace& f : faces) {
      if (!f.alive || f.plane.distance(pq) <= tol) continue;
      any = true;
      f.alive = false;
      for (int k = 0; k < 3; ++k) visible_edges.insert({f.v[k], f.v[(k + 1) % 3]});
    }
    if (!any) continue;
    for (const auto& [a, b] : visible_edges)
      if (!visible_edges.count({b, a})) add_face(a, b, q);
  }

  std::erase_if(faces, [](const HullFace& f) { return !f.alive; });
  return faces;
}

}  // namespace

std::vector<Index> strict_hull_2d(const std::vector<Eigen::Vector2d>& points,
                                  const std::vector<Index>& ids, double tol) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a].x() != points[b].x()) return points[a].x() < points[b].x();
    if (points[a].y() != points[b].y()) return points[a].y() < points[b].y();
    return ids[a] < ids[b];
  });

  // Monotone chain. The middle point is dropped unless it lies farther than
  // `tol` outside the chord from its predecessor to the new point.
  auto sticks_out = [&](std::size_t o, std::size_t a, std::size_t b) {
    const double chord = (points[b] - points[o]).norm();
    return -orient2d(points[o], points[b], points[a]) > tol * std::max(chord, 1e-300);
  };

  std::vector<std::size_t> hull;
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t start = hull.size();
    for (std::size_t k = 0; k < order.size(); ++k) {
      const std::size_t idx = pass == 0 ? order[k] : order[order.size() - 1 - k];
      while (hull.size() >= start + 2 && !sticks_out(hull[hull.size() - 2], hull.back(), idx)) hull.pop_back();
      hull.push_back(idx);
    }
    hull.pop_back();
  }

  std::vector<Index> boundary;
  for (std::size_t h : hull) boundary.push_back(ids[h]);
  rotate_to_min(boundary);
  return boundary;
}

HullResult2D convex_hull_2d(const Configuration& config) {
  if (config.dim() != 2) throw Error("convex_hull_2d needs a planar configuration");
  if (config.size() < 3 || affine_rank(config) < 2) throw DegenerateInput("points are collinear");

  std::vector<Eigen::Vector2d> pts;
  std::vector<Index> ids;
  for (Index i = 0; i < config.size(); ++i) {
    pts.push_back(point2(config, i));
    ids.push_back(i);
  }
  HullResult2D hull{strict_hull_2d(pts, ids, config.geom_tolerance())};
  if (hull.boundary.size() < 3) throw DegenerateInput("points are collinear");
  return hull;
}

HullResult3D convex_hull_3d(const Configuration& config) {
  if (config.dim() != 3) throw Error("convex_hull_3d needs a spatial configuration");
  if (config.size() < 4 || affine_rank(config) < 3) throw DegenerateInput("points are coplanar");

  const double tol = config.geom_tolerance();
  const double diag = config.bbox_diagonal();
  const Index n = config.size();
  auto p = [&](Index i) { return point3(config, i); };

  // Supporting planes, one per facet of the true hull.
  std::vector<Plane> facets;
  for (const HullFace& f : incremental_hull(config, tol)) {
    const Eigen::Vector3d raw = (p(f.v[1]) - p(f.v[0])).cross(p(f.v[2]) - p(f.v[0]));
    if (raw.norm() <= tol * diag) continue;
    const Plane& pl = f.plane;
    bool supporting = true;
    for (Index i = 0; i < n && supporting; ++i) supporting = pl.distance(p(i)) <= tol;
    if (!supporting) continue;
    const bool known = std::any_of(facets.begin(), facets.end(), [&](const Plane& g) {
      return g.normal.dot(pl.normal) > 0 && std::abs(g.distance(p(f.v[0]))) <= tol &&
             std::abs(g.distance(p(f.v[1]))) <= tol && std::abs(g.distance(p(f.v[2]))) <= tol;
    });
    if (!known) facets.push_back(pl);
  }

  HullResult3D hull;
  for (const Plane& pl : facets) {
    const Eigen::Vector3d u = pl.normal.unitOrthogonal();
    const Eigen::Vector3d v = pl.normal.cross(u);
    std::vector<Eigen::Vector2d> pts;
    std::vector<Index> ids;
    for (Index i = 0; i < n; ++i) {
      if (std::abs(pl.distance(p(i))) > tol) continue;
      pts.emplace_back(u.dot(p(i)), v.dot(p(i)));
      ids.push_back(i);
    }
    const std::vector<Index> cycle = strict_hull_2d(pts, ids, tol);
    for (std::size_t k = 1; k + 1 < cycle.size(); ++k) hull.faces.push_back({cycle[0], cycle[k], cycle[k + 1]});
  }
  std::sort(hull.faces.begin(), hull.faces.end());

  std::map<Edge, std::vector<Index>> incident;
  for (std::size_t f = 0; f < hull.faces.size(); ++f)
    for (int k = 0; k < 3; ++k)
      incident[make_edge(hull.faces[f][k], hull.faces[f][(k + 1) % 3])].push_back(static_cast<Index>(f));
  for (const auto& [e, fs] : incident) {
    if (fs.size() != 2) throw DegenerateInput("hull facets do not close up; input is too close to degenerate");
    hull.adjacency[e] = {fs[0], fs[1]};
  }
  return hull;
}

std::vector<Index> HullResult3D::vertices() const {
  std::vector<Index> out;
  for (const auto& f : faces) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CenterSelection select_center_2d(const HullResult2D& hull) {
  const auto& b = hull.boundary;
  if (b.size() < 3) throw Error("hull boundary needs at least three vertices");
  const std::size_t k = static_cast<std::size_t>(std::min_element(b.begin(), b.end()) - b.begin());
  const std::size_t m = b.size();
  return {b[k], {b[(k + m - 1) % m], b[(k + 1) % m]}};
}

CentralEdgeSelection select_central_edge_3d(const HullResult3D& hull) {
  if (hull.adjacency.empty()) throw Error("hull has no edges");
  const auto& [edge, faces] = *hull.adjacency.begin();
  std::array<Index, 2> apex{};
  for (int k = 0; k < 2; ++k) {
    for (Index v : hull.faces[faces[k]])
      if (v != edge.i && v != edge.j) apex[k] = v;
  }
  return {edge, {std::min(apex[0], apex[1]), std::max(apex[0], apex[1])}};
}

}  // namespace urigid
