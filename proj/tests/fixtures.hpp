#pragma once

#include "urigid/configuration.hpp"

#include <cmath>
#include <numbers>
#include <initializer_list>

namespace urigid::fixtures {

inline Configuration points(std::initializer_list<std::initializer_list<double>> rows) {
  const Index n = static_cast<Index>(rows.size());
  const Index d = static_cast<Index>(rows.begin()->size());
  Eigen::MatrixXd x(n, d);
  Index i = 0;
  for (const auto& row : rows) {
    Index a = 0;
    for (double v : row) x(i, a++) = v;
    ++i;
  }
  return Configuration(std::move(x));
}

inline Framework framework(Configuration config, EdgeList edges) {
  canonicalize(edges);
  return Framework{std::move(config), std::move(edges)};
}

inline Configuration regular_polygon(Index n, double radius = 1.0) {
  Eigen::MatrixXd x(n, 2);
  for (Index i = 0; i < n; ++i) {
    const double t = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    x(i, 0) = radius * std::cos(t);
    x(i, 1) = radius * std::sin(t);
  }
  return Configuration(std::move(x));
}

// Fig. 1 of the rigidity-class figure: (a) flexible square, (b) rigid but not
// globally rigid, (c) globally rigid wheel, (d) and (e) Grunbaum polygons.
inline Framework square_cycle() {
  return framework(points({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

inline Framework rigid_not_global() {
  return framework(points({{0, 0}, {1, 0.1}, {0.4, 0.9}, {1.3, 1.2}}), {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
}

inline Framework wheel() {
  return framework(points({{0, 0}, {2, 0.2}, {2.1, 1.9}, {-0.1, 2}, {0.9, 1.1}}),
                   {{0, 4}, {1, 4}, {2, 4}, {3, 4}, {0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

// Center 0, all other vertices joined to it, consecutive rim edges, and the
// closing edge between the center's two rim neighbors.
inline Framework grunbaum_polygon(Index n) {
  EdgeList edges;
  for (Index i = 1; i < n; ++i) edges.push_back({0, i});
  for (Index i = 1; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({1, n - 1});
  return framework(regular_polygon(n), std::move(edges));
}

}  // namespace urigid::fixtures
