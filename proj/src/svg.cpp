#include "urigid/svg.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>

namespace urigid {

namespace {

constexpr double canvas = 640;
constexpr double margin = 40;

std::string num(double v) {
  if (std::abs(v) < 5e-4) v = 0;  // avoid "-0.000"
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 3);
  return std::string(buf.data(), ptr);
}

Eigen::MatrixXd project(const Framework& fw, const std::optional<FanDecomposition>& fan) {
  const Eigen::MatrixXd& x = fw.config.coords();
  if (fw.dim() == 2) return x;
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();
  if (fan && fan->central_edge) {
    const Eigen::Vector3d t = fw.config.point(fan->central_edge->j) - fw.config.point(fan->central_edge->i);
    if (t.norm() > 0) axis = t.normalized();
  }
  const Eigen::Vector3d u = axis.unitOrthogonal();
  const Eigen::Vector3d v = axis.cross(u);
  Eigen::MatrixXd out(x.rows(), 2);
  out.col(0) = x * u;
  out.col(1) = x * v;
  return out;
}

}  // namespace

std::string render_svg(const Framework& fw, const std::optional<FanDecomposition>& fan,
                       const std::optional<Stress>& stress) {
  if (stress && stress->size() != fw.num_edges()) throw Error("stress has the wrong number of entries");
  const Eigen::MatrixXd p = project(fw, fan);
  const Index n = p.rows();

  Eigen::Vector2d lo = Eigen::Vector2d::Zero(), hi = Eigen::Vector2d::Ones();
  if (n > 0) {
    lo = p.colwise().minCoeff().transpose();
    hi = p.colwise().maxCoeff().transpose();
  }
  const double extent = std::max((hi - lo).maxCoeff(), 1e-300);
  const double scale = (canvas - 2 * margin) / extent;
  const Eigen::Vector2d mid = (lo + hi) / 2;
  auto sx = [&](Index i) { return num(canvas / 2 + scale * (p(i, 0) - mid(0))); };
  auto sy = [&](Index i) { return num(canvas / 2 - scale * (p(i, 1) - mid(1))); };

  std::set<Index> black, grey;
  if (fan) {
    black.insert(fan->centers.begin(), fan->centers.end());
    if (fan->central_edge) black.insert({fan->central_edge->i, fan->central_edge->j});
    for (Index k : {fan->neighbors.first, fan->neighbors.second})
      if (!black.count(k)) grey.insert(k);
  }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" height=\"640\" viewBox=\"0 0 640 640\">\n";
  out += "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";
  out += "<g stroke=\"black\" stroke-linecap=\"round\">\n";
  for (Index k = 0; k < fw.num_edges(); ++k) {
    const Edge& e = fw.edges[static_cast<std::size_t>(k)];
    std::string style;
    if (!stress) {
      style = " stroke-width=\"1\"";
    } else {
      const double w = (*stress)(k);
      if (w > tol::eq) style = " stroke-width=\"1\"";
      else if (w < -tol::eq) style = " stroke-width=\"3\"";
      else style = " stroke-width=\"1\" stroke-dasharray=\"6,4\"";
    }
    out += "<line class=\"edge\" x1=\"" + sx(e.i) + "\" y1=\"" + sy(e.i) + "\" x2=\"" + sx(e.j) + "\" y2=\"" + sy(e.j) +
           "\"" + style + "/>\n";
  }
  out += "</g>\n<g stroke=\"black\" stroke-width=\"1\">\n";
  for (Index i = 0; i < n; ++i) {
    const char* fill = black.count(i) ? "black" : grey.count(i) ? "grey" : "white";
    out += "<circle class=\"node\" cx=\"" + sx(i) + "\" cy=\"" + sy(i) + "\" r=\"6\" fill=\"" + fill + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace urigid
