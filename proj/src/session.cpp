#include "urigid/session.hpp"

#include "urigid/geometry.hpp"

#include <algorithm>
#include <iterator>

namespace urigid {

std::set<IdEdge> labelled_edges(const Framework& fw) {
  std::set<IdEdge> out;
  for (const Edge& e : fw.edges) {
    const NodeId a = fw.config.label(e.i), b = fw.config.label(e.j);
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

EdgeDelta edge_delta(const Framework& prev, const Framework& next) {
  const std::set<IdEdge> before = labelled_edges(prev);
  const std::set<IdEdge> after = labelled_edges(next);
  EdgeDelta delta;
  std::set_difference(after.begin(), after.end(), before.begin(), before.end(), std::back_inserter(delta.added));
  std::set_difference(before.begin(), before.end(), after.begin(), after.end(), std::back_inserter(delta.removed));
  return delta;
}

std::set<IdEdge> apply_delta(std::set<IdEdge> edges, const EdgeDelta& delta) {
  for (const IdEdge& e : delta.removed) edges.erase(e);
  for (const IdEdge& e : delta.added) edges.insert(e);
  return edges;
}

namespace {

struct Built {
  Framework framework;
  std::optional<FanDecomposition> fan;
  std::optional<RigidityReport> report;
  bool certified = true;
};

Built rebuild(int dim, const std::map<NodeId, Eigen::VectorXd>& nodes) {
  const Index n = static_cast<Index>(nodes.size());
  Eigen::MatrixXd coords(n, dim);
  std::vector<NodeId> ids;
  for (const auto& [id, p] : nodes) {
    coords.row(static_cast<Index>(ids.size())) = p.transpose();
    ids.push_back(id);
  }
  Configuration config(std::move(coords), std::move(ids));

  Framework fw;
  std::optional<FanDecomposition> fan;
  std::optional<RigidityReport> report;
  bool certified = true;
  if (n <= dim) {
    // Too few nodes to span the space; the complete graph is the only choice.
    fw = Framework{config, complete_graph(n)};
  } else {
    Construction built = build_framework(config);
    fw = std::move(built.framework);
    fan = std::move(built.fan);
    try {
      report = superstability_test(fw);
      certified = report->superstable;
    } catch (const StressSearchUnsupported&) {
      report = inconclusive_report(fw);
      certified = false;
    }
  }

  return {std::move(fw), std::move(fan), std::move(report), certified};
}

}  // namespace

Session::Session(int dim) : dim_(dim) {
  if (dim != 2 && dim != 3) throw Error("sessions are 2D or 3D");
  framework_.config = Configuration(Eigen::MatrixXd(0, dim));
}

EdgeDelta Session::apply(const Event& event) {
  std::map<NodeId, Eigen::VectorXd> next = nodes_;
  const bool exists = next.count(event.id) > 0;
  switch (event.kind) {
    case EventKind::add:
      if (exists) throw DuplicateId("node " + std::to_string(event.id) + " already exists");
      if (event.point.size() != dim_) throw Error("event point has the wrong dimension");
      next.emplace(event.id, event.point);
      break;
    case EventKind::move:
      if (!exists) throw UnknownId("node " + std::to_string(event.id) + " does not exist");
      if (event.point.size() != dim_) throw Error("event point has the wrong dimension");
      next[event.id] = event.point;
      break;
    case EventKind::remove:
      if (!exists) throw UnknownId("node " + std::to_string(event.id) + " does not exist");
      next.erase(event.id);
      break;
  }
  if (next.empty()) throw Error("a session must keep at least one node");
  if (!event.point.allFinite()) throw Error("event point is not finite");

  Built built = rebuild(dim_, next);
  EdgeDelta delta = edge_delta(framework_, built.framework);

  nodes_ = std::move(next);
  framework_ = std::move(built.framework);
  fan_ = std::move(built.fan);
  report_ = std::move(built.report);
  certified_ = built.certified;
  ++epoch_;
  history_.push_back({epoch_, event, delta, certified_});
  return delta;
}

std::pair<Session, EdgeDelta> apply_event(Session session, const Event& event) {
  EdgeDelta delta = session.apply(event);
  return {std::move(session), std::move(delta)};
}

Session replay(int dim, std::span<const Event> events) {
  Session s(dim);
  for (const Event& e : events) s.apply(e);
  return s;
}

}  // namespace urigid
