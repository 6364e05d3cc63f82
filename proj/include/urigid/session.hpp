#pragma once

#include "urigid/configuration.hpp"
#include "urigid/construction.hpp"
#include "urigid/rigidity.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace urigid {

enum class EventKind { add, remove, move };

struct Event {
  EventKind kind = EventKind::add;
  NodeId id = 0;
  Eigen::VectorXd point;  // unused for remove
};

/// Edge between two stable node ids, smaller id first.
using IdEdge = std::pair<NodeId, NodeId>;

struct EdgeDelta {
  std::vector<IdEdge> added;
  std::vector<IdEdge> removed;

  bool empty() const { return added.empty() && removed.empty(); }
};

/// Edge set keyed by configuration labels rather than row indices.
std::set<IdEdge> labelled_edges(const Framework& fw);

EdgeDelta edge_delta(const Framework& prev, const Framework& next);

std::set<IdEdge> apply_delta(std::set<IdEdge> edges, const EdgeDelta& delta);

struct LogEntry {
  std::uint64_t epoch = 0;
  Event event;
  EdgeDelta delta;
  bool certified = false;
};

/// Minimal universally rigid topology over a changing node set.
///
/// Every event rebuilds the framework from scratch over the nodes sorted by
/// id. Events that cannot be built (degenerate point sets, unknown ids) throw
/// and leave the session untouched. A failed certificate does not reject the
/// event; it is recorded in `certified()` and in the history.
class Session {
 public:
  explicit Session(int dim);

  int dim() const { return dim_; }
  std::uint64_t epoch() const { return epoch_; }
  const std::map<NodeId, Eigen::VectorXd>& nodes() const { return nodes_; }
  const Framework& framework() const { return framework_; }
  const std::optional<FanDecomposition>& fan() const { return fan_; }
  const std::optional<RigidityReport>& report() const { return report_; }
  bool certified() const { return certified_; }
  const std::vector<LogEntry>& history() const { return history_; }

  EdgeDelta apply(const Event& event);

 private:
  int dim_;
  std::uint64_t epoch_ = 0;
  std::map<NodeId, Eigen::VectorXd> nodes_;
  Framework framework_;
  std::optional<FanDecomposition> fan_;
  std::optional<RigidityReport> report_;
  bool certified_ = true;
  std::vector<LogEntry> history_;
};

/// Value-style wrapper around Session::apply.
std::pair<Session, EdgeDelta> apply_event(Session session, const Event& event);

Session replay(int dim, std::span<const Event> events);

}  // namespace urigid
