#include "urigid/random.hpp"
#include "urigid/session.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace urigid;

namespace {

Event add(NodeId id, Eigen::VectorXd p) { return {EventKind::add, id, std::move(p)}; }
Event remove_node(NodeId id) { return {EventKind::remove, id, {}}; }
Event move(NodeId id, Eigen::VectorXd p) { return {EventKind::move, id, std::move(p)}; }

Eigen::VectorXd pt(double x, double y) { return Eigen::Vector2d(x, y); }

std::vector<Event> random_script(int dim, int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Event> events;
  std::vector<NodeId> live;
  NodeId next_id = 100;
  auto point = [&] {
    Eigen::VectorXd p(dim);
    for (int a = 0; a < dim; ++a) p(a) = rng.uniform();
    return p;
  };
  for (int k = 0; k < count; ++k) {
    const double u = rng.uniform();
    if (live.size() < static_cast<std::size_t>(dim + 3) || u < 0.5) {
      events.push_back(add(next_id, point()));
      live.push_back(next_id++);
    } else if (u < 0.75) {
      const std::size_t at = rng.next() % live.size();
      events.push_back(remove_node(live[at]));
      live.erase(live.begin() + static_cast<std::ptrdiff_t>(at));
    } else {
      events.push_back(move(live[rng.next() % live.size()], point()));
    }
  }
  return events;
}

}  // namespace

TEST(Session, TriangleToQuadrilateral) {
  Session s(2);
  s.apply(add(1, pt(0, 0)));
  s.apply(add(2, pt(1, 0)));
  s.apply(add(3, pt(0, 1)));
  EXPECT_EQ(s.framework().num_edges(), 3);
  const EdgeDelta delta = s.apply(add(4, pt(1.2, 1.1)));
  EXPECT_EQ(s.framework().num_edges(), 6);
  EXPECT_EQ(delta.added.size(), 3u);
  EXPECT_TRUE(delta.removed.empty());
  EXPECT_EQ(s.epoch(), 4u);
  EXPECT_TRUE(s.certified());
}

TEST(Session, RemoveNonCenterNode) {
  Session s(2);
  const Configuration c = random_configuration(10, 2, 5);
  for (Index i = 0; i < 10; ++i) s.apply(add(i, c.point(i)));
  EXPECT_EQ(s.framework().num_edges(), 18);
  const NodeId center = s.framework().config.label(s.fan()->centers.front());
  const NodeId victim = center == 0 ? 1 : 0;
  s.apply(remove_node(victim));
  EXPECT_EQ(s.framework().num_edges(), 16);
  EXPECT_TRUE(s.certified());
}

TEST(Session, RandomScriptsStayCertified) {
  for (int dim : {2, 3}) {
    Session s(dim);
    for (const Event& e : random_script(dim, 50, 77 + static_cast<std::uint64_t>(dim))) {
      s.apply(e);
      const Index n = s.framework().num_nodes();
      EXPECT_EQ(s.framework().num_edges(), minimal_edge_count(n, dim));
      EXPECT_TRUE(s.certified()) << "epoch " << s.epoch();
    }
    EXPECT_EQ(s.epoch(), 50u);
    EXPECT_EQ(s.history().size(), 50u);
  }
}

TEST(Session, ReplayReproducesFinalState) {
  const auto script = random_script(2, 40, 9);
  const Session a = replay(2, script);
  const Session b = replay(2, script);
  EXPECT_EQ(a.framework().edges, b.framework().edges);
  EXPECT_EQ(a.framework().config.coords(), b.framework().config.coords());
  EXPECT_EQ(a.framework().config.labels(), b.framework().config.labels());

  std::set<IdEdge> edges;
  for (const LogEntry& entry : a.history()) edges = apply_delta(edges, entry.delta);
  EXPECT_EQ(edges, labelled_edges(a.framework()));
}

TEST(Session, RejectedEventsLeaveStateUntouched) {
  Session s(2);
  s.apply(add(1, pt(0, 0)));
  s.apply(add(2, pt(1, 0)));
  EXPECT_THROW(s.apply(add(2, pt(3, 3))), DuplicateId);
  EXPECT_THROW(s.apply(remove_node(9)), UnknownId);
  EXPECT_THROW(s.apply(move(9, pt(0, 0))), UnknownId);
  EXPECT_THROW(s.apply(add(3, pt(2, 0))), DegenerateInput);
  EXPECT_EQ(s.epoch(), 2u);
  EXPECT_EQ(s.nodes().size(), 2u);
  s.apply(remove_node(1));
  EXPECT_THROW(s.apply(remove_node(2)), Error);
}

TEST(Session, SmallMoveKeepsTopology) {
  Session s(2);
  const Configuration c = random_configuration(8, 2, 31);
  for (Index i = 0; i < 8; ++i) s.apply(add(i, c.point(i)));
  const EdgeDelta delta = s.apply(move(5, c.point(5) + pt(1e-7, -1e-7)));
  EXPECT_TRUE(delta.empty());
}

TEST(EdgeDelta, SetIdentities) {
  const Framework a = fixtures::square_cycle();
  EXPECT_TRUE(edge_delta(a, a).empty());

  const Framework b = fixtures::framework(a.config, {{0, 2}, {1, 3}});
  const EdgeDelta d = edge_delta(a, b);
  EXPECT_EQ(d.added.size(), 2u);
  EXPECT_EQ(d.removed.size(), 4u);
  EXPECT_EQ(apply_delta(labelled_edges(a), d), labelled_edges(b));
}

TEST(EdgeDelta, UsesLabelsNotIndices) {
  const Configuration p(Eigen::MatrixXd::Random(3, 2), {10, 20, 30});
  const Configuration q(Eigen::MatrixXd::Random(3, 2), {20, 30, 40});
  // Edge (0,1) means {10,20} in p and {20,30} in q.
  const EdgeDelta d = edge_delta(Framework{p, {{0, 1}}}, Framework{q, {{0, 1}}});
  EXPECT_EQ(d.added, (std::vector<IdEdge>{{20, 30}}));
  EXPECT_EQ(d.removed, (std::vector<IdEdge>{{10, 20}}));
}
