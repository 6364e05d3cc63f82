#include "urigid/construction.hpp"
#include "urigid/random.hpp"
#include "urigid/rigidity.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace urigid;

namespace {

Framework random_graph(Index n, int d, Index e, std::uint64_t seed) {
  Rng rng(seed);
  EdgeList all = complete_graph(n);
  for (std::size_t k = all.size(); k > 1; --k) std::swap(all[k - 1], all[rng.next() % k]);
  all.resize(static_cast<std::size_t>(std::min<Index>(e, static_cast<Index>(all.size()))));
  canonicalize(all);
  return Framework{random_configuration(n, d, seed + 1000), all};
}

Configuration transformed(const Configuration& c, double scale, std::uint64_t seed) {
  const int d = c.dim();
  Eigen::MatrixXd q = Eigen::MatrixXd(random_configuration(d, d, seed).coords()).householderQr().householderQ();
  Eigen::RowVectorXd shift = Eigen::RowVectorXd::Constant(d, 3.5);
  Eigen::MatrixXd x = (scale * c.coords() * q).rowwise() + shift;
  return Configuration(std::move(x));
}

}  // namespace

TEST(RigidityMatrix, MatchesFiniteDifferences) {
  const Framework fw = random_graph(7, 3, 14, 5);
  const Eigen::MatrixXd R = rigidity_matrix(fw);
  const double h = 1e-6;
  Eigen::MatrixXd x = fw.config.coords();
  for (Index i = 0; i < x.rows(); ++i)
    for (Index a = 0; a < x.cols(); ++a) {
      Eigen::MatrixXd xp = x, xm = x;
      xp(i, a) += h;
      xm(i, a) -= h;
      const Eigen::VectorXd fd =
          (squared_edge_lengths(xp, fw.edges) - squared_edge_lengths(xm, fw.edges)) / (2 * h);
      EXPECT_LT((fd - R.col(i * x.cols() + a)).cwiseAbs().maxCoeff(), 1e-7);
    }
}

TEST(RigidityMatrix, RigidMotionsInKernel) {
  const Framework fw = random_graph(6, 2, 9, 8);
  const Eigen::MatrixXd R = rigidity_matrix(fw);
  Eigen::VectorXd tx = Eigen::VectorXd::Zero(12), rot(12);
  for (Index i = 0; i < 6; ++i) {
    tx(2 * i) = 1;
    rot(2 * i) = -fw.config.coords()(i, 1);
    rot(2 * i + 1) = fw.config.coords()(i, 0);
  }
  EXPECT_LT((R * tx).norm(), 1e-12);
  EXPECT_LT((R * rot).norm(), 1e-12);
}

TEST(StressMatrix, IsWeightedLaplacian) {
  const Framework fw = fixtures::square_cycle();
  const Eigen::VectorXd w = Eigen::VectorXd::LinSpaced(4, 1, 4);
  const Eigen::MatrixXd omega = stress_matrix(fw, w);
  EXPECT_LT((omega * Eigen::VectorXd::Ones(4)).norm(), 1e-14);
  EXPECT_LT((omega - omega.transpose()).norm(), 1e-14);
  EXPECT_DOUBLE_EQ(omega(0, 1), -1);
  EXPECT_THROW(stress_matrix(fw, Eigen::VectorXd::Ones(3)), Error);
}

TEST(FlexStressCount, MaxwellRuleOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int d = seed % 2 ? 2 : 3;
    const Index n = 5 + static_cast<Index>(seed % 8);
    const Index e = n + static_cast<Index>(seed * 7 % static_cast<std::uint64_t>(n * (n - 1) / 2 - n));
    const Framework fw = random_graph(n, d, e, seed);
    const FlexStressCount c = count_flexes_and_stresses(fw);
    EXPECT_EQ(d * n - d * (d + 1) / 2 - fw.num_edges(), c.m - c.s) << "seed " << seed;
  }
}

TEST(Selfstress, IsAnEquilibrium) {
  const Construction c = build_framework(random_configuration(12, 2, 4));
  const auto basis = selfstress_basis(c.framework);
  ASSERT_EQ(basis.size(), 1u);
  // Each node is in equilibrium: sum_j w_ij (p_i - p_j) = 0.
  const Eigen::MatrixXd omega = stress_matrix(c.framework, basis.front());
  EXPECT_LT((omega * c.framework.config.coords()).norm(), 1e-10);
}

TEST(FigureOne, FlexibleSquare) {
  const RigidityReport r = superstability_test(fixtures::square_cycle());
  EXPECT_EQ(r.m, 1);
  EXPECT_EQ(r.s, 0);
  EXPECT_EQ(r.classification, RigidityClass::flexible);
  EXPECT_FALSE(r.superstable);
}

TEST(FigureOne, RigidNotGloballyRigid) {
  const RigidityReport r = superstability_test(fixtures::rigid_not_global());
  EXPECT_EQ(r.m, 0);
  EXPECT_EQ(r.s, 0);
  EXPECT_EQ(r.classification, RigidityClass::inf_rigid);
  EXPECT_FALSE(r.superstable);
}

TEST(FigureOne, GloballyRigidWheel) {
  const RigidityReport r = superstability_test(fixtures::wheel());
  EXPECT_EQ(r.m, 0);
  EXPECT_EQ(r.s, 1);
  EXPECT_TRUE(r.maxwell_ok);
  EXPECT_FALSE(r.superstable);
}

TEST(FigureOne, GrunbaumPolygonsAreSuperstable) {
  for (Index n : {5, 6}) {
    const RigidityReport r = superstability_test(fixtures::grunbaum_polygon(n));
    EXPECT_EQ(r.m, 0);
    EXPECT_EQ(r.s, 1);
    EXPECT_TRUE(r.psd);
    EXPECT_EQ(r.omega_rank, n - 3);
    EXPECT_TRUE(r.affine_ok);
    EXPECT_TRUE(r.superstable);
    EXPECT_EQ(r.classification, RigidityClass::candidate_superstable);
  }
}

TEST(Superstability, InvariantUnderSimilarity) {
  for (int d : {2, 3}) {
    const Construction c = build_framework(random_configuration(14, d, 21));
    const RigidityReport base = superstability_test(c.framework);
    for (double scale : {1e-3, 1.0, 1e3}) {
      const Framework moved{transformed(c.framework.config, scale, 7), c.framework.edges};
      const RigidityReport r = superstability_test(moved);
      EXPECT_EQ(r.m, base.m);
      EXPECT_EQ(r.s, base.s);
      EXPECT_EQ(r.omega_rank, base.omega_rank);
      EXPECT_EQ(r.superstable, base.superstable);
      EXPECT_LT((r.stress - base.stress).cwiseAbs().maxCoeff(), 1e-6);
    }
  }
}

TEST(Superstability, SimplexCases) {
  const RigidityReport tri = superstability_test(fixtures::framework(fixtures::points({{0, 0}, {1, 0}, {0, 1}}),
                                                                     {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_EQ(tri.classification, RigidityClass::simplex);
  EXPECT_TRUE(tri.superstable);
  const RigidityReport path = superstability_test(fixtures::framework(fixtures::points({{0, 0}, {1, 0}, {0, 1}}),
                                                                      {{0, 1}, {1, 2}}));
  EXPECT_FALSE(path.superstable);
}

TEST(Superstability, MultipleStressesUnsupported) {
  EXPECT_THROW(superstability_test(Framework{random_configuration(6, 2, 3), complete_graph(6)}),
               StressSearchUnsupported);
}

TEST(Superstability, AffineMotionsOfParallelBars) {
  // Bars in only two directions cannot span the 3-dimensional space of
  // symmetric 2x2 matrices, so a shear survives.
  const Framework grid = fixtures::framework(fixtures::points({{0, 0}, {1, 0}, {0, 1}, {1, 1}}),
                                             {{0, 1}, {2, 3}, {0, 2}, {1, 3}});
  EXPECT_FALSE(affine_motions_blocked(grid));
  EXPECT_TRUE(affine_motions_blocked(fixtures::grunbaum_polygon(5)));
}

TEST(Congruence, DetectsIsometriesAndDistortion) {
  const Configuration p = random_configuration(8, 2, 1);
  EXPECT_TRUE(congruence_check(p, transformed(p, 1.0, 3)));
  Eigen::MatrixXd lifted = Eigen::MatrixXd::Zero(8, 4);
  lifted.leftCols(2) = p.coords();
  EXPECT_TRUE(congruence_check(p, Configuration(lifted)));
  Eigen::MatrixXd bent = p.coords();
  bent(0, 0) += 1e-4;
  EXPECT_FALSE(congruence_check(p, Configuration(bent)));
}

TEST(Lateration, EdgeCounts) {
  EXPECT_EQ(lateration_edge_count(1000, 2), 2994);
  EXPECT_EQ(lateration_edge_count(1000, 3), 3990);
  EXPECT_EQ(lateration_edge_count(3, 2), 3);
  EXPECT_EQ(minimal_edge_count(1000, 2), 1998);
  EXPECT_EQ(minimal_edge_count(1000, 3), 2995);
  EXPECT_THROW(lateration_edge_count(2, 2), Error);
}

TEST(RigidityClass, StringRoundTrip) {
  for (auto c : {RigidityClass::flexible, RigidityClass::inf_rigid, RigidityClass::candidate_superstable,
                 RigidityClass::simplex, RigidityClass::inconclusive})
    EXPECT_EQ(rigidity_class_from_string(to_string(c)), c);
}
