#include "urigid/rigidity.hpp"

#include "urigid/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace urigid {

namespace {

void require_full_dimensional(const Framework& fw) {
  if (affine_rank(fw.config) != fw.dim())
    throw NotFullDimensional("configuration does not span its ambient space");
}

Index rigid_motion_count(int d) { return d * (d + 1) / 2; }

bool is_psd(const Eigen::VectorXd& ascending) {
  if (ascending.size() == 0) return true;
  return ascending(0) >= -tol::psd * std::max(1.0, ascending(ascending.size() - 1));
}

void normalise_sign(Stress& w) {
  for (Index k = 0; k < w.size(); ++k) {
    if (std::abs(w(k)) > tol::eq) {
      if (w(k) < 0) w = -w;
      return;
    }
  }
}

}  // namespace

FlexStressCount count_flexes_and_stresses(const Framework& fw) {
  require_full_dimensional(fw);
  const int d = fw.dim();
  const Eigen::MatrixXd R = rigidity_matrix(fw);

  FlexStressCount out;
  out.rank_R = numerical_rank(R);
  if (R.size() > 0) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(R.transpose());
    qr.setThreshold(tol::rank);
    out.rank_Rt = qr.rank();
  }
  out.m = d * fw.num_nodes() - rigid_motion_count(d) - out.rank_R;
  out.s = fw.num_edges() - out.rank_Rt;
  return out;
}

std::vector<Stress> selfstress_basis(const Framework& fw) {
  require_full_dimensional(fw);
  std::vector<Stress> basis;
  const Index e = fw.num_edges();
  if (e == 0) return basis;
  const Eigen::MatrixXd R = rigidity_matrix(fw);
  const Eigen::BDCSVD<Eigen::MatrixXd> svd(R, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  const Index rank = sv(0) > 0 ? (sv.array() > tol::rank * sv(0)).count() : 0;
  for (Index k = rank; k < e; ++k) {
    Stress w = svd.matrixU().col(k);
    normalise_sign(w);
    basis.push_back(std::move(w));
  }
  return basis;
}

bool affine_motions_blocked(const Framework& fw) {
  const int d = fw.dim();
  const Index cols = rigid_motion_count(d);
  if (fw.num_edges() < cols) return false;
  Eigen::MatrixXd A(fw.num_edges(), cols);
  for (Index k = 0; k < fw.num_edges(); ++k) {
    const Edge& e = fw.edges[static_cast<std::size_t>(k)];
    const Eigen::VectorXd v = fw.config.point(e.i) - fw.config.point(e.j);
    Index c = 0;
    for (int a = 0; a < d; ++a)
      for (int b = a; b < d; ++b) A(k, c++) = v(a) * v(b);
  }
  return numerical_rank(A) == cols;
}

std::string_view to_string(RigidityClass c) {
  switch (c) {
    case RigidityClass::flexible: return "flexible";
    case RigidityClass::inf_rigid: return "inf_rigid";
    case RigidityClass::candidate_superstable: return "candidate_superstable";
    case RigidityClass::simplex: return "simplex";
    case RigidityClass::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

RigidityClass rigidity_class_from_string(std::string_view name) {
  for (RigidityClass c : {RigidityClass::flexible, RigidityClass::inf_rigid, RigidityClass::candidate_superstable,
                          RigidityClass::simplex, RigidityClass::inconclusive})
    if (to_string(c) == name) return c;
  throw ParseError("unknown rigidity class: " + std::string(name));
}

RigidityReport inconclusive_report(const Framework& fw) {
  const int d = fw.dim();
  const FlexStressCount c = count_flexes_and_stresses(fw);
  RigidityReport r;
  r.rank_R = c.rank_R;
  r.m = c.m;
  r.s = c.s;
  r.maxwell_ok = d * fw.num_nodes() - rigid_motion_count(d) - fw.num_edges() == c.m - c.s;
  r.affine_ok = affine_motions_blocked(fw);
  r.classification = RigidityClass::inconclusive;
  return r;
}

RigidityReport superstability_test(const Framework& fw) {
  check_simple_graph(fw);
  const int d = fw.dim();
  const Index n = fw.num_nodes();
  RigidityReport r = inconclusive_report(fw);

  if (n <= d + 1) {
    const bool complete = fw.num_edges() == n * (n - 1) / 2;
    r.omega_spectrum = Eigen::VectorXd::Zero(n);
    r.psd = true;
    r.superstable = complete && r.affine_ok;
    r.classification = complete ? RigidityClass::simplex : (r.m > 0 ? RigidityClass::flexible : RigidityClass::inf_rigid);
    return r;
  }

  if (r.s > 1) throw StressSearchUnsupported("more than one independent selfstress");
  if (r.s == 1) {
    const std::vector<Stress> basis = selfstress_basis(fw);
    if (basis.size() != 1) throw StressSearchUnsupported("selfstress rank decisions disagree");
    Stress w = basis.front();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(stress_matrix(fw, w), Eigen::EigenvaluesOnly);
    Eigen::VectorXd spectrum = eig.eigenvalues();
    if (!is_psd(spectrum)) {
      const Eigen::VectorXd flipped = -spectrum.reverse();
      if (is_psd(flipped)) {
        w = -w;
        spectrum = flipped;
      }
    }
    const double scale = spectrum.cwiseAbs().maxCoeff();
    r.psd = is_psd(spectrum);
    r.omega_rank = (spectrum.array().abs() > tol::rank * scale).count();
    r.omega_spectrum = spectrum;
    r.stress = w;
  }

  r.superstable = r.s == 1 && r.psd && r.omega_rank == n - d - 1 && r.affine_ok;
  if (r.superstable) r.classification = RigidityClass::candidate_superstable;
  else r.classification = r.m > 0 ? RigidityClass::flexible : RigidityClass::inf_rigid;
  return r;
}

bool congruence_check(const Configuration& p, const Configuration& q, double rel_tol) {
  if (p.size() != q.size()) return false;
  const Index n = p.size();
  double diameter = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      diameter = std::max(diameter, (p.coords().row(i) - p.coords().row(j)).norm());
  const double limit = rel_tol * diameter;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const double dp = (p.coords().row(i) - p.coords().row(j)).norm();
      const double dq = (q.coords().row(i) - q.coords().row(j)).norm();
      if (std::abs(dp - dq) > limit) return false;
    }
  }
  return true;
}

Index lateration_edge_count(Index n, int d) {
  if (n < d + 1) throw Error("lateration graphs start from a simplex on d+1 nodes");
  return (d + 1) * n - (d + 2) * (d + 1) / 2;
}

}  // namespace urigid
