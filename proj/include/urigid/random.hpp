#pragma once

#include "urigid/configuration.hpp"

#include <cstdint>
#include <random>

namespace urigid {

/// Seeded generator whose output does not depend on the standard library's
/// distribution implementations, so generated point sets are identical on
/// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Independent stream for sub-task `k` of a run seeded with `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// n points uniform in the unit cube [0,1]^dim.
inline Configuration random_configuration(Index n, int dim, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd coords(n, dim);
  for (Index i = 0; i < n; ++i)
    for (int a = 0; a < dim; ++a) coords(i, a) = rng.uniform();
  return Configuration(std::move(coords));
}

/// n points uniform in the unit disk (dim 2) or unit ball (dim 3).
inline Configuration random_ball_configuration(Index n, int dim, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd coords(n, dim);
  for (Index i = 0; i < n; ++i) {
    Eigen::VectorXd p(dim);
    do {
      for (int a = 0; a < dim; ++a) p(a) = rng.uniform(-1, 1);
    } while (p.squaredNorm() > 1);
    coords.row(i) = p.transpose();
  }
  return Configuration(std::move(coords));
}

}  // namespace urigid
