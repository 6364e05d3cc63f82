#pragma once

#include "urigid/configuration.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace urigid::cli {

// Exit codes shared by all commands.
inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_inconclusive = 2;
inline constexpr int exit_too_many_folds = 3;

struct BuildArgs {
  std::optional<std::filesystem::path> input;
  std::optional<int> dim;
  int multifan = 0;
  std::optional<std::filesystem::path> output;  // stdout when absent
  std::uint64_t seed = 0;
  std::optional<Index> points_random;
};

struct AnalyzeArgs {
  std::filesystem::path input;
};

enum class OracleChoice { fan, perturb, both };

struct VerifyArgs {
  std::filesystem::path input;
  OracleChoice oracle = OracleChoice::fan;
  std::optional<int> ambient;       // framework dimension + 1
  int trials = 100;
  std::optional<double> magnitude;  // 0.01 x bounding-box diagonal
  std::uint64_t seed = 0;
  Index max_folds = 20;
};

struct RenderArgs {
  std::filesystem::path input;
  std::filesystem::path output;
};

struct SessionArgs {
  std::filesystem::path events;
  std::filesystem::path log;
  std::optional<int> dim;  // taken from the first point when absent
  std::optional<std::filesystem::path> output;
};

int cmd_build(const BuildArgs& args, std::ostream& out, std::ostream& err);
int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_render(const RenderArgs& args, std::ostream& out, std::ostream& err);
int cmd_session(const SessionArgs& args, std::ostream& out, std::ostream& err);

}  // namespace urigid::cli
