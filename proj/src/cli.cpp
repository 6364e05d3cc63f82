#include "urigid/cli.hpp"

#include "urigid/construction.hpp"
#include "urigid/io.hpp"
#include "urigid/oracle.hpp"
#include "urigid/random.hpp"
#include "urigid/rigidity.hpp"
#include "urigid/session.hpp"
#include "urigid/svg.hpp"

namespace urigid::cli {

namespace {

RigidityReport certify(const Framework& fw) {
  try {
    return superstability_test(fw);
  } catch (const StressSearchUnsupported&) {
    return inconclusive_report(fw);
  }
}

std::string summary(const Framework& fw, const RigidityReport& r) {
  return "nodes=" + std::to_string(fw.num_nodes()) + " edges=" + std::to_string(fw.num_edges()) +
         " m=" + std::to_string(r.m) + " s=" + std::to_string(r.s) + " " +
         std::string(to_string(r.classification)) + (r.superstable ? " superstable" : " not-certified");
}

bool fan_oracle(const FrameworkFile& file, Index max_folds, std::ostream& out) {
  const FanDecomposition& fan = *file.fan;
  const Configuration& config = file.framework.config;
  if (fan.kind != FanKind::fan2d && fan.kind != FanKind::fan3d)
    throw Error("fan oracle supports single fans only; use --oracle perturb for " + std::string(to_string(fan.kind)));
  const FanConfigurationSet set =
      fan.kind == FanKind::fan2d ? enumerate_fan_2d(fan, config, max_folds) : enumerate_fan_3d(fan, config, max_folds);
  const UnfoldedMaximum result = check_unfolded_maximum(set);
  const double edge_error = max_fan_edge_error(set);
  const bool ok = result.unique && result.strict && edge_error < tol::eq &&
                  set.neighbor_distances().size() == set.count();
  out << "fan: folds=" << set.folds() << " configurations=" << set.count() << " unfolded=" << result.unfolded
      << " runner_up=" << result.runner_up << " edge_error=" << edge_error << (ok ? " PASS" : " FAIL") << "\n";
  return ok;
}

bool perturb_oracle(const FrameworkFile& file, const VerifyArgs& args, std::ostream& out) {
  const Framework& fw = file.framework;
  const int ambient = args.ambient.value_or(fw.dim() + 1);
  const double magnitude = args.magnitude.value_or(0.01 * fw.config.bbox_diagonal());
  const auto trials = perturbation_flex_search(fw, ambient, args.trials, magnitude, args.seed);
  int converged = 0, congruent = 0;
  std::optional<int> witness;
  for (std::size_t t = 0; t < trials.size(); ++t) {
    if (!trials[t].converged) continue;
    ++converged;
    if (congruence_check(fw.config, trials[t].config)) ++congruent;
    else if (!witness) witness = static_cast<int>(t);
  }
  const bool ok = !witness;
  out << "perturb: ambient=" << ambient << " trials=" << trials.size() << " converged=" << converged
      << " congruent=" << congruent;
  if (witness) out << " witness_trial=" << *witness;
  out << (ok ? " PASS" : " FAIL") << "\n";
  return ok;
}

}  // namespace

int cmd_build(const BuildArgs& args, std::ostream& out, std::ostream& err) {
  try {
    Configuration config;
    if (args.points_random) {
      const int dim = args.dim.value_or(2);
      if (dim != 2 && dim != 3) throw Error("--dim must be 2 or 3");
      if (*args.points_random < 1) throw Error("--points-random needs a positive count");
      config = random_configuration(*args.points_random, dim, args.seed);
    } else {
      if (!args.input) throw Error("need --input or --points-random");
      config = parse_points(read_text_file(*args.input));
      if (args.dim && *args.dim != config.dim())
        throw Error("--dim " + std::to_string(*args.dim) + " does not match " + std::to_string(config.dim()) +
                    "D input");
    }

    BuildOptions options;
    options.multifan_centers = args.multifan;
    Construction built = build_framework(config, options);
    const RigidityReport report = certify(built.framework);
    const std::string text = format_framework_file({built.framework, built.fan, report});
    if (args.output) {
      write_text_file(*args.output, text);
      out << summary(built.framework, report) << "\n";
    } else {
      out << text;
      err << summary(built.framework, report) << "\n";
    }
    return report.superstable ? exit_ok : exit_inconclusive;
  } catch (const std::exception& e) {
    err << "build: " << e.what() << "\n";
    return exit_error;
  }
}

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const FrameworkFile file = parse_framework_file(read_text_file(args.input));
    out << format_report(certify(file.framework));
    return exit_ok;
  } catch (const std::exception& e) {
    err << "analyze: " << e.what() << "\n";
    return exit_error;
  }
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const FrameworkFile file = parse_framework_file(read_text_file(args.input));
    bool ok = true;
    if (args.oracle != OracleChoice::perturb) {
      if (!file.fan) throw Error("input has no fan data; use --oracle perturb");
      ok = fan_oracle(file, args.max_folds, out) && ok;
    }
    if (args.oracle != OracleChoice::fan) ok = perturb_oracle(file, args, out) && ok;
    return ok ? exit_ok : exit_error;
  } catch (const TooManyFolds& e) {
    err << "verify: " << e.what() << "; use --oracle perturb\n";
    return exit_too_many_folds;
  } catch (const std::exception& e) {
    err << "verify: " << e.what() << "\n";
    return exit_error;
  }
}

int cmd_render(const RenderArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const FrameworkFile file = parse_framework_file(read_text_file(args.input));
    std::optional<Stress> stress;
    if (file.report && file.report->stress.size() == file.framework.num_edges() && file.framework.num_edges() > 0)
      stress = file.report->stress;
    write_text_file(args.output, render_svg(file.framework, file.fan, stress));
    if (!stress) {
      err << "render: warning: no stress data, edges drawn plain\n";
      return exit_error;
    }
    out << "wrote " << args.output.string() << "\n";
    return exit_ok;
  } catch (const std::exception& e) {
    err << "render: " << e.what() << "\n";
    return exit_error;
  }
}

int cmd_session(const SessionArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<Event> events;
  try {
    events = parse_events(read_text_file(args.events));
  } catch (const std::exception& e) {
    err << "session: " << e.what() << "\n";
    return exit_error;
  }

  int dim = 2;
  if (args.dim) {
    dim = *args.dim;
  } else {
    for (const Event& e : events)
      if (e.kind != EventKind::remove) {
        dim = static_cast<int>(e.point.size());
        break;
      }
  }

  int code = exit_ok;
  std::string log;
  try {
    Session session(dim);
    for (const Event& e : events) {
      session.apply(e);
      log += format_log_entry(session.history().back()) + "\n";
      if (!session.certified()) code = exit_inconclusive;
    }
    write_text_file(args.log, log);
    if (args.output) {
      write_text_file(*args.output, format_framework_file({session.framework(), session.fan(), session.report()}));
    }
    std::size_t uncertified = 0;
    for (const LogEntry& entry : session.history()) uncertified += entry.certified ? 0 : 1;
    out << "epoch=" << session.epoch() << " nodes=" << session.framework().num_nodes()
        << " edges=" << session.framework().num_edges() << " uncertified_epochs=" << uncertified << "\n";
    return code;
  } catch (const std::exception& e) {
    try {
      write_text_file(args.log, log);
    } catch (const std::exception&) {
    }
    err << "session: " << e.what() << "\n";
    return exit_error;
  }
}

}  // namespace urigid::cli
