#include "urigid/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv) {
  using namespace urigid::cli;

  CLI::App app{"Minimal universally rigid frameworks on 2D and 3D point sets"};
  app.require_subcommand(1);

  BuildArgs build;
  std::string build_input, build_output;
  auto* b = app.add_subcommand("build", "Construct a framework and certify it");
  b->add_option("--input", build_input, "Point file (CSV or JSON)");
  b->add_option("--dim", build.dim, "Dimension, 2 or 3")->check(CLI::IsMember({2, 3}));
  b->add_option("--multifan", build.multifan, "Number of fan centers (2D, 2 supported)");
  b->add_option("--output", build_output, "Framework file to write (default stdout)");
  b->add_option("--seed", build.seed, "Seed for --points-random");
  b->add_option("--points-random", build.points_random, "Generate N random points in the unit cube");

  AnalyzeArgs analyze;
  std::string analyze_input;
  auto* a = app.add_subcommand("analyze", "Print the rigidity report of a framework file");
  a->add_option("--input", analyze_input, "Framework file")->required();

  VerifyArgs verify;
  std::string verify_input;
  auto* v = app.add_subcommand("verify", "Check a framework with the brute-force oracles");
  v->add_option("--input", verify_input, "Framework file")->required();
  const std::map<std::string, OracleChoice> oracles{
      {"fan", OracleChoice::fan}, {"perturb", OracleChoice::perturb}, {"both", OracleChoice::both}};
  v->add_option("--oracle", verify.oracle, "fan, perturb or both")->transform(CLI::CheckedTransformer(oracles));
  v->add_option("--ambient", verify.ambient, "Ambient dimension for the perturbation search");
  v->add_option("--trials", verify.trials, "Perturbation trials")->check(CLI::PositiveNumber);
  v->add_option("--magnitude", verify.magnitude, "Perturbation magnitude");
  v->add_option("--seed", verify.seed, "Seed for the perturbation search");
  v->add_option("--max-folds", verify.max_folds, "Enumeration cap for the fan oracle");

  RenderArgs render;
  std::string render_input, render_output;
  auto* r = app.add_subcommand("render", "Draw a framework file as SVG");
  r->add_option("--input", render_input, "Framework file")->required();
  r->add_option("--output", render_output, "SVG file")->required();

  SessionArgs session;
  std::string events, log, session_output;
  auto* s = app.add_subcommand("session", "Replay add/remove/move events");
  s->add_option("--events", events, "JSON-lines event file")->required();
  s->add_option("--log", log, "JSON-lines log to write")->required();
  s->add_option("--dim", session.dim, "Dimension, 2 or 3")->check(CLI::IsMember({2, 3}));
  s->add_option("--output", session_output, "Final framework file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_error;
  }

  if (*b) {
    if (!build_input.empty()) build.input = build_input;
    if (!build_output.empty()) build.output = build_output;
    return cmd_build(build, std::cout, std::cerr);
  }
  if (*a) {
    analyze.input = analyze_input;
    return cmd_analyze(analyze, std::cout, std::cerr);
  }
  if (*v) {
    verify.input = verify_input;
    return cmd_verify(verify, std::cout, std::cerr);
  }
  if (*r) {
    render.input = render_input;
    render.output = render_output;
    return cmd_render(render, std::cout, std::cerr);
  }
  session.events = events;
  session.log = log;
  if (!session_output.empty()) session.output = session_output;
  return cmd_session(session, std::cout, std::cerr);
}
