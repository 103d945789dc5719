#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "harness.hpp"
#include "qmono/state_io.hpp"

namespace {

using qmono::harness::RunConfig;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + cfg.output_path + "'");
  out << text;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qmono: monogamy inequality checks for multi-qubit states"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  std::string mode = "min";
  std::string start = "random";
  int hunt_qubits = 5;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", cfg.tolerance, "Verdict tolerance")->capture_default_str();
    sub->add_option("--out", cfg.output_path, "Write the report here instead of stdout");
    sub->add_option("--format", format, "json or csv")->capture_default_str();
  };

  auto* measure = app.add_subcommand("measure", "Every measure and verdict for one pure state");
  measure->add_option("--state", cfg.state_path, "State file (JSON)")->required();
  add_common(measure);

  auto* fuzz = app.add_subcommand("fuzz", "Check all inequalities on Haar-random states");
  fuzz->add_option("--qubits", cfg.n_qubits, "Number of qubits")->capture_default_str();
  fuzz->add_option("--samples", cfg.samples, "Number of samples")->capture_default_str();
  fuzz->add_option("--seed", seed, "RNG seed (falls back to QML_SEED, then 1)");
  fuzz->add_option("--threads", cfg.threads, "Worker threads, 0 for all cores")->capture_default_str();
  fuzz->add_flag("--timing", cfg.include_timing, "Include wall time in the JSON summary");
  fuzz->add_flag("!--no-mixed", cfg.include_mixed, "Skip the two-qubit mixed-state checkers");
  add_common(fuzz);

  auto* hunt = app.add_subcommand("hunt", "Random-restart search for extreme discriminant values");
  hunt->add_option("--qubits", hunt_qubits, "Number of qubits (>= 5)")->capture_default_str();
  hunt->add_option("--restarts", cfg.restarts, "Independent restarts")->capture_default_str();
  hunt->add_option("--iters", cfg.iterations, "Iterations per restart")->capture_default_str();
  hunt->add_option("--mode", mode, "min or max")->capture_default_str();
  hunt->add_option("--start", start, "random or w")->capture_default_str();
  hunt->add_option("--step", cfg.initial_step, "Initial perturbation scale")->capture_default_str();
  hunt->add_option("--seed", seed, "RNG seed (falls back to QML_SEED, then 1)");
  hunt->add_option("--threads", cfg.threads, "Worker threads, 0 for all cores")->capture_default_str();
  hunt->add_flag("--timing", cfg.include_timing, "Include wall time in the JSON summary");
  add_common(hunt);

  auto* family = app.add_subcommand("family", "GHZ, W and product state table");
  family->add_option("--max-qubits", cfg.max_qubits, "Largest N in the table")->capture_default_str();
  add_common(family);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInputError;
  }

  try {
    cfg.output_format = qmono::harness::parse_output_format(format);
    cfg.seed = qmono::harness::resolve_seed(seed, std::getenv("QML_SEED"));

    if (measure->parsed()) {
      cfg.command = qmono::harness::Command::measure;
      cfg.validate();
      if (cfg.output_format != qmono::harness::OutputFormat::json)
        throw std::invalid_argument("measure only supports --format json");
      const qmono::PureState psi = qmono::load_state_file(cfg.state_path);
      const auto doc = qmono::harness::measure_document(psi, {cfg.tolerance});
      emit(cfg, dump(doc));
      return qmono::harness::document_has_violation(doc) ? kExitViolation : kExitOk;
    }
    if (fuzz->parsed()) {
      cfg.command = qmono::harness::Command::fuzz;
      const bool csv = cfg.output_format == qmono::harness::OutputFormat::csv;
      const auto summary = qmono::harness::run_fuzz(cfg, csv);
      emit(cfg, csv ? qmono::harness::to_csv(summary) : dump(qmono::harness::to_json(summary, cfg.include_timing)));
      return summary.any_violation() ? kExitViolation : kExitOk;
    }
    if (hunt->parsed()) {
      cfg.command = qmono::harness::Command::hunt;
      cfg.n_qubits = hunt_qubits;
      cfg.mode = qmono::harness::parse_hunt_mode(mode);
      cfg.start = qmono::harness::parse_hunt_start(start);
      const auto summary = qmono::harness::run_hunt(cfg);
      emit(cfg, cfg.output_format == qmono::harness::OutputFormat::csv
                    ? qmono::harness::to_csv(summary)
                    : dump(qmono::harness::to_json(summary, cfg.include_timing)));
      return summary.any_violation() ? kExitViolation : kExitOk;
    }
    cfg.command = qmono::harness::Command::family;
    const auto table = qmono::harness::run_family(cfg);
    emit(cfg, cfg.output_format == qmono::harness::OutputFormat::csv ? qmono::harness::to_csv(table)
                                                                     : dump(qmono::harness::to_json(table)));
    return table.any_violation() ? kExitViolation : kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "qmono: " << e.what() << "\n";
    return kExitInputError;
  }
}
