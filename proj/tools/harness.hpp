#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qmono/inequalities.hpp"
#include "qmono/state.hpp"

namespace qmono::harness {

enum class Command { measure, fuzz, hunt, family };
enum class OutputFormat { json, csv };
enum class HuntMode { min, max };
enum class HuntStart { random, w };

OutputFormat parse_output_format(std::string_view s);
HuntMode parse_hunt_mode(std::string_view s);
HuntStart parse_hunt_start(std::string_view s);

struct RunConfig {
  Command command = Command::fuzz;
  int n_qubits = 3;
  std::int64_t samples = 1000;
  std::uint64_t seed = 1;
  double tolerance = kDefaultTolerance;
  std::string output_path;  // empty means stdout
  OutputFormat output_format = OutputFormat::json;
  std::string state_path;
  int max_qubits = 6;
  unsigned threads = 0;  // 0: hardware concurrency
  bool include_timing = false;
  bool include_mixed = true;  // lemma1 / claim6 on Hilbert-Schmidt two-qubit states

  // hunt
  int restarts = 20;
  int iterations = 2000;
  HuntMode mode = HuntMode::min;
  HuntStart start = HuntStart::random;
  double initial_step = 0.1;
  int rejections_before_halving = 50;

  /// Throws std::invalid_argument with a user-facing message.
  void validate() const;
};

/// CLI value if given, else QML_SEED from the environment, else 1.
std::uint64_t resolve_seed(std::optional<std::uint64_t> cli_seed, const char* env_value);

/// A report tagged with the checker it counts towards. Checkers that emit one
/// report per qubit (corollary10_*, assistance_ceiling) share one key.
struct KeyedReport {
  std::string checker;
  InequalityReport report;
};

/// Every checker that applies to a pure state of this size.
std::vector<KeyedReport> evaluate_pure(const PureState& psi, const CheckOptions& opt);
/// lemma1 and claim6.
std::vector<KeyedReport> evaluate_mixed(const DensityMatrix& rho, const CheckOptions& opt);

struct CheckerStats {
  std::int64_t holds = 0;
  std::int64_t saturated = 0;
  std::int64_t violated = 0;
  double min_slack = 0.0;
  double max_slack = 0.0;
  std::uint64_t worst_fingerprint = 0;
  std::int64_t worst_sample = -1;

  std::int64_t total() const { return holds + saturated + violated; }
};

struct ViolationRecord {
  std::string checker;
  std::int64_t sample_index = 0;
  InequalityReport report;
  int n_qubits = 0;                 // qubits of the offending state
  std::vector<cplx> amplitudes;     // pure input, or row-major density matrix entries
  bool mixed = false;
};

struct CampaignSummary {
  static constexpr std::string_view kSchema = "qmono.campaign/1";
  int n_qubits = 0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::map<std::string, CheckerStats> checkers;
  std::vector<ViolationRecord> violations;
  double wall_time_s = 0.0;
  std::vector<KeyedReport> rows;  // every report, kept only for CSV output

  bool any_violation() const;
};

/// Per-sample states come from derive_seed(seed, sample): the output does not
/// depend on the thread count.
CampaignSummary run_fuzz(const RunConfig& cfg, bool keep_rows = false);

struct HuntRestart {
  int index = 0;
  double start_value = 0.0;
  double best_value = 0.0;
  double min_seen = 0.0;
  double max_seen = 0.0;
  int accepted = 0;
  double final_step = 0.0;
};

struct HuntSummary {
  static constexpr std::string_view kSchema = "qmono.hunt/1";
  int n_qubits = 0;
  HuntMode mode = HuntMode::min;
  HuntStart start = HuntStart::random;
  int restarts = 0;
  int iterations = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::vector<HuntRestart> runs;
  double best_value = 0.0;
  std::vector<cplx> best_state;
  /// lemma9_floor: -1 <= min D seen; lemma7_ceiling: max D seen <= M - 2.
  std::map<std::string, CheckerStats> checkers;
  std::vector<InequalityReport> violations;
  double wall_time_s = 0.0;

  bool any_violation() const;
};

/// The objective: total discriminant across the qubit-0 cut.
double hunt_objective(const PureState& psi);

/// Throws std::invalid_argument("hunt requires >= 5 qubits") below five qubits.
HuntSummary run_hunt(const RunConfig& cfg);

struct FamilyRow {
  StateFamily family = StateFamily::ghz;
  int n_qubits = 0;
  double s_lin_a = 0.0;
  double sum_tangle = 0.0;
  double sum_tangle_a = 0.0;
  std::optional<double> discriminant;  // empty when the qubit-0 cut is a product cut
  double tau1 = 0.0;
  double tau2 = 0.0;
  std::vector<std::pair<std::string, Verdict>> verdicts;  // worst verdict per checker
};

struct FamilyTable {
  static constexpr std::string_view kSchema = "qmono.family/1";
  std::vector<FamilyRow> rows;
  bool any_violation() const;
};

/// GHZ, W and product rows for N = 3..max_qubits.
FamilyTable run_family(const RunConfig& cfg);

/// Everything computable for one state: pair measures, discriminant,
/// bipartition tangles and all checker reports.
nlohmann::ordered_json measure_document(const PureState& psi, const CheckOptions& opt);
bool document_has_violation(const nlohmann::ordered_json& doc);

std::string fingerprint_hex(std::uint64_t fp);

nlohmann::ordered_json to_json(const CampaignSummary& s, bool include_timing);
nlohmann::ordered_json to_json(const HuntSummary& s, bool include_timing);
nlohmann::ordered_json to_json(const FamilyTable& t);
nlohmann::ordered_json to_json(const InequalityReport& r);

/// CSV with the fixed columns checker,lhs,rhs,slack,verdict,fingerprint,
/// preceded by a "# qmono.reports/1" schema line.
std::string to_csv(const CampaignSummary& s);
std::string to_csv(const HuntSummary& s);
std::string to_csv(const FamilyTable& t);

}  // namespace qmono::harness
