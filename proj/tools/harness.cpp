#include "harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qmono/measures.hpp"
#include "qmono/rng.hpp"
#include "qmono/schmidt.hpp"

namespace qmono::harness {
namespace {

constexpr std::int64_t kChunk = 4096;

enum RngStream : std::uint64_t {
  kPureStream = 0,
  kMixedStream = 1,
  kHuntWalk = 2,
  kHuntStart = 3,
};

int verdict_rank(Verdict v) {
  switch (v) {
    case Verdict::holds: return 0;
    case Verdict::saturated: return 1;
    case Verdict::violated: return 2;
  }
  return 2;
}

unsigned worker_count(const RunConfig& cfg) {
  unsigned n = cfg.threads == 0 ? std::thread::hardware_concurrency() : cfg.threads;
  return std::max(1u, n);
}

// Runs body(i) for i in [begin, end) across workers.
template <typename F>
void parallel_for(std::int64_t begin, std::int64_t end, unsigned workers, F&& body) {
  if (workers <= 1 || end - begin <= 1) {
    for (std::int64_t i = begin; i < end; ++i) body(i);
    return;
  }
  std::atomic<std::int64_t> next{begin};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::int64_t i = next++; i < end && !failed; i = next++) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  pool.clear();
  if (error) std::rethrow_exception(error);
}

struct SampleResult {
  std::vector<KeyedReport> reports;
  PureState psi;
  std::optional<DensityMatrix> rho;
};

// Folds one sample's reports into the per-checker statistics. A checker with
// several reports per sample counts once, with its worst verdict.
void accumulate(std::map<std::string, CheckerStats>& stats, std::int64_t sample,
                const std::vector<KeyedReport>& reports) {
  std::map<std::string, std::pair<Verdict, const InequalityReport*>> worst;
  for (const auto& kr : reports) {
    auto [it, inserted] = worst.try_emplace(kr.checker, kr.report.verdict, &kr.report);
    if (!inserted) {
      if (verdict_rank(kr.report.verdict) > verdict_rank(it->second.first)) it->second.first = kr.report.verdict;
      if (kr.report.slack < it->second.second->slack) it->second.second = &kr.report;
    }
  }
  for (const auto& [checker, w] : worst) {
    auto [it, inserted] = stats.try_emplace(checker);
    CheckerStats& st = it->second;
    switch (w.first) {
      case Verdict::holds: ++st.holds; break;
      case Verdict::saturated: ++st.saturated; break;
      case Verdict::violated: ++st.violated; break;
    }
    const double slack = w.second->slack;
    if (inserted || slack < st.min_slack) {
      st.min_slack = slack;
      st.worst_fingerprint = w.second->state_fingerprint;
      st.worst_sample = sample;
    }
    if (inserted) st.max_slack = slack;
    // Per-qubit checkers: the max is over every report, not just the worst one.
    for (const auto& kr : reports)
      if (kr.checker == checker) st.max_slack = std::max(st.max_slack, kr.report.slack);
  }
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::ordered_json stats_json(const std::map<std::string, CheckerStats>& checkers) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [name, st] : checkers) {
    out[name] = {{"holds", st.holds},
                 {"saturated", st.saturated},
                 {"violated", st.violated},
                 {"min_slack", st.min_slack},
                 {"max_slack", st.max_slack},
                 {"worst_sample", st.worst_sample},
                 {"worst_fingerprint", fingerprint_hex(st.worst_fingerprint)}};
  }
  return out;
}

nlohmann::ordered_json amplitudes_json(std::span<const cplx> amps) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& a : amps) arr.push_back({a.real(), a.imag()});
  return arr;
}

nlohmann::ordered_json measure_set_json(const MeasureSet& m) {
  return {{"a", m.qubit_a},
          {"b", m.qubit_b},
          {"lambdas", m.spectrum.lambdas},
          {"s_lin_a", m.s_lin_a},
          {"s_lin_b", m.s_lin_b},
          {"s_lin_ab", m.s_lin_ab},
          {"s_mutual", m.s_mutual},
          {"concurrence", m.concurrence},
          {"coa", m.coa},
          {"tangle", m.tangle},
          {"tangle_a", m.tangle_a},
          {"x_split", m.x_split},
          {"y_split", m.y_split}};
}

}  // namespace

OutputFormat parse_output_format(std::string_view s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown format '" + std::string(s) + "' (expected json or csv)");
}

HuntMode parse_hunt_mode(std::string_view s) {
  if (s == "min") return HuntMode::min;
  if (s == "max") return HuntMode::max;
  throw std::invalid_argument("unknown hunt mode '" + std::string(s) + "' (expected min or max)");
}

HuntStart parse_hunt_start(std::string_view s) {
  if (s == "random") return HuntStart::random;
  if (s == "w") return HuntStart::w;
  throw std::invalid_argument("unknown hunt start '" + std::string(s) + "' (expected random or w)");
}

void RunConfig::validate() const {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be > 0");
  if (command != Command::measure && command != Command::family && (n_qubits < 2 || n_qubits > 10))
    throw std::invalid_argument("qubits must be in [2, 10]");
  if (command == Command::hunt) {
    if (n_qubits < 5) throw std::invalid_argument("hunt requires >= 5 qubits");
    if (restarts < 1 || iterations < 1) throw std::invalid_argument("restarts and iterations must be >= 1");
    if (!(initial_step > 0.0)) throw std::invalid_argument("initial step must be > 0");
    if (rejections_before_halving < 1) throw std::invalid_argument("rejection window must be >= 1");
  }
  if (command == Command::family && (max_qubits < 3 || max_qubits > 10))
    throw std::invalid_argument("max-qubits must be in [3, 10]");
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> cli_seed, const char* env_value) {
  if (cli_seed) return *cli_seed;
  if (env_value != nullptr && *env_value != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env_value, &used, 0);
      if (used == std::string_view(env_value).size()) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("QML_SEED is not an unsigned integer: '" + std::string(env_value) + "'");
  }
  return 1;
}

std::vector<KeyedReport> evaluate_pure(const PureState& psi, const CheckOptions& opt) {
  std::vector<KeyedReport> out;
  const int n = psi.n_qubits();
  auto add = [&](std::string key, InequalityReport r) { out.push_back({std::move(key), std::move(r)}); };

  if (n >= 3) {
    auto [ckw, dual] = check_chain(psi, opt);
    // The full CKW / dual-monogamy chain as one report: the chain holds iff both links hold.
    const InequalityReport& weaker = ckw.slack <= dual.slack ? ckw : dual;
    InequalityReport chain = weaker;
    chain.name = "chain";
    chain.verdict = verdict_rank(ckw.verdict) >= verdict_rank(dual.verdict) ? ckw.verdict : dual.verdict;
    add("ckw", std::move(ckw));
    add("dual_monogamy", std::move(dual));
    add("chain", std::move(chain));
    for (auto& r : check_theorem2(psi, opt)) {
      std::string key = r.name;
      add(std::move(key), std::move(r));
    }
  }
  for (auto& r : check_assistance_ceiling(psi, opt)) add("assistance_ceiling", std::move(r));
  if (n == 3) add("three_qubit_equality", check_three_qubit_equality(psi, opt));
  if (n >= 4) {
    const BipartitionTangles bt = bipartition_tangles(psi);
    const auto fp = psi.fingerprint();
    for (int k = 0; k < n; ++k) {
      auto [lo, hi] = check_corollary(bt, k, fp, opt);
      add("corollary10_lower", std::move(lo));
      add("corollary10_upper", std::move(hi));
    }
    auto [lo, hi] = check_aggregate_bound(bt, fp, opt);
    add("aggregate_lower", std::move(lo));
    add("aggregate_upper", std::move(hi));
  }
  return out;
}

std::vector<KeyedReport> evaluate_mixed(const DensityMatrix& rho, const CheckOptions& opt) {
  return {{"lemma1", check_lemma1(rho, opt)}, {"claim6", check_claim6(rho, opt)}};
}

bool CampaignSummary::any_violation() const {
  return std::any_of(checkers.begin(), checkers.end(), [](const auto& kv) { return kv.second.violated > 0; });
}

bool HuntSummary::any_violation() const {
  return std::any_of(checkers.begin(), checkers.end(), [](const auto& kv) { return kv.second.violated > 0; });
}

bool FamilyTable::any_violation() const {
  for (const auto& row : rows)
    for (const auto& [name, v] : row.verdicts)
      if (v == Verdict::violated) return true;
  return false;
}

CampaignSummary run_fuzz(const RunConfig& cfg, bool keep_rows) {
  RunConfig checked = cfg;
  checked.command = Command::fuzz;
  checked.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const CheckOptions opt{cfg.tolerance};
  const unsigned workers = worker_count(cfg);

  CampaignSummary summary;
  summary.n_qubits = cfg.n_qubits;
  summary.samples = cfg.samples;
  summary.seed = cfg.seed;
  summary.tolerance = cfg.tolerance;

  for (std::int64_t begin = 0; begin < cfg.samples; begin += kChunk) {
    const std::int64_t end = std::min(cfg.samples, begin + kChunk);
    std::vector<std::optional<SampleResult>> results(static_cast<std::size_t>(end - begin));
    parallel_for(begin, end, workers, [&](std::int64_t i) {
      const auto idx = static_cast<std::uint64_t>(i);
      PureState psi = haar_random_pure(cfg.n_qubits, derive_seed(cfg.seed, idx, kPureStream));
      SampleResult res{evaluate_pure(psi, opt), std::move(psi), std::nullopt};
      if (cfg.include_mixed) {
        DensityMatrix rho = random_mixed_two_qubit(derive_seed(cfg.seed, idx, kMixedStream));
        for (auto& kr : evaluate_mixed(rho, opt)) res.reports.push_back(std::move(kr));
        res.rho = std::move(rho);
      }
      results[static_cast<std::size_t>(i - begin)] = std::move(res);
    });

    // Sequential, index-ordered reduction keeps the summary independent of scheduling.
    for (std::int64_t i = begin; i < end; ++i) {
      SampleResult& res = *results[static_cast<std::size_t>(i - begin)];
      accumulate(summary.checkers, i, res.reports);
      for (const auto& kr : res.reports) {
        if (kr.report.verdict != Verdict::violated) continue;
        ViolationRecord rec;
        rec.checker = kr.checker;
        rec.sample_index = i;
        rec.report = kr.report;
        rec.mixed = kr.checker == "lemma1" || kr.checker == "claim6";
        if (rec.mixed) {
          rec.n_qubits = 2;
          rec.amplitudes.assign(res.rho->matrix().data().begin(), res.rho->matrix().data().end());
        } else {
          rec.n_qubits = res.psi.n_qubits();
          rec.amplitudes.assign(res.psi.amplitudes().begin(), res.psi.amplitudes().end());
        }
        summary.violations.push_back(std::move(rec));
      }
      if (keep_rows)
        for (auto& kr : res.reports) summary.rows.push_back(std::move(kr));
    }
  }
  summary.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return summary;
}

double hunt_objective(const PureState& psi) { return discriminant_direct(psi).total; }

HuntSummary run_hunt(const RunConfig& cfg) {
  RunConfig checked = cfg;
  checked.command = Command::hunt;
  checked.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const int n = cfg.n_qubits;
  const int m = n - 1;
  const double sign = cfg.mode == HuntMode::min ? 1.0 : -1.0;

  HuntSummary out;
  out.n_qubits = n;
  out.mode = cfg.mode;
  out.start = cfg.start;
  out.restarts = cfg.restarts;
  out.iterations = cfg.iterations;
  out.seed = cfg.seed;
  out.tolerance = cfg.tolerance;

  struct RestartResult {
    HuntRestart run;
    PureState best;
  };
  std::vector<std::optional<RestartResult>> results(static_cast<std::size_t>(cfg.restarts));

  parallel_for(0, cfg.restarts, worker_count(cfg), [&](std::int64_t r) {
    const auto idx = static_cast<std::uint64_t>(r);
    PureState current = cfg.start == HuntStart::w ? state_family(StateFamily::w, n)
                                                  : haar_random_pure(n, derive_seed(cfg.seed, idx, kHuntStart));
    std::mt19937_64 gen(derive_seed(cfg.seed, idx, kHuntWalk));
    std::normal_distribution<double> normal(0.0, 1.0);

    HuntRestart run;
    run.index = static_cast<int>(r);
    double value = hunt_objective(current);
    run.start_value = value;
    run.min_seen = run.max_seen = value;
    double step = cfg.initial_step;
    int rejections = 0;
    for (int it = 0; it < cfg.iterations; ++it) {
      std::vector<cplx> amps(current.amplitudes().begin(), current.amplitudes().end());
      for (auto& a : amps) {
        const double re = normal(gen);
        const double im = normal(gen);
        a += step * cplx(re, im);
      }
      PureState proposal = PureState::normalized(n, std::move(amps));
      const double pv = hunt_objective(proposal);
      run.min_seen = std::min(run.min_seen, pv);
      run.max_seen = std::max(run.max_seen, pv);
      if (sign * pv < sign * value) {
        current = std::move(proposal);
        value = pv;
        ++run.accepted;
        rejections = 0;
      } else if (++rejections >= cfg.rejections_before_halving) {
        step *= 0.5;
        rejections = 0;
      }
    }
    run.best_value = value;
    run.final_step = step;
    results[static_cast<std::size_t>(r)] = RestartResult{run, std::move(current)};
  });

  const CheckOptions opt{cfg.tolerance};
  std::optional<std::size_t> best_idx;
  for (std::size_t r = 0; r < results.size(); ++r) {
    const RestartResult& res = *results[r];
    out.runs.push_back(res.run);
    if (!best_idx || sign * res.run.best_value < sign * results[*best_idx]->run.best_value) best_idx = r;

    const auto fp = res.best.fingerprint();
    const std::vector<KeyedReport> reports = {
        {"lemma9_floor", make_report("lemma9_floor", -1.0, res.run.min_seen, opt.tolerance, fp)},
        {"lemma7_ceiling", make_report("lemma7_ceiling", res.run.max_seen, m - 2.0, opt.tolerance, fp)}};
    accumulate(out.checkers, static_cast<std::int64_t>(r), reports);
    for (const auto& kr : reports)
      if (kr.report.verdict == Verdict::violated) out.violations.push_back(kr.report);
  }
  out.best_value = results[*best_idx]->run.best_value;
  const auto amps = results[*best_idx]->best.amplitudes();
  out.best_state.assign(amps.begin(), amps.end());
  out.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

FamilyTable run_family(const RunConfig& cfg) {
  RunConfig checked = cfg;
  checked.command = Command::family;
  checked.validate();
  const CheckOptions opt{cfg.tolerance};
  FamilyTable table;
  for (StateFamily fam : {StateFamily::ghz, StateFamily::w, StateFamily::product}) {
    for (int n = 3; n <= cfg.max_qubits; ++n) {
      const PureState psi = state_family(fam, n);
      FamilyRow row;
      row.family = fam;
      row.n_qubits = n;
      {
        const int keep[] = {0};
        row.s_lin_a = linear_entropy(partial_trace(psi, keep));
      }
      for (int k = 1; k < n; ++k) {
        const MeasureSet ms = pair_measures(psi, 0, k);
        row.sum_tangle += ms.tangle;
        row.sum_tangle_a += ms.tangle_a;
      }
      const SchmidtForm sf = schmidt_cut(psi);
      if (sf.p1 >= kDegenerateSchmidt) row.discriminant = discriminant_direct(sf).total;
      const BipartitionTangles bt = bipartition_tangles(psi);
      row.tau1 = bt.tau1;
      row.tau2 = bt.tau2;

      std::map<std::string, Verdict> worst;
      std::vector<std::string> order;
      for (const auto& kr : evaluate_pure(psi, opt)) {
        auto [it, inserted] = worst.try_emplace(kr.checker, kr.report.verdict);
        if (inserted)
          order.push_back(kr.checker);
        else if (verdict_rank(kr.report.verdict) > verdict_rank(it->second))
          it->second = kr.report.verdict;
      }
      for (const auto& name : order) row.verdicts.emplace_back(name, worst[name]);
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

nlohmann::ordered_json measure_document(const PureState& psi, const CheckOptions& opt) {
  const int n = psi.n_qubits();
  nlohmann::ordered_json doc;
  doc["schema"] = "qmono.measure/1";
  doc["n_qubits"] = n;
  doc["fingerprint"] = fingerprint_hex(psi.fingerprint());
  doc["tolerance"] = opt.tolerance;

  auto pairs = nlohmann::ordered_json::array();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.push_back(measure_set_json(pair_measures(psi, a, b)));
  doc["pairs"] = std::move(pairs);

  const SchmidtForm sf = schmidt_cut(psi);
  const Discriminant d = discriminant_direct(sf);
  doc["schmidt"] = {{"p0", sf.p0}, {"p1", sf.p1}, {"degenerate", sf.p1 < kDegenerateSchmidt}};
  doc["discriminant"] = {{"per_qubit", d.per_qubit}, {"total", d.total}};

  if (n >= 3) {
    const BipartitionTangles bt = bipartition_tangles(psi);
    doc["bipartition"] = {{"single", bt.single}, {"pair", bt.pair}, {"tau1_k", bt.tau1_k},
                          {"tau2_k", bt.tau2_k}, {"tau1", bt.tau1},  {"tau2", bt.tau2}};
  }

  auto checks = nlohmann::ordered_json::array();
  for (const auto& kr : evaluate_pure(psi, opt)) {
    auto j = to_json(kr.report);
    j["checker"] = kr.checker;
    checks.push_back(std::move(j));
  }
  doc["checks"] = std::move(checks);
  return doc;
}

bool document_has_violation(const nlohmann::ordered_json& doc) {
  if (!doc.contains("checks")) return false;
  for (const auto& c : doc["checks"])
    if (c.value("verdict", "") == "violated") return true;
  return false;
}

std::string fingerprint_hex(std::uint64_t fp) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fp));
  return buf;
}

nlohmann::ordered_json to_json(const InequalityReport& r) {
  return {{"name", r.name},
          {"relation", r.relation == Relation::equal ? "==" : "<="},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"slack", r.slack},
          {"verdict", std::string(to_string(r.verdict))},
          {"tolerance", r.tolerance},
          {"fingerprint", fingerprint_hex(r.state_fingerprint)}};
}

nlohmann::ordered_json to_json(const CampaignSummary& s, bool include_timing) {
  nlohmann::ordered_json doc;
  doc["schema"] = CampaignSummary::kSchema;
  doc["n_qubits"] = s.n_qubits;
  doc["samples"] = s.samples;
  doc["seed"] = s.seed;
  doc["tolerance"] = s.tolerance;
  doc["checkers"] = stats_json(s.checkers);
  auto viol = nlohmann::ordered_json::array();
  for (const auto& v : s.violations) {
    auto j = to_json(v.report);
    j["checker"] = v.checker;
    j["sample"] = v.sample_index;
    j["input_kind"] = v.mixed ? "density_matrix" : "pure_state";
    j["n_qubits"] = v.n_qubits;
    j["amplitudes"] = amplitudes_json(v.amplitudes);
    viol.push_back(std::move(j));
  }
  doc["violations"] = std::move(viol);
  doc["any_violation"] = s.any_violation();
  if (include_timing) doc["wall_time_s"] = s.wall_time_s;
  return doc;
}

nlohmann::ordered_json to_json(const HuntSummary& s, bool include_timing) {
  nlohmann::ordered_json doc;
  doc["schema"] = HuntSummary::kSchema;
  doc["n_qubits"] = s.n_qubits;
  doc["m_qubits"] = s.n_qubits - 1;
  doc["mode"] = s.mode == HuntMode::min ? "min" : "max";
  doc["start"] = s.start == HuntStart::w ? "w" : "random";
  doc["restarts"] = s.restarts;
  doc["iterations"] = s.iterations;
  doc["seed"] = s.seed;
  doc["tolerance"] = s.tolerance;
  doc["best_discriminant"] = s.best_value;
  doc["negative_discriminant_found"] = s.best_value < 0.0;
  auto runs = nlohmann::ordered_json::array();
  for (const auto& r : s.runs)
    runs.push_back({{"restart", r.index},
                    {"start_value", r.start_value},
                    {"best_value", r.best_value},
                    {"min_seen", r.min_seen},
                    {"max_seen", r.max_seen},
                    {"accepted", r.accepted},
                    {"final_step", r.final_step}});
  doc["runs"] = std::move(runs);
  doc["checkers"] = stats_json(s.checkers);
  auto viol = nlohmann::ordered_json::array();
  for (const auto& v : s.violations) viol.push_back(to_json(v));
  doc["violations"] = std::move(viol);
  doc["best_state"] = amplitudes_json(s.best_state);
  doc["any_violation"] = s.any_violation();
  if (include_timing) doc["wall_time_s"] = s.wall_time_s;
  return doc;
}

nlohmann::ordered_json to_json(const FamilyTable& t) {
  nlohmann::ordered_json doc;
  doc["schema"] = FamilyTable::kSchema;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json verdicts = nlohmann::ordered_json::object();
    for (const auto& [name, v] : r.verdicts) verdicts[name] = std::string(to_string(v));
    rows.push_back({{"family", std::string(to_string(r.family))},
                    {"n_qubits", r.n_qubits},
                    {"s_lin_a", r.s_lin_a},
                    {"sum_tangle", r.sum_tangle},
                    {"sum_tangle_a", r.sum_tangle_a},
                    {"discriminant", r.discriminant ? nlohmann::ordered_json(*r.discriminant) : nlohmann::ordered_json(nullptr)},
                    {"tau1", r.tau1},
                    {"tau2", r.tau2},
                    {"verdicts", std::move(verdicts)}});
  }
  doc["rows"] = std::move(rows);
  doc["any_violation"] = t.any_violation();
  return doc;
}

std::string to_csv(const CampaignSummary& s) {
  std::ostringstream out;
  out << "# qmono.reports/1\n";
  out << "checker,lhs,rhs,slack,verdict,fingerprint\n";
  for (const auto& kr : s.rows)
    out << kr.report.name << ',' << format_double(kr.report.lhs) << ',' << format_double(kr.report.rhs) << ','
        << format_double(kr.report.slack) << ',' << to_string(kr.report.verdict) << ','
        << fingerprint_hex(kr.report.state_fingerprint) << '\n';
  return out.str();
}

std::string to_csv(const HuntSummary& s) {
  std::ostringstream out;
  out << "# qmono.hunt/1\n";
  out << "restart,start_value,best_value,min_seen,max_seen,accepted,final_step\n";
  for (const auto& r : s.runs)
    out << r.index << ',' << format_double(r.start_value) << ',' << format_double(r.best_value) << ','
        << format_double(r.min_seen) << ',' << format_double(r.max_seen) << ',' << r.accepted << ','
        << format_double(r.final_step) << '\n';
  return out.str();
}

std::string to_csv(const FamilyTable& t) {
  std::ostringstream out;
  out << "# qmono.family/1\n";
  out << "family,n_qubits,s_lin_a,sum_tangle,sum_tangle_a,discriminant,tau1,tau2,verdicts\n";
  for (const auto& r : t.rows) {
    out << to_string(r.family) << ',' << r.n_qubits << ',' << format_double(r.s_lin_a) << ','
        << format_double(r.sum_tangle) << ',' << format_double(r.sum_tangle_a) << ','
        << (r.discriminant ? format_double(*r.discriminant) : "") << ',' << format_double(r.tau1) << ',' << format_double(r.tau2) << ',';
    for (std::size_t i = 0; i < r.verdicts.size(); ++i)
      out << (i ? ";" : "") << r.verdicts[i].first << '=' << to_string(r.verdicts[i].second);
    out << '\n';
  }
  return out.str();
}

}  // namespace qmono::harness
