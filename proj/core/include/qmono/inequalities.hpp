#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmono/state.hpp"

namespace qmono {

enum class Verdict { holds, saturated, violated };
std::string_view to_string(Verdict v);

/// lhs <= rhs, or lhs == rhs for equalities.
enum class Relation { less_equal, equal };

/// One evaluated inequality. slack = rhs - lhs.
///  less_equal: violated iff slack < -tol, saturated iff |slack| <= tol.
///  equal:      saturated iff |slack| <= tol, violated otherwise.
struct InequalityReport {
  std::string name;
  Relation relation = Relation::less_equal;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  Verdict verdict = Verdict::holds;
  double tolerance = 0.0;
  std::uint64_t state_fingerprint = 0;
};

InequalityReport make_report(std::string name, double lhs, double rhs, double tolerance, std::uint64_t fingerprint,
                             Relation relation = Relation::less_equal);

inline constexpr double kDefaultTolerance = 1e-9;

struct CheckOptions {
  double tolerance = kDefaultTolerance;
};

/// sum_k tau^{A B(k)} <= S_L(rho^A). N >= 3.
InequalityReport check_ckw(const PureState& psi, const CheckOptions& opt = {});

/// S_L(rho^A) <= sum_k tau_a^{A B(k)}. N >= 3.
InequalityReport check_dual_monogamy(const PureState& psi, const CheckOptions& opt = {});

/// Both of the above with one shared S_L(rho^A).
std::pair<InequalityReport, InequalityReport> check_chain(const PureState& psi, const CheckOptions& opt = {});

/// 1/2 S_L(A:B) <= tau_a for any two-qubit state.
InequalityReport check_lemma1(const DensityMatrix& rho, const CheckOptions& opt = {});

/// a-lower: 2 S_L(rho^A) <= sum_k S_L(A:B(k)); a-upper: sum <= N S_L(rho^A);
/// b (only N = 3, 4): sum <= (N-1) S_L(rho^A). N >= 3.
std::vector<InequalityReport> check_theorem2(const PureState& psi, const CheckOptions& opt = {});

/// S_L(A:B) <= tau_a + tau for any two-qubit state.
InequalityReport check_claim6(const DensityMatrix& rho, const CheckOptions& opt = {});

/// tau^AB + tau^AC + tau_a^AB + tau_a^AC == 2 S_L(rho^A). Exactly 3 qubits.
InequalityReport check_three_qubit_equality(const PureState& psi, const CheckOptions& opt = {});

/// tau_a^{AB(k)} <= min{S_L(rho^A), S_L(rho^B(k))}, one report per B qubit.
std::vector<InequalityReport> check_assistance_ceiling(const PureState& psi, const CheckOptions& opt = {});

/// Tangles across one-qubit and two-qubit cuts of a pure state.
struct BipartitionTangles {
  int n_qubits = 0;
  std::vector<double> single;               // tau^{k:rest} = S_L(rho^k)
  std::vector<std::vector<double>> pair;    // tau^{kk':rest} = S_L(rho^{kk'}), symmetric, zero diagonal
  std::vector<double> tau1_k;               // sum_{l != k} tau^{l:rest}
  std::vector<double> tau2_k;               // sum_{l != k} tau^{kl:rest}
  double tau1 = 0.0;                        // sum_k tau^{k:rest}
  double tau2 = 0.0;                        // 1/2 sum_k tau2_k
};

/// N >= 3. Pair cuts are computed at N = 3 too, where they coincide with single cuts.
BipartitionTangles bipartition_tangles(const PureState& psi);

/// (delta_{N,4} - 1) tau^{k:rest} <= tau2_k - tau1_k <= (N-3) tau^{k:rest}. N >= 4.
std::pair<InequalityReport, InequalityReport> check_corollary(const PureState& psi, int k,
                                                              const CheckOptions& opt = {});
std::pair<InequalityReport, InequalityReport> check_corollary(const BipartitionTangles& bt, int k,
                                                              std::uint64_t fingerprint, const CheckOptions& opt = {});

/// (N - 2 + delta_{N,4})/2 tau1 <= tau2 <= (N-2) tau1. N >= 4.
std::pair<InequalityReport, InequalityReport> check_aggregate_bound(const PureState& psi, const CheckOptions& opt = {});
std::pair<InequalityReport, InequalityReport> check_aggregate_bound(const BipartitionTangles& bt,
                                                                    std::uint64_t fingerprint,
                                                                    const CheckOptions& opt = {});

}  // namespace qmono
