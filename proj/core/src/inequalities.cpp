#include "qmono/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qmono/measures.hpp"

namespace qmono {
namespace {

void require_min_qubits(const PureState& psi, int n, const char* what) {
  if (psi.n_qubits() < n)
    throw std::invalid_argument(std::string(what) + ": requires at least " + std::to_string(n) + " qubits");
}

double single_entropy(const PureState& psi, int q) {
  const int keep[] = {q};
  return linear_entropy(partial_trace(psi, keep));
}

struct PairSums {
  double s_lin_a = 0.0;
  double tangle = 0.0;
  double tangle_a = 0.0;
};

PairSums pair_sums(const PureState& psi) {
  PairSums s;
  s.s_lin_a = single_entropy(psi, 0);
  for (int k = 1; k < psi.n_qubits(); ++k) {
    const MeasureSet m = pair_measures(psi, 0, k);
    s.tangle += m.tangle;
    s.tangle_a += m.tangle_a;
  }
  return s;
}

std::string indexed(std::string_view base, int k) { return std::string(base) + "[k=" + std::to_string(k) + "]"; }

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::saturated: return "saturated";
    case Verdict::violated: return "violated";
  }
  return "?";
}

InequalityReport make_report(std::string name, double lhs, double rhs, double tolerance, std::uint64_t fingerprint,
                             Relation relation) {
  if (!(tolerance > 0.0)) throw std::invalid_argument("make_report: tolerance must be positive");
  InequalityReport r;
  r.name = std::move(name);
  r.relation = relation;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.tolerance = tolerance;
  r.state_fingerprint = fingerprint;
  if (std::abs(r.slack) <= tolerance)
    r.verdict = Verdict::saturated;
  else if (relation == Relation::equal || r.slack < -tolerance || std::isnan(r.slack))
    r.verdict = Verdict::violated;
  else
    r.verdict = Verdict::holds;
  return r;
}

InequalityReport check_ckw(const PureState& psi, const CheckOptions& opt) {
  return check_chain(psi, opt).first;
}

InequalityReport check_dual_monogamy(const PureState& psi, const CheckOptions& opt) {
  return check_chain(psi, opt).second;
}

std::pair<InequalityReport, InequalityReport> check_chain(const PureState& psi, const CheckOptions& opt) {
  require_min_qubits(psi, 3, "check_chain");
  const PairSums s = pair_sums(psi);
  const auto fp = psi.fingerprint();
  return {make_report("ckw", s.tangle, s.s_lin_a, opt.tolerance, fp),
          make_report("dual_monogamy", s.s_lin_a, s.tangle_a, opt.tolerance, fp)};
}

InequalityReport check_lemma1(const DensityMatrix& rho, const CheckOptions& opt) {
  const MeasureSet m = tangles(rho);
  return make_report("lemma1", 0.5 * m.s_mutual, m.tangle_a, opt.tolerance, rho.fingerprint());
}

std::vector<InequalityReport> check_theorem2(const PureState& psi, const CheckOptions& opt) {
  require_min_qubits(psi, 3, "check_theorem2");
  const int n = psi.n_qubits();
  const double sa = single_entropy(psi, 0);
  double sum = 0.0;
  for (int k = 1; k < n; ++k) sum += linear_mutual_entropy(psi, 0, k);

  const auto fp = psi.fingerprint();
  std::vector<InequalityReport> out;
  out.push_back(make_report("theorem2_a_lower", 2.0 * sa, sum, opt.tolerance, fp));
  out.push_back(make_report("theorem2_a_upper", sum, n * sa, opt.tolerance, fp));
  if (n == 3 || n == 4) out.push_back(make_report("theorem2_b", sum, (n - 1) * sa, opt.tolerance, fp));
  return out;
}

InequalityReport check_claim6(const DensityMatrix& rho, const CheckOptions& opt) {
  const MeasureSet m = tangles(rho);
  return make_report("claim6", m.s_mutual, m.tangle_a + m.tangle, opt.tolerance, rho.fingerprint());
}

InequalityReport check_three_qubit_equality(const PureState& psi, const CheckOptions& opt) {
  if (psi.n_qubits() != 3) throw std::invalid_argument("check_three_qubit_equality: requires exactly 3 qubits");
  const MeasureSet ab = pair_measures(psi, 0, 1);
  const MeasureSet ac = pair_measures(psi, 0, 2);
  const double lhs = ab.tangle + ac.tangle + ab.tangle_a + ac.tangle_a;
  return make_report("three_qubit_equality", lhs, 2.0 * single_entropy(psi, 0), opt.tolerance, psi.fingerprint(),
                     Relation::equal);
}

std::vector<InequalityReport> check_assistance_ceiling(const PureState& psi, const CheckOptions& opt) {
  require_min_qubits(psi, 2, "check_assistance_ceiling");
  const auto fp = psi.fingerprint();
  std::vector<InequalityReport> out;
  for (int k = 1; k < psi.n_qubits(); ++k) {
    const MeasureSet m = pair_measures(psi, 0, k);
    out.push_back(make_report(indexed("assistance_ceiling", k), m.tangle_a, std::min(m.s_lin_a, m.s_lin_b),
                              opt.tolerance, fp));
  }
  return out;
}

BipartitionTangles bipartition_tangles(const PureState& psi) {
  require_min_qubits(psi, 3, "bipartition_tangles");
  const int n = psi.n_qubits();
  const auto un = static_cast<std::size_t>(n);
  BipartitionTangles bt;
  bt.n_qubits = n;
  bt.single.resize(un);
  bt.pair.assign(un, std::vector<double>(un, 0.0));
  for (int k = 0; k < n; ++k) bt.single[static_cast<std::size_t>(k)] = single_entropy(psi, k);
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) {
      const int keep[] = {k, l};
      const double v = linear_entropy(partial_trace(psi, keep));
      bt.pair[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = v;
      bt.pair[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)] = v;
    }

  bt.tau1_k.assign(un, 0.0);
  bt.tau2_k.assign(un, 0.0);
  for (std::size_t k = 0; k < un; ++k) {
    bt.tau1 += bt.single[k];
    for (std::size_t l = 0; l < un; ++l) {
      if (l == k) continue;
      bt.tau1_k[k] += bt.single[l];
      bt.tau2_k[k] += bt.pair[k][l];
    }
  }
  for (double t : bt.tau2_k) bt.tau2 += t;
  bt.tau2 *= 0.5;
  return bt;
}

std::pair<InequalityReport, InequalityReport> check_corollary(const BipartitionTangles& bt, int k,
                                                              std::uint64_t fingerprint, const CheckOptions& opt) {
  const int n = bt.n_qubits;
  if (n < 4) throw std::invalid_argument("check_corollary: requires at least 4 qubits");
  if (k < 0 || k >= n) throw std::invalid_argument("check_corollary: qubit index out of range");
  const auto uk = static_cast<std::size_t>(k);
  const double diff = bt.tau2_k[uk] - bt.tau1_k[uk];
  const double tk = bt.single[uk];
  const double lower_coeff = (n == 4 ? 1.0 : 0.0) - 1.0;
  return {make_report(indexed("corollary10_lower", k), lower_coeff * tk, diff, opt.tolerance, fingerprint),
          make_report(indexed("corollary10_upper", k), diff, (n - 3) * tk, opt.tolerance, fingerprint)};
}

std::pair<InequalityReport, InequalityReport> check_corollary(const PureState& psi, int k, const CheckOptions& opt) {
  require_min_qubits(psi, 4, "check_corollary");
  return check_corollary(bipartition_tangles(psi), k, psi.fingerprint(), opt);
}

std::pair<InequalityReport, InequalityReport> check_aggregate_bound(const BipartitionTangles& bt,
                                                                    std::uint64_t fingerprint,
                                                                    const CheckOptions& opt) {
  const int n = bt.n_qubits;
  if (n < 4) throw std::invalid_argument("check_aggregate_bound: requires at least 4 qubits");
  const double lower_coeff = (n - 2 + (n == 4 ? 1 : 0)) / 2.0;
  return {make_report("aggregate_lower", lower_coeff * bt.tau1, bt.tau2, opt.tolerance, fingerprint),
          make_report("aggregate_upper", bt.tau2, (n - 2) * bt.tau1, opt.tolerance, fingerprint)};
}

std::pair<InequalityReport, InequalityReport> check_aggregate_bound(const PureState& psi, const CheckOptions& opt) {
  require_min_qubits(psi, 4, "check_aggregate_bound");
  return check_aggregate_bound(bipartition_tangles(psi), psi.fingerprint(), opt);
}

}  // namespace qmono
