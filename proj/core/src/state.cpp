#include "qmono/state.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstring>
#include <random>
#include <stdexcept>
#include <string>

namespace qmono {
namespace {

constexpr int kMaxStateQubits = 24;

std::uint64_t fnv1a(std::span<const cplx> values, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (const cplx& z : values) {
    for (double part : {z.real(), z.imag()}) {
      const auto bits = std::bit_cast<std::uint64_t>(part);
      for (int b = 0; b < 8; ++b) {
        h ^= (bits >> (8 * b)) & 0xffU;
        h *= 0x100000001b3ULL;
      }
    }
  }
  return h;
}

// Validated, sorted copy of a qubit subset of {0..n-1}.
std::vector<int> normalize_subset(std::span<const int> keep, int n) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  std::vector<int> out(keep.begin(), keep.end());
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::invalid_argument("partial_trace: duplicate qubit index in keep set");
  if (out.front() < 0 || out.back() >= n)
    throw std::invalid_argument("partial_trace: qubit index out of range");
  return out;
}

// Spreads the bits of `compact` onto the bit positions listed in `positions`.
std::size_t scatter_bits(std::size_t compact, std::span<const int> positions) {
  std::size_t out = 0;
  for (std::size_t j = 0; j < positions.size(); ++j)
    if ((compact >> j) & 1U) out |= std::size_t{1} << positions[j];
  return out;
}

std::vector<std::size_t> scatter_table(std::span<const int> positions) {
  std::vector<std::size_t> table(std::size_t{1} << positions.size());
  for (std::size_t c = 0; c < table.size(); ++c) table[c] = scatter_bits(c, positions);
  return table;
}

std::vector<int> complement(std::span<const int> sorted_keep, int n) {
  std::vector<int> rest;
  for (int q = 0; q < n; ++q)
    if (!std::binary_search(sorted_keep.begin(), sorted_keep.end(), q)) rest.push_back(q);
  return rest;
}

}  // namespace

PureState::PureState(int n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  if (n_qubits < 1 || n_qubits > kMaxStateQubits)
    throw std::invalid_argument("PureState: qubit count out of range");
  if (amplitudes_.size() != (std::size_t{1} << n_qubits))
    throw std::invalid_argument("PureState: expected " + std::to_string(std::size_t{1} << n_qubits) +
                                " amplitudes, got " + std::to_string(amplitudes_.size()));
  double norm2 = 0.0;
  for (const auto& a : amplitudes_) norm2 += std::norm(a);
  if (!(std::abs(norm2 - 1.0) <= kNormTolerance))
    throw std::invalid_argument("PureState: norm " + std::to_string(std::sqrt(norm2)) + " outside tolerance");
}

PureState PureState::normalized(int n_qubits, std::vector<cplx> amplitudes) {
  double norm2 = 0.0;
  for (const auto& a : amplitudes) norm2 += std::norm(a);
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) throw std::invalid_argument("PureState: cannot normalize");
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : amplitudes) a *= inv;
  return PureState(n_qubits, std::move(amplitudes));
}

PureState PureState::basis(int n_qubits, std::size_t index) {
  if (n_qubits < 1 || n_qubits > kMaxStateQubits) throw std::invalid_argument("PureState: qubit count out of range");
  std::vector<cplx> amps(std::size_t{1} << n_qubits);
  if (index >= amps.size()) throw std::invalid_argument("PureState::basis: index out of range");
  amps[index] = 1.0;
  return PureState(n_qubits, std::move(amps));
}

std::uint64_t PureState::fingerprint() const { return fnv1a(amplitudes_); }

DensityMatrix::DensityMatrix(Trusted, std::vector<int> qubit_labels, ComplexMatrix matrix)
    : labels_(std::move(qubit_labels)), matrix_(std::move(matrix)) {
  if (!matrix_.is_square() || matrix_.rows() != (std::size_t{1} << labels_.size()))
    throw std::invalid_argument("DensityMatrix: dimension does not match qubit labels");
  const double herr = matrix_.hermiticity_error();
  if (herr > kHermitianTolerance) throw std::invalid_argument("DensityMatrix: not Hermitian");
  const cplx tr = matrix_.trace();
  if (std::abs(tr - 1.0) > kNormTolerance)
    throw std::invalid_argument("DensityMatrix: trace " + std::to_string(tr.real()) + " is not 1");
}

DensityMatrix::DensityMatrix(std::vector<int> qubit_labels, ComplexMatrix matrix)
    : DensityMatrix(Trusted{}, std::move(qubit_labels), std::move(matrix)) {
  const auto eig = hermitian_eig(matrix_);
  if (eig.eigenvalues.back() < kClampFloor)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue " + std::to_string(eig.eigenvalues.back()));
}

DensityMatrix DensityMatrix::from_trusted(std::vector<int> qubit_labels, ComplexMatrix matrix) {
  return DensityMatrix(Trusted{}, std::move(qubit_labels), std::move(matrix));
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  std::vector<int> labels(static_cast<std::size_t>(psi.n_qubits()));
  for (int q = 0; q < psi.n_qubits(); ++q) labels[static_cast<std::size_t>(q)] = q;
  return from_trusted(std::move(labels), ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes()));
}

double DensityMatrix::purity() const {
  double s = 0.0;
  for (const auto& z : matrix_.data()) s += std::norm(z);
  return s;
}

std::uint64_t DensityMatrix::fingerprint() const { return fnv1a(matrix_.data()); }

DensityMatrix partial_trace(const PureState& psi, std::span<const int> keep) {
  const std::vector<int> kept = normalize_subset(keep, psi.n_qubits());
  const std::vector<int> rest = complement(kept, psi.n_qubits());
  const auto keep_idx = scatter_table(kept);
  const auto rest_idx = scatter_table(rest);

  const std::size_t d = keep_idx.size();
  ComplexMatrix rho(d, d);
  const auto amps = psi.amplitudes();
  for (const std::size_t r : rest_idx) {
    for (std::size_t a = 0; a < d; ++a) {
      const cplx va = amps[keep_idx[a] | r];
      if (va == cplx{}) continue;
      for (std::size_t b = 0; b < d; ++b) rho(a, b) += va * std::conj(amps[keep_idx[b] | r]);
    }
  }
  return DensityMatrix::from_trusted(kept, rho.hermitian_part());
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const auto labels = rho.qubit_labels();
  std::vector<int> local;
  local.reserve(keep.size());
  for (int q : keep) {
    const auto it = std::find(labels.begin(), labels.end(), q);
    if (it == labels.end()) throw std::invalid_argument("partial_trace: qubit " + std::to_string(q) + " not in state");
    local.push_back(static_cast<int>(it - labels.begin()));
  }
  // Output is ordered by original label; sort local positions accordingly.
  std::vector<int> kept_local = normalize_subset(local, rho.n_qubits());
  std::sort(kept_local.begin(), kept_local.end(), [&](int x, int y) {
    return labels[static_cast<std::size_t>(x)] < labels[static_cast<std::size_t>(y)];
  });
  std::vector<int> sorted_for_complement = kept_local;
  std::sort(sorted_for_complement.begin(), sorted_for_complement.end());
  const std::vector<int> rest = complement(sorted_for_complement, rho.n_qubits());
  const auto keep_idx = scatter_table(kept_local);
  const auto rest_idx = scatter_table(rest);

  const std::size_t d = keep_idx.size();
  ComplexMatrix out(d, d);
  const ComplexMatrix& m = rho.matrix();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      cplx s = 0.0;
      for (const std::size_t r : rest_idx) s += m(keep_idx[a] | r, keep_idx[b] | r);
      out(a, b) = s;
    }
  std::vector<int> out_labels;
  for (int x : kept_local) out_labels.push_back(labels[static_cast<std::size_t>(x)]);
  return DensityMatrix::from_trusted(std::move(out_labels), out.hermitian_part());
}

PureState haar_random_pure(int n_qubits, std::uint64_t seed) {
  if (n_qubits < 1 || n_qubits > kMaxHaarQubits)
    throw std::invalid_argument("haar_random_pure: qubit count must be in [1, " + std::to_string(kMaxHaarQubits) + "]");
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<cplx> amps(std::size_t{1} << n_qubits);
  for (auto& a : amps) {
    const double re = normal(gen);
    const double im = normal(gen);
    a = cplx(re, im);
  }
  return PureState::normalized(n_qubits, std::move(amps));
}

DensityMatrix random_mixed_two_qubit(std::uint64_t seed) {
  static constexpr int kKeep[] = {0, 1};
  return partial_trace(haar_random_pure(4, seed), kKeep);
}

StateFamily parse_state_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "ghz") return StateFamily::ghz;
  if (lower == "w") return StateFamily::w;
  if (lower == "product") return StateFamily::product;
  if (lower == "bell") return StateFamily::bell;
  throw std::invalid_argument("unknown state family '" + std::string(name) + "'");
}

std::string_view to_string(StateFamily family) {
  switch (family) {
    case StateFamily::ghz: return "GHZ";
    case StateFamily::w: return "W";
    case StateFamily::product: return "product";
    case StateFamily::bell: return "Bell";
  }
  return "?";
}

PureState state_family(StateFamily family, int n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("state_family: need at least 2 qubits");
  if (family == StateFamily::bell && n_qubits != 2)
    throw std::invalid_argument("state_family: Bell state requires exactly 2 qubits");
  if (n_qubits > kMaxStateQubits) throw std::invalid_argument("state_family: qubit count out of range");
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<cplx> amps(dim);
  switch (family) {
    case StateFamily::ghz:
    case StateFamily::bell:
      amps[0] = amps[dim - 1] = 1.0 / std::sqrt(2.0);
      break;
    case StateFamily::w:
      for (int k = 0; k < n_qubits; ++k) amps[std::size_t{1} << k] = 1.0 / std::sqrt(static_cast<double>(n_qubits));
      break;
    case StateFamily::product:
      amps[0] = 1.0;
      break;
  }
  return PureState::normalized(n_qubits, std::move(amps));
}

PureState apply_single_qubit_unitary(const PureState& psi, int qubit, const ComplexMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2) throw std::invalid_argument("apply_single_qubit_unitary: need a 2x2 matrix");
  if (qubit < 0 || qubit >= psi.n_qubits()) throw std::invalid_argument("apply_single_qubit_unitary: bad qubit");
  std::vector<cplx> out(psi.amplitudes().begin(), psi.amplitudes().end());
  const std::size_t bit = std::size_t{1} << qubit;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i & bit) continue;
    const cplx a0 = psi[i], a1 = psi[i | bit];
    out[i] = u(0, 0) * a0 + u(0, 1) * a1;
    out[i | bit] = u(1, 0) * a0 + u(1, 1) * a1;
  }
  return PureState::normalized(psi.n_qubits(), std::move(out));
}

PureState swap_qubits(const PureState& psi, int a, int b) {
  if (a < 0 || b < 0 || a >= psi.n_qubits() || b >= psi.n_qubits())
    throw std::invalid_argument("swap_qubits: bad qubit index");
  std::vector<cplx> out(psi.dim());
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    const std::size_t ba = (i >> a) & 1U, bb = (i >> b) & 1U;
    std::size_t j = i & ~((std::size_t{1} << a) | (std::size_t{1} << b));
    j |= (ba << b) | (bb << a);
    out[j] = psi[i];
  }
  return PureState(psi.n_qubits(), std::move(out));
}

ComplexMatrix Decomposition::reconstruct() const {
  ComplexMatrix out(4, 4);
  for (std::size_t j = 0; j < weights.size(); ++j) {
    const auto& s = states[j];
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) out(r, c) += weights[j] * s[r] * std::conj(s[c]);
  }
  return out;
}

std::size_t numerical_rank(const DensityMatrix& rho) {
  const auto eig = hermitian_eig(rho.matrix());
  return static_cast<std::size_t>(
      std::count_if(eig.eigenvalues.begin(), eig.eigenvalues.end(), [](double x) { return x > kRankThreshold; }));
}

Decomposition decomposition_from_unitary(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (rho.dim() != 4) throw std::invalid_argument("decomposition: need a two-qubit density matrix");
  if (!u.is_square()) throw std::invalid_argument("decomposition: unitary must be square");
  const auto eig = hermitian_eig(rho.matrix());
  const std::size_t rank = static_cast<std::size_t>(
      std::count_if(eig.eigenvalues.begin(), eig.eigenvalues.end(), [](double x) { return x > kRankThreshold; }));
  const std::size_t m = u.rows();
  if (m < rank)
    throw std::invalid_argument("decomposition: size " + std::to_string(m) + " is below rank " + std::to_string(rank));

  const std::size_t used = std::min<std::size_t>(m, 4);
  std::vector<double> sqrt_mu(used);
  for (std::size_t i = 0; i < used; ++i) sqrt_mu[i] = eig.eigenvalues[i] > 0.0 ? std::sqrt(eig.eigenvalues[i]) : 0.0;

  Decomposition out;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<cplx> phi(4);
    for (std::size_t i = 0; i < used; ++i) {
      const cplx coef = u(j, i) * sqrt_mu[i];
      for (std::size_t r = 0; r < 4; ++r) phi[r] += coef * eig.eigenvectors(r, i);
    }
    double p = 0.0;
    for (const auto& z : phi) p += std::norm(z);
    if (p == 0.0) continue;
    const double inv = 1.0 / std::sqrt(p);
    for (auto& z : phi) z *= inv;
    out.weights.push_back(p);
    out.states.push_back(std::move(phi));
  }
  return out;
}

Decomposition sample_decomposition(const DensityMatrix& rho, std::size_t m, std::uint64_t seed) {
  if (m == 0) throw std::invalid_argument("decomposition: size must be positive");
  return decomposition_from_unitary(rho, haar_random_unitary(m, seed));
}

}  // namespace qmono
