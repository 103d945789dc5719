#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qmono/linalg.hpp"
#include "qmono/matrix.hpp"

namespace qmono {

inline constexpr double kNormTolerance = 1e-12;
inline constexpr int kMaxHaarQubits = 12;

/// Pure state of N qubits. Basis index i has qubit k in state (i >> k) & 1;
/// qubit 0 is party A, qubits 1..N-1 are B(1)..B(N-1).
class PureState {
 public:
  /// Throws std::invalid_argument unless amplitudes.size() == 2^n and the norm
  /// is 1 within kNormTolerance.
  PureState(int n_qubits, std::vector<cplx> amplitudes);

  /// Rescales to unit norm. Throws on the zero vector.
  static PureState normalized(int n_qubits, std::vector<cplx> amplitudes);
  static PureState basis(int n_qubits, std::size_t index);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const cplx> amplitudes() const { return amplitudes_; }
  cplx operator[](std::size_t i) const { return amplitudes_[i]; }

  /// 64-bit FNV-1a over the IEEE-754 bit patterns of the amplitudes.
  std::uint64_t fingerprint() const;

 private:
  int n_qubits_;
  std::vector<cplx> amplitudes_;
};

/// Density matrix over an ordered subset of the original qubits. Local bit j of
/// a row/column index refers to qubit_labels[j].
class DensityMatrix {
 public:
  /// Validates Hermiticity (1e-12), unit trace (1e-12) and eigenvalues >= -1e-10.
  DensityMatrix(std::vector<int> qubit_labels, ComplexMatrix matrix);

  /// Skips the eigenvalue check; for matrices that are PSD by construction.
  static DensityMatrix from_trusted(std::vector<int> qubit_labels, ComplexMatrix matrix);
  static DensityMatrix from_pure(const PureState& psi);

  std::span<const int> qubit_labels() const { return labels_; }
  int n_qubits() const { return static_cast<int>(labels_.size()); }
  std::size_t dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  /// Tr(rho^2)
  double purity() const;

  std::uint64_t fingerprint() const;

 private:
  struct Trusted {};
  DensityMatrix(Trusted, std::vector<int> qubit_labels, ComplexMatrix matrix);

  std::vector<int> labels_;
  ComplexMatrix matrix_;
};

/// Reduced density matrix on `keep` (original qubit indices, any order); the
/// result is labelled in ascending order. Throws on an empty set, duplicates,
/// or indices outside the system.
DensityMatrix partial_trace(const PureState& psi, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// i.i.d. standard complex Gaussian amplitudes, normalized. Deterministic in seed.
PureState haar_random_pure(int n_qubits, std::uint64_t seed);

/// Hilbert-Schmidt random two-qubit state: a Haar 4-qubit pure state traced to qubits {0,1}.
DensityMatrix random_mixed_two_qubit(std::uint64_t seed);

enum class StateFamily { ghz, w, product, bell };

StateFamily parse_state_family(std::string_view name);
std::string_view to_string(StateFamily family);

/// GHZ = (|0..0> + |1..1>)/sqrt2, W = uniform over weight-1 strings,
/// product = |0..0>, Bell = (|00> + |11>)/sqrt2 (exactly two qubits).
PureState state_family(StateFamily family, int n_qubits);

/// Applies a 2x2 unitary to one qubit.
PureState apply_single_qubit_unitary(const PureState& psi, int qubit, const ComplexMatrix& u);

/// Exchanges the roles of two qubits.
PureState swap_qubits(const PureState& psi, int a, int b);

/// Pure-state ensemble {p_i, |psi_i>} of a two-qubit density matrix.
struct Decomposition {
  std::vector<double> weights;
  std::vector<std::vector<cplx>> states;  // each normalized, length 4

  std::size_t size() const { return weights.size(); }
  /// sum_i p_i |psi_i><psi_i|
  ComplexMatrix reconstruct() const;
};

inline constexpr double kRankThreshold = 1e-14;

/// Number of eigenvalues above kRankThreshold.
std::size_t numerical_rank(const DensityMatrix& rho);

/// Hughston-Jozsa-Wootters construction with a given m x m unitary:
/// |phi_j> = sum_i U_ji sqrt(mu_i) |e_i>, p_j = <phi_j|phi_j>.
/// Members with p_j == 0 are dropped.
Decomposition decomposition_from_unitary(const DensityMatrix& rho, const ComplexMatrix& u);

/// Same, with a Haar-random m x m unitary. Throws if m < rank(rho).
Decomposition sample_decomposition(const DensityMatrix& rho, std::size_t m, std::uint64_t seed);

}  // namespace qmono
