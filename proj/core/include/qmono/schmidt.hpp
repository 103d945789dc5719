#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qmono/state.hpp"

namespace qmono {

/// Schmidt form across qubit 0 (A) versus the M = N-1 remaining qubits (B):
///   |Psi> = sqrt(p0) |a0>|psi0> + sqrt(p1) |a1>|psi1>,  p0 >= p1.
/// |a0>, |a1> are the eigenvectors of rho^A; psi0/psi1 live on M qubits with
/// B(k) mapped to local bit k-1. The first amplitude of each psi above 1e-12 in
/// modulus is real positive; the removed phase is absorbed into |a_l>.
struct SchmidtForm {
  double p0 = 1.0;
  double p1 = 0.0;
  std::array<std::array<cplx, 2>, 2> a_basis{};  // a_basis[l] = |a_l> in the computational basis
  PureState psi0;
  PureState psi1;

  int m_qubits() const { return psi0.n_qubits(); }
  /// sqrt(p0)|a0>|psi0> + sqrt(p1)|a1>|psi1>
  PureState reassemble() const;
};

inline constexpr double kDegenerateSchmidt = 1e-12;

/// Requires N >= 2. When p1 < 1e-12, psi1 is completed to a unit vector
/// orthogonal to psi0 by Gram-Schmidt over the computational basis.
SchmidtForm schmidt_cut(const PureState& psi);

/// sigma_k^{ll'} = Tr_{!=k} |psi_l><psi_l'| for every B qubit k (local index).
struct SigmaSet {
  struct Block {
    ComplexMatrix s00, s01, s10, s11;
  };
  std::vector<Block> per_qubit;
};

SigmaSet sigma_matrices(const SchmidtForm& sf);

struct Discriminant {
  std::vector<double> per_qubit;  // D_k for local B qubit k
  double total = 0.0;
};

/// D_k = Tr(s00 s11 - s01 s10), total over every B qubit.
Discriminant discriminant_direct(const SchmidtForm& sf);
Discriminant discriminant_direct(const PureState& psi);

inline constexpr int kMaxAlphaQubits = 7;

/// alpha_ij = a0_i a1_j - a0_j a1_i over M-bit strings, stored dense.
class AlphaTable {
 public:
  explicit AlphaTable(const SchmidtForm& sf);

  int m_qubits() const { return m_; }
  std::size_t dim() const { return dim_; }
  cplx operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  /// sum over pairs at Hamming distance delta of |alpha_ij|^2
  double weight_at_distance(int delta) const;
  /// 1/2 sum_ij |alpha_ij|^2 (equals 1 for orthonormal psi0, psi1)
  double half_total_weight() const;

 private:
  int m_;
  std::size_t dim_;
  std::vector<cplx> data_;
};

AlphaTable alpha_table(const SchmidtForm& sf);

/// Lambda_delta = 1/2 sum_{d(i,j)=delta} alpha_ij sum_{k in S_ij} conj(alpha_{i^k, j^k}),
/// where i^k flips bit k. Returns the real part; throws std::logic_error if the
/// imaginary residue exceeds 1e-10.
double lambda_delta(const AlphaTable& at, int delta);

/// D = M - 2 + sum_{delta=3}^{M} [Lambda_delta + (2 - delta)/2 * sum_{d(i,j)=delta} |alpha_ij|^2]
double discriminant_via_alpha(const AlphaTable& at);

/// 1 - |a_{000,111} - a_{001,110} - a_{010,101} + a_{011,100}|^2, strings
/// written (bit0 bit1 bit2). Requires M == 3.
double discriminant4_closed_form(const AlphaTable& at);

/// Square integer matrix, row-major.
struct IntMatrix {
  std::size_t n = 0;
  std::vector<std::int64_t> data;

  explicit IntMatrix(std::size_t size = 0) : n(size), data(size * size) {}
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data[r * n + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data[r * n + c]; }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// 2^(delta-1) square matrix over (delta-1)-bit strings:
/// -1 if x and y differ in every bit, +1 if they differ in exactly one bit, 0 otherwise.
/// Requires 3 <= delta <= 10.
IntMatrix v_matrix(int delta);

/// (P_m)_{xy} = (-1)^{popcount(x & y)}. Requires 1 <= m <= 10.
IntMatrix p_matrix(int m);

struct VSpectrumReport {
  int delta = 0;
  std::vector<std::int64_t> eigenvalues;  // lambda_y, indexed by column y of P_{delta-1}
  std::int64_t max_eigenvalue = 0;
};

/// Checks exactly that column y of P_{delta-1} is an eigenvector of V with
/// eigenvalue sum_k (-1)^{y_k} - (-1)^{sum_k y_k}, and that the maximum is
/// delta - 2. Any mismatch throws std::logic_error. Requires 3 <= delta <= 8.
VSpectrumReport v_spectrum_check(int delta);

}  // namespace qmono
