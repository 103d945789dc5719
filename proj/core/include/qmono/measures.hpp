#pragma once

#include <array>

#include "qmono/state.hpp"

namespace qmono {

/// S_L(rho) = 2 (1 - Tr rho^2)
double linear_entropy(const DensityMatrix& rho);

/// S_L(A:B) = S_L(rho^A) + S_L(rho^B) - S_L(rho^AB). Nonzero even for product
/// mixed states. Throws if a == b or either index is absent.
double linear_mutual_entropy(const PureState& psi, int a, int b);
double linear_mutual_entropy(const DensityMatrix& rho, int a, int b);

/// (sy x sy) rho^* (sy x sy), conjugation taken entrywise in the computational basis.
ComplexMatrix spin_flip(const DensityMatrix& rho);

/// Eigenvalues of R = sqrt(sqrt(rho) rho~ sqrt(rho)), descending, clamped at 0.
struct RSpectrum {
  std::array<double, 4> lambdas{};

  double sum() const { return lambdas[0] + lambdas[1] + lambdas[2] + lambdas[3]; }
  double sum_of_squares() const;
};

/// Purity above this is treated as a pure state.
inline constexpr double kPureShortcut = 1e-10;

/// The spectrum is computed as the singular values of D E^dag (sy x sy) E^* D,
/// where rho = E D^2 E^dag restricted to eigenvalues above kRankThreshold. That
/// matrix times its adjoint is unitarily similar to sqrt(rho) rho~ sqrt(rho) on
/// the support of rho, so the values agree, but zero lambdas stay at ~1e-16
/// instead of the ~1e-8 a square root of eigenvalue noise would give.
RSpectrum r_spectrum(const DensityMatrix& rho);

/// max{0, l1 - l2 - l3 - l4}, clamped to [0, 1].
double concurrence(const DensityMatrix& rho);
double concurrence(const RSpectrum& spec);

/// Tr R = sum of lambdas.
double concurrence_of_assistance(const DensityMatrix& rho);
double concurrence_of_assistance(const RSpectrum& spec);

/// Scalar measures of one qubit pair.
struct MeasureSet {
  int qubit_a = 0;
  int qubit_b = 1;
  RSpectrum spectrum;
  double s_lin_a = 0.0;
  double s_lin_b = 0.0;
  double s_lin_ab = 0.0;
  double s_mutual = 0.0;
  double concurrence = 0.0;
  double coa = 0.0;
  double tangle = 0.0;
  double tangle_a = 0.0;
  double x_split = 0.0;  // 2 l1 (l2 + l3 + l4)
  double y_split = 0.0;  // 2 (l2 l3 + l2 l4 + l3 l4)
};

/// Every field of MeasureSet for a two-qubit density matrix; the marginals are
/// obtained by tracing rho itself.
MeasureSet tangles(const DensityMatrix& rho);
/// Measures of the pair (a, b) of a pure state.
MeasureSet pair_measures(const PureState& psi, int a, int b);

/// sum_i p_i sqrt(S_L(Tr_B |psi_i><psi_i|)). For any decomposition the value
/// lies in [C, C_a].
double decomposition_average_concurrence(const Decomposition& d);

}  // namespace qmono
