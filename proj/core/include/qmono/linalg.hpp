#pragma once

#include <cstdint>
#include <vector>

#include "qmono/matrix.hpp"

namespace qmono {

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kJacobiOffDiagonalThreshold = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;
/// Eigenvalues in [kClampFloor, 0) are numerical noise and are clamped to zero.
inline constexpr double kClampFloor = -1e-10;
/// Eigenvalues below this are a genuine PSD violation.
inline constexpr double kPsdFailure = -1e-8;

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix eigenvectors;       // column j pairs with eigenvalues[j]

  std::size_t size() const { return eigenvalues.size(); }
  std::vector<cplx> eigenvector(std::size_t j) const;
  /// V diag(f(lambda)) V^dag
  template <typename F>
  ComplexMatrix reconstruct(F&& f) const;
  ComplexMatrix reconstruct() const;
};

/// Cyclic complex Jacobi. Throws std::invalid_argument for non-Hermitian input
/// and std::runtime_error if the sweep cap is hit.
SpectralDecomposition hermitian_eig(const ComplexMatrix& m);

/// Hermitian PSD square root. Eigenvalues in [-1e-8, 0) are clamped to zero;
/// anything lower throws std::domain_error.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

/// Singular values, descending, by one-sided (Hestenes) Jacobi on the columns.
/// Small singular values come out with absolute error ~eps*||m||, with no
/// square root of a Gram matrix involved.
std::vector<double> singular_values(const ComplexMatrix& m);

/// Haar-random n x n unitary from Gram-Schmidt on i.i.d. complex Gaussian columns.
ComplexMatrix haar_random_unitary(std::size_t n, std::uint64_t seed);

template <typename F>
ComplexMatrix SpectralDecomposition::reconstruct(F&& f) const {
  const std::size_t n = eigenvalues.size();
  ComplexMatrix out(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const double w = f(eigenvalues[j]);
    if (w == 0.0) continue;
    for (std::size_t r = 0; r < n; ++r) {
      const cplx vr = w * eigenvectors(r, j);
      for (std::size_t c = 0; c < n; ++c) out(r, c) += vr * std::conj(eigenvectors(c, j));
    }
  }
  return out;
}

}  // namespace qmono
