#include "qmono/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace qmono {
namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// Annihilates a(p,q) with A <- U^dag A U, U = [[c, s*ph], [-s*conj(ph), c]] in the (p,q) plane.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const cplx apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const cplx ph = apq / r;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * r);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const cplx upp = c, upq = s * ph, uqp = -s * std::conj(ph), uqq = c;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const cplx akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * upp + akq * uqp;
    a(k, q) = akp * upq + akq * uqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const cplx apk = a(p, k), aqk = a(q, k);
    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
  for (std::size_t k = 0; k < n; ++k) {
    const cplx vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * upp + vkq * uqp;
    v(k, q) = vkp * upq + vkq * uqq;
  }
}

}  // namespace

std::vector<cplx> SpectralDecomposition::eigenvector(std::size_t j) const {
  std::vector<cplx> out(eigenvectors.rows());
  for (std::size_t r = 0; r < out.size(); ++r) out[r] = eigenvectors(r, j);
  return out;
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
  return reconstruct([](double x) { return x; });
}

SpectralDecomposition hermitian_eig(const ComplexMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("hermitian_eig: matrix is not square");
  const double herr = m.hermiticity_error();
  if (herr > kHermitianTolerance)
    throw std::invalid_argument("hermitian_eig: matrix is not Hermitian (max|M - M^dag| = " +
                                std::to_string(herr) + ")");

  const std::size_t n = m.rows();
  ComplexMatrix a = m.hermitian_part();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double target = kJacobiOffDiagonalThreshold * std::max(a.frobenius_norm(), 1e-300);

  // One extra sweep after reaching the threshold: convergence is quadratic, so
  // this drives the residual far below it at negligible cost.
  bool polishing = false;
  for (int sweep = 0;; ++sweep) {
    const double off = off_diagonal_norm(a);
    if (off == 0.0) break;
    if (off <= target) {
      if (polishing) break;
      polishing = true;
    }
    if (sweep >= kJacobiMaxSweeps)
      throw std::runtime_error("hermitian_eig: no convergence after " + std::to_string(kJacobiMaxSweeps) +
                               " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, j) = v(r, order[j]);
  }
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  const SpectralDecomposition eig = hermitian_eig(m);
  if (!eig.eigenvalues.empty() && eig.eigenvalues.back() < kPsdFailure)
    throw std::domain_error("psd_sqrt: matrix is not positive semidefinite (eigenvalue " +
                            std::to_string(eig.eigenvalues.back()) + ")");
  // Eigenvalues at the solver's rounding level are zero; their square roots
  // (~1e-8) would otherwise dominate the error of S*S.
  double scale = 0.0;
  for (double x : eig.eigenvalues) scale = std::max(scale, std::abs(x));
  const double floor = static_cast<double>(eig.size()) * std::numeric_limits<double>::epsilon() * scale;
  return eig.reconstruct([floor](double x) { return x > floor ? std::sqrt(x) : 0.0; });
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  ComplexMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        double alpha = 0.0, beta = 0.0;
        cplx gamma = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
          alpha += std::norm(a(i, p));
          beta += std::norm(a(i, q));
          gamma += std::conj(a(i, p)) * a(i, q);
        }
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= 1e-15 * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const cplx ph = std::conj(gamma / g);
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < rows; ++i) {
          const cplx ap = a(i, p);
          const cplx aq = ph * a(i, q);
          a(i, p) = c * ap - s * aq;
          a(i, q) = s * ap + c * aq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sv(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < rows; ++i) s += std::norm(a(i, j));
    sv[j] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  if (sv.size() > rows) sv.resize(rows);
  return sv;
}

ComplexMatrix haar_random_unitary(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("haar_random_unitary: dimension must be positive");
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix u(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) {
      const double re = normal(gen);
      const double im = normal(gen);
      u(r, c) = cplx(re, im);
    }
  // Modified Gram-Schmidt, two passes. Equivalent to QR with a positive-real
  // diagonal R, which makes the result Haar distributed.
  for (std::size_t c = 0; c < n; ++c) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < c; ++k) {
        cplx proj = 0.0;
        for (std::size_t r = 0; r < n; ++r) proj += std::conj(u(r, k)) * u(r, c);
        for (std::size_t r = 0; r < n; ++r) u(r, c) -= proj * u(r, k);
      }
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < n; ++r) norm += std::norm(u(r, c));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < n; ++r) u(r, c) /= norm;
  }
  return u;
}

}  // namespace qmono
