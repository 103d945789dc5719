#include "qmono/schmidt.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qmono {
namespace {

constexpr double kPhaseThreshold = 1e-12;

double norm2(std::span<const cplx> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return s;
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

void scale(std::vector<cplx>& v, cplx s) {
  for (auto& z : v) z *= s;
}

// Makes the first amplitude above threshold real positive; returns the removed phase.
cplx fix_phase(std::vector<cplx>& v) {
  for (const auto& z : v) {
    const double mag = std::abs(z);
    if (mag > kPhaseThreshold) {
      const cplx ph = z / mag;
      scale(v, std::conj(ph));
      return ph;
    }
  }
  return 1.0;
}

// Unit vector orthogonal to `ref`, built from the first computational basis
// vector with enough weight outside `ref`.
std::vector<cplx> orthogonal_completion(std::span<const cplx> ref) {
  for (std::size_t j = 0; j < ref.size(); ++j) {
    if (std::norm(ref[j]) >= 0.5) continue;
    std::vector<cplx> w(ref.size());
    w[j] = 1.0;
    const cplx overlap = std::conj(ref[j]);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= overlap * ref[i];
    scale(w, 1.0 / std::sqrt(norm2(w)));
    return w;
  }
  throw std::logic_error("orthogonal_completion: no basis vector available");
}

void require_alpha_delta(const AlphaTable& at, int delta) {
  if (delta < 0 || delta > at.m_qubits())
    throw std::invalid_argument("Hamming distance " + std::to_string(delta) + " outside [0, " +
                                std::to_string(at.m_qubits()) + "]");
}

}  // namespace

PureState SchmidtForm::reassemble() const {
  const std::size_t dim_b = psi0.dim();
  std::vector<cplx> amps(2 * dim_b);
  const double s0 = std::sqrt(p0), s1 = std::sqrt(p1);
  for (std::size_t b = 0; b < dim_b; ++b)
    for (std::size_t a = 0; a < 2; ++a)
      amps[a + 2 * b] = s0 * a_basis[0][a] * psi0[b] + s1 * a_basis[1][a] * psi1[b];
  return PureState::normalized(psi0.n_qubits() + 1, std::move(amps));
}

SchmidtForm schmidt_cut(const PureState& psi) {
  const int n = psi.n_qubits();
  if (n < 2) throw std::invalid_argument("schmidt_cut: need at least 2 qubits");
  const int m = n - 1;
  const std::size_t dim_b = std::size_t{1} << m;

  static constexpr int kA[] = {0};
  const SpectralDecomposition eig = hermitian_eig(partial_trace(psi, kA).matrix());
  double p0 = std::max(eig.eigenvalues[0], 0.0);
  double p1 = std::max(eig.eigenvalues[1], 0.0);
  const double total = p0 + p1;
  p0 /= total;
  p1 /= total;

  std::array<std::array<cplx, 2>, 2> basis{};
  for (std::size_t l = 0; l < 2; ++l)
    for (std::size_t a = 0; a < 2; ++a) basis[l][a] = eig.eigenvectors(a, l);

  auto project = [&](std::size_t l) {
    std::vector<cplx> v(dim_b);
    for (std::size_t b = 0; b < dim_b; ++b)
      v[b] = std::conj(basis[l][0]) * psi[2 * b] + std::conj(basis[l][1]) * psi[2 * b + 1];
    return v;
  };

  std::vector<cplx> v0 = project(0);
  scale(v0, 1.0 / std::sqrt(norm2(v0)));
  const cplx ph0 = fix_phase(v0);
  for (auto& z : basis[0]) z *= ph0;

  std::vector<cplx> v1;
  if (p1 < kDegenerateSchmidt) {
    v1 = orthogonal_completion(v0);
  } else {
    v1 = project(1);
    // Re-orthogonalize: for small p1 the projection carries ~eps/sqrt(p1) error.
    const cplx overlap = inner(v0, v1);
    for (std::size_t b = 0; b < dim_b; ++b) v1[b] -= overlap * v0[b];
    scale(v1, 1.0 / std::sqrt(norm2(v1)));
  }
  const cplx ph1 = fix_phase(v1);
  for (auto& z : basis[1]) z *= ph1;

  return SchmidtForm{p0, p1, basis, PureState::normalized(m, std::move(v0)), PureState::normalized(m, std::move(v1))};
}

SigmaSet sigma_matrices(const SchmidtForm& sf) {
  const int m = sf.m_qubits();
  const std::size_t dim = sf.psi0.dim();
  const std::span<const cplx> psi[2] = {sf.psi0.amplitudes(), sf.psi1.amplitudes()};

  SigmaSet out;
  out.per_qubit.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    const std::size_t bit = std::size_t{1} << k;
    ComplexMatrix s[2][2] = {{ComplexMatrix(2, 2), ComplexMatrix(2, 2)}, {ComplexMatrix(2, 2), ComplexMatrix(2, 2)}};
    for (std::size_t r = 0; r < dim; ++r) {
      if (r & bit) continue;
      const std::size_t idx[2] = {r, r | bit};
      for (int l = 0; l < 2; ++l)
        for (int lp = 0; lp < 2; ++lp)
          for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) s[l][lp](x, y) += psi[l][idx[x]] * std::conj(psi[lp][idx[y]]);
    }
    out.per_qubit.push_back({s[0][0], s[0][1], s[1][0], s[1][1]});
  }
  return out;
}

Discriminant discriminant_direct(const SchmidtForm& sf) {
  const SigmaSet sigma = sigma_matrices(sf);
  Discriminant out;
  for (const auto& blk : sigma.per_qubit) {
    const double dk = (trace_of_product(blk.s00, blk.s11) - trace_of_product(blk.s01, blk.s10)).real();
    out.per_qubit.push_back(dk);
    out.total += dk;
  }
  return out;
}

Discriminant discriminant_direct(const PureState& psi) { return discriminant_direct(schmidt_cut(psi)); }

AlphaTable::AlphaTable(const SchmidtForm& sf) : m_(sf.m_qubits()), dim_(sf.psi0.dim()) {
  if (m_ > kMaxAlphaQubits)
    throw std::invalid_argument("AlphaTable: at most " + std::to_string(kMaxAlphaQubits) + " B qubits supported");
  data_.resize(dim_ * dim_);
  const auto a0 = sf.psi0.amplitudes();
  const auto a1 = sf.psi1.amplitudes();
  for (std::size_t i = 0; i < dim_; ++i) {
    data_[i * dim_ + i] = 0.0;
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const cplx v = a0[i] * a1[j] - a0[j] * a1[i];
      data_[i * dim_ + j] = v;
      data_[j * dim_ + i] = -v;
    }
  }
}

double AlphaTable::weight_at_distance(int delta) const {
  double s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (std::popcount(i ^ j) == delta) s += std::norm((*this)(i, j));
  return s;
}

double AlphaTable::half_total_weight() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return 0.5 * s;
}

AlphaTable alpha_table(const SchmidtForm& sf) { return AlphaTable(sf); }

double lambda_delta(const AlphaTable& at, int delta) {
  require_alpha_delta(at, delta);
  const std::size_t dim = at.dim();
  cplx sum = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const std::size_t diff = i ^ j;
      if (std::popcount(diff) != delta) continue;
      cplx partner = 0.0;
      for (int k = 0; k < at.m_qubits(); ++k) {
        const std::size_t bit = std::size_t{1} << k;
        if (diff & bit) partner += std::conj(at(i ^ bit, j ^ bit));
      }
      sum += at(i, j) * partner;
    }
  }
  sum *= 0.5;
  if (std::abs(sum.imag()) > 1e-10)
    throw std::logic_error("lambda_delta: imaginary residue " + std::to_string(sum.imag()));
  return sum.real();
}

double discriminant_via_alpha(const AlphaTable& at) {
  const int m = at.m_qubits();
  double d = m - 2.0;
  for (int delta = 3; delta <= m; ++delta)
    d += lambda_delta(at, delta) + 0.5 * (2.0 - delta) * at.weight_at_distance(delta);
  return d;
}

double discriminant4_closed_form(const AlphaTable& at) {
  if (at.m_qubits() != 3) throw std::invalid_argument("discriminant4_closed_form: requires exactly 3 B qubits");
  // Bit string (b0 b1 b2) is index b0 + 2 b1 + 4 b2.
  const cplx c = at(0b000, 0b111) - at(0b100, 0b011) - at(0b010, 0b101) + at(0b110, 0b001);
  return 1.0 - std::norm(c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n != b.n) throw std::invalid_argument("IntMatrix: shape mismatch");
  IntMatrix out(a.n);
  for (std::size_t r = 0; r < a.n; ++r)
    for (std::size_t k = 0; k < a.n; ++k) {
      const auto av = a(r, k);
      if (av == 0) continue;
      for (std::size_t c = 0; c < a.n; ++c) out(r, c) += av * b(k, c);
    }
  return out;
}

IntMatrix v_matrix(int delta) {
  if (delta < 3 || delta > 10) throw std::invalid_argument("v_matrix: delta must be in [3, 10]");
  const int bits = delta - 1;
  const std::size_t n = std::size_t{1} << bits;
  IntMatrix v(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const int differing = std::popcount(x ^ y);
      if (differing == bits)
        v(x, y) = -1;
      else if (differing == 1)
        v(x, y) = 1;
    }
  return v;
}

IntMatrix p_matrix(int m) {
  if (m < 1 || m > 10) throw std::invalid_argument("p_matrix: m must be in [1, 10]");
  const std::size_t n = std::size_t{1} << m;
  IntMatrix p(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) p(x, y) = (std::popcount(x & y) % 2 == 0) ? 1 : -1;
  return p;
}

VSpectrumReport v_spectrum_check(int delta) {
  if (delta < 3 || delta > 8) throw std::invalid_argument("v_spectrum_check: delta must be in [3, 8]");
  const int bits = delta - 1;
  const IntMatrix v = v_matrix(delta);
  const IntMatrix p = p_matrix(bits);
  const std::size_t n = v.n;

  VSpectrumReport report;
  report.delta = delta;
  report.eigenvalues.resize(n);
  for (std::size_t y = 0; y < n; ++y) {
    std::int64_t lambda = 0;
    for (int k = 0; k < bits; ++k) lambda += ((y >> k) & 1U) ? -1 : 1;
    lambda -= (std::popcount(y) % 2 == 0) ? 1 : -1;
    report.eigenvalues[y] = lambda;

    for (std::size_t x = 0; x < n; ++x) {
      std::int64_t vx = 0;
      for (std::size_t z = 0; z < n; ++z) vx += v(x, z) * p(z, y);
      if (vx != lambda * p(x, y))
        throw std::logic_error("v_spectrum_check: column " + std::to_string(y) + " of P is not an eigenvector of V (delta " +
                               std::to_string(delta) + ")");
    }
  }
  report.max_eigenvalue = *std::max_element(report.eigenvalues.begin(), report.eigenvalues.end());
  if (report.max_eigenvalue != delta - 2)
    throw std::logic_error("v_spectrum_check: largest eigenvalue " + std::to_string(report.max_eigenvalue) +
                           " differs from delta - 2");
  return report;
}

}  // namespace qmono
