#include "qmono/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qmono {
namespace {

void require_two_qubit(const DensityMatrix& rho, const char* what) {
  if (rho.dim() != 4) throw std::invalid_argument(std::string(what) + ": need a two-qubit density matrix");
}

// sy x sy is real: anti-diagonal (-1, 1, 1, -1).
constexpr double kYY[4][4] = {{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}};

void fill_splits(MeasureSet& m) {
  const auto& l = m.spectrum.lambdas;
  m.concurrence = concurrence(m.spectrum);
  m.coa = concurrence_of_assistance(m.spectrum);
  m.tangle = m.concurrence * m.concurrence;
  m.tangle_a = m.coa * m.coa;
  m.x_split = 2.0 * l[0] * (l[1] + l[2] + l[3]);
  m.y_split = 2.0 * (l[1] * l[2] + l[1] * l[3] + l[2] * l[3]);
}

}  // namespace

double linear_entropy(const DensityMatrix& rho) { return 2.0 * (1.0 - rho.purity()); }

double linear_mutual_entropy(const PureState& psi, int a, int b) {
  if (a == b) throw std::invalid_argument("linear_mutual_entropy: qubits must differ");
  const int pa[] = {a};
  const int pb[] = {b};
  const int pab[] = {a, b};
  return linear_entropy(partial_trace(psi, pa)) + linear_entropy(partial_trace(psi, pb)) -
         linear_entropy(partial_trace(psi, pab));
}

double linear_mutual_entropy(const DensityMatrix& rho, int a, int b) {
  if (a == b) throw std::invalid_argument("linear_mutual_entropy: qubits must differ");
  const int pa[] = {a};
  const int pb[] = {b};
  const int pab[] = {a, b};
  const DensityMatrix rho_ab = rho.n_qubits() == 2 ? rho : partial_trace(rho, pab);
  return linear_entropy(partial_trace(rho, pa)) + linear_entropy(partial_trace(rho, pb)) - linear_entropy(rho_ab);
}

ComplexMatrix spin_flip(const DensityMatrix& rho) {
  require_two_qubit(rho, "spin_flip");
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out(4, 4);
  // Each row/column of sy x sy has one nonzero entry, at index 3 - i.
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      out(r, c) = kYY[r][3 - r] * kYY[3 - c][c] * std::conj(m(3 - r, 3 - c));
  return out;
}

double RSpectrum::sum_of_squares() const {
  double s = 0.0;
  for (double l : lambdas) s += l * l;
  return s;
}

RSpectrum r_spectrum(const DensityMatrix& rho) {
  require_two_qubit(rho, "r_spectrum");
  const SpectralDecomposition eig = hermitian_eig(rho.matrix());
  if (eig.eigenvalues.back() < kPsdFailure)
    throw std::domain_error("r_spectrum: density matrix is not positive semidefinite");

  std::size_t support = static_cast<std::size_t>(
      std::count_if(eig.eigenvalues.begin(), eig.eigenvalues.end(), [](double x) { return x > kRankThreshold; }));
  if (rho.purity() > 1.0 - kPureShortcut) support = 1;

  RSpectrum out;
  if (support == 0) return out;

  ComplexMatrix t(support, support);
  for (std::size_t i = 0; i < support; ++i)
    for (std::size_t j = 0; j < support; ++j) {
      cplx s = 0.0;
      for (std::size_t r = 0; r < 4; ++r) {
        const std::size_t c = 3 - r;
        s += std::conj(eig.eigenvectors(r, i)) * kYY[r][c] * std::conj(eig.eigenvectors(c, j));
      }
      t(i, j) = std::sqrt(eig.eigenvalues[i] * eig.eigenvalues[j]) * s;
    }

  const std::vector<double> sv = singular_values(t);
  for (std::size_t k = 0; k < sv.size() && k < 4; ++k) out.lambdas[k] = std::max(sv[k], 0.0);
  return out;
}

double concurrence(const RSpectrum& spec) {
  const auto& l = spec.lambdas;
  return std::clamp(l[0] - l[1] - l[2] - l[3], 0.0, 1.0);
}

double concurrence(const DensityMatrix& rho) { return concurrence(r_spectrum(rho)); }

double concurrence_of_assistance(const RSpectrum& spec) { return spec.sum(); }

double concurrence_of_assistance(const DensityMatrix& rho) { return r_spectrum(rho).sum(); }

MeasureSet tangles(const DensityMatrix& rho) {
  require_two_qubit(rho, "tangles");
  MeasureSet m;
  m.qubit_a = rho.qubit_labels()[0];
  m.qubit_b = rho.qubit_labels()[1];
  const int pa[] = {m.qubit_a};
  const int pb[] = {m.qubit_b};
  m.s_lin_a = linear_entropy(partial_trace(rho, pa));
  m.s_lin_b = linear_entropy(partial_trace(rho, pb));
  m.s_lin_ab = linear_entropy(rho);
  m.s_mutual = m.s_lin_a + m.s_lin_b - m.s_lin_ab;
  m.spectrum = r_spectrum(rho);
  fill_splits(m);
  return m;
}

MeasureSet pair_measures(const PureState& psi, int a, int b) {
  if (a == b) throw std::invalid_argument("pair_measures: qubits must differ");
  const int pab[] = {a, b};
  MeasureSet m = tangles(partial_trace(psi, pab));
  if (a > b) {
    std::swap(m.qubit_a, m.qubit_b);
    std::swap(m.s_lin_a, m.s_lin_b);
  }
  return m;
}

double decomposition_average_concurrence(const Decomposition& d) {
  static constexpr int kFirst[] = {0};
  double total = 0.0;
  for (std::size_t j = 0; j < d.size(); ++j) {
    const PureState member = PureState::normalized(2, d.states[j]);
    const double sl = linear_entropy(partial_trace(member, kFirst));
    total += d.weights[j] * std::sqrt(std::max(sl, 0.0));
  }
  return total;
}

}  // namespace qmono
