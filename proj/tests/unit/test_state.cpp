#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "qmono/measures.hpp"
#include "qmono/rng.hpp"
#include "qmono/state.hpp"

namespace qmono {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

TEST(PureState, RejectsBadInput) {
  EXPECT_THROW(PureState(2, {1, 0, 0}), std::invalid_argument);
  EXPECT_THROW(PureState(1, {0.9, 0.0}), std::invalid_argument);
  EXPECT_THROW(PureState::normalized(1, {0.0, 0.0}), std::invalid_argument);
  EXPECT_NO_THROW(PureState(1, {kInvSqrt2, cplx(0, kInvSqrt2)}));
}

TEST(PureState, FingerprintDistinguishesStates) {
  const PureState a = state_family(StateFamily::ghz, 3);
  const PureState b = state_family(StateFamily::w, 3);
  EXPECT_EQ(a.fingerprint(), state_family(StateFamily::ghz, 3).fingerprint());
  EXPECT_NE(a.fingerprint(), b.fingerprint());
}

TEST(StateFamily, Definitions) {
  const PureState w = state_family(StateFamily::w, 3);
  for (std::size_t i = 0; i < 8; ++i) {
    const double expect = (i == 1 || i == 2 || i == 4) ? 1.0 / std::sqrt(3.0) : 0.0;
    EXPECT_NEAR(std::abs(w[i] - expect), 0.0, 1e-15) << i;
  }
  const PureState ghz = state_family(StateFamily::ghz, 4);
  for (std::size_t i = 0; i < 16; ++i) EXPECT_NEAR(ghz[i].real(), (i == 0 || i == 15) ? kInvSqrt2 : 0.0, 1e-15);
  const PureState bell = state_family(StateFamily::bell, 2);
  EXPECT_NEAR(bell[0].real(), kInvSqrt2, 1e-15);
  EXPECT_NEAR(bell[3].real(), kInvSqrt2, 1e-15);
  EXPECT_EQ(bell[1], cplx(0));
  EXPECT_EQ(state_family(StateFamily::product, 3)[0], cplx(1));
}

TEST(StateFamily, Errors) {
  EXPECT_THROW(state_family(StateFamily::bell, 3), std::invalid_argument);
  EXPECT_THROW(state_family(StateFamily::w, 1), std::invalid_argument);
  EXPECT_THROW(parse_state_family("cluster"), std::invalid_argument);
  EXPECT_EQ(parse_state_family("W"), StateFamily::w);
  EXPECT_EQ(parse_state_family("ghz"), StateFamily::ghz);
}

TEST(PartialTrace, BellMarginalIsMaximallyMixed) {
  const int keep[] = {0};
  const DensityMatrix r = partial_trace(state_family(StateFamily::bell, 2), keep);
  EXPECT_LT(max_abs_diff(r.matrix(), 0.5 * ComplexMatrix::identity(2)), 1e-15);
}

TEST(PartialTrace, ProductState) {
  const int keep[] = {1};
  const DensityMatrix r = partial_trace(PureState::basis(2, 0), keep);
  EXPECT_LT(max_abs_diff(r.matrix(), ComplexMatrix{{1, 0}, {0, 0}}), 1e-15);
  ASSERT_EQ(r.qubit_labels().size(), 1u);
  EXPECT_EQ(r.qubit_labels()[0], 1);
}

TEST(PartialTrace, W3PairMarginal) {
  const int keep[] = {0, 1};
  const DensityMatrix r = partial_trace(state_family(StateFamily::w, 3), keep);
  // (2/3)|psi+><psi+| + (1/3)|00><00|, psi+ = (|10> + |01>)/sqrt2
  const std::vector<cplx> psi_plus = {0, kInvSqrt2, kInvSqrt2, 0};
  ComplexMatrix expect = (2.0 / 3.0) * ComplexMatrix::outer(psi_plus, psi_plus);
  expect(0, 0) += 1.0 / 3.0;
  EXPECT_LT(max_abs_diff(r.matrix(), expect), 1e-15);
}

TEST(PartialTrace, Errors) {
  const PureState psi = state_family(StateFamily::ghz, 3);
  EXPECT_THROW(partial_trace(psi, std::span<const int>{}), std::invalid_argument);
  const int dup[] = {1, 1};
  EXPECT_THROW(partial_trace(psi, dup), std::invalid_argument);
  const int out[] = {3};
  EXPECT_THROW(partial_trace(psi, out), std::invalid_argument);
  const int keep01[] = {0, 1};
  const DensityMatrix ab = partial_trace(psi, keep01);
  const int absent[] = {2};
  EXPECT_THROW(partial_trace(ab, absent), std::invalid_argument);
}

TEST(PartialTrace, MatchesBruteForceOnRandomStates) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const int n = 2 + static_cast<int>(s % 5);
    const PureState psi = haar_random_pure(n, derive_seed(21, s));
    std::vector<int> keep;
    for (int q = 0; q < n; ++q)
      if ((derive_seed(22, s) >> q) & 1U) keep.push_back(q);
    if (keep.empty()) keep.push_back(n - 1);
    const DensityMatrix r = partial_trace(psi, keep);
    EXPECT_LT(max_abs_diff(r.matrix(), oracle::reduce(psi.amplitudes(), n, keep)), 1e-14) << "seed " << s;
    EXPECT_NEAR(r.matrix().trace().real(), 1.0, 1e-12);
  }
}

TEST(PartialTrace, KeepOrderDoesNotMatter) {
  const PureState psi = haar_random_pure(4, 3);
  const int a[] = {2, 0};
  const int b[] = {0, 2};
  EXPECT_EQ(partial_trace(psi, a).matrix(), partial_trace(psi, b).matrix());
}

TEST(PartialTrace, CompositionProperty) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const int n = 3 + static_cast<int>(s % 4);
    const PureState psi = haar_random_pure(n, derive_seed(23, s));
    const int b = 1 + static_cast<int>(s % static_cast<std::uint64_t>(n - 1));
    const int pair[] = {0, b};
    const int a_only[] = {0};
    const DensityMatrix via_pair = partial_trace(partial_trace(psi, pair), a_only);
    const DensityMatrix direct = partial_trace(psi, a_only);
    ASSERT_LT(max_abs_diff(via_pair.matrix(), direct.matrix()), 1e-12) << "seed " << s;
  }
}

TEST(PartialTrace, SchmidtSymmetryOfMarginalSpectra) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const int n = 3 + static_cast<int>(s % 4);
    const PureState psi = haar_random_pure(n, derive_seed(24, s));
    std::vector<int> left = {0, 1};
    std::vector<int> right;
    for (int q = 2; q < n; ++q) right.push_back(q);
    const auto el = hermitian_eig(partial_trace(psi, left).matrix()).eigenvalues;
    const auto er = hermitian_eig(partial_trace(psi, right).matrix()).eigenvalues;
    for (std::size_t j = 0; j < std::min(el.size(), er.size()); ++j) EXPECT_NEAR(el[j], er[j], 1e-10);
    EXPECT_NEAR(linear_entropy(partial_trace(psi, left)), linear_entropy(partial_trace(psi, right)), 1e-10);
  }
}

TEST(DensityMatrix, Validation) {
  EXPECT_THROW(DensityMatrix({0}, ComplexMatrix{{1, 0.1}, {0, 0}}), std::invalid_argument);
  EXPECT_THROW(DensityMatrix({0}, ComplexMatrix{{0.6, 0}, {0, 0.6}}), std::invalid_argument);
  EXPECT_THROW(DensityMatrix({0}, ComplexMatrix{{1.5, 0}, {0, -0.5}}), std::invalid_argument);
  EXPECT_THROW(DensityMatrix({0, 1}, ComplexMatrix::identity(2)), std::invalid_argument);
  EXPECT_NO_THROW(DensityMatrix({0}, ComplexMatrix{{0.5, 0}, {0, 0.5}}));
}

TEST(HaarRandomPure, DeterministicAndNormalized) {
  const PureState a = haar_random_pure(3, 7);
  const PureState b = haar_random_pure(3, 7);
  ASSERT_EQ(a.dim(), b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) EXPECT_EQ(a[i], b[i]);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const PureState psi = haar_random_pure(2, s);
    double norm = 0.0;
    for (const auto& z : psi.amplitudes()) norm += std::norm(z);
    EXPECT_NEAR(norm, 1.0, 1e-12);
  }
  EXPECT_THROW(haar_random_pure(0, 1), std::invalid_argument);
  EXPECT_THROW(haar_random_pure(13, 1), std::invalid_argument);
}

TEST(HaarRandomPure, SingleQubitWeightMean) {
  double sum = 0.0;
  const int draws = 10000;
  for (int s = 0; s < draws; ++s) sum += std::norm(haar_random_pure(1, derive_seed(99, s))[0]);
  const double mean = sum / draws;
  EXPECT_GE(mean, 0.48);
  EXPECT_LE(mean, 0.52);
}

TEST(RandomMixed, IsValidTwoQubitState) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const DensityMatrix rho = random_mixed_two_qubit(s);
    EXPECT_EQ(rho.dim(), 4u);
    EXPECT_LT(rho.purity(), 1.0);
  }
}

TEST(SwapAndLocalUnitary, Behave) {
  const PureState psi = haar_random_pure(3, 4);
  const PureState swapped = swap_qubits(psi, 0, 2);
  EXPECT_EQ(swapped[1], psi[4]);
  EXPECT_EQ(swapped[4], psi[1]);
  EXPECT_EQ(swapped[2], psi[2]);
  const PureState flipped = apply_single_qubit_unitary(PureState::basis(2, 0), 1, pauli::x());
  EXPECT_NEAR(std::abs(flipped[2]), 1.0, 1e-15);
}

TEST(Decomposition, PureStateIsUnique) {
  const PureState bell = state_family(StateFamily::bell, 2);
  const DensityMatrix rho = DensityMatrix::from_pure(bell);
  for (std::size_t m : {1u, 3u, 5u}) {
    const Decomposition d = sample_decomposition(rho, m, 17);
    double total = 0.0;
    for (std::size_t j = 0; j < d.size(); ++j) {
      total += d.weights[j];
      EXPECT_NEAR(oracle::abs_overlap(d.states[j], bell.amplitudes()), 1.0, 1e-12);
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(Decomposition, IdentityUnitaryOnMaximallyMixed) {
  const DensityMatrix rho({0, 1}, 0.25 * ComplexMatrix::identity(4));
  const Decomposition d = decomposition_from_unitary(rho, ComplexMatrix::identity(4));
  ASSERT_EQ(d.size(), 4u);
  for (std::size_t j = 0; j < 4; ++j) {
    EXPECT_NEAR(d.weights[j], 0.25, 1e-15);
    double max_component = 0.0;
    for (const auto& z : d.states[j]) max_component = std::max(max_component, std::abs(z));
    EXPECT_NEAR(max_component, 1.0, 1e-15);
  }
}

TEST(Decomposition, ReconstructsSource) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const DensityMatrix rho = random_mixed_two_qubit(derive_seed(30, s));
    const Decomposition d = sample_decomposition(rho, 6, derive_seed(31, s));
    double total = 0.0;
    for (std::size_t j = 0; j < d.size(); ++j) {
      total += d.weights[j];
      double norm = 0.0;
      for (const auto& z : d.states[j]) norm += std::norm(z);
      EXPECT_NEAR(norm, 1.0, 1e-12);
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
    ASSERT_LT(max_abs_diff(d.reconstruct(), rho.matrix()), 1e-10) << "seed " << s;
  }
}

TEST(Decomposition, RejectsTooFewMembers) {
  const DensityMatrix rho({0, 1}, 0.25 * ComplexMatrix::identity(4));
  EXPECT_THROW(sample_decomposition(rho, 3, 1), std::invalid_argument);
  EXPECT_THROW(sample_decomposition(rho, 0, 1), std::invalid_argument);
  EXPECT_EQ(numerical_rank(rho), 4u);
}

}  // namespace
}  // namespace qmono
