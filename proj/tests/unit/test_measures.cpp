#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "qmono/measures.hpp"
#include "qmono/rng.hpp"

namespace qmono {
namespace {

DensityMatrix two_qubit(const ComplexMatrix& m) { return DensityMatrix({0, 1}, m); }
DensityMatrix bell_rho() { return DensityMatrix::from_pure(state_family(StateFamily::bell, 2)); }
DensityMatrix mixed_rho() { return two_qubit(0.25 * ComplexMatrix::identity(4)); }
DensityMatrix w3_pair_rho() {
  const int keep[] = {0, 1};
  return partial_trace(state_family(StateFamily::w, 3), keep);
}

ComplexMatrix random_local_unitary(std::uint64_t seed) {
  return kron(haar_random_unitary(2, derive_seed(seed, 0)), haar_random_unitary(2, derive_seed(seed, 1)));
}

TEST(LinearEntropy, Examples) {
  EXPECT_NEAR(linear_entropy(DensityMatrix({0}, 0.5 * ComplexMatrix::identity(2))), 1.0, 1e-15);
  EXPECT_NEAR(linear_entropy(bell_rho()), 0.0, 1e-15);
  EXPECT_NEAR(linear_entropy(mixed_rho()), 1.5, 1e-15);
}

TEST(LinearMutualEntropy, Examples) {
  EXPECT_NEAR(linear_mutual_entropy(mixed_rho(), 0, 1), 0.5, 1e-15);
  EXPECT_NEAR(linear_mutual_entropy(state_family(StateFamily::bell, 2), 0, 1), 2.0, 1e-14);
  EXPECT_NEAR(linear_mutual_entropy(PureState::basis(2, 0), 0, 1), 0.0, 1e-15);
  EXPECT_THROW(linear_mutual_entropy(PureState::basis(2, 0), 1, 1), std::invalid_argument);
  EXPECT_THROW(linear_mutual_entropy(mixed_rho(), 0, 2), std::invalid_argument);
}

TEST(SpinFlip, Examples) {
  const DensityMatrix bell = bell_rho();
  EXPECT_LT(max_abs_diff(spin_flip(bell), bell.matrix()), 1e-15);

  ComplexMatrix zero(4, 4), one(4, 4);
  zero(0, 0) = 1.0;
  one(3, 3) = 1.0;
  EXPECT_LT(max_abs_diff(spin_flip(two_qubit(zero)), one), 1e-15);
  EXPECT_LT(max_abs_diff(spin_flip(mixed_rho()), mixed_rho().matrix()), 1e-15);
  EXPECT_THROW(spin_flip(DensityMatrix({0}, 0.5 * ComplexMatrix::identity(2))), std::invalid_argument);
}

TEST(SpinFlip, MatchesKroneckerConstruction) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const DensityMatrix rho = random_mixed_two_qubit(s);
    EXPECT_LT(max_abs_diff(spin_flip(rho), oracle::spin_flip(rho.matrix())), 1e-15);
  }
}

TEST(RSpectrum, Examples) {
  const RSpectrum bell = r_spectrum(bell_rho());
  EXPECT_NEAR(bell.lambdas[0], 1.0, 1e-12);
  for (int i = 1; i < 4; ++i) EXPECT_NEAR(bell.lambdas[i], 0.0, 1e-12);

  for (double l : r_spectrum(mixed_rho()).lambdas) EXPECT_NEAR(l, 0.25, 1e-12);

  ComplexMatrix zero(4, 4);
  zero(0, 0) = 1.0;
  for (double l : r_spectrum(two_qubit(zero)).lambdas) EXPECT_NEAR(l, 0.0, 1e-12);
}

TEST(RSpectrum, AgreesWithSquareRootRoute) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const DensityMatrix rho = random_mixed_two_qubit(derive_seed(40, s));
    const RSpectrum spec = r_spectrum(rho);
    const auto ref = oracle::r_spectrum_sqrt_route(rho.matrix());
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(spec.lambdas[i], ref[i], 1e-7) << "seed " << s;
    EXPECT_TRUE(std::is_sorted(spec.lambdas.rbegin(), spec.lambdas.rend()));
  }
}

TEST(RSpectrum, RankDeficientStatesAgreeWithSquareRootRoute) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const std::size_t rank = 2 + s % 2;
    const DensityMatrix rho = two_qubit(oracle::random_density(4, derive_seed(41, s), rank));
    const auto ref = oracle::r_spectrum_sqrt_route(rho.matrix());
    const RSpectrum spec = r_spectrum(rho);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(spec.lambdas[i], ref[i], 1e-7) << "seed " << s;
  }
}

TEST(RSpectrum, SumOfSquaresIsHalfMutualEntropy) {
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const DensityMatrix rho = random_mixed_two_qubit(derive_seed(42, s));
    ASSERT_NEAR(2.0 * r_spectrum(rho).sum_of_squares(), linear_mutual_entropy(rho, 0, 1), 1e-9) << "seed " << s;
  }
}

TEST(Concurrence, Examples) {
  EXPECT_NEAR(concurrence(bell_rho()), 1.0, 1e-12);
  EXPECT_NEAR(concurrence(mixed_rho()), 0.0, 1e-12);
  EXPECT_NEAR(concurrence(w3_pair_rho()), 2.0 / 3.0, 1e-12);
}

TEST(ConcurrenceOfAssistance, Examples) {
  EXPECT_NEAR(concurrence_of_assistance(bell_rho()), 1.0, 1e-12);
  EXPECT_NEAR(concurrence_of_assistance(mixed_rho()), 1.0, 1e-12);
  EXPECT_NEAR(concurrence_of_assistance(w3_pair_rho()), 2.0 / 3.0, 1e-12);
}

TEST(Tangles, Bell) {
  const MeasureSet m = tangles(bell_rho());
  EXPECT_NEAR(m.tangle, 1.0, 1e-12);
  EXPECT_NEAR(m.tangle_a, 1.0, 1e-12);
  EXPECT_NEAR(m.x_split, 0.0, 1e-12);
  EXPECT_NEAR(m.y_split, 0.0, 1e-12);
}

TEST(Tangles, MaximallyMixed) {
  const MeasureSet m = tangles(mixed_rho());
  EXPECT_NEAR(m.tangle, 0.0, 1e-12);
  EXPECT_NEAR(m.tangle_a, 1.0, 1e-12);
  EXPECT_NEAR(m.x_split, 3.0 / 8.0, 1e-12);
  EXPECT_NEAR(m.y_split, 3.0 / 8.0, 1e-12);
  EXPECT_NEAR(m.s_mutual, 0.5, 1e-12);
}

TEST(Tangles, W3Pair) {
  const MeasureSet m = tangles(w3_pair_rho());
  EXPECT_NEAR(m.tangle, 4.0 / 9.0, 1e-12);
  EXPECT_NEAR(m.tangle_a, 4.0 / 9.0, 1e-12);
}

TEST(Tangles, InternalIdentitiesOnRandomStates) {
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const MeasureSet m = tangles(random_mixed_two_qubit(derive_seed(43, s)));
    EXPECT_GE(m.concurrence, 0.0);
    EXPECT_LE(m.concurrence, m.coa + 1e-12);
    EXPECT_NEAR(m.tangle, m.concurrence * m.concurrence, 1e-15);
    EXPECT_NEAR(m.tangle_a, m.coa * m.coa, 1e-15);
    EXPECT_NEAR(m.tangle_a, 0.5 * m.s_mutual + m.x_split + m.y_split, 1e-9) << "seed " << s;
    if (m.tangle > 0) EXPECT_NEAR(m.tangle, 0.5 * m.s_mutual - m.x_split + m.y_split, 1e-9) << "seed " << s;
  }
}

TEST(Tangles, PureStateCollapse) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const int n = 2 + static_cast<int>(s % 2);
    const PureState psi = haar_random_pure(n, derive_seed(44, s));
    const int pair[] = {0, 1};
    const int a[] = {0};
    const DensityMatrix rho = partial_trace(psi, pair);
    const double root = std::sqrt(linear_entropy(partial_trace(psi, a)));
    if (n == 2) {
      EXPECT_NEAR(concurrence(rho), root, 1e-9) << "seed " << s;
      EXPECT_NEAR(concurrence_of_assistance(rho), root, 1e-9) << "seed " << s;
    } else {
      EXPECT_LE(concurrence_of_assistance(rho), root + 1e-9);
    }
  }
}

TEST(Tangles, LocalUnitaryInvariance) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const DensityMatrix rho = random_mixed_two_qubit(derive_seed(45, s));
    const ComplexMatrix u = random_local_unitary(derive_seed(46, s));
    const DensityMatrix rotated = DensityMatrix::from_trusted({0, 1}, (u * rho.matrix() * u.adjoint()).hermitian_part());
    const MeasureSet a = tangles(rho);
    const MeasureSet b = tangles(rotated);
    EXPECT_NEAR(a.concurrence, b.concurrence, 1e-9);
    EXPECT_NEAR(a.coa, b.coa, 1e-9);
    EXPECT_NEAR(a.tangle, b.tangle, 1e-9);
    EXPECT_NEAR(a.tangle_a, b.tangle_a, 1e-9);
  }
}

TEST(PairMeasures, WStateClosedForms) {
  for (int n = 3; n <= 6; ++n) {
    const PureState w = state_family(StateFamily::w, n);
    for (int b = 1; b < n; ++b) {
      const MeasureSet m = pair_measures(w, 0, b);
      EXPECT_NEAR(m.concurrence, oracle::w_pair_concurrence(n), 1e-10);
      EXPECT_NEAR(m.coa, oracle::w_pair_concurrence(n), 1e-10);
      EXPECT_NEAR(m.s_lin_a, oracle::w_marginal_entropy(n), 1e-12);
    }
  }
}

TEST(PairMeasures, OrderOfQubitsOnlySwapsMarginals) {
  const PureState psi = haar_random_pure(4, 8);
  const MeasureSet ab = pair_measures(psi, 1, 3);
  const MeasureSet ba = pair_measures(psi, 3, 1);
  EXPECT_NEAR(ab.tangle, ba.tangle, 1e-12);
  EXPECT_NEAR(ab.s_lin_a, ba.s_lin_b, 1e-12);
  EXPECT_THROW(pair_measures(psi, 2, 2), std::invalid_argument);
}

TEST(DecompositionAverage, Examples) {
  const DensityMatrix bell = bell_rho();
  EXPECT_NEAR(decomposition_average_concurrence(sample_decomposition(bell, 3, 1)), 1.0, 1e-12);
  const Decomposition basis = decomposition_from_unitary(mixed_rho(), ComplexMatrix::identity(4));
  EXPECT_NEAR(decomposition_average_concurrence(basis), 0.0, 1e-12);
}

TEST(DecompositionAverage, BracketedByConcurrenceAndAssistance) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const DensityMatrix rho = random_mixed_two_qubit(derive_seed(47, s));
    const RSpectrum spec = r_spectrum(rho);
    const double c = concurrence(spec);
    const double ca = concurrence_of_assistance(spec);
    for (std::uint64_t k = 0; k < 200; ++k) {
      const std::size_t m = 4 + k % 4;
      const double avg = decomposition_average_concurrence(sample_decomposition(rho, m, derive_seed(48, s, k)));
      ASSERT_GE(avg, c - 1e-9) << "state " << s << " sample " << k;
      ASSERT_LE(avg, ca + 1e-9) << "state " << s << " sample " << k;
    }
  }
}

}  // namespace
}  // namespace qmono
