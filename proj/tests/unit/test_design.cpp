#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "spinchain/design.hpp"
#include "spinchain/evolve.hpp"

using namespace spinchain;

TEST(Design, OddCouplingProfile) {
  const CouplingDesign d = design_half_time_entanglement(9, 2.0);
  ASSERT_EQ(d.couplings.size(), 8u);
  EXPECT_EQ(d.half_length, 5);
  // c_j = (lambda/2) sqrt(j (n - j)) with n = 5, the last one divided by sqrt2.
  const double expected[4] = {std::sqrt(4.0), std::sqrt(6.0), std::sqrt(6.0), std::sqrt(4.0) / std::numbers::sqrt2};
  for (int j = 0; j < 4; ++j) {
    EXPECT_NEAR(d.couplings[j], expected[j], 1e-14);
    EXPECT_NEAR(d.couplings[7 - j], expected[j], 1e-14);
  }
  EXPECT_NEAR(d.predicted_time, std::numbers::pi / 2.0, 1e-15);
  for (double b : d.compensation_fields) EXPECT_EQ(b, 0.0);
  EXPECT_EQ(d.scheme, DesignScheme::Generation);
  EXPECT_TRUE(d.to_chain_spec().is_mirror_symmetric());
}

TEST(Design, EvenCouplingProfileAndCompensation) {
  const CouplingDesign d = design_half_time_entanglement(8, 1.0);
  ASSERT_EQ(d.couplings.size(), 7u);
  EXPECT_NEAR(d.couplings[3], 0.5, 1e-15);
  EXPECT_NEAR(d.couplings[0], 0.5 * std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(d.compensation_fields[3], 0.25, 1e-15);
  EXPECT_NEAR(d.compensation_fields[4], 0.25, 1e-15);
  EXPECT_EQ(d.scheme, DesignScheme::Sharing);
  // The middle-bond corner term cancels: the half-chain diagonal is uniform.
  const CMatrix h = build_half_chain_hamiltonian(d.to_chain_spec(), Parity::Even).matrix();
  for (int j = 1; j < h.rows(); ++j) EXPECT_NEAR(std::abs(h(j, j) - h(0, 0)), 0.0, 1e-14);
}

TEST(Design, Validation) {
  EXPECT_THROW(design_half_time_entanglement(2), SpecError);
  EXPECT_THROW(design_half_time_entanglement(5, 0.0), SpecError);
  EXPECT_THROW(design_half_time_entanglement(5, -1.0), SpecError);
  EXPECT_THROW(homogeneous_design(2), SpecError);
}

TEST(Design, VerifiesPerfectlyAcrossLengths) {
  for (int n = 3; n <= 14; ++n) {
    for (double lambda : {1.0, 0.7}) {
      const CouplingDesign d = design_half_time_entanglement(n, lambda);
      const DesignVerification v = verify_design(d);
      EXPECT_GE(v.amplitude, 1.0 - 1e-10) << "N=" << n;
      if (n <= kMaxFullSpaceVerification) {
        ASSERT_TRUE(v.full_space_fidelity.has_value());
        EXPECT_GE(*v.full_space_fidelity, 1.0 - 1e-10) << "N=" << n;
        EXPECT_GE(*v.interior_min_purity, 1.0 - 1e-10) << "N=" << n;
      } else {
        EXPECT_FALSE(v.full_space_fidelity.has_value());
      }
    }
  }
}

TEST(Design, HalfChainAmplitudeAgreesWithFullChainDynamics) {
  // |<1~|exp(-iHt)|n~>| from the full excitation space.
  for (int n : {6, 7}) {
    const CouplingDesign d = design_half_time_entanglement(n);
    const HalfChainBasis b = half_chain_basis(n);
    const CMatrix u = unitary_at(build_excitation_hamiltonian(d.to_chain_spec()), 0.9);
    const Complex amp = (b.vectors.col(0).adjoint() * u * b.vectors.col(b.n - 1))(0, 0);
    EXPECT_NEAR(half_chain_amplitude(d, 0.9), std::abs(amp), 1e-12);
  }
}

TEST(Design, HomogeneousDefect) {
  for (int n : {3, 4, 6}) {
    const DesignVerification v = verify_design(homogeneous_design(n));
    EXPECT_GE(v.amplitude, 1.0 - 1e-10) << "N=" << n;
  }
  for (int n : {5, 7, 8, 9, 10, 11}) {
    EXPECT_LT(verify_design(homogeneous_design(n)).amplitude, 1.0 - 1e-3) << "N=" << n;
  }
  // Peak times come from a maximizer, so they are only good to about sqrt(machine epsilon).
  EXPECT_NEAR(homogeneous_design(3).predicted_time, std::numbers::pi / (2 * std::numbers::sqrt2), 1e-7);
  EXPECT_NEAR(homogeneous_design(4).predicted_time, std::numbers::pi / 2, 1e-7);
}

TEST(Design, ResourceComparison) {
  EXPECT_NEAR(resource_comparison(3).ratio, 0.5, 1e-14);
  EXPECT_NEAR(resource_comparison(41).ratio, 0.5, 0.075);
  const ResourceComparison r = resource_comparison(9, 2.0);
  EXPECT_NEAR(r.ratio, resource_comparison(9, 1.0).ratio, 1e-14);
  EXPECT_THROW(resource_comparison(8), SpecError);
}
