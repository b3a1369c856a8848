#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "spinchain/chain_model.hpp"
#include "spinchain/pauli.hpp"

using namespace spinchain;

namespace {

CMatrix restrict_to(const CMatrix& full, const std::vector<Eigen::Index>& idx) {
  CMatrix out(idx.size(), idx.size());
  for (size_t r = 0; r < idx.size(); ++r) {
    for (size_t c = 0; c < idx.size(); ++c) out(r, c) = full(idx[r], idx[c]);
  }
  return out;
}

}  // namespace

TEST(PauliAlgebra, RaisingLoweringAndProducts) {
  using namespace pauli;
  const Eigen::Matrix2cd x = sigma_x(), y = sigma_y(), z = sigma_z();
  EXPECT_LT((sigma_plus() - (x + kI * y) / 2.0).norm(), 1e-15);
  EXPECT_LT((sigma_minus() - (x - kI * y) / 2.0).norm(), 1e-15);
  EXPECT_LT((x * y - kI * z).norm(), 1e-15);
  // The excited state is the +1 eigenvector of sigma_z and sigma_+ raises into it.
  EXPECT_EQ(z(kExcited, kExcited), Complex(1.0));
  EXPECT_EQ(sigma_plus()(kExcited, kGround), Complex(1.0));
}

TEST(ChainSpecValidation, RejectsMalformedSpecs) {
  ChainSpec s = ChainSpec::homogeneous(4);
  EXPECT_NO_THROW(s.validate());
  s.couplings.pop_back();
  EXPECT_THROW(s.validate(), SpecError);
  s = ChainSpec::homogeneous(4);
  s.fields.push_back(0.0);
  EXPECT_THROW(s.validate(), SpecError);
  s = ChainSpec::homogeneous(4);
  s.couplings[1] = std::nan("");
  EXPECT_THROW(s.validate(), SpecError);
  s = ChainSpec::homogeneous(4);
  s.fields[0] = INFINITY;
  EXPECT_THROW(s.validate(), SpecError);
  EXPECT_THROW(ChainSpec::homogeneous(1), SpecError);
  EXPECT_THROW(ChainSpec::parallel_chains({}), SpecError);
}

TEST(ChainSpecValidation, MirrorSymmetry) {
  EXPECT_TRUE(ChainSpec::homogeneous(5).is_mirror_symmetric());
  ChainSpec s = ChainSpec::homogeneous(5);
  s.couplings[0] = 2.0;
  EXPECT_FALSE(s.is_mirror_symmetric());
  s.couplings[3] = 2.0;
  EXPECT_TRUE(s.is_mirror_symmetric());
  s.fields[1] = 0.3;
  EXPECT_FALSE(s.is_mirror_symmetric());
}

TEST(HermitianMatrix, RejectsNonHermitianInput) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(HermitianMatrix{m}, SpecError);
  m(1, 0) = 1.0;
  EXPECT_NO_THROW(HermitianMatrix{m});
}

TEST(FullHamiltonian, MatchesKroneckerOracleOnRandomChains) {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 6; ++n) {
    for (Model model : {Model::XY, Model::Heisenberg}) {
      const ChainSpec spec = oracle::random_chain(rng, n, model);
      const CMatrix h = build_full_hamiltonian(spec).matrix();
      EXPECT_LT(oracle::max_abs(h - oracle::kron_hamiltonian(spec)), 1e-13) << "N=" << n;
    }
  }
}

TEST(FullHamiltonian, ParallelChainsMatchOracle) {
  ChainSpec spec = ChainSpec::parallel_chains({1.0, 2.0, 2.0});
  spec.fields = {0.1, -0.2, 0.3, 0.0, 0.5};
  EXPECT_EQ(spec.n_spins, 5);
  EXPECT_LT(oracle::max_abs(build_full_hamiltonian(spec).matrix() - oracle::kron_hamiltonian(spec)), 1e-13);
}

TEST(FullHamiltonian, SizeLimit) {
  EXPECT_THROW(build_full_hamiltonian(ChainSpec::homogeneous(6), 5), SpecError);
}

TEST(FullHamiltonian, ThreeSpinSingleExcitationBlock) {
  // Hopping amplitudes equal the bond couplings; no diagonal without fields.
  const ChainSpec spec = ChainSpec::three_spin(1.0, 0.7);
  const CMatrix h = build_full_hamiltonian(spec).matrix();
  const auto i100 = basis_index("100"), i010 = basis_index("010"), i001 = basis_index("001");
  EXPECT_NEAR(std::abs(h(i100, i010) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h(i010, i001) - 0.7), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h(i100, i001)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h(i100, i100)), 0.0, 1e-15);
}

TEST(ExcitationHamiltonian, IsTheSingleExcitationBlock) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 8; ++n) {
    for (Model model : {Model::XY, Model::Heisenberg}) {
      const ChainSpec spec = oracle::random_chain(rng, n, model);
      std::vector<Eigen::Index> idx;
      for (int j = 0; j < n; ++j) idx.push_back(static_cast<Eigen::Index>(excitation_state_index(j, n)));
      const CMatrix block = restrict_to(oracle::kron_hamiltonian(spec), idx);
      EXPECT_LT(oracle::max_abs(build_excitation_hamiltonian(spec).matrix() - block), 1e-13);
    }
  }
}

TEST(ExcitationHamiltonian, FieldDiagonal) {
  // -sum_k B_k sz_k on |j> gives sum_k B_k - 2 B_j.
  ChainSpec spec = ChainSpec::homogeneous(4);
  spec.fields = {0.0, 0.625, 0.625, 0.0};
  const CMatrix h = build_excitation_hamiltonian(spec).matrix();
  EXPECT_NEAR(h(0, 0).real(), 1.25, 1e-15);
  EXPECT_NEAR(h(1, 1).real(), 0.0, 1e-15);
  EXPECT_NEAR(h(2, 2).real(), 0.0, 1e-15);
  EXPECT_NEAR(h(3, 3).real(), 1.25, 1e-15);
}

TEST(SectorHamiltonian, TwoExcitationBlock) {
  std::mt19937_64 rng(17);
  const int n = 5;
  const ChainSpec spec = oracle::random_chain(rng, n, Model::Heisenberg);
  std::vector<std::vector<int>> configs;
  std::vector<Eigen::Index> idx;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      configs.push_back({a, b});
      idx.push_back(static_cast<Eigen::Index>(excitation_state_index(a, n) | excitation_state_index(b, n)));
    }
  }
  const CMatrix block = restrict_to(oracle::kron_hamiltonian(spec), idx);
  EXPECT_LT(oracle::max_abs(build_sector_hamiltonian(spec, configs).matrix() - block), 1e-13);
  EXPECT_THROW(build_sector_hamiltonian(spec, {{2, 1}}), SpecError);
}

TEST(HalfChain, BasisIsOrthonormalAndMirrorSymmetric) {
  for (int n = 2; n <= 9; ++n) {
    const HalfChainBasis b = half_chain_basis(n);
    EXPECT_EQ(b.n, (n + 1) / 2);
    EXPECT_LT(oracle::max_abs(b.vectors.adjoint() * b.vectors - CMatrix::Identity(b.n, b.n)), 1e-15);
    for (int j = 0; j < b.n; ++j) {
      for (int s = 0; s < n; ++s) EXPECT_EQ(b.vectors(s, j), b.vectors(n - 1 - s, j));
    }
  }
}

TEST(HalfChain, HamiltonianIsTheInvariantBlock) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.3, 2.0);
  for (int n = 3; n <= 10; ++n) {
    ChainSpec spec = ChainSpec::homogeneous(n);
    for (int j = 0; j < (n - 1) / 2; ++j) spec.couplings[j] = spec.couplings[n - 2 - j] = u(rng);
    if (n % 2 == 0) spec.couplings[n / 2 - 1] = u(rng);
    for (int j = 0; j < n / 2; ++j) spec.fields[j] = spec.fields[n - 1 - j] = u(rng) - 1.0;
    ASSERT_TRUE(spec.is_mirror_symmetric());
    const HalfChainBasis b = half_chain_basis(n);
    const CMatrix full = build_excitation_hamiltonian(spec).matrix();
    const CMatrix half = build_half_chain_hamiltonian(spec, parity_of(n)).matrix();
    EXPECT_LT(oracle::max_abs(b.vectors.adjoint() * full * b.vectors - half), 1e-13) << "N=" << n;
    EXPECT_LT(oracle::max_abs(full * b.vectors - b.vectors * half), 1e-13) << "N=" << n;
  }
}

TEST(HalfChain, RejectsAsymmetricOrHeisenberg) {
  ChainSpec s = ChainSpec::homogeneous(5);
  s.couplings[0] = 3.0;
  EXPECT_THROW(build_half_chain_hamiltonian(s, Parity::Odd), SpecError);
  EXPECT_THROW(build_half_chain_hamiltonian(ChainSpec::homogeneous(5, 1.0, Model::Heisenberg), Parity::Odd),
               SpecError);
}

TEST(BasisHelpers, Indexing) {
  EXPECT_EQ(basis_index("101"), 5u);
  EXPECT_EQ(basis_index("001"), 1u);
  EXPECT_THROW(basis_index("10a"), SpecError);
  EXPECT_EQ(excitation_count(0b1011), 3);
  EXPECT_EQ(spin_bit(basis_index("100"), 0, 3), 1);
  EXPECT_EQ(spin_bit(basis_index("100"), 2, 3), 0);
  EXPECT_EQ(excitation_state_index(0, 4), 8u);
  EXPECT_EQ(excitation_state_index(3, 4), 1u);
}
