#pragma once

// Independent reference implementations used only by the tests.

#include <random>
#include <vector>

#include "spinchain/chain_model.hpp"

namespace oracle {

using spinchain::ChainSpec;
using spinchain::CMatrix;
using spinchain::CVector;

/// Hamiltonian assembled from explicit Kronecker products of 2x2 Pauli
/// matrices, spin 0 as the leftmost factor.
CMatrix kron_hamiltonian(const ChainSpec& spec);

/// exp(-i H t) by scaling and squaring a truncated Taylor series.
CMatrix taylor_expm(const CMatrix& h, double t);

/// J_n(x) from the power series in 50-digit arithmetic.
double bessel_series(int n, double x);

/// Partial trace onto one spin by explicit summation over the others.
CMatrix single_spin_density(const CVector& psi, int n_spins, int spin);

double max_abs(const CMatrix& m);

/// Random linear chain: couplings in [-2, 2] away from 0, fields in [-1, 1].
ChainSpec random_chain(std::mt19937_64& rng, int n_spins, spinchain::Model model);

/// Random Hermitian matrix with entries of order one.
CMatrix random_hermitian(std::mt19937_64& rng, int dim);

}  // namespace oracle
