#pragma once

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "spinchain/chain_model.hpp"

namespace spinchain {

enum class BasisKind { Full, Excitation, HalfChain };

/// Unit-norm amplitude vector tagged with the basis it lives in.
class StateVector {
 public:
  static StateVector full(int n_spins, CVector amplitudes);
  static StateVector excitation(int n_spins, CVector amplitudes);
  static StateVector half_chain(int n_spins, CVector amplitudes);

  /// Product-basis state from a bit string, spin 0 first ("100" = |1>|0>|0>).
  static StateVector basis_state(std::string_view bits);
  /// Tensor product of single-spin states, spin 0 first.
  static StateVector product(std::span<const Eigen::Vector2cd> spins);

  BasisKind basis() const { return basis_; }
  int n_spins() const { return n_spins_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const CVector& amplitudes() const { return amplitudes_; }
  Complex operator[](Eigen::Index i) const { return amplitudes_(i); }

  /// <this|other>.
  Complex inner(const StateVector& other) const;
  /// |<this|other>|^2.
  double fidelity(const StateVector& other) const;

 private:
  StateVector(BasisKind basis, int n_spins, CVector amplitudes);

  BasisKind basis_;
  int n_spins_;
  CVector amplitudes_;
};

/// Eigendecomposition H = V diag(E) V^dagger with E ascending.
struct Spectrum {
  RVector energies;
  CMatrix vectors;

  Eigen::Index dim() const { return energies.size(); }
};

Spectrum eigendecompose(const HermitianMatrix& h);
/// Checked overload: rejects non-Hermitian input.
Spectrum eigendecompose(const CMatrix& h);

/// exp(-iHt) psi via the spectrum.
StateVector propagate(const Spectrum& spectrum, double t, const StateVector& psi);
StateVector propagate(const HermitianMatrix& h, double t, const StateVector& psi);

CMatrix unitary_at(const Spectrum& spectrum, double t);
CMatrix unitary_at(const HermitianMatrix& h, double t);

/// Exact propagation in the full 2^N space for Hamiltonians that conserve
/// the excitation number: each fixed-excitation block of the full matrix is
/// diagonalized on its own. Only the requested sectors are prepared.
class SectorPropagator {
 public:
  SectorPropagator(const HermitianMatrix& full_h, int n_spins,
                   std::optional<std::vector<int>> sectors = std::nullopt);

  StateVector propagate(double t, const StateVector& psi) const;
  /// Full unitary; all sectors must have been prepared.
  CMatrix unitary_at(double t) const;

  int n_spins() const { return n_spins_; }

 private:
  struct Block {
    std::vector<Eigen::Index> indices;
    Spectrum spectrum;
  };

  int n_spins_;
  std::map<int, Block> blocks_;
};

/// Largest entry of [H, sum_j sz_j] for a full-space Hamiltonian.
double magnetization_commutator_norm(const HermitianMatrix& full_h, int n_spins);

/// Partial trace of a full-basis state onto the (sorted) spins in `keep`.
/// The first kept spin is the most significant factor of the result.
CMatrix reduced_state(const StateVector& psi, std::span<const int> keep);

double purity(const CMatrix& rho);

/// Von Neumann entropy in bits; eigenvalues below 1e-14 are dropped.
double entanglement_entropy(const CMatrix& rho);

/// Complex amplitude <first site| exp(-iHt) |last site> in the excitation
/// subspace, with one eigendecomposition reused for every t.
class TransferAmplitude {
 public:
  explicit TransferAmplitude(const ChainSpec& spec);
  /// From a precomputed excitation (or half-chain) Hamiltonian: amplitude
  /// between basis states `from` and `to`.
  TransferAmplitude(const HermitianMatrix& h, Eigen::Index to, Eigen::Index from);

  Complex amplitude(double t) const;
  double magnitude(double t) const { return std::abs(amplitude(t)); }

 private:
  RVector energies_;
  CVector weights_;
};

/// f(t) = |<10...0| exp(-iHt) |0...01>|.
double transfer_amplitude(const ChainSpec& spec, double t);

/// Input-averaged transfer fidelity F = f/3 + f^2/6 + 1/2.
double average_fidelity(double f);

}  // namespace spinchain
