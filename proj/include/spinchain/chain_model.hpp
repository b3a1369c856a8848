#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "spinchain/types.hpp"

namespace spinchain {

enum class Model { XY, Heisenberg };

/// Linear chains, or the star network of m parallel three-spin chains that
/// share their two end spins.
enum class Topology { Linear, ParallelChains };

struct Bond {
  int a;
  int b;
  double coupling;
};

/// Full description of a chain or network instance (hbar = 1).
///
/// Spins are indexed from 0. For a linear chain `couplings[j]` is the bond
/// between spins j and j+1. For ParallelChains the network has
/// `couplings.size()` mediators: spin 0 and spin N-1 are the data spins and
/// spins 1..m are the mediators, mediator x coupled to both ends with
/// strength `couplings[x-1]`.
///
/// XY bonds contribute (w/2)(sx sx + sy sy); Heisenberg bonds contribute
/// -(J/2)(sx sx + sy sy + sz sz); every site contributes -B_j sz_j.
struct ChainSpec {
  int n_spins = 0;
  Model model = Model::XY;
  Topology topology = Topology::Linear;
  std::vector<double> couplings;
  std::vector<double> fields;

  static ChainSpec homogeneous(int n_spins, double omega = 1.0, Model model = Model::XY);
  /// The three-spin chain with bonds (omega, omega23).
  static ChainSpec three_spin(double omega, double omega23);
  static ChainSpec parallel_chains(std::vector<double> branch_couplings);

  /// Throws SpecError when the invariants do not hold.
  void validate() const;

  std::vector<Bond> bonds() const;
  bool is_mirror_symmetric(double tol = 1e-12) const;
};

/// Dense Hermitian operator. Construction checks H = H^dagger elementwise.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(CMatrix m, double tol = 1e-12);

  const CMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  CMatrix m_;
};

inline constexpr int kDefaultMaxFullSpins = 16;

/// Hamiltonian on the 2^N product basis. Basis index bits: spin 0 is the
/// most significant bit, bit value 1 means the spin is excited.
HermitianMatrix build_full_hamiltonian(const ChainSpec& spec, int max_spins = kDefaultMaxFullSpins);

/// N x N block on the single-excitation states |j> (excitation at site j).
/// Matrix elements come from the same local terms as the full Hamiltonian.
HermitianMatrix build_excitation_hamiltonian(const ChainSpec& spec);

/// Block of H on an arbitrary list of configurations, each given as the
/// sorted list of excited sites. Works for any N (no 2^N storage).
HermitianMatrix build_sector_hamiltonian(const ChainSpec& spec,
                                         const std::vector<std::vector<int>>& configurations);

enum class Parity { Odd, Even };

/// Mirror-symmetric single-excitation states |j~> = (|j> + |N-1-j>)/sqrt2
/// for j < n-1; the last one is the bare middle excitation (odd N) or the
/// symmetric pair on the two middle spins (even N).
struct HalfChainBasis {
  Parity parity;
  int n_spins;
  int n;
  /// N x n matrix; column j is |j~> in the excitation basis.
  CMatrix vectors;

  CVector in_full_space(int j) const;
};

HalfChainBasis half_chain_basis(int n_spins);
int half_length(int n_spins);
Parity parity_of(int n_spins);

/// The XY Hamiltonian in the half-chain basis: tridiagonal in the bond
/// couplings, with the corner bond scaled by sqrt2 for odd N and the middle
/// bond on the last diagonal entry for even N. Fields add their diagonal
/// action on each |j~>.
HermitianMatrix build_half_chain_hamiltonian(const ChainSpec& spec, Parity parity);

// Product-basis helpers.
std::uint64_t basis_index(std::string_view bits);
int excitation_count(std::uint64_t index);
int spin_bit(std::uint64_t index, int spin, int n_spins);

/// Single-excitation basis index of spin `site` in the full space.
std::uint64_t excitation_state_index(int site, int n_spins);

}  // namespace spinchain
