#pragma once

#include <array>
#include <vector>

#include "spinchain/types.hpp"

namespace spinchain {

/// Computational-basis configuration of the mediator spins. The remaining
/// two spins are the data spins of the effective gate.
struct MediatorSector {
  std::vector<int> spins;
  std::vector<int> bits;
};

struct GateReport {
  double leakage = 0.0;
  /// Ordered on the data-spin product basis |00>,|01>,|10>,|11>, lower spin
  /// index first.
  Gate2 effective_gate = Gate2::Zero();
  MediatorSector mediator_sector;
  /// Phase-minimized Frobenius distance from SWAP . Diag(1,-1,-1,-1).
  double decomposition_residual = 0.0;
  Complex global_phase{1.0, 0.0};
};

struct GateComparison {
  double residual;
  Complex phase;
};

inline constexpr double kInvariantThreshold = 1e-8;

/// Operator norm of the blocks of U that connect the mediator sector to its
/// complement (the larger of the two directions).
double check_invariant_subspace(const CMatrix& u, const MediatorSector& sector);

/// Throws LeakageTooLarge when the sector is not invariant to `threshold`.
GateReport extract_effective_gate(const CMatrix& u, const MediatorSector& sector,
                                  double threshold = kInvariantThreshold);

/// min over |c| = 1 of ||A - cB||_F and the minimizing c.
GateComparison compare_gates(const Gate2& a, const Gate2& b);

Gate2 swap_gate();
Gate2 joint_phase_gate();
/// SWAP . Diag(1,-1,-1,-1).
Gate2 swap_joint_phase_gate();

/// Three-spin display order |000>,|001>,|100>,|101>,|010>,|011>,|110>,|111>.
std::array<int, 8> display_basis_order();
/// Re-indexes a three-spin operator into the display order.
CMatrix to_display_order(const CMatrix& u3);

}  // namespace spinchain
