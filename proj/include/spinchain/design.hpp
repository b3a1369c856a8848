#pragma once

#include <optional>
#include <vector>

#include "spinchain/chain_model.hpp"

namespace spinchain {

enum class DesignScheme {
  /// Odd N: |n~> (bare middle excitation) rotates to the end-spin Bell pair.
  Generation,
  /// Even N: |n~> (middle-pair Bell state) rotates to the end-spin Bell pair,
  /// with a compensating field on the two middle spins.
  Sharing,
};

struct CouplingDesign {
  int n_spins = 0;
  int half_length = 0;
  std::vector<double> couplings;
  std::vector<double> compensation_fields;
  double lambda_design = 0.0;
  double predicted_time = 0.0;
  /// max bond coupling x predicted_time.
  double resource_cost = 0.0;
  DesignScheme scheme = DesignScheme::Generation;

  ChainSpec to_chain_spec() const;
};

/// Engineered half-time entanglement: effective half-chain couplings
/// c_j = (lambda/2) sqrt(j (n - j)) give a perfect |n~> -> |1~> rotation at
/// t = pi/lambda. For odd N the bond next to the middle spin is c_{n-1}/sqrt2;
/// for even N the middle bond is lambda/2 and the fields B = lambda/4 on the
/// two middle spins cancel its diagonal term up to a uniform shift.
CouplingDesign design_half_time_entanglement(int n_spins, double lambda_design = 1.0);

/// Homogeneous chain with coupling omega (plus the compensating field for
/// even N). Its predicted time is the first local maximum of the
/// half-chain end-to-end amplitude.
CouplingDesign homogeneous_design(int n_spins, double omega = 1.0);

struct DesignVerification {
  /// |<1~| exp(-i H_half t) |n~>| at the predicted time.
  double amplitude = 0.0;
  /// Full-space checks, present for N <= 12: squared overlap of the final
  /// state with (|0...01> + |10...0>)/sqrt2 up to phase, and the smallest
  /// single-spin purity among the interior spins.
  std::optional<double> full_space_fidelity;
  std::optional<double> interior_min_purity;
};

inline constexpr int kMaxFullSpaceVerification = 12;

DesignVerification verify_design(const CouplingDesign& design);

/// Half-chain amplitude |<1~| exp(-i H_half t) |n~>| of a design at time t.
double half_chain_amplitude(const CouplingDesign& design, double t);

struct ResourceComparison {
  double entangle_cost;
  double transfer_cost;
  double ratio;
};

/// Cost of the half-time entanglement design against end-to-end perfect
/// transfer over all N sites (couplings (lambda/2) sqrt(j (N - j)), same
/// time pi/lambda).
ResourceComparison resource_comparison(int n_spins, double lambda_design = 1.0);

}  // namespace spinchain
