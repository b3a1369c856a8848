#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinchain/chain_model.hpp"
#include "spinchain/evolve.hpp"
#include "spinchain/gate_extract.hpp"

namespace spinchain {

/// alpha|0> + beta|1>.
class QubitState {
 public:
  QubitState(Complex alpha, Complex beta);

  static QubitState zero() { return {1.0, 0.0}; }
  static QubitState one() { return {0.0, 1.0}; }
  static QubitState plus();
  static QubitState minus();
  static QubitState bloch(double theta, double phi);

  Complex alpha() const { return alpha_; }
  Complex beta() const { return beta_; }
  Eigen::Vector2cd vec() const { return {alpha_, beta_}; }

 private:
  Complex alpha_;
  Complex beta_;
};

struct TranscriptEntry {
  double time;
  std::string action;
};

struct ProtocolResult {
  StateVector final_state;
  /// Squared overlap with the protocol's target, in [0, 1].
  double figure_of_merit;
  /// Signed overlap <target|final> for phase-sensitive checks.
  Complex target_overlap;
  /// Purity and reduced state of the mediator (spin index 1).
  double mediator_purity;
  CMatrix mediator_state;
  double elapsed_time;
  std::vector<TranscriptEntry> transcript;
  /// Protocol-specific diagnostics (entropies, sectors, ...).
  std::map<std::string, double> metrics;
};

/// Gate time pi/(sqrt2 omega) of the symmetric three-spin chain.
double gate_time(double omega);

/// Throws SpecError unless the spec is the three-spin XY chain with equal
/// nonzero bonds.
void require_symmetric_three_spin(const ChainSpec& spec);

enum class TransferInit {
  /// Mediator |0>, target |0>, then sigma_z on the target.
  Med0Tgt0WithZCorrection,
  /// Mediator |0>, target |1>, no correction.
  Med0Tgt1,
  /// Mediator |1>, target |0>, no correction.
  Med1Tgt0,
};

/// Transfers `input` from spin 0 to spin 2 in time tau. The figure of merit
/// is <input| rho_spin2 |input>.
ProtocolResult run_state_transfer(const ChainSpec& spec, const QubitState& input, TransferInit init);

/// Entanglement-preserving transfer: `joint_a1` is a state of an ancilla
/// (dimension `ancilla_dim`, a power of two) and spin 0, ancilla first. The
/// chain starts in |01> on spins 1, 2. Target: -|10>_{01} |phi>_{a,2}.
/// Ordering of the result: ancilla qubits, then the three spins.
ProtocolResult run_state_transfer_entangled(const ChainSpec& spec, const CVector& joint_a1,
                                            int ancilla_dim);

struct ExchangeResult {
  int alice_reads;
  int bob_reads;
  double probability;
};

/// Alice (spin 0) sends bit_a and Bob (spin 2) sends bit_b; the outcome is
/// the most likely joint measurement result after time tau, read exactly.
ExchangeResult run_classical_exchange(const ChainSpec& spec, int bit_a, int bit_b, int mediator_bit = 0);

/// Demonstration mode: `shots` seeded computational-basis samples; keys are
/// "ab" outcome strings (Alice's bit first).
std::map<std::string, int> sample_classical_exchange(const ChainSpec& spec, int bit_a, int bit_b,
                                                     int shots, std::uint64_t seed,
                                                     int mediator_bit = 0);

enum class EbitMode {
  /// |+>|0>|+> evolved for tau.
  PlusPlusFullTau,
  /// |1>|0>|1> evolved for tau/2.
  HalfTau,
};

ProtocolResult run_ebit_generation(const ChainSpec& spec, EbitMode mode);

/// Rounds of tau/2 without resetting the mediator. Even rounds load |11>,
/// odd rounds load |00> on the data spins. Each round reports metrics
/// "mediator_sector" (mediator bit afterwards) and "ebit_fidelity".
std::vector<ProtocolResult> run_repeated_ebit_generation(const ChainSpec& spec, int rounds);

/// (|101> + |011> + |110>)/sqrt3.
StateVector w_state();
double w_state_time(double omega);

/// |101> evolved for t (default: the W-state time), then diag(1, i) on the
/// mediator. Figure of merit: |<W|psi>|^2.
ProtocolResult run_w_state(const ChainSpec& spec, std::optional<double> t = std::nullopt);

enum class AppendixGate {
  /// |0>|+>|+> -> (|0>|-> - |1>|+>)/sqrt2 |0>, spin index 2 unentangled.
  Entangle12,
  /// |0>(a|0> + b|1>)|0> -> |0>(a|0> - b|1>)|0>.
  MediatorSigmaZ,
};

ProtocolResult run_appendix_gate(const ChainSpec& spec, AppendixGate which,
                                 const QubitState& mediator_input = QubitState::plus());

/// Star network of parallel three-spin chains with per-branch couplings.
struct NetworkSpec {
  std::vector<double> branch_couplings;

  /// sqrt(sum of squared branch couplings).
  double collective_coupling() const;
  ChainSpec to_chain_spec() const;
  void validate() const;
};

/// |0>_first |1~>_mediators |0>_last with |1~> = sum_x w_x |1>_x / w.
StateVector collective_excitation(const NetworkSpec& net);

/// Evolves the full network for pi/(sqrt2 w) and extracts the gate on the
/// two end spins in the all-|0> mediator sector. Leakage failures throw.
GateReport run_network_gate(const NetworkSpec& net);

}  // namespace spinchain
