#include "spinchain/protocols.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "spinchain/pauli.hpp"

namespace spinchain {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

CVector kron(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

CVector ket(std::string_view bits) { return StateVector::basis_state(bits).amplitudes(); }

CVector ket(const QubitState& q) { return q.vec(); }

/// Applies a 2x2 gate to one spin of a full-space state.
StateVector apply_single(const StateVector& psi, int spin, const Eigen::Matrix2cd& gate) {
  const int n = psi.n_spins();
  const std::uint64_t mask = excitation_state_index(spin, n);
  CVector out = CVector::Zero(psi.dim());
  for (Eigen::Index i = 0; i < psi.dim(); ++i) {
    const auto idx = static_cast<std::uint64_t>(i);
    const int in = spin_bit(idx, spin, n);
    const std::uint64_t base = idx & ~mask;
    out(static_cast<Eigen::Index>(base)) += gate(0, in) * psi[i];
    out(static_cast<Eigen::Index>(base | mask)) += gate(1, in) * psi[i];
  }
  return StateVector::full(n, std::move(out));
}

double omega_of(const ChainSpec& spec) {
  require_symmetric_three_spin(spec);
  return spec.couplings[0];
}

CMatrix three_spin_unitary(const ChainSpec& spec, double t) {
  return unitary_at(build_full_hamiltonian(spec), t);
}

StateVector evolve3(const CMatrix& u, const CVector& psi0) {
  return StateVector::full(3, u * psi0);
}

ProtocolResult finish(StateVector final_state, const CVector& target, int mediator, double elapsed,
                      std::vector<TranscriptEntry> transcript) {
  const Complex overlap = target.dot(final_state.amplitudes());
  const std::array<int, 1> keep{mediator};
  CMatrix rho = reduced_state(final_state, keep);
  const double p = purity(rho);
  return ProtocolResult{std::move(final_state),
                        std::min(1.0, std::norm(overlap)),
                        overlap,
                        p,
                        std::move(rho),
                        elapsed,
                        std::move(transcript),
                        {}};
}

double single_spin_entropy(const StateVector& psi, int spin) {
  const std::array<int, 1> keep{spin};
  return entanglement_entropy(reduced_state(psi, keep));
}

}  // namespace

QubitState::QubitState(Complex alpha, Complex beta) : alpha_(alpha), beta_(beta) {
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-12) {
    throw SpecError("qubit amplitudes must satisfy |alpha|^2 + |beta|^2 = 1");
  }
}

QubitState QubitState::plus() { return {1.0 / kSqrt2, 1.0 / kSqrt2}; }

QubitState QubitState::minus() { return {1.0 / kSqrt2, -1.0 / kSqrt2}; }

QubitState QubitState::bloch(double theta, double phi) {
  return {std::cos(theta / 2.0), std::exp(Complex(0.0, phi)) * std::sin(theta / 2.0)};
}

double gate_time(double omega) {
  if (!(omega != 0.0) || !std::isfinite(omega)) throw SpecError("coupling must be finite and nonzero");
  return std::numbers::pi / (kSqrt2 * std::abs(omega));
}

void require_symmetric_three_spin(const ChainSpec& spec) {
  spec.validate();
  if (spec.topology != Topology::Linear || spec.model != Model::XY || spec.n_spins != 3) {
    throw SpecError("protocol needs the three-spin XY chain");
  }
  const double w = spec.couplings[0];
  const double l = spec.couplings[1];
  if (w == 0.0 || std::abs(w - l) > 1e-12 * std::max(std::abs(w), std::abs(l))) {
    throw SpecError("protocol needs equal nonzero bonds (omega = omega23)");
  }
  for (double b : spec.fields) {
    if (b != 0.0) throw SpecError("protocol assumes no local fields");
  }
}

ProtocolResult run_state_transfer(const ChainSpec& spec, const QubitState& input, TransferInit init) {
  const double tau = gate_time(omega_of(spec));
  const CVector phi = ket(input);
  CVector mediator = ket("0");
  CVector target_spin = ket("0");
  std::string prep = "prepare input on spin 0, mediator |0>, target |0>";
  if (init == TransferInit::Med0Tgt1) {
    target_spin = ket("1");
    prep = "prepare input on spin 0, mediator |0>, target |1>";
  } else if (init == TransferInit::Med1Tgt0) {
    mediator = ket("1");
    prep = "prepare input on spin 0, mediator |1>, target |0>";
  }
  std::vector<TranscriptEntry> log{{0.0, prep}, {tau, "free evolution for tau"}};
  StateVector psi = evolve3(three_spin_unitary(spec, tau), kron(kron(phi, mediator), target_spin));

  CVector target;
  switch (init) {
    case TransferInit::Med0Tgt0WithZCorrection:
      // Phase flip diag(1, -1) on the target; with sigma_z = diag(-1, 1) that is -sigma_z.
      psi = apply_single(psi, 2, -pauli::sigma_z());
      log.push_back({tau, "apply phase flip on spin 2"});
      target = kron(ket("00"), phi);
      break;
    case TransferInit::Med0Tgt1:
      target = -kron(ket("10"), phi);
      break;
    case TransferInit::Med1Tgt0:
      target = kron(ket("01"), phi);
      break;
  }
  ProtocolResult result = finish(psi, target, 1, tau, std::move(log));
  const std::array<int, 1> keep{2};
  result.figure_of_merit =
      std::min(1.0, (phi.adjoint() * reduced_state(result.final_state, keep) * phi)(0).real());
  result.metrics["target_state_overlap"] = std::norm(result.target_overlap);
  return result;
}

ProtocolResult run_state_transfer_entangled(const ChainSpec& spec, const CVector& joint_a1,
                                            int ancilla_dim) {
  const double tau = gate_time(omega_of(spec));
  if (ancilla_dim < 2 || (ancilla_dim & (ancilla_dim - 1)) != 0) {
    throw SpecError("ancilla dimension must be a power of two");
  }
  if (joint_a1.size() != 2 * ancilla_dim) throw SpecError("joint state has the wrong dimension");
  if (std::abs(joint_a1.norm() - 1.0) > 1e-12) throw SpecError("joint state is not normalized");
  int ancilla_qubits = 0;
  while ((1 << ancilla_qubits) < ancilla_dim) ++ancilla_qubits;

  const CMatrix u = three_spin_unitary(spec, tau);
  const CVector start = kron(joint_a1, ket("01"));
  CVector evolved(start.size());
  for (int a = 0; a < ancilla_dim; ++a) evolved.segment(8 * a, 8) = u * start.segment(8 * a, 8);

  // -|10>_{spin0, mediator} |phi>_{a, spin2}, reordered to (a, spins).
  CVector target = CVector::Zero(start.size());
  for (int a = 0; a < ancilla_dim; ++a) {
    for (int s = 0; s < 2; ++s) target(8 * a + 0b100 + s) = -joint_a1(2 * a + s);
  }
  const int n = ancilla_qubits + 3;
  StateVector psi = StateVector::full(n, std::move(evolved));
  ProtocolResult result = finish(psi, target, ancilla_qubits + 1, tau,
                                 {{0.0, "prepare joint ancilla/spin-0 state, mediator |0>, target |1>"},
                                  {tau, "free evolution for tau"}});
  std::vector<int> ancilla(ancilla_qubits);
  for (int k = 0; k < ancilla_qubits; ++k) ancilla[k] = k;
  const StateVector before = StateVector::full(n, kron(joint_a1, ket("01")));
  result.metrics["ancilla_entropy_before_bits"] = entanglement_entropy(reduced_state(before, ancilla));
  result.metrics["ancilla_entropy_bits"] = entanglement_entropy(reduced_state(result.final_state, ancilla));
  return result;
}

namespace {

std::array<double, 4> exchange_probabilities(const ChainSpec& spec, int bit_a, int bit_b,
                                             int mediator_bit) {
  const double tau = gate_time(omega_of(spec));
  for (int b : {bit_a, bit_b, mediator_bit}) {
    if (b != 0 && b != 1) throw SpecError("bits must be 0 or 1");
  }
  const std::string bits{static_cast<char>('0' + bit_a), static_cast<char>('0' + mediator_bit),
                         static_cast<char>('0' + bit_b)};
  const StateVector psi = evolve3(three_spin_unitary(spec, tau), ket(bits));
  std::array<double, 4> p{};
  for (Eigen::Index i = 0; i < 8; ++i) {
    const auto idx = static_cast<std::uint64_t>(i);
    p[2 * spin_bit(idx, 0, 3) + spin_bit(idx, 2, 3)] += std::norm(psi[i]);
  }
  return p;
}

}  // namespace

ExchangeResult run_classical_exchange(const ChainSpec& spec, int bit_a, int bit_b, int mediator_bit) {
  const auto p = exchange_probabilities(spec, bit_a, bit_b, mediator_bit);
  int best = 0;
  for (int k = 1; k < 4; ++k) {
    if (p[k] > p[best]) best = k;
  }
  return {best >> 1, best & 1, p[best]};
}

std::map<std::string, int> sample_classical_exchange(const ChainSpec& spec, int bit_a, int bit_b,
                                                     int shots, std::uint64_t seed, int mediator_bit) {
  if (shots < 1) throw SpecError("shots must be positive");
  const auto p = exchange_probabilities(spec, bit_a, bit_b, mediator_bit);
  std::mt19937_64 rng(seed);
  std::discrete_distribution<int> dist(p.begin(), p.end());
  std::map<std::string, int> counts;
  for (int s = 0; s < shots; ++s) {
    const int k = dist(rng);
    ++counts[std::string{static_cast<char>('0' + (k >> 1)), static_cast<char>('0' + (k & 1))}];
  }
  return counts;
}

ProtocolResult run_ebit_generation(const ChainSpec& spec, EbitMode mode) {
  const double tau = gate_time(omega_of(spec));
  const CVector plus = ket(QubitState::plus());
  const CVector minus = ket(QubitState::minus());

  if (mode == EbitMode::PlusPlusFullTau) {
    const StateVector psi = evolve3(three_spin_unitary(spec, tau), kron(kron(plus, ket("0")), plus));
    // (|0>|-> - |1>|+>)/sqrt2 on the data spins, mediator |0>.
    const CVector target = (kron(kron(ket("0"), ket("0")), minus) - kron(kron(ket("1"), ket("0")), plus)) / kSqrt2;
    ProtocolResult r = finish(psi, target, 1, tau,
                              {{0.0, "prepare |+> on spin 0, mediator |0>, |+> on spin 2"},
                               {tau, "free evolution for tau"}});
    r.metrics["data_entropy_bits"] = single_spin_entropy(r.final_state, 0);
    r.metrics["mediator_entropy_bits"] = single_spin_entropy(r.final_state, 1);
    return r;
  }

  const double t = tau / 2.0;
  const StateVector psi = evolve3(three_spin_unitary(spec, t), ket("101"));
  const CVector target = Complex(0.0, -1.0) * (ket("011") + ket("110")) / kSqrt2;
  ProtocolResult r = finish(psi, target, 1, t,
                            {{0.0, "prepare |1> on spin 0, mediator |0>, |1> on spin 2"},
                             {t, "free evolution for tau/2"}});
  r.metrics["data_entropy_bits"] = single_spin_entropy(r.final_state, 0);
  r.metrics["mediator_entropy_bits"] = single_spin_entropy(r.final_state, 1);
  return r;
}

std::vector<ProtocolResult> run_repeated_ebit_generation(const ChainSpec& spec, int rounds) {
  if (rounds < 1) throw SpecError("rounds must be positive");
  const double t = gate_time(omega_of(spec)) / 2.0;
  const CMatrix u = three_spin_unitary(spec, t);
  const CVector bell = (ket("01") + ket("10")) / kSqrt2;

  std::vector<ProtocolResult> out;
  int sector = 0;
  double clock = 0.0;
  for (int round = 0; round < rounds; ++round) {
    const std::string data = sector == 0 ? "11" : "00";
    const CVector mediator = ket(sector == 0 ? "0" : "1");
    const CVector start = kron(kron(ket(data.substr(0, 1)), mediator), ket(data.substr(1, 1)));
    const StateVector psi = evolve3(u, start);
    clock += t;

    // Expected: -i |1 - sector>_mediator (|01> + |10>)/sqrt2 on the data spins.
    const CVector flipped = ket(sector == 0 ? "1" : "0");
    CVector target(8);
    for (int d = 0; d < 4; ++d) {
      for (int m = 0; m < 2; ++m) target(4 * (d >> 1) + 2 * m + (d & 1)) = Complex(0.0, -1.0) * bell(d) * flipped(m);
    }
    ProtocolResult r = finish(psi, target, 1, clock,
                              {{clock - t, "load |" + data + "> on the data spins, mediator |" +
                                               std::to_string(sector) + ">"},
                               {clock, "free evolution for tau/2"}});

    // Read the mediator sector and hand the data-spin state out.
    const double p1 = r.mediator_state(1, 1).real();
    const int next = p1 > 0.5 ? 1 : 0;
    CVector data_out(4);
    for (int d = 0; d < 4; ++d) data_out(d) = psi[4 * (d >> 1) + 2 * next + (d & 1)];
    const double weight = data_out.norm();
    if (weight > 0.0) data_out /= weight;
    r.metrics["mediator_sector"] = next;
    r.metrics["ebit_fidelity"] = std::norm(bell.dot(data_out));
    r.metrics["data_entropy_bits"] = single_spin_entropy(r.final_state, 0);
    r.transcript.push_back({clock, "extract data spins; mediator left in |" + std::to_string(next) + ">"});
    out.push_back(std::move(r));
    sector = next;
  }
  return out;
}

StateVector w_state() {
  return StateVector::full(3, (ket("101") + ket("011") + ket("110")) / std::sqrt(3.0));
}

double w_state_time(double omega) {
  if (!(omega != 0.0)) throw SpecError("coupling must be nonzero");
  return std::atan(kSqrt2) / (kSqrt2 * std::abs(omega));
}

ProtocolResult run_w_state(const ChainSpec& spec, std::optional<double> t) {
  const double omega = omega_of(spec);
  const double time = t.value_or(w_state_time(omega));
  StateVector psi = evolve3(three_spin_unitary(spec, time), ket("101"));
  Eigen::Matrix2cd phase_gate;
  phase_gate << 1.0, 0.0, 0.0, kI;
  psi = apply_single(psi, 1, phase_gate);
  ProtocolResult r = finish(psi, w_state().amplitudes(), 1, time,
                            {{0.0, "prepare |101>"},
                             {time, "free evolution"},
                             {time, "apply diag(1, i) on the mediator"}});
  return r;
}

ProtocolResult run_appendix_gate(const ChainSpec& spec, AppendixGate which,
                                 const QubitState& mediator_input) {
  const double tau = gate_time(omega_of(spec));
  const CMatrix u = three_spin_unitary(spec, tau);
  if (which == AppendixGate::Entangle12) {
    const CVector plus = ket(QubitState::plus());
    const StateVector psi = evolve3(u, kron(kron(ket("0"), plus), plus));
    const CVector pair = (kron(ket("0"), ket(QubitState::minus())) - kron(ket("1"), plus)) / kSqrt2;
    ProtocolResult r = finish(psi, kron(pair, ket("0")), 1, tau,
                              {{0.0, "prepare |0> on spin 0, |+> on the mediator, |+> on spin 2"},
                               {tau, "free evolution for tau"}});
    const std::array<int, 1> last{2};
    r.metrics["spin2_purity"] = purity(reduced_state(r.final_state, last));
    r.metrics["spin2_entropy_bits"] = single_spin_entropy(r.final_state, 2);
    r.metrics["pair_entropy_bits"] = single_spin_entropy(r.final_state, 0);
    return r;
  }
  const CVector m = ket(mediator_input);
  const StateVector psi = evolve3(u, kron(kron(ket("0"), m), ket("0")));
  const CVector flipped = Eigen::Vector2cd(mediator_input.alpha(), -mediator_input.beta());
  return finish(psi, kron(kron(ket("0"), flipped), ket("0")), 1, tau,
                {{0.0, "prepare |0> on spin 0, input on the mediator, |0> on spin 2"},
                 {tau, "free evolution for tau"}});
}

double NetworkSpec::collective_coupling() const {
  double s = 0.0;
  for (double w : branch_couplings) s += w * w;
  return std::sqrt(s);
}

void NetworkSpec::validate() const {
  if (branch_couplings.empty()) throw SpecError("network needs at least one branch");
  for (double w : branch_couplings) {
    if (!std::isfinite(w)) throw SpecError("branch couplings must be finite");
  }
  if (!(collective_coupling() > 0.0)) throw SpecError("collective coupling must be positive");
}

ChainSpec NetworkSpec::to_chain_spec() const {
  validate();
  return ChainSpec::parallel_chains(branch_couplings);
}

StateVector collective_excitation(const NetworkSpec& net) {
  net.validate();
  const int m = static_cast<int>(net.branch_couplings.size());
  const int n = m + 2;
  const double w = net.collective_coupling();
  CVector v = CVector::Zero(Eigen::Index{1} << n);
  for (int x = 0; x < m; ++x) {
    v(static_cast<Eigen::Index>(excitation_state_index(x + 1, n))) = net.branch_couplings[x] / w;
  }
  return StateVector::full(n, std::move(v));
}

GateReport run_network_gate(const NetworkSpec& net) {
  const ChainSpec spec = net.to_chain_spec();
  const double tau = gate_time(net.collective_coupling());
  const CMatrix u = unitary_at(build_full_hamiltonian(spec), tau);
  MediatorSector sector;
  for (int x = 1; x + 1 < spec.n_spins; ++x) {
    sector.spins.push_back(x);
    sector.bits.push_back(0);
  }
  return extract_effective_gate(u, sector);
}

}  // namespace spinchain
