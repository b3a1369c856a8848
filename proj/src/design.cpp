#include "spinchain/design.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "spinchain/evolve.hpp"
#include "spinchain/optimize.hpp"

namespace spinchain {

namespace {

std::vector<double> mirrored(const std::vector<double>& left, std::optional<double> middle) {
  std::vector<double> out = left;
  if (middle) out.push_back(*middle);
  out.insert(out.end(), left.rbegin(), left.rend());
  return out;
}

TransferAmplitude half_chain_propagator(const CouplingDesign& design) {
  const ChainSpec spec = design.to_chain_spec();
  const HermitianMatrix h = build_half_chain_hamiltonian(spec, parity_of(design.n_spins));
  return TransferAmplitude(h, 0, design.half_length - 1);
}

double max_coupling(const std::vector<double>& couplings) {
  double m = 0.0;
  for (double w : couplings) m = std::max(m, std::abs(w));
  return m;
}

}  // namespace

ChainSpec CouplingDesign::to_chain_spec() const {
  ChainSpec spec;
  spec.n_spins = n_spins;
  spec.couplings = couplings;
  spec.fields = compensation_fields;
  spec.validate();
  return spec;
}

CouplingDesign design_half_time_entanglement(int n_spins, double lambda_design) {
  if (n_spins < 3) throw SpecError("design needs N >= 3, got " + std::to_string(n_spins));
  if (!(lambda_design > 0.0) || !std::isfinite(lambda_design)) {
    throw SpecError("design constant lambda must be positive");
  }
  CouplingDesign d;
  d.n_spins = n_spins;
  d.half_length = half_length(n_spins);
  d.lambda_design = lambda_design;
  d.predicted_time = std::numbers::pi / lambda_design;
  d.compensation_fields.assign(n_spins, 0.0);

  const int n = d.half_length;
  std::vector<double> left(n - 1);
  for (int j = 1; j < n; ++j) left[j - 1] = 0.5 * lambda_design * std::sqrt(double(j) * (n - j));

  if (n_spins % 2) {
    d.scheme = DesignScheme::Generation;
    left.back() /= std::numbers::sqrt2;
    d.couplings = mirrored(left, std::nullopt);
  } else {
    d.scheme = DesignScheme::Sharing;
    const double middle = 0.5 * lambda_design;
    d.couplings = mirrored(left, middle);
    d.compensation_fields[n - 1] = 0.5 * middle;
    d.compensation_fields[n] = 0.5 * middle;
  }
  d.resource_cost = max_coupling(d.couplings) * d.predicted_time;
  return d;
}

CouplingDesign homogeneous_design(int n_spins, double omega) {
  if (n_spins < 3) throw SpecError("design needs N >= 3, got " + std::to_string(n_spins));
  if (!(omega > 0.0) || !std::isfinite(omega)) throw SpecError("coupling must be positive");
  CouplingDesign d;
  d.n_spins = n_spins;
  d.half_length = half_length(n_spins);
  d.couplings.assign(n_spins - 1, omega);
  d.compensation_fields.assign(n_spins, 0.0);
  d.scheme = n_spins % 2 ? DesignScheme::Generation : DesignScheme::Sharing;
  if (n_spins % 2 == 0) {
    d.compensation_fields[d.half_length - 1] = 0.5 * omega;
    d.compensation_fields[d.half_length] = 0.5 * omega;
  }

  // First local maximum of the half-chain amplitude.
  const TransferAmplitude amp = half_chain_propagator(d);
  auto f = [&](double t) { return amp.magnitude(t); };
  const double dt = 0.01 / omega;
  const double horizon = 200.0 / omega;
  double prev = f(0.0);
  double cur = f(dt);
  double t = dt;
  while (!(cur >= prev && f(t + dt) < cur)) {
    prev = cur;
    t += dt;
    cur = f(t);
    if (t > horizon) throw NumericalError("no amplitude peak found for the homogeneous chain");
  }
  const auto peak = golden_section_maximize(f, t - dt, t + dt, 1e-12);
  d.predicted_time = peak.t;
  d.lambda_design = std::numbers::pi / d.predicted_time;
  d.resource_cost = omega * d.predicted_time;
  return d;
}

double half_chain_amplitude(const CouplingDesign& design, double t) {
  return half_chain_propagator(design).magnitude(t);
}

DesignVerification verify_design(const CouplingDesign& design) {
  if (design.n_spins < 3 || !(design.predicted_time > 0.0)) throw SpecError("invalid design");
  DesignVerification out;
  out.amplitude = half_chain_amplitude(design, design.predicted_time);

  if (design.n_spins <= kMaxFullSpaceVerification) {
    const ChainSpec spec = design.to_chain_spec();
    const int n = spec.n_spins;
    const HalfChainBasis basis = half_chain_basis(n);
    const SectorPropagator prop(build_full_hamiltonian(spec), n, std::vector<int>{1});
    const StateVector start = StateVector::full(n, basis.in_full_space(basis.n - 1));
    const StateVector target = StateVector::full(n, basis.in_full_space(0));
    const StateVector psi = prop.propagate(design.predicted_time, start);
    out.full_space_fidelity = target.fidelity(psi);
    double worst = 1.0;
    for (int s = 1; s + 1 < n; ++s) {
      const std::array<int, 1> keep{s};
      worst = std::min(worst, purity(reduced_state(psi, keep)));
    }
    out.interior_min_purity = worst;
  }
  return out;
}

ResourceComparison resource_comparison(int n_spins, double lambda_design) {
  if (n_spins < 3 || n_spins % 2 == 0) throw SpecError("resource comparison needs odd N >= 3");
  const CouplingDesign entangle = design_half_time_entanglement(n_spins, lambda_design);
  double transfer_max = 0.0;
  for (int j = 1; j < n_spins; ++j) {
    transfer_max = std::max(transfer_max, 0.5 * lambda_design * std::sqrt(double(j) * (n_spins - j)));
  }
  const double transfer_cost = transfer_max * std::numbers::pi / lambda_design;
  return {entangle.resource_cost, transfer_cost, entangle.resource_cost / transfer_cost};
}

}  // namespace spinchain
