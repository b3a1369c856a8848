#include "spinchain/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace spinchain {

namespace {

constexpr double kNormTolerance = 1e-12;

Eigen::Index expected_dim(BasisKind basis, int n_spins) {
  switch (basis) {
    case BasisKind::Full:
      return Eigen::Index{1} << n_spins;
    case BasisKind::Excitation:
      return n_spins;
    case BasisKind::HalfChain:
      return half_length(n_spins);
  }
  return 0;
}

CVector phases(const RVector& energies, double t) {
  CVector p(energies.size());
  for (Eigen::Index m = 0; m < energies.size(); ++m) p(m) = std::exp(Complex(0.0, -energies(m) * t));
  return p;
}

}  // namespace

StateVector::StateVector(BasisKind basis, int n_spins, CVector amplitudes)
    : basis_(basis), n_spins_(n_spins), amplitudes_(std::move(amplitudes)) {
  if (n_spins < 1 || (basis == BasisKind::Full && n_spins > 30)) {
    throw SpecError("unsupported spin count " + std::to_string(n_spins));
  }
  if (amplitudes_.size() != expected_dim(basis, n_spins)) {
    throw SpecError("state dimension " + std::to_string(amplitudes_.size()) +
                    " does not match its basis");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > kNormTolerance) {
    throw SpecError("state is not normalized (norm " + std::to_string(amplitudes_.norm()) + ")");
  }
}

StateVector StateVector::full(int n_spins, CVector amplitudes) {
  return {BasisKind::Full, n_spins, std::move(amplitudes)};
}

StateVector StateVector::excitation(int n_spins, CVector amplitudes) {
  return {BasisKind::Excitation, n_spins, std::move(amplitudes)};
}

StateVector StateVector::half_chain(int n_spins, CVector amplitudes) {
  return {BasisKind::HalfChain, n_spins, std::move(amplitudes)};
}

StateVector StateVector::basis_state(std::string_view bits) {
  const auto n = static_cast<int>(bits.size());
  const std::uint64_t index = basis_index(bits);
  if (n > 30) throw SpecError("bit string too long for a full-space state");
  CVector v = CVector::Zero(Eigen::Index{1} << n);
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return full(n, std::move(v));
}

StateVector StateVector::product(std::span<const Eigen::Vector2cd> spins) {
  if (spins.empty()) throw SpecError("product state needs at least one spin");
  CVector v = CVector::Ones(1);
  for (const auto& s : spins) {
    CVector next(v.size() * 2);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      next(2 * i) = v(i) * s(0);
      next(2 * i + 1) = v(i) * s(1);
    }
    v = std::move(next);
  }
  return full(static_cast<int>(spins.size()), std::move(v));
}

Complex StateVector::inner(const StateVector& other) const {
  if (basis_ != other.basis_ || dim() != other.dim()) {
    throw SpecError("inner product between states in different bases");
  }
  return amplitudes_.dot(other.amplitudes_);
}

double StateVector::fidelity(const StateVector& other) const { return std::norm(inner(other)); }

Spectrum eigendecompose(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) throw NumericalError("eigendecomposition did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Spectrum eigendecompose(const CMatrix& h) { return eigendecompose(HermitianMatrix(h)); }

StateVector propagate(const Spectrum& spectrum, double t, const StateVector& psi) {
  if (psi.dim() != spectrum.dim()) {
    throw SpecError("state dimension " + std::to_string(psi.dim()) +
                    " does not match Hamiltonian dimension " + std::to_string(spectrum.dim()));
  }
  const CVector coeffs = spectrum.vectors.adjoint() * psi.amplitudes();
  CVector out = spectrum.vectors * phases(spectrum.energies, t).cwiseProduct(coeffs);
  switch (psi.basis()) {
    case BasisKind::Full:
      return StateVector::full(psi.n_spins(), std::move(out));
    case BasisKind::Excitation:
      return StateVector::excitation(psi.n_spins(), std::move(out));
    case BasisKind::HalfChain:
      return StateVector::half_chain(psi.n_spins(), std::move(out));
  }
  throw SpecError("unknown basis");
}

StateVector propagate(const HermitianMatrix& h, double t, const StateVector& psi) {
  if (psi.dim() != h.dim()) {
    throw SpecError("state dimension " + std::to_string(psi.dim()) +
                    " does not match Hamiltonian dimension " + std::to_string(h.dim()));
  }
  return propagate(eigendecompose(h), t, psi);
}

CMatrix unitary_at(const Spectrum& spectrum, double t) {
  return spectrum.vectors * phases(spectrum.energies, t).asDiagonal() * spectrum.vectors.adjoint();
}

CMatrix unitary_at(const HermitianMatrix& h, double t) { return unitary_at(eigendecompose(h), t); }

double magnetization_commutator_norm(const HermitianMatrix& full_h, int n_spins) {
  if (full_h.dim() != (Eigen::Index{1} << n_spins)) {
    throw SpecError("Hamiltonian is not a full-space operator on " + std::to_string(n_spins) +
                    " spins");
  }
  const CMatrix& h = full_h.matrix();
  double worst = 0.0;
  for (Eigen::Index c = 0; c < h.cols(); ++c) {
    const int mc = excitation_count(static_cast<std::uint64_t>(c));
    for (Eigen::Index r = 0; r < h.rows(); ++r) {
      const int mr = excitation_count(static_cast<std::uint64_t>(r));
      if (mr != mc) worst = std::max(worst, 2.0 * std::abs(mc - mr) * std::abs(h(r, c)));
    }
  }
  return worst;
}

SectorPropagator::SectorPropagator(const HermitianMatrix& full_h, int n_spins,
                                   std::optional<std::vector<int>> sectors)
    : n_spins_(n_spins) {
  if (magnetization_commutator_norm(full_h, n_spins) > 1e-12) {
    throw NumericalError("Hamiltonian does not conserve the excitation number");
  }
  std::vector<int> wanted;
  if (sectors) {
    wanted = *sectors;
  } else {
    for (int k = 0; k <= n_spins; ++k) wanted.push_back(k);
  }
  const Eigen::Index dim = full_h.dim();
  for (int k : wanted) {
    if (k < 0 || k > n_spins) throw SpecError("excitation sector out of range");
    if (blocks_.count(k)) continue;
    Block block;
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (excitation_count(static_cast<std::uint64_t>(i)) == k) block.indices.push_back(i);
    }
    const auto bd = static_cast<Eigen::Index>(block.indices.size());
    CMatrix sub(bd, bd);
    for (Eigen::Index c = 0; c < bd; ++c) {
      for (Eigen::Index r = 0; r < bd; ++r) sub(r, c) = full_h.matrix()(block.indices[r], block.indices[c]);
    }
    block.spectrum = eigendecompose(HermitianMatrix(std::move(sub)));
    blocks_.emplace(k, std::move(block));
  }
}

StateVector SectorPropagator::propagate(double t, const StateVector& psi) const {
  if (psi.basis() != BasisKind::Full || psi.n_spins() != n_spins_) {
    throw SpecError("sector propagation needs a full-space state on " + std::to_string(n_spins_) +
                    " spins");
  }
  CVector out = CVector::Zero(psi.dim());
  for (Eigen::Index i = 0; i < psi.dim(); ++i) {
    if (psi[i] == Complex{}) continue;
    if (!blocks_.count(excitation_count(static_cast<std::uint64_t>(i)))) {
      throw SpecError("state has weight in an excitation sector that was not prepared");
    }
  }
  for (const auto& [k, block] : blocks_) {
    const auto bd = static_cast<Eigen::Index>(block.indices.size());
    CVector sub(bd);
    for (Eigen::Index r = 0; r < bd; ++r) sub(r) = psi[block.indices[r]];
    if (sub.squaredNorm() == 0.0) continue;
    const CVector coeffs = block.spectrum.vectors.adjoint() * sub;
    const CVector evolved =
        block.spectrum.vectors * phases(block.spectrum.energies, t).cwiseProduct(coeffs);
    for (Eigen::Index r = 0; r < bd; ++r) out(block.indices[r]) = evolved(r);
  }
  return StateVector::full(n_spins_, std::move(out));
}

CMatrix SectorPropagator::unitary_at(double t) const {
  if (static_cast<int>(blocks_.size()) != n_spins_ + 1) {
    throw SpecError("full unitary needs every excitation sector");
  }
  const Eigen::Index dim = Eigen::Index{1} << n_spins_;
  CMatrix u = CMatrix::Zero(dim, dim);
  for (const auto& [k, block] : blocks_) {
    const CMatrix ub = spinchain::unitary_at(block.spectrum, t);
    const auto bd = static_cast<Eigen::Index>(block.indices.size());
    for (Eigen::Index c = 0; c < bd; ++c) {
      for (Eigen::Index r = 0; r < bd; ++r) u(block.indices[r], block.indices[c]) = ub(r, c);
    }
  }
  return u;
}

CMatrix reduced_state(const StateVector& psi, std::span<const int> keep) {
  if (psi.basis() != BasisKind::Full) throw SpecError("reduced_state needs a full-basis state");
  const int n = psi.n_spins();
  std::vector<int> kept(keep.begin(), keep.end());
  if (kept.empty()) throw SpecError("reduced_state needs at least one kept spin");
  if (!std::is_sorted(kept.begin(), kept.end()) ||
      std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw SpecError("kept spins must be sorted and distinct");
  }
  if (kept.front() < 0 || kept.back() >= n) throw SpecError("kept spin out of range");

  std::vector<int> traced;
  for (int s = 0; s < n; ++s) {
    if (!std::binary_search(kept.begin(), kept.end(), s)) traced.push_back(s);
  }
  const Eigen::Index dk = Eigen::Index{1} << kept.size();
  const Eigen::Index de = Eigen::Index{1} << traced.size();
  CMatrix m = CMatrix::Zero(dk, de);
  for (Eigen::Index i = 0; i < psi.dim(); ++i) {
    const auto idx = static_cast<std::uint64_t>(i);
    Eigen::Index k = 0;
    Eigen::Index e = 0;
    for (int s : kept) k = (k << 1) | spin_bit(idx, s, n);
    for (int s : traced) e = (e << 1) | spin_bit(idx, s, n);
    m(k, e) = psi[i];
  }
  return m * m.adjoint();
}

double purity(const CMatrix& rho) { return (rho * rho).trace().real(); }

double entanglement_entropy(const CMatrix& rho) {
  if (rho.rows() != rho.cols()) throw SpecError("density matrix must be square");
  const CMatrix sym = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double p = solver.eigenvalues()(i);
    if (p > 1e-14) s -= p * std::log2(p);
  }
  return s;
}

TransferAmplitude::TransferAmplitude(const ChainSpec& spec)
    : TransferAmplitude(build_excitation_hamiltonian(spec), 0, spec.n_spins - 1) {}

TransferAmplitude::TransferAmplitude(const HermitianMatrix& h, Eigen::Index to, Eigen::Index from) {
  if (to < 0 || from < 0 || to >= h.dim() || from >= h.dim()) {
    throw SpecError("transfer endpoints out of range");
  }
  const Spectrum spectrum = eigendecompose(h);
  energies_ = spectrum.energies;
  weights_.resize(energies_.size());
  for (Eigen::Index m = 0; m < energies_.size(); ++m) {
    weights_(m) = spectrum.vectors(to, m) * std::conj(spectrum.vectors(from, m));
  }
}

Complex TransferAmplitude::amplitude(double t) const {
  Complex sum{};
  for (Eigen::Index m = 0; m < energies_.size(); ++m) {
    sum += weights_(m) * std::exp(Complex(0.0, -energies_(m) * t));
  }
  return sum;
}

double transfer_amplitude(const ChainSpec& spec, double t) {
  if (spec.topology != Topology::Linear) throw SpecError("transfer amplitude needs a linear chain");
  return std::min(1.0, TransferAmplitude(spec).magnitude(t));
}

double average_fidelity(double f) {
  if (!(f >= -1e-12 && f <= 1.0 + 1e-12)) {
    throw SpecError("transfer amplitude must lie in [0, 1], got " + std::to_string(f));
  }
  f = std::clamp(f, 0.0, 1.0);
  return f / 3.0 + f * f / 6.0 + 0.5;
}

}  // namespace spinchain
