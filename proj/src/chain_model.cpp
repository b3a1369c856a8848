#include "spinchain/chain_model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <string>

#include "local_terms.hpp"

namespace spinchain {

ChainSpec ChainSpec::homogeneous(int n_spins, double omega, Model model) {
  ChainSpec spec;
  spec.n_spins = n_spins;
  spec.model = model;
  spec.couplings.assign(n_spins > 1 ? n_spins - 1 : 0, omega);
  spec.fields.assign(n_spins > 0 ? n_spins : 0, 0.0);
  spec.validate();
  return spec;
}

ChainSpec ChainSpec::three_spin(double omega, double omega23) {
  ChainSpec spec = homogeneous(3, omega);
  spec.couplings[1] = omega23;
  return spec;
}

ChainSpec ChainSpec::parallel_chains(std::vector<double> branch_couplings) {
  ChainSpec spec;
  spec.topology = Topology::ParallelChains;
  spec.n_spins = static_cast<int>(branch_couplings.size()) + 2;
  spec.couplings = std::move(branch_couplings);
  spec.fields.assign(spec.n_spins, 0.0);
  spec.validate();
  return spec;
}

void ChainSpec::validate() const {
  if (n_spins < 2) throw SpecError("chain needs at least 2 spins, got " + std::to_string(n_spins));
  if (fields.size() != static_cast<size_t>(n_spins)) {
    throw SpecError("expected " + std::to_string(n_spins) + " fields, got " +
                    std::to_string(fields.size()));
  }
  if (topology == Topology::Linear) {
    if (couplings.size() != static_cast<size_t>(n_spins - 1)) {
      throw SpecError("linear chain of " + std::to_string(n_spins) + " spins needs " +
                      std::to_string(n_spins - 1) + " couplings, got " +
                      std::to_string(couplings.size()));
    }
  } else {
    if (couplings.empty()) throw SpecError("parallel_chains needs at least one branch");
    if (couplings.size() + 2 != static_cast<size_t>(n_spins)) {
      throw SpecError("parallel_chains with " + std::to_string(couplings.size()) +
                      " branches has " + std::to_string(couplings.size() + 2) + " spins, not " +
                      std::to_string(n_spins));
    }
  }
  auto finite = [](double v) { return std::isfinite(v); };
  if (!std::all_of(couplings.begin(), couplings.end(), finite)) {
    throw SpecError("couplings must be finite");
  }
  if (!std::all_of(fields.begin(), fields.end(), finite)) {
    throw SpecError("fields must be finite");
  }
}

std::vector<Bond> ChainSpec::bonds() const {
  std::vector<Bond> out;
  if (topology == Topology::Linear) {
    for (int j = 0; j + 1 < n_spins; ++j) out.push_back({j, j + 1, couplings[j]});
  } else {
    const int last = n_spins - 1;
    for (size_t x = 0; x < couplings.size(); ++x) {
      const int mediator = static_cast<int>(x) + 1;
      out.push_back({0, mediator, couplings[x]});
      out.push_back({mediator, last, couplings[x]});
    }
  }
  return out;
}

bool ChainSpec::is_mirror_symmetric(double tol) const {
  if (topology != Topology::Linear) return false;
  const int nb = n_spins - 1;
  for (int j = 0; j < nb; ++j) {
    if (std::abs(couplings[j] - couplings[nb - 1 - j]) > tol) return false;
  }
  for (int j = 0; j < n_spins; ++j) {
    if (std::abs(fields[j] - fields[n_spins - 1 - j]) > tol) return false;
  }
  return true;
}

HermitianMatrix::HermitianMatrix(CMatrix m, double tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw SpecError("Hermitian matrix must be square");
  const Eigen::Index d = m_.rows();
  for (Eigen::Index c = 0; c < d; ++c) {
    for (Eigen::Index r = 0; r <= c; ++r) {
      if (std::abs(m_(r, c) - std::conj(m_(c, r))) > tol) {
        throw SpecError("matrix is not Hermitian at (" + std::to_string(r) + "," +
                        std::to_string(c) + ")");
      }
    }
  }
}

std::uint64_t basis_index(std::string_view bits) {
  if (bits.empty() || bits.size() > 63) throw SpecError("bit string length must be in [1, 63]");
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw SpecError("bit string may only contain 0 and 1");
    index = (index << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return index;
}

int excitation_count(std::uint64_t index) { return std::popcount(index); }

int spin_bit(std::uint64_t index, int spin, int n_spins) {
  return static_cast<int>((index >> (n_spins - 1 - spin)) & 1u);
}

std::uint64_t excitation_state_index(int site, int n_spins) {
  return std::uint64_t{1} << (n_spins - 1 - site);
}

HermitianMatrix build_full_hamiltonian(const ChainSpec& spec, int max_spins) {
  spec.validate();
  if (spec.n_spins > max_spins) {
    throw SpecError("full-space Hamiltonian limited to " + std::to_string(max_spins) +
                    " spins; use the excitation subspace for N = " +
                    std::to_string(spec.n_spins));
  }
  const int n = spec.n_spins;
  const std::uint64_t dim = std::uint64_t{1} << n;
  CMatrix h = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));

  for (const auto& term : detail::local_terms(spec)) {
    const int arity = static_cast<int>(term.sites.size());
    const int local_dim = 1 << arity;
    for (std::uint64_t idx = 0; idx < dim; ++idx) {
      int in = 0;
      std::uint64_t cleared = idx;
      for (int s : term.sites) {
        in = (in << 1) | spin_bit(idx, s, n);
        cleared &= ~excitation_state_index(s, n);
      }
      for (int out = 0; out < local_dim; ++out) {
        const Complex amp = term.op(out, in);
        if (amp == Complex{}) continue;
        std::uint64_t target = cleared;
        for (int k = 0; k < arity; ++k) {
          if ((out >> (arity - 1 - k)) & 1) target |= excitation_state_index(term.sites[k], n);
        }
        h(static_cast<Eigen::Index>(target), static_cast<Eigen::Index>(idx)) += amp;
      }
    }
  }
  return HermitianMatrix(std::move(h));
}

HermitianMatrix build_sector_hamiltonian(const ChainSpec& spec,
                                         const std::vector<std::vector<int>>& configurations) {
  spec.validate();
  std::map<std::vector<int>, Eigen::Index> lookup;
  for (size_t i = 0; i < configurations.size(); ++i) {
    auto c = configurations[i];
    if (!std::is_sorted(c.begin(), c.end())) throw SpecError("configurations must be sorted");
    for (int s : c) {
      if (s < 0 || s >= spec.n_spins) throw SpecError("configuration site out of range");
    }
    lookup.emplace(std::move(c), static_cast<Eigen::Index>(i));
  }
  const auto d = static_cast<Eigen::Index>(configurations.size());
  CMatrix h = CMatrix::Zero(d, d);

  const auto terms = detail::local_terms(spec);
  for (Eigen::Index ci = 0; ci < d; ++ci) {
    const auto& config = configurations[static_cast<size_t>(ci)];
    auto excited = [&](int site) { return std::binary_search(config.begin(), config.end(), site); };
    for (const auto& term : terms) {
      const int arity = static_cast<int>(term.sites.size());
      int in = 0;
      for (int s : term.sites) in = (in << 1) | (excited(s) ? 1 : 0);
      for (int out = 0; out < (1 << arity); ++out) {
        const Complex amp = term.op(out, in);
        if (amp == Complex{}) continue;
        std::vector<int> target;
        for (int s : config) {
          if (std::find(term.sites.begin(), term.sites.end(), s) == term.sites.end()) {
            target.push_back(s);
          }
        }
        for (int k = 0; k < arity; ++k) {
          if ((out >> (arity - 1 - k)) & 1) target.push_back(term.sites[k]);
        }
        std::sort(target.begin(), target.end());
        auto it = lookup.find(target);
        if (it != lookup.end()) h(it->second, ci) += amp;
      }
    }
  }
  return HermitianMatrix(std::move(h));
}

HermitianMatrix build_excitation_hamiltonian(const ChainSpec& spec) {
  spec.validate();
  if (spec.topology != Topology::Linear) {
    throw SpecError("excitation Hamiltonian is defined for linear chains");
  }
  std::vector<std::vector<int>> configs;
  configs.reserve(spec.n_spins);
  for (int j = 0; j < spec.n_spins; ++j) configs.push_back({j});
  return build_sector_hamiltonian(spec, configs);
}

int half_length(int n_spins) { return n_spins % 2 ? (n_spins + 1) / 2 : n_spins / 2; }

Parity parity_of(int n_spins) { return n_spins % 2 ? Parity::Odd : Parity::Even; }

HalfChainBasis half_chain_basis(int n_spins) {
  if (n_spins < 2) throw SpecError("half-chain basis needs at least 2 spins");
  HalfChainBasis basis{parity_of(n_spins), n_spins, half_length(n_spins), {}};
  basis.vectors = CMatrix::Zero(n_spins, basis.n);
  const double r = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < basis.n; ++j) {
    const int mirror = n_spins - 1 - j;
    if (mirror == j) {
      basis.vectors(j, j) = 1.0;
    } else {
      basis.vectors(j, j) = r;
      basis.vectors(mirror, j) = r;
    }
  }
  return basis;
}

CVector HalfChainBasis::in_full_space(int j) const {
  if (j < 0 || j >= n) throw SpecError("half-chain label out of range");
  CVector v = CVector::Zero(Eigen::Index{1} << n_spins);
  for (int site = 0; site < n_spins; ++site) {
    if (vectors(site, j) != Complex{}) {
      v(static_cast<Eigen::Index>(excitation_state_index(site, n_spins))) = vectors(site, j);
    }
  }
  return v;
}

HermitianMatrix build_half_chain_hamiltonian(const ChainSpec& spec, Parity parity) {
  spec.validate();
  if (spec.topology != Topology::Linear || spec.model != Model::XY) {
    throw SpecError("half-chain Hamiltonian is defined for linear XY chains");
  }
  if (parity_of(spec.n_spins) != parity) {
    throw SpecError("parity does not match chain length " + std::to_string(spec.n_spins));
  }
  if (!spec.is_mirror_symmetric()) {
    throw SpecError("half-chain basis needs mirror-symmetric couplings and fields");
  }
  const int n = half_length(spec.n_spins);
  CMatrix h = CMatrix::Zero(n, n);
  for (int j = 0; j + 1 < n; ++j) {
    double w = spec.couplings[j];
    if (parity == Parity::Odd && j == n - 2) w *= std::sqrt(2.0);
    h(j, j + 1) = w;
    h(j + 1, j) = w;
  }
  if (parity == Parity::Even) h(n - 1, n - 1) += spec.couplings[n - 1];

  // -B_k sz_k on an excitation at site s gives sum_k B_k - 2 B_s.
  double field_sum = 0.0;
  for (double b : spec.fields) field_sum += b;
  for (int j = 0; j < n; ++j) h(j, j) += field_sum - 2.0 * spec.fields[j];
  return HermitianMatrix(std::move(h));
}

}  // namespace spinchain
