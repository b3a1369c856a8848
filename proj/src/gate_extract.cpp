#include "spinchain/gate_extract.hpp"

#include <algorithm>
#include <string>

#include <Eigen/SVD>

#include "spinchain/chain_model.hpp"

namespace spinchain {

namespace {

int spins_of(const CMatrix& u) {
  if (u.rows() != u.cols() || u.rows() < 2) throw SpecError("operator must be square");
  int n = 0;
  while ((Eigen::Index{1} << n) < u.rows()) ++n;
  if ((Eigen::Index{1} << n) != u.rows()) throw SpecError("operator dimension is not a power of 2");
  return n;
}

void check_sector(const MediatorSector& sector, int n) {
  if (sector.spins.size() != sector.bits.size()) {
    throw SpecError("mediator spins and bits differ in length");
  }
  if (!std::is_sorted(sector.spins.begin(), sector.spins.end()) ||
      std::adjacent_find(sector.spins.begin(), sector.spins.end()) != sector.spins.end()) {
    throw SpecError("mediator spins must be sorted and distinct");
  }
  for (size_t i = 0; i < sector.spins.size(); ++i) {
    if (sector.spins[i] < 0 || sector.spins[i] >= n) throw SpecError("mediator spin out of range");
    if (sector.bits[i] != 0 && sector.bits[i] != 1) throw SpecError("mediator bits must be 0 or 1");
  }
}

bool in_sector(std::uint64_t idx, const MediatorSector& sector, int n) {
  for (size_t i = 0; i < sector.spins.size(); ++i) {
    if (spin_bit(idx, sector.spins[i], n) != sector.bits[i]) return false;
  }
  return true;
}

double operator_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

}  // namespace

double check_invariant_subspace(const CMatrix& u, const MediatorSector& sector) {
  const int n = spins_of(u);
  check_sector(sector, n);
  std::vector<Eigen::Index> inside;
  std::vector<Eigen::Index> outside;
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    (in_sector(static_cast<std::uint64_t>(i), sector, n) ? inside : outside).push_back(i);
  }
  const auto ni = static_cast<Eigen::Index>(inside.size());
  const auto no = static_cast<Eigen::Index>(outside.size());
  CMatrix out_from_in(no, ni);
  CMatrix in_from_out(ni, no);
  for (Eigen::Index r = 0; r < no; ++r) {
    for (Eigen::Index c = 0; c < ni; ++c) {
      out_from_in(r, c) = u(outside[r], inside[c]);
      in_from_out(c, r) = u(inside[c], outside[r]);
    }
  }
  return std::max(operator_norm(out_from_in), operator_norm(in_from_out));
}

GateReport extract_effective_gate(const CMatrix& u, const MediatorSector& sector, double threshold) {
  const int n = spins_of(u);
  check_sector(sector, n);
  std::vector<int> data;
  for (int s = 0; s < n; ++s) {
    if (!std::binary_search(sector.spins.begin(), sector.spins.end(), s)) data.push_back(s);
  }
  if (data.size() != 2) {
    throw SpecError("effective gate needs exactly two data spins, got " + std::to_string(data.size()));
  }

  GateReport report;
  report.mediator_sector = sector;
  report.leakage = check_invariant_subspace(u, sector);
  if (!(report.leakage < threshold)) throw LeakageTooLarge(report.leakage, threshold);

  std::array<Eigen::Index, 4> index{};
  for (int d = 0; d < 4; ++d) {
    std::uint64_t idx = 0;
    for (size_t i = 0; i < sector.spins.size(); ++i) {
      if (sector.bits[i]) idx |= excitation_state_index(sector.spins[i], n);
    }
    if (d & 2) idx |= excitation_state_index(data[0], n);
    if (d & 1) idx |= excitation_state_index(data[1], n);
    index[d] = static_cast<Eigen::Index>(idx);
  }
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) report.effective_gate(r, c) = u(index[r], index[c]);
  }
  const GateComparison cmp = compare_gates(report.effective_gate, swap_joint_phase_gate());
  report.decomposition_residual = cmp.residual;
  report.global_phase = cmp.phase;
  return report;
}

GateComparison compare_gates(const Gate2& a, const Gate2& b) {
  const Complex overlap = (b.adjoint() * a).trace();
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
  return {(a - phase * b).norm(), phase};
}

Gate2 swap_gate() {
  Gate2 g = Gate2::Zero();
  g(0, 0) = 1.0;
  g(1, 2) = 1.0;
  g(2, 1) = 1.0;
  g(3, 3) = 1.0;
  return g;
}

Gate2 joint_phase_gate() {
  Gate2 g = Gate2::Zero();
  g.diagonal() << 1.0, -1.0, -1.0, -1.0;
  return g;
}

Gate2 swap_joint_phase_gate() { return swap_gate() * joint_phase_gate(); }

std::array<int, 8> display_basis_order() { return {0b000, 0b001, 0b100, 0b101, 0b010, 0b011, 0b110, 0b111}; }

CMatrix to_display_order(const CMatrix& u3) {
  if (u3.rows() != 8 || u3.cols() != 8) throw SpecError("display order is defined for three spins");
  const auto order = display_basis_order();
  CMatrix out(8, 8);
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) out(r, c) = u3(order[r], order[c]);
  }
  return out;
}

}  // namespace spinchain
