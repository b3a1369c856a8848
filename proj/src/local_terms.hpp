#pragma once

#include <vector>

#include "spinchain/chain_model.hpp"

namespace spinchain::detail {

/// One- or two-site operator of a Hamiltonian. For two sites the first
/// listed site is the more significant factor of the 4x4 matrix.
struct LocalTerm {
  std::vector<int> sites;
  CMatrix op;
};

std::vector<LocalTerm> local_terms(const ChainSpec& spec);

}  // namespace spinchain::detail
