#include "local_terms.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include "spinchain/pauli.hpp"

namespace spinchain::detail {

namespace {

CMatrix kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

}  // namespace

std::vector<LocalTerm> local_terms(const ChainSpec& spec) {
  using namespace pauli;
  std::vector<LocalTerm> terms;
  const CMatrix exchange_xy = kron(sigma_x(), sigma_x()) + kron(sigma_y(), sigma_y());
  const CMatrix exchange_zz = kron(sigma_z(), sigma_z());

  for (const Bond& bond : spec.bonds()) {
    if (bond.coupling == 0.0) continue;
    CMatrix op = spec.model == Model::XY
                     ? CMatrix(0.5 * bond.coupling * exchange_xy)
                     : CMatrix(-0.5 * bond.coupling * (exchange_xy + exchange_zz));
    terms.push_back({{bond.a, bond.b}, std::move(op)});
  }
  for (int j = 0; j < spec.n_spins; ++j) {
    if (spec.fields[j] == 0.0) continue;
    terms.push_back({{j}, CMatrix(-spec.fields[j] * sigma_z())});
  }
  return terms;
}

}  // namespace spinchain::detail
