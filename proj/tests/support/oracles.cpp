#include "oracles.hpp"

#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <unsupported/Eigen/KroneckerProduct>

namespace oracle {

namespace {

using spinchain::Complex;

CMatrix embed(const std::vector<CMatrix>& factors) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (const auto& f : factors) {
    CMatrix next = Eigen::kroneckerProduct(out, f).eval();
    out = std::move(next);
  }
  return out;
}

CMatrix pauli(char which) {
  CMatrix m = CMatrix::Zero(2, 2);
  const Complex i(0.0, 1.0);
  switch (which) {
    case 'x':
      m(0, 1) = m(1, 0) = 1.0;
      break;
    case 'y':
      m(0, 1) = i;
      m(1, 0) = -i;
      break;
    case 'z':
      m(0, 0) = -1.0;
      m(1, 1) = 1.0;
      break;
    default:
      m = CMatrix::Identity(2, 2);
  }
  return m;
}

CMatrix two_site(int n, int a, int b, char which) {
  std::vector<CMatrix> f(n, pauli('1'));
  f[a] = pauli(which);
  f[b] = pauli(which);
  return embed(f);
}

}  // namespace

CMatrix kron_hamiltonian(const ChainSpec& spec) {
  const int n = spec.n_spins;
  const Eigen::Index dim = Eigen::Index{1} << n;
  CMatrix h = CMatrix::Zero(dim, dim);
  for (const auto& bond : spec.bonds()) {
    const CMatrix xy = two_site(n, bond.a, bond.b, 'x') + two_site(n, bond.a, bond.b, 'y');
    if (spec.model == spinchain::Model::XY) {
      h += 0.5 * bond.coupling * xy;
    } else {
      h -= 0.5 * bond.coupling * (xy + two_site(n, bond.a, bond.b, 'z'));
    }
  }
  for (int j = 0; j < n; ++j) {
    std::vector<CMatrix> f(n, pauli('1'));
    f[j] = pauli('z');
    h -= spec.fields[j] * embed(f);
  }
  return h;
}

CMatrix taylor_expm(const CMatrix& h, double t) {
  const double norm = h.cwiseAbs().rowwise().sum().maxCoeff() * std::abs(t);
  int squarings = 0;
  while (norm / std::ldexp(1.0, squarings) > 0.25) ++squarings;
  const CMatrix a = Complex(0.0, -t / std::ldexp(1.0, squarings)) * h;
  CMatrix term = CMatrix::Identity(h.rows(), h.cols());
  CMatrix sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = (term * a / double(k)).eval();
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = (sum * sum).eval();
  return sum;
}

double bessel_series(int n, double x) {
  using Big = boost::multiprecision::cpp_bin_float_50;
  const Big half = Big(x) / 2;
  const Big q = -half * half;
  Big term = 1;
  for (int k = 1; k <= n; ++k) term *= half / k;
  Big sum = term;
  for (int k = 1; k < 400; ++k) {
    term *= q / (Big(k) * Big(k + n));
    sum += term;
    if (abs(term) < Big("1e-45") * abs(sum) && k > 2 * static_cast<int>(std::abs(x))) break;
  }
  return static_cast<double>(sum);
}

CMatrix single_spin_density(const CVector& psi, int n_spins, int spin) {
  CMatrix rho = CMatrix::Zero(2, 2);
  const int shift = n_spins - 1 - spin;
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    for (Eigen::Index j = 0; j < psi.size(); ++j) {
      if ((i | (Eigen::Index{1} << shift)) != (j | (Eigen::Index{1} << shift))) continue;
      rho((i >> shift) & 1, (j >> shift) & 1) += psi(i) * std::conj(psi(j));
    }
  }
  return rho;
}

double max_abs(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

ChainSpec random_chain(std::mt19937_64& rng, int n_spins, spinchain::Model model) {
  std::uniform_real_distribution<double> coupling(0.2, 2.0);
  std::uniform_real_distribution<double> field(-1.0, 1.0);
  std::bernoulli_distribution sign(0.5);
  ChainSpec spec = ChainSpec::homogeneous(n_spins, 1.0, model);
  for (double& c : spec.couplings) c = (sign(rng) ? -1.0 : 1.0) * coupling(rng);
  for (double& b : spec.fields) b = field(rng);
  return spec;
}

CMatrix random_hermitian(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g;
  CMatrix a(dim, dim);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = Complex(g(rng), g(rng));
  return (a + a.adjoint()) / 2.0;
}

}  // namespace oracle
