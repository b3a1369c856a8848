#include "spinchain/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <string>

#include "spinchain/chain_model.hpp"
#include "spinchain/evolve.hpp"
#include "spinchain/types.hpp"

namespace spinchain {

namespace {

constexpr double kRescaleAbove = 1e250;

Complex pairwise_sum(std::span<const Complex> terms) {
  if (terms.size() <= 8) {
    Complex s{};
    for (const Complex& z : terms) s += z;
    return s;
  }
  const size_t half = terms.size() / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

void require_chain(int n_spins, double omega) {
  if (n_spins < 2) throw SpecError("need at least 2 spins, got " + std::to_string(n_spins));
  if (!std::isfinite(omega) || omega == 0.0) throw SpecError("coupling must be finite and nonzero");
}

}  // namespace

std::vector<double> bessel_j_sequence(int n_max, double x) {
  if (n_max < 0) throw SpecError("Bessel order must be non-negative");
  if (!std::isfinite(x)) throw SpecError("Bessel argument must be finite");
  std::vector<double> out(static_cast<size_t>(n_max) + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }
  const double ax = std::abs(x);
  if (ax < 1e-8) {
    // Two leading series terms are exact to double precision here.
    const double h = x / 2.0;
    double power = 1.0;
    for (int k = 0; k <= n_max && power != 0.0; ++k) {
      out[k] = power * (1.0 - h * h / (k + 1));
      power *= h / (k + 1);
    }
    return out;
  }
  const double top = std::max(static_cast<double>(n_max), ax);
  int start = static_cast<int>(top + 30.0 + 15.0 * std::cbrt(ax) + std::sqrt(40.0 * top));
  start += start % 2;

  // j[k] ~ J_k(ax) up to a common factor, built downward from j[start+1] = 0.
  std::vector<double> j(static_cast<size_t>(start) + 2, 0.0);
  j[start] = 1e-30;
  for (int k = start; k >= 1; --k) {
    j[k - 1] = 2.0 * k / ax * j[k] - j[k + 1];
    if (std::abs(j[k - 1]) > kRescaleAbove) {
      for (int i = k - 1; i <= start; ++i) j[i] /= kRescaleAbove;
    }
  }
  double norm = j[0];
  for (int k = 2; k <= start; k += 2) norm += 2.0 * j[k];

  for (int k = 0; k <= n_max; ++k) {
    double v = j[k] / norm;
    if (x < 0.0 && (k % 2)) v = -v;
    out[k] = v;
  }
  return out;
}

double bessel_j(int n, double x) {
  const int order = std::abs(n);
  const double v = bessel_j_sequence(order, x)[order];
  return (n < 0 && (order % 2)) ? -v : v;
}

double analytic_f(int n_spins, double omega, double t) {
  require_chain(n_spins, omega);
  const double denom = n_spins + 1.0;
  std::vector<Complex> terms(n_spins);
  for (int m = 1; m <= n_spins; ++m) {
    const double k = std::numbers::pi * m / denom;
    const double energy = -2.0 * omega * std::cos(k);
    const double weight = std::sin(k) * std::sin(k * n_spins);
    terms[m - 1] = weight * std::exp(Complex(0.0, -energy * t));
  }
  return std::abs(2.0 / denom * pairwise_sum(terms));
}

double bessel_f(int n_spins, double omega, double t) {
  require_chain(n_spins, omega);
  const auto j = bessel_j_sequence(n_spins + 2, 2.0 * omega * t);
  return 2.0 * std::abs(j[n_spins] + j[n_spins + 2]);
}

AsymptoticEstimate airy_peak(int n_spins, double omega) {
  require_chain(n_spins, omega);
  AsymptoticEstimate e;
  e.n_spins = n_spins;
  e.omega = omega;
  const double n = n_spins;
  e.t0 = (n + 0.8089 * std::cbrt(n)) / (2.0 * std::abs(omega));
  e.f_est = 2.6998 / std::cbrt(n);
  e.bessel_value = bessel_f(n_spins, omega, e.t0);
  return e;
}

ModelRatio xy_vs_heisenberg_ratio(int n_spins, double omega) {
  require_chain(n_spins, omega);
  const double t0 = airy_peak(n_spins, omega).t0;
  const double f_xy = analytic_f(n_spins, omega, t0);
  const double f_heis = transfer_amplitude(ChainSpec::homogeneous(n_spins, omega, Model::Heisenberg), t0);
  if (f_heis == 0.0) throw NumericalError("Heisenberg amplitude vanishes at t0");
  return {t0, f_xy, f_heis, f_xy / f_heis};
}

}  // namespace spinchain
