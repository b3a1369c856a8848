#pragma once

#include <vector>

namespace spinchain {

/// Bessel function of the first kind J_n(x) for integer n, by backward
/// recurrence normalized with J_0 + 2 sum J_2k = 1.
double bessel_j(int n, double x);

/// J_0(x) ... J_{n_max}(x) from a single recurrence pass.
std::vector<double> bessel_j_sequence(int n_max, double x);

/// End-to-end amplitude |<1|exp(-iHt)|N>| of a homogeneous XY chain from its
/// closed-form spectrum E_m = -2 omega cos(m pi / (N + 1)).
double analytic_f(int n_spins, double omega, double t);

/// Two-Bessel approximation 2 |J_N(2 omega t) + J_{N+2}(2 omega t)|.
double bessel_f(int n_spins, double omega, double t);

struct AsymptoticEstimate {
  int n_spins = 0;
  double omega = 0.0;
  /// (N + 0.8089 N^(1/3)) / (2 omega)
  double t0 = 0.0;
  /// 2.6998 N^(-1/3)
  double f_est = 0.0;
  /// bessel_f at t0
  double bessel_value = 0.0;
};

AsymptoticEstimate airy_peak(int n_spins, double omega = 1.0);

struct ModelRatio {
  double t0;
  double f_xy;
  double f_heisenberg;
  double ratio;
};

/// f(t0) of the XY chain over f(t0) of the Heisenberg chain with the same
/// coupling, both evaluated at the XY estimate t0.
ModelRatio xy_vs_heisenberg_ratio(int n_spins, double omega = 1.0);

}  // namespace spinchain
