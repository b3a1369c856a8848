#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "spinchain/chain_model.hpp"
#include "spinchain/evolve.hpp"

namespace spinchain {

struct GoldenResult {
  double t;
  double value;
};

/// Derivative-free maximization of a unimodal function on [a, b] down to an
/// interval width of `tol`.
GoldenResult golden_section_maximize(const std::function<double(double)>& f, double a, double b,
                                     double tol);

/// f(t) and F(t) sampled on a uniform grid over [t_min, t_max].
struct FidelityCurve {
  ChainSpec spec;
  /// Continuous f(t) for refinement; shared read-only.
  std::shared_ptr<const TransferAmplitude> amplitude;
  std::vector<double> times;
  std::vector<double> f;
  std::vector<double> F;
  double t_min = 0.0;
  double t_max = 0.0;
  int samples = 0;
};

/// Grid spacing of 0.01/w for windows up to 100/w and 0.05/w beyond, with w
/// the largest coupling magnitude of the spec.
int default_samples(const ChainSpec& spec, double t_min, double t_max);

FidelityCurve scan(const ChainSpec& spec, double t_min, double t_max, int samples);

struct Peak {
  double t;
  double f;
  double F;
};

struct PeakResult {
  double t_star = 0.0;
  double F_star = 0.0;
  double f_star = 0.0;
  /// Refined local maxima with F >= the reporting threshold, plus the global
  /// peak, in ascending t.
  std::vector<Peak> maxima;
  double refine_tol = 0.0;
};

/// Refines every interior grid maximum with golden-section search on f and
/// returns the global maximum; among equal peaks (within 1e-12 in f) the
/// earliest wins.
PeakResult find_peak(const FidelityCurve& curve, double refine_tol = 1e-6,
                     double report_threshold = 0.9);

enum class FieldObjective { MaxFidelity, MaxFidelityPerTime };

struct FieldTuning {
  double b_best = 0.0;
  PeakResult peak;
  /// One entry per grid value, in grid order.
  std::vector<std::pair<double, PeakResult>> sweep;
};

/// Applies B on the two middle spins of an even chain for every value in
/// `b_grid`, scans the window and keeps the best value under `objective`.
FieldTuning tune_middle_field(const ChainSpec& base, const std::vector<double>& b_grid, double t_min,
                              double t_max, int samples, FieldObjective objective,
                              double refine_tol = 1e-6);

/// Fields vector (0, ..., B, B, ..., 0) for an even chain.
std::vector<double> middle_field(int n_spins, double b);

struct ModelComparisonRow {
  int n_spins;
  double f_max_xy;
  double t_xy;
  double f_max_heisenberg;
  double t_heisenberg;
};

/// Maximized f for homogeneous XY and Heisenberg chains (coupling 1) over
/// the window, one row per N in [n_min, n_max].
std::vector<ModelComparisonRow> compare_models(int n_min, int n_max, double t_min, double t_max,
                                               int samples, double refine_tol = 1e-9);

}  // namespace spinchain
