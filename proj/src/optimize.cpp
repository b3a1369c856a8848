#include "spinchain/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace spinchain {

GoldenResult golden_section_maximize(const std::function<double(double)>& f, double a, double b,
                                     double tol) {
  if (!(tol > 0.0)) throw SpecError("refinement tolerance must be positive");
  if (!(a < b)) throw SpecError("golden-section bracket must satisfy a < b");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? GoldenResult{c, fc} : GoldenResult{d, fd};
}

int default_samples(const ChainSpec& spec, double t_min, double t_max) {
  double w = 0.0;
  for (double c : spec.couplings) w = std::max(w, std::abs(c));
  if (w == 0.0) w = 1.0;
  const double width = (t_max - t_min) * w;
  const double spacing = width <= 100.0 ? 0.01 : 0.05;
  return static_cast<int>(std::ceil(width / spacing)) + 1;
}

FidelityCurve scan(const ChainSpec& spec, double t_min, double t_max, int samples) {
  if (!(t_min < t_max) || !std::isfinite(t_min) || !std::isfinite(t_max)) {
    throw SpecError("scan window needs t_min < t_max");
  }
  if (samples < 2) throw SpecError("scan needs at least 2 samples");
  FidelityCurve curve;
  curve.spec = spec;
  curve.amplitude = std::make_shared<const TransferAmplitude>(spec);
  curve.t_min = t_min;
  curve.t_max = t_max;
  curve.samples = samples;
  curve.times.resize(samples);
  curve.f.resize(samples);
  curve.F.resize(samples);
  const double step = (t_max - t_min) / (samples - 1);
  for (int i = 0; i < samples; ++i) {
    const double t = i + 1 == samples ? t_max : t_min + step * i;
    const double f = std::min(1.0, curve.amplitude->magnitude(t));
    curve.times[i] = t;
    curve.f[i] = f;
    curve.F[i] = average_fidelity(f);
  }
  return curve;
}

PeakResult find_peak(const FidelityCurve& curve, double refine_tol, double report_threshold) {
  const int n = static_cast<int>(curve.times.size());
  if (n < 3 || !curve.amplitude) throw SpecError("peak search needs a curve with at least 3 samples");
  if (!(refine_tol > 0.0)) throw SpecError("refinement tolerance must be positive");
  auto f = [&](double t) { return std::min(1.0, curve.amplitude->magnitude(t)); };

  std::vector<Peak> candidates;
  auto add = [&](double t, double value) { candidates.push_back({t, value, average_fidelity(value)}); };
  if (curve.f[0] > curve.f[1]) add(curve.times[0], curve.f[0]);
  for (int i = 1; i + 1 < n; ++i) {
    if (curve.f[i] >= curve.f[i - 1] && curve.f[i] > curve.f[i + 1]) {
      const GoldenResult g = golden_section_maximize(f, curve.times[i - 1], curve.times[i + 1], refine_tol);
      if (g.value >= curve.f[i]) {
        add(g.t, g.value);
      } else {
        add(curve.times[i], curve.f[i]);
      }
    }
  }
  if (curve.f[n - 1] >= curve.f[n - 2]) add(curve.times[n - 1], curve.f[n - 1]);
  std::sort(candidates.begin(), candidates.end(), [](const Peak& a, const Peak& b) { return a.t < b.t; });

  PeakResult result;
  result.refine_tol = refine_tol;
  const Peak* best = nullptr;
  for (const Peak& p : candidates) {
    if (!best || p.f > best->f + 1e-12) best = &p;
  }
  if (!best) throw NumericalError("no maximum found on the curve");
  result.t_star = best->t;
  result.f_star = best->f;
  result.F_star = best->F;
  for (const Peak& p : candidates) {
    if (p.F >= report_threshold || &p == best) result.maxima.push_back(p);
  }
  return result;
}

std::vector<double> middle_field(int n_spins, double b) {
  if (n_spins < 2 || n_spins % 2) throw SpecError("middle field needs an even chain");
  std::vector<double> fields(n_spins, 0.0);
  fields[n_spins / 2 - 1] = b;
  fields[n_spins / 2] = b;
  return fields;
}

FieldTuning tune_middle_field(const ChainSpec& base, const std::vector<double>& b_grid, double t_min,
                              double t_max, int samples, FieldObjective objective, double refine_tol) {
  base.validate();
  if (base.n_spins % 2) throw SpecError("field tuning needs an even number of spins");
  if (b_grid.empty()) throw SpecError("field grid is empty");
  FieldTuning out;
  double best_score = -1.0;
  for (double b : b_grid) {
    ChainSpec spec = base;
    spec.fields = middle_field(base.n_spins, b);
    PeakResult peak = find_peak(scan(spec, t_min, t_max, samples), refine_tol);
    const double score = objective == FieldObjective::MaxFidelity ? peak.F_star
                                                                  : peak.F_star / std::max(peak.t_star, 1e-300);
    if (score > best_score) {
      best_score = score;
      out.b_best = b;
      out.peak = peak;
    }
    out.sweep.emplace_back(b, std::move(peak));
  }
  return out;
}

std::vector<ModelComparisonRow> compare_models(int n_min, int n_max, double t_min, double t_max,
                                               int samples, double refine_tol) {
  if (n_min < 2 || n_max < n_min) throw SpecError("model comparison needs 2 <= n_min <= n_max");
  std::vector<ModelComparisonRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    const ChainSpec xy = ChainSpec::homogeneous(n, 1.0, Model::XY);
    const ChainSpec heis = ChainSpec::homogeneous(n, 1.0, Model::Heisenberg);
    const int s = samples > 0 ? samples : default_samples(xy, t_min, t_max);
    const PeakResult pxy = find_peak(scan(xy, t_min, t_max, s), refine_tol);
    const PeakResult ph = find_peak(scan(heis, t_min, t_max, s), refine_tol);
    rows.push_back({n, pxy.f_star, pxy.t_star, ph.f_star, ph.t_star});
  }
  return rows;
}

}  // namespace spinchain
