#include "spinchain/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinchain/asymptotics.hpp"
#include "spinchain/design.hpp"
#include "spinchain/evolve.hpp"
#include "spinchain/gate_extract.hpp"
#include "spinchain/io.hpp"
#include "spinchain/optimize.hpp"
#include "spinchain/protocols.hpp"

namespace spinchain::cli {

namespace {

using io::format_number;
using io::json;

struct Options {
  std::string spec_path;
  int n = 0;
  double omega = 1.0;
  double lambda = 1.0;
  std::string model = "xy";
  std::vector<double> b_field;
  std::string t;
  double t_min = 0.0;
  double t_max = 0.0;
  int samples = 0;
  double refine_tol = 1e-6;
  std::string format;
  std::string output;

  int mediator = 0;
  std::string input = "plus";
  std::string mode;
  int a = 0;
  int b = 0;
  int rounds = 5;
  std::vector<double> branches = {1.0, 2.0, 2.0};
  bool verify = false;
  bool homogeneous = false;
  std::string objective = "max-f";
  double b_min = 0.0;
  double b_max = 1.0;
  double b_step = 0.005;
  int n_min = 2;
  int n_max = 20;
  int shots = 0;
  std::uint64_t seed = 1;
};

std::string fixed(double x, int digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, digits);
  return std::string(buf, res.ptr);
}

std::string entry_text(Complex z) {
  const double re = std::abs(z.real()) < 1e-12 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 1e-12 ? 0.0 : z.imag();
  if (im == 0.0) return fixed(re, 6);
  std::string s = fixed(re, 6) + (im < 0 ? "-" : "+") + fixed(std::abs(im), 6) + "i";
  return s;
}

void print_matrix(std::ostream& out, const CMatrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const std::string s = entry_text(m(r, c));
      out << (c ? " " : "") << std::string(s.size() < 10 ? 10 - s.size() : 0, ' ') << s;
    }
    out << '\n';
  }
}

Model parse_model(const std::string& s) {
  if (s == "xy") return Model::XY;
  if (s == "heisenberg") return Model::Heisenberg;
  throw SpecError("--model must be xy or heisenberg");
}

std::vector<double> resolve_fields(int n_spins, const std::vector<double>& b) {
  if (b.size() == static_cast<size_t>(n_spins)) return b;
  if (b.size() != 1) {
    throw SpecError("--b-field takes one value (middle spins) or one value per spin");
  }
  std::vector<double> fields(n_spins, 0.0);
  if (n_spins % 2) {
    fields[n_spins / 2] = b[0];
  } else {
    fields[n_spins / 2 - 1] = b[0];
    fields[n_spins / 2] = b[0];
  }
  return fields;
}

ChainSpec resolve_spec(const Options& o, int default_n) {
  ChainSpec spec;
  if (!o.spec_path.empty()) {
    spec = io::read_chain_spec(o.spec_path);
  } else {
    const int n = o.n ? o.n : default_n;
    if (n < 2) throw SpecError("--n must be at least 2");
    if (!std::isfinite(o.omega) || o.omega == 0.0) throw SpecError("--omega must be nonzero");
    spec = ChainSpec::homogeneous(n, o.omega, parse_model(o.model));
  }
  if (!o.b_field.empty()) spec.fields = resolve_fields(spec.n_spins, o.b_field);
  spec.validate();
  return spec;
}

double reference_coupling(const ChainSpec& spec) {
  if (spec.topology == Topology::ParallelChains) {
    double s = 0.0;
    for (double w : spec.couplings) s += w * w;
    return std::sqrt(s);
  }
  return spec.couplings.front();
}

double resolve_time(const std::string& text, double omega) {
  if (text == "tau") return gate_time(omega);
  if (text == "tau/2") return 0.5 * gate_time(omega);
  double t = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), t);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !std::isfinite(t)) {
    throw SpecError("--t must be a number, tau or tau/2, got '" + text + "'");
  }
  return t;
}

void require_window(const Options& o, double t_max_default) {
  const double t_max = o.t_max > 0.0 ? o.t_max : t_max_default;
  if (!(o.t_min < t_max)) throw SpecError("scan window needs --t-min < --t-max");
  if (o.samples != 0 && o.samples < 3) throw SpecError("--samples must be at least 3");
  if (!(o.refine_tol > 0.0)) throw SpecError("--refine-tol must be positive");
}

void print_protocol(std::ostream& out, const ProtocolResult& r) {
  for (const auto& e : r.transcript) out << "t=" << format_number(e.time) << "  " << e.action << '\n';
  out << "figure of merit: " << fixed(r.figure_of_merit, 12) << '\n';
  out << "target overlap: " << entry_text(r.target_overlap) << '\n';
  out << "mediator purity: " << fixed(r.mediator_purity, 12) << '\n';
  for (const auto& [k, v] : r.metrics) out << k << ": " << format_number(v) << '\n';
}

void emit_protocols(std::ostream& out, const std::string& format, const std::vector<ProtocolResult>& results) {
  if (format == "json") {
    json doc = json::array();
    for (const auto& r : results) doc.push_back(io::to_json(r));
    out << (results.size() == 1 ? doc[0] : doc).dump(2) << '\n';
    return;
  }
  for (size_t i = 0; i < results.size(); ++i) {
    if (results.size() > 1) out << "round " << i + 1 << '\n';
    print_protocol(out, results[i]);
  }
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw SpecError("--format " + format + " is not available for this command");
}

QubitState parse_input(const std::string& s) {
  if (s == "zero") return QubitState::zero();
  if (s == "one") return QubitState::one();
  if (s == "plus") return QubitState::plus();
  if (s == "minus") return QubitState::minus();
  throw SpecError("--input must be zero, one, plus or minus");
}

// Subcommand bodies. Each writes to `out` in the requested format.

void cmd_gate(const Options& o, std::ostream& out) {
  const ChainSpec spec = resolve_spec(o, 3);
  const double t = resolve_time(o.t.empty() ? "tau" : o.t, reference_coupling(spec));
  const CMatrix u = unitary_at(build_full_hamiltonian(spec), t);
  MediatorSector sector;
  for (int s = 1; s + 1 < spec.n_spins; ++s) {
    sector.spins.push_back(s);
    sector.bits.push_back(o.mediator);
  }
  const GateReport report = extract_effective_gate(u, sector);
  const std::string format = o.format.empty() ? "pretty" : o.format;
  require_format(format, {"pretty", "json"});
  if (format == "json") {
    json doc = {{"t", t}, {"report", io::to_json(report)}};
    doc["unitary"] = io::to_json(spec.n_spins == 3 ? to_display_order(u) : u);
    out << doc.dump(2) << '\n';
    return;
  }
  out << "t = " << format_number(t) << '\n';
  if (spec.n_spins == 3) {
    out << "U in basis order 000 001 100 101 010 011 110 111:\n";
    print_matrix(out, to_display_order(u));
  } else {
    out << "U in product basis order:\n";
    print_matrix(out, u);
  }
  out << "effective gate on spins 0 and " << spec.n_spins - 1 << " (mediators = " << o.mediator << "):\n";
  print_matrix(out, report.effective_gate);
  out << "leakage: " << format_number(report.leakage) << '\n';
  out << "residual vs SWAP.Diag(1,-1,-1,-1): " << format_number(report.decomposition_residual) << '\n';
  out << "global phase: " << entry_text(report.global_phase) << '\n';
}

void cmd_transfer(const Options& o, std::ostream& out) {
  const ChainSpec spec = resolve_spec(o, 3);
  TransferInit init = TransferInit::Med0Tgt0WithZCorrection;
  if (o.mode.empty() || o.mode == "z-correction") {
    init = TransferInit::Med0Tgt0WithZCorrection;
  } else if (o.mode == "med0-tgt1") {
    init = TransferInit::Med0Tgt1;
  } else if (o.mode == "med1-tgt0") {
    init = TransferInit::Med1Tgt0;
  } else {
    throw SpecError("--mode must be z-correction, med0-tgt1 or med1-tgt0");
  }
  const std::string format = o.format.empty() ? "pretty" : o.format;
  require_format(format, {"pretty", "json"});
  emit_protocols(out, format, {run_state_transfer(spec, parse_input(o.input), init)});
}

void cmd_exchange(const Options& o, std::ostream& out) {
  const ChainSpec spec = resolve_spec(o, 3);
  const std::string format = o.format.empty() ? "pretty" : o.format;
  require_format(format, {"pretty", "json"});
  const ExchangeResult r = run_classical_exchange(spec, o.a, o.b, o.mediator);
  json doc = io::to_json(r);
  if (o.shots > 0) doc["samples"] = sample_classical_exchange(spec, o.a, o.b, o.shots, o.seed, o.mediator);
  if (format == "json") {
    out << doc.dump(2) << '\n';
    return;
  }
  out << "alice sent " << o.a << ", bob sent " << o.b << '\n';
  out << "alice reads " << r.alice_reads << ", bob reads " << r.bob_reads
      << " with probability " << fixed(r.probability, 12) << '\n';
  if (o.shots > 0) {
    for (const auto& [k, v] : doc["samples"].items()) out << k << ": " << v.get<int>() << '\n';
  }
}

void cmd_ebit(const Options& o, std::ostream& out) {
  const ChainSpec spec = resolve_spec(o, 3);
  const std::string format = o.format.empty() ? "pretty" : o.format;
  require_format(format, {"pretty", "json"});
  if (o.mode.empty() || o.mode == "plus-plus") {
    emit_protocols(out, format, {run_ebit_generation(spec, EbitMode::PlusPlusFullTau)});
  } else if (o.mode == "half-tau") {
    emit_protocols(out, format, {run_ebit_generation(spec, EbitMode::HalfTau)});
  } else if (o.mode == "repeated") {
    emit_protocols(out, format, run_repeated_ebit_generation(spec, o.rounds));
  } else {
    throw SpecError("--mode must be plus-plus, half-tau or repeated");
  }
}

void cmd_wstate(const Options& o, std::ostream& out) {
  const ChainSpec spec = resolve_spec(o, 3);
  const std::string format = o.format.empty() ? "pretty" : o.format;
  require_format(format, {"pretty", "json"});
  std::optional<double> t;
  if (!o.t.empty()) t = resolve_time(o.t, reference_coupling(spec));
  emit_protocols(out, format, {run_w_state(spec, t)});
}

void cmd_network(const Options& o, std::ostream& out) {
  const NetworkSpec net{o.branches};
  net.validate();
  const std::string format = o.format.empty() ? "pretty" : o.format;
  require_format(format, {"pretty", "json"});
  const GateReport report = run_network_gate(net);
  const double t = gate_time(net.collective_coupling());
  if (format == "json") {
    out << json{{"t", t}, {"collective_coupling", net.collective_coupling()}, {"report", io::to_json(report)}}
               .dump(2)
        << '\n';
    return;
  }
  out << "branches: " << net.branch_couplings.size() << ", collective coupling "
      << format_number(net.collective_coupling()) << ", t = " << format_number(t) << '\n';
  print_matrix(out, report.effective_gate);
  out << "leakage: " << format_number(report.leakage) << '\n';
  out << "residual vs SWAP.Diag(1,-1,-1,-1): " << format_number(report.decomposition_residual) << '\n';
}

void cmd_design(const Options& o, std::ostream& out) {
  if (o.n < 3) throw SpecError("design needs --n >= 3");
  const CouplingDesign d =
      o.homogeneous ? homogeneous_design(o.n, o.omega) : design_half_time_entanglement(o.n, o.lambda);
  const std::string format = o.format.empty() ? "json" : o.format;
  require_format(format, {"pretty", "json"});
  std::optional<DesignVerification> v;
  if (o.verify) v = verify_design(d);
  if (format == "json") {
    json doc = io::to_json(d);
    if (v) doc["verification"] = io::to_json(*v);
    out << doc.dump(2) << '\n';
    return;
  }
  out << io::to_json(d).dump(2) << '\n';
  out << "predicted time: " << format_number(d.predicted_time) << '\n';
  out << "resource cost: " << format_number(d.resource_cost) << '\n';
  if (v) {
    out << "verification amplitude: " << fixed(v->amplitude, 10) << '\n';
    if (v->full_space_fidelity) out << "full-space fidelity: " << fixed(*v->full_space_fidelity, 10) << '\n';
    if (v->interior_min_purity) out << "interior min purity: " << fixed(*v->interior_min_purity, 10) << '\n';
  }
}

void cmd_scan(const Options& o, std::ostream& out) {
  const ChainSpec spec = resolve_spec(o, 4);
  const double w = std::abs(reference_coupling(spec));
  require_window(o, 100.0 / w);
  const double t_max = o.t_max > 0.0 ? o.t_max : 100.0 / w;
  const int samples = o.samples ? o.samples : default_samples(spec, o.t_min, t_max);
  const FidelityCurve curve = scan(spec, o.t_min, t_max, samples);
  const std::string format = o.format.empty() ? "csv" : o.format;
  if (format == "csv") {
    io::write_curve_csv(out, curve);
    return;
  }
  const PeakResult peak = find_peak(curve, o.refine_tol);
  if (format == "json") {
    out << json{{"spec", io::to_json(spec)},
                {"t_min", o.t_min},
                {"t_max", t_max},
                {"samples", samples},
                {"peak", io::to_json(peak)}}
               .dump(2)
        << '\n';
    return;
  }
  out << "peak F = " << fixed(peak.F_star, 8) << " (f = " << fixed(peak.f_star, 8) << ") at t = "
      << format_number(peak.t_star) << '\n';
  for (const auto& p : peak.maxima) {
    out << "  maximum t = " << format_number(p.t) << "  F = " << fixed(p.F, 8) << '\n';
  }
}

void cmd_tune_field(const Options& o, std::ostream& out) {
  const ChainSpec spec = resolve_spec(o, 4);
  const double w = std::abs(reference_coupling(spec));
  require_window(o, 20.0 / w);
  if (!(o.b_step > 0.0) || o.b_max < o.b_min) throw SpecError("field grid needs --b-step > 0 and --b-min <= --b-max");
  std::vector<double> grid;
  const int count = static_cast<int>(std::floor((o.b_max - o.b_min) / o.b_step + 1e-9)) + 1;
  for (int i = 0; i < count; ++i) grid.push_back(o.b_min + i * o.b_step);
  FieldObjective objective = FieldObjective::MaxFidelity;
  if (o.objective == "max-f-per-time") {
    objective = FieldObjective::MaxFidelityPerTime;
  } else if (o.objective != "max-f") {
    throw SpecError("--objective must be max-f or max-f-per-time");
  }
  const double t_max = o.t_max > 0.0 ? o.t_max : 20.0 / w;
  const int samples = o.samples ? o.samples : default_samples(spec, o.t_min, t_max);
  const FieldTuning tuning = tune_middle_field(spec, grid, o.t_min, t_max, samples, objective, o.refine_tol);
  const std::string format = o.format.empty() ? "pretty" : o.format;
  if (format == "json") {
    out << io::to_json(tuning).dump(2) << '\n';
  } else if (format == "csv") {
    out << "B,t_star,F_star\n";
    for (const auto& [b, p] : tuning.sweep) io::write_csv_row(out, {b, p.t_star, p.F_star});
  } else {
    out << "best B = " << format_number(tuning.b_best) << ": F = " << fixed(tuning.peak.F_star, 8)
        << " at t = " << format_number(tuning.peak.t_star) << '\n';
  }
}

void cmd_compare(const Options& o, std::ostream& out) {
  require_window(o, 2000.0);
  const double t_max = o.t_max > 0.0 ? o.t_max : 2000.0;
  const auto rows = compare_models(o.n_min, o.n_max, o.t_min, t_max, o.samples, o.refine_tol);
  const std::string format = o.format.empty() ? "csv" : o.format;
  if (format == "json") {
    json doc = json::array();
    for (const auto& r : rows) doc.push_back(io::to_json(r));
    out << doc.dump(2) << '\n';
  } else if (format == "csv") {
    out << "N,f_max_xy,t_xy,f_max_heisenberg,t_heisenberg\n";
    for (const auto& r : rows) {
      io::write_csv_row(out, {double(r.n_spins), r.f_max_xy, r.t_xy, r.f_max_heisenberg, r.t_heisenberg});
    }
  } else {
    for (const auto& r : rows) {
      out << "N=" << r.n_spins << "  XY " << fixed(r.f_max_xy, 8) << "  Heisenberg "
          << fixed(r.f_max_heisenberg, 8) << '\n';
    }
  }
}

void cmd_asymptotics(const Options& o, std::ostream& out) {
  const int n = o.n ? o.n : 101;
  const AsymptoticEstimate e = airy_peak(n, o.omega);
  const double t = o.t.empty() ? e.t0 : resolve_time(o.t, o.omega);
  const double exact = analytic_f(n, o.omega, t);
  const double bessel = bessel_f(n, o.omega, t);
  const ModelRatio ratio = xy_vs_heisenberg_ratio(n, o.omega);
  const std::string format = o.format.empty() ? "pretty" : o.format;
  require_format(format, {"pretty", "json"});
  if (format == "json") {
    out << json{{"estimate", io::to_json(e)},
                {"t", t},
                {"analytic_f", exact},
                {"bessel_f", bessel},
                {"xy_vs_heisenberg", io::to_json(ratio)}}
               .dump(2)
        << '\n';
    return;
  }
  out << "N = " << n << ", t0 = " << format_number(e.t0) << '\n';
  out << "estimate 2.6998 N^(-1/3): " << fixed(e.f_est, 8) << '\n';
  out << "analytic f(t): " << fixed(exact, 8) << '\n';
  out << "two-Bessel f(t): " << fixed(bessel, 8) << '\n';
  out << "XY / Heisenberg at t0: " << fixed(ratio.ratio, 6) << " (" << fixed(ratio.f_xy, 8) << " / "
      << fixed(ratio.f_heisenberg, 8) << ")\n";
}

void add_spec_options(CLI::App* sub, Options& o) {
  sub->add_option("--spec", o.spec_path, "chain-spec JSON file")->check(CLI::ExistingFile);
  sub->add_option("--n", o.n, "number of spins");
  sub->add_option("--omega", o.omega, "homogeneous coupling");
  sub->add_option("--model", o.model, "xy or heisenberg")->check(CLI::IsMember({"xy", "heisenberg"}));
  sub->add_option("--b-field", o.b_field, "middle-spin field or one value per spin")->delimiter(',');
}

void add_output_options(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "csv, json or pretty")->check(CLI::IsMember({"csv", "json", "pretty"}));
  sub->add_option("--output", o.output, "write results to this path");
}

void add_window_options(CLI::App* sub, Options& o) {
  sub->add_option("--t-min", o.t_min);
  sub->add_option("--t-max", o.t_max);
  sub->add_option("--samples", o.samples);
  sub->add_option("--refine-tol", o.refine_tol);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact spin-chain dynamics: gates, protocols, designs and fidelity scans", "spinchain"};
  app.require_subcommand(1);

  struct Entry {
    CLI::App* app;
    void (*run)(const Options&, std::ostream&);
  };
  std::vector<Entry> commands;
  auto sub = [&](const char* name, const char* help, void (*fn)(const Options&, std::ostream&)) {
    CLI::App* s = app.add_subcommand(name, help);
    add_output_options(s, o);
    commands.push_back({s, fn});
    return s;
  };

  auto* gate = sub("gate", "three-spin unitary and the extracted end-spin gate", cmd_gate);
  add_spec_options(gate, o);
  gate->add_option("--t", o.t, "FLOAT, tau or tau/2");
  gate->add_option("--mediator", o.mediator, "mediator bit of the extracted sector")->check(CLI::Range(0, 1));

  auto* transfer = sub("transfer", "state transfer through the three-spin chain", cmd_transfer);
  add_spec_options(transfer, o);
  transfer->add_option("--input", o.input, "zero, one, plus or minus");
  transfer->add_option("--mode", o.mode, "z-correction, med0-tgt1 or med1-tgt0");

  auto* exchange = sub("exchange", "simultaneous classical bit exchange", cmd_exchange);
  add_spec_options(exchange, o);
  exchange->add_option("--a", o.a)->check(CLI::Range(0, 1));
  exchange->add_option("--b", o.b)->check(CLI::Range(0, 1));
  exchange->add_option("--mediator", o.mediator)->check(CLI::Range(0, 1));
  exchange->add_option("--shots", o.shots)->check(CLI::NonNegativeNumber);
  exchange->add_option("--seed", o.seed);

  auto* ebit = sub("ebit", "entanglement generation between the end spins", cmd_ebit);
  add_spec_options(ebit, o);
  ebit->add_option("--mode", o.mode, "plus-plus, half-tau or repeated");
  ebit->add_option("--rounds", o.rounds)->check(CLI::PositiveNumber);

  auto* wstate = sub("wstate", "three-spin W state preparation", cmd_wstate);
  add_spec_options(wstate, o);
  wstate->add_option("--t", o.t);

  auto* network = sub("network", "parallel three-spin chains sharing their end spins", cmd_network);
  network->add_option("--branches", o.branches, "branch couplings")->delimiter(',');

  auto* design = sub("design", "engineered couplings for end-to-end entanglement", cmd_design);
  design->add_option("--n", o.n)->required();
  design->add_option("--lambda", o.lambda);
  design->add_option("--omega", o.omega, "coupling of the homogeneous design");
  design->add_flag("--verify", o.verify);
  design->add_flag("--homogeneous", o.homogeneous);

  auto* scan_cmd = sub("scan", "transfer fidelity over a time window", cmd_scan);
  add_spec_options(scan_cmd, o);
  add_window_options(scan_cmd, o);

  auto* tune = sub("tune-field", "middle-spin field sweep for even chains", cmd_tune_field);
  add_spec_options(tune, o);
  add_window_options(tune, o);
  tune->add_option("--b-min", o.b_min);
  tune->add_option("--b-max", o.b_max);
  tune->add_option("--b-step", o.b_step);
  tune->add_option("--objective", o.objective, "max-f or max-f-per-time");

  auto* compare = sub("compare", "XY against Heisenberg maximal transfer", cmd_compare);
  add_window_options(compare, o);
  compare->add_option("--n-min", o.n_min);
  compare->add_option("--n-max", o.n_max);

  auto* asym = sub("asymptotics", "long-chain amplitude estimates", cmd_asymptotics);
  asym->add_option("--n", o.n);
  asym->add_option("--omega", o.omega);
  asym->add_option("--t", o.t);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const auto& c : commands) {
      if (!c.app->parsed()) continue;
      if (o.output.empty()) {
        c.run(o, out);
      } else {
        std::ostringstream buffer;
        c.run(o, buffer);
        std::ofstream file(o.output, std::ios::binary);
        if (!file) throw SpecError("cannot write '" + o.output + "'");
        file << buffer.str();
      }
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace spinchain::cli
