#include "spinchain/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <ostream>
#include <set>

namespace spinchain::io {

namespace {

std::vector<double> number_list(const json& value, const char* key) {
  if (!value.is_array()) throw SpecError(std::string(key) + " must be an array of numbers");
  std::vector<double> out;
  for (const auto& v : value) {
    if (!v.is_number()) throw SpecError(std::string(key) + " must contain only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

const char* model_name(Model m) { return m == Model::XY ? "xy" : "heisenberg"; }
const char* topology_name(Topology t) { return t == Topology::Linear ? "linear" : "parallel_chains"; }
const char* scheme_name(DesignScheme s) { return s == DesignScheme::Generation ? "generation" : "sharing"; }

json peak_json(const Peak& p) { return {{"t", p.t}, {"f", p.f}, {"F", p.F}}; }

}  // namespace

ChainSpec chain_spec_from_json(const json& doc) {
  if (!doc.is_object()) throw SpecError("chain spec must be a JSON object");
  static const std::set<std::string> known = {"n_spins", "model",  "topology",    "couplings",
                                              "fields",  "design", "verification"};
  for (const auto& [key, _] : doc.items()) {
    if (!known.count(key)) throw SpecError("unknown chain-spec key '" + key + "'");
  }

  ChainSpec spec;
  if (doc.contains("model")) {
    const auto& m = doc["model"];
    if (m == "xy") {
      spec.model = Model::XY;
    } else if (m == "heisenberg") {
      spec.model = Model::Heisenberg;
    } else {
      throw SpecError("model must be \"xy\" or \"heisenberg\"");
    }
  }
  if (doc.contains("topology")) {
    const auto& t = doc["topology"];
    if (t == "linear") {
      spec.topology = Topology::Linear;
    } else if (t == "parallel_chains") {
      spec.topology = Topology::ParallelChains;
    } else {
      throw SpecError("topology must be \"linear\" or \"parallel_chains\"");
    }
  }
  const int bond_offset = spec.topology == Topology::Linear ? 1 : 2;
  if (doc.contains("couplings")) spec.couplings = number_list(doc["couplings"], "couplings");

  if (doc.contains("n_spins")) {
    const auto& n = doc["n_spins"];
    if (!n.is_number_integer()) throw SpecError("n_spins must be an integer");
    spec.n_spins = n.get<int>();
  } else if (doc.contains("couplings")) {
    spec.n_spins = static_cast<int>(spec.couplings.size()) + bond_offset;
  } else {
    throw SpecError("chain spec needs n_spins or couplings");
  }
  if (spec.n_spins < 2) throw SpecError("chain needs at least 2 spins");
  if (!doc.contains("couplings")) spec.couplings.assign(spec.n_spins - bond_offset, 1.0);
  spec.fields = doc.contains("fields") ? number_list(doc["fields"], "fields")
                                       : std::vector<double>(spec.n_spins, 0.0);
  spec.validate();
  return spec;
}

ChainSpec read_chain_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open chain spec '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SpecError("malformed chain spec '" + path + "': " + e.what());
  }
  return chain_spec_from_json(doc);
}

json to_json(const ChainSpec& spec) {
  return {{"n_spins", spec.n_spins},
          {"model", model_name(spec.model)},
          {"topology", topology_name(spec.topology)},
          {"couplings", spec.couplings},
          {"fields", spec.fields}};
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const GateReport& report) {
  return {{"leakage", report.leakage},
          {"effective_gate", to_json(CMatrix(report.effective_gate))},
          {"mediator_spins", report.mediator_sector.spins},
          {"mediator_bits", report.mediator_sector.bits},
          {"decomposition_residual", report.decomposition_residual},
          {"global_phase", to_json(report.global_phase)}};
}

json to_json(const ProtocolResult& result) {
  json transcript = json::array();
  for (const auto& e : result.transcript) transcript.push_back({{"time", e.time}, {"action", e.action}});
  json amplitudes = json::array();
  for (Eigen::Index i = 0; i < result.final_state.dim(); ++i) {
    amplitudes.push_back(to_json(result.final_state[i]));
  }
  return {{"figure_of_merit", result.figure_of_merit},
          {"target_overlap", to_json(result.target_overlap)},
          {"mediator_purity", result.mediator_purity},
          {"mediator_state", to_json(result.mediator_state)},
          {"elapsed_time", result.elapsed_time},
          {"final_state", amplitudes},
          {"transcript", transcript},
          {"metrics", result.metrics}};
}

json to_json(const ExchangeResult& result) {
  return {{"alice_reads", result.alice_reads},
          {"bob_reads", result.bob_reads},
          {"probability", result.probability}};
}

json to_json(const CouplingDesign& design) {
  json doc = to_json(design.to_chain_spec());
  doc["design"] = {{"half_length", design.half_length},
                   {"lambda", design.lambda_design},
                   {"predicted_time", design.predicted_time},
                   {"resource_cost", design.resource_cost},
                   {"scheme", scheme_name(design.scheme)}};
  return doc;
}

json to_json(const DesignVerification& v) {
  json doc = {{"amplitude", v.amplitude}};
  if (v.full_space_fidelity) doc["full_space_fidelity"] = *v.full_space_fidelity;
  if (v.interior_min_purity) doc["interior_min_purity"] = *v.interior_min_purity;
  return doc;
}

json to_json(const PeakResult& peak) {
  json maxima = json::array();
  for (const auto& p : peak.maxima) maxima.push_back(peak_json(p));
  return {{"t_star", peak.t_star},
          {"F_star", peak.F_star},
          {"f_star", peak.f_star},
          {"refine_tol", peak.refine_tol},
          {"maxima", maxima}};
}

json to_json(const FieldTuning& tuning) {
  json sweep = json::array();
  for (const auto& [b, peak] : tuning.sweep) {
    sweep.push_back({{"b", b}, {"t_star", peak.t_star}, {"F_star", peak.F_star}, {"f_star", peak.f_star}});
  }
  return {{"b_best", tuning.b_best}, {"peak", to_json(tuning.peak)}, {"sweep", sweep}};
}

json to_json(const AsymptoticEstimate& e) {
  return {{"n_spins", e.n_spins},
          {"omega", e.omega},
          {"t0", e.t0},
          {"f_est", e.f_est},
          {"bessel_value", e.bessel_value}};
}

json to_json(const ModelRatio& r) {
  return {{"t0", r.t0}, {"f_xy", r.f_xy}, {"f_heisenberg", r.f_heisenberg}, {"ratio", r.ratio}};
}

json to_json(const ModelComparisonRow& row) {
  return {{"n_spins", row.n_spins},
          {"f_max_xy", row.f_max_xy},
          {"t_xy", row.t_xy},
          {"f_max_heisenberg", row.f_max_heisenberg},
          {"t_heisenberg", row.t_heisenberg}};
}

std::string format_number(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 12);
  return std::string(buf.data(), res.ptr);
}

void write_csv_row(std::ostream& out, const std::vector<double>& values) {
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << format_number(values[i]);
  }
  out << '\n';
}

void write_curve_csv(std::ostream& out, const FidelityCurve& curve) {
  out << "t,f,F\n";
  for (size_t i = 0; i < curve.times.size(); ++i) {
    write_csv_row(out, {curve.times[i], curve.f[i], curve.F[i]});
  }
}

}  // namespace spinchain::io
