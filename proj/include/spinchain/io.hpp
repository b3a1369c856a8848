#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spinchain/asymptotics.hpp"
#include "spinchain/chain_model.hpp"
#include "spinchain/design.hpp"
#include "spinchain/gate_extract.hpp"
#include "spinchain/optimize.hpp"
#include "spinchain/protocols.hpp"

namespace spinchain::io {

using nlohmann::json;

/// Chain-spec document: keys n_spins, model ("xy" | "heisenberg"), topology
/// ("linear" | "parallel_chains"), couplings, fields. Missing couplings
/// default to 1.0 and missing fields to 0. n_spins may be omitted when
/// couplings are given. "design" and "verification" are carried as metadata;
/// any other key is rejected.
ChainSpec chain_spec_from_json(const json& doc);
ChainSpec read_chain_spec(const std::string& path);
json to_json(const ChainSpec& spec);

json to_json(const CMatrix& m);
json to_json(Complex z);
json to_json(const GateReport& report);
json to_json(const ProtocolResult& result);
json to_json(const ExchangeResult& result);
json to_json(const CouplingDesign& design);
json to_json(const DesignVerification& v);
json to_json(const PeakResult& peak);
json to_json(const FieldTuning& tuning);
json to_json(const AsymptoticEstimate& e);
json to_json(const ModelRatio& r);
json to_json(const ModelComparisonRow& row);

/// Shortest round-trip-stable text is not wanted here: always 12 significant
/// digits in C-locale general format.
std::string format_number(double x);

void write_csv_row(std::ostream& out, const std::vector<double>& values);
/// Header `t,f,F` followed by one row per sample.
void write_curve_csv(std::ostream& out, const FidelityCurve& curve);

}  // namespace spinchain::io
