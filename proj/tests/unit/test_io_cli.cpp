#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "spinchain/cli.hpp"
#include "spinchain/io.hpp"

using namespace spinchain;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "spinchain");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / ("spinchain_test_" + name);
  std::ofstream(p) << content;
  return p;
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(ChainSpecJson, DefaultsAndRoundTrip) {
  const ChainSpec s = io::chain_spec_from_json(io::json::parse(R"({"n_spins": 4})"));
  EXPECT_EQ(s.couplings, std::vector<double>(3, 1.0));
  EXPECT_EQ(s.fields, std::vector<double>(4, 0.0));
  EXPECT_EQ(s.model, Model::XY);

  ChainSpec h = ChainSpec::homogeneous(5, 0.5, Model::Heisenberg);
  h.fields[2] = 0.3;
  const ChainSpec back = io::chain_spec_from_json(io::to_json(h));
  EXPECT_EQ(back.couplings, h.couplings);
  EXPECT_EQ(back.fields, h.fields);
  EXPECT_EQ(back.model, Model::Heisenberg);

  const ChainSpec net = io::chain_spec_from_json(io::json::parse(R"({"topology": "parallel_chains", "couplings": [1, 2, 2]})"));
  EXPECT_EQ(net.n_spins, 5);
  EXPECT_EQ(net.topology, Topology::ParallelChains);
}

TEST(ChainSpecJson, Rejections) {
  auto bad = [](const char* text) { return io::chain_spec_from_json(io::json::parse(text)); };
  EXPECT_THROW(bad(R"({"n_spins": 4, "colour": 1})"), SpecError);
  EXPECT_THROW(bad(R"({"n_spins": 4, "model": "ising"})"), SpecError);
  EXPECT_THROW(bad(R"({"n_spins": 4, "couplings": [1, 1]})"), SpecError);
  EXPECT_THROW(bad(R"({"n_spins": 1})"), SpecError);
  EXPECT_THROW(bad(R"({"model": "xy"})"), SpecError);
  EXPECT_THROW(bad(R"({"n_spins": 3, "fields": [0, "a", 0]})"), SpecError);
  EXPECT_THROW(bad(R"([1, 2])"), SpecError);
  EXPECT_THROW(io::read_chain_spec(temp_file("broken.json", "{ not json").string()), SpecError);
  EXPECT_THROW(io::read_chain_spec("/nonexistent/chain.json"), SpecError);
}

TEST(Format, TwelveSignificantDigits) {
  EXPECT_EQ(io::format_number(0.1), "0.1");
  EXPECT_EQ(io::format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(io::format_number(123456.789), "123456.789");
  EXPECT_EQ(io::format_number(2e-20), "2e-20");
  std::ostringstream out;
  io::write_csv_row(out, {1.5, 2.0, -0.25});
  EXPECT_EQ(out.str(), "1.5,2,-0.25\n");
}

TEST(Cli, GateReproducesDisplay) {
  const CliRun r = run_cli({"gate", "--n", "3", "--omega", "1", "--t", "tau"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("000 001 100 101 010 011 110 111"), std::string::npos);
  EXPECT_NE(r.out.find("residual"), std::string::npos);
  const CliRun j = run_cli({"gate", "--format", "json"});
  ASSERT_EQ(j.code, 0);
  const auto doc = io::json::parse(j.out);
  EXPECT_LT(doc["report"]["decomposition_residual"].get<double>(), 1e-10);
  EXPECT_NEAR(doc["unitary"][1][2][0].get<double>(), -1.0, 1e-10);
}

TEST(Cli, ScanCsvContract) {
  const fs::path spec = temp_file("chain4.json", R"({"n_spins": 4})");
  const CliRun r = run_cli({"scan", "--spec", spec.string(), "--t-max", "100", "--samples", "10000", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, 6), "t,f,F\n");
  EXPECT_EQ(count_lines(r.out), 10001);
  EXPECT_EQ(r.out.find(';'), std::string::npos);
  // Byte-identical reruns.
  EXPECT_EQ(run_cli({"scan", "--spec", spec.string(), "--t-max", "100", "--samples", "10000"}).out, r.out);
}

TEST(Cli, DesignWithVerification) {
  const CliRun r = run_cli({"design", "--n", "9", "--lambda", "1", "--verify", "--format", "pretty"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("verification amplitude: 1.0000000000"), std::string::npos);
  const CliRun j = run_cli({"design", "--n", "9", "--verify"});
  ASSERT_EQ(j.code, 0);
  const auto doc = io::json::parse(j.out);
  // The emitted document is itself a valid chain spec.
  const ChainSpec s = io::chain_spec_from_json(doc);
  EXPECT_EQ(s.n_spins, 9);
  EXPECT_NEAR(doc["verification"]["amplitude"].get<double>(), 1.0, 1e-10);
}

TEST(Cli, OutputFile) {
  const fs::path target = fs::temp_directory_path() / "spinchain_test_out.csv";
  fs::remove(target);
  const CliRun r = run_cli({"scan", "--n", "3", "--t-max", "5", "--samples", "11", "--output", target.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(target);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(count_lines(buf.str()), 12);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"gate", "--bogus"}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"scan", "--n", "4", "--t-min", "5", "--t-max", "5"}).code, 2);
  EXPECT_EQ(run_cli({"scan", "--n", "4", "--format", "xml"}).code, 2);
  EXPECT_EQ(run_cli({"gate", "--t", "soon"}).code, 2);
  const fs::path broken = temp_file("broken_spec.json", R"({"n_spins": 3, "couplings": [1]})");
  const CliRun bad = run_cli({"gate", "--spec", broken.string()});
  EXPECT_EQ(bad.code, 2);
  EXPECT_FALSE(bad.err.empty());
  const CliRun leak = run_cli({"gate", "--t", "1.0"});
  EXPECT_EQ(leak.code, 1);
  EXPECT_NE(leak.err.find("numerical"), std::string::npos);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, ProtocolCommands) {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"transfer", "--input", "minus", "--mode", "med1-tgt0"},
           {"exchange", "--a", "1", "--b", "0", "--shots", "20", "--seed", "3"},
           {"ebit", "--mode", "repeated", "--rounds", "3", "--format", "json"},
           {"wstate"},
           {"network", "--branches", "1.5"},
           {"tune-field", "--n", "4", "--b-min", "0.6", "--b-max", "0.65", "--b-step", "0.025", "--format", "csv"},
           {"compare", "--n-min", "2", "--n-max", "3", "--t-max", "20"},
           {"asymptotics", "--n", "60", "--format", "json"},
           {"scan", "--n", "4", "--b-field", "0.625", "--t-max", "20", "--format", "pretty"}}) {
    const CliRun r = run_cli(args);
    EXPECT_EQ(r.code, 0) << args.front() << ": " << r.err;
    EXPECT_FALSE(r.out.empty()) << args.front();
  }
  EXPECT_NE(run_cli({"scan", "--n", "4", "--b-field", "0.625", "--t-max", "20", "--format", "pretty"}).out.find("6.24"),
            std::string::npos);
  const CliRun leaky = run_cli({"network", "--branches", "1,2,2"});
  EXPECT_EQ(leaky.code, 1);
  EXPECT_NE(leaky.err.find("leakage"), std::string::npos);
}
