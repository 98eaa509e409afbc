// Copyright 2026 The gdjsim Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// gdj: batch experiment front end.
//
// Subcommands:
//   gen        write a function table (constant | evenly | random)
//   run        run gdj1 / dj-uninit / gdj2 and write a RunReport
//   period     recover the range spacing mu and write a PeriodReport
//   classical  run the classical deciders / worst-case certifier
//   sweep      fan out a list of configured runs from a JSON file
//
// Exit codes: 0 success, 2 precondition violation, 3 promise violation
// detected, 4 I/O or format error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gdj/algorithms.hpp"
#include "gdj/classical.hpp"
#include "gdj/json_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 2;
constexpr int kExitPromiseViolation = 3;
constexpr int kExitIo = 4;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

using nlohmann::json;

//----------------------------------------------------------------------------
// Shared run configuration
//----------------------------------------------------------------------------

struct RunConfig {
  std::string algorithm = "gdj1";
  std::uint64_t xi = 1;
  std::string transform = "walsh";
  std::string aux = "";  // empty: per-algorithm default
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
};

gdj::Transform parse_transform(const std::string& name) {
  if (name == "walsh") return gdj::Transform::Walsh;
  if (name == "fourier") return gdj::Transform::Fourier;
  throw gdj::PreconditionError("unknown transform '" + name + "'");
}

std::vector<double> parse_reals(const std::string& csv, const std::string& what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = csv.find(',', pos);
    const std::string token =
        csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw gdj::PreconditionError(what + ": cannot parse number '" + token + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

gdj::AuxSpec parse_aux(const std::string& spec, std::uint64_t xi) {
  if (spec.empty() || spec == "fourier-xi") {
    return gdj::FourierXiAux{xi};
  }
  if (spec.rfind("product:", 0) == 0) {
    const auto reals = parse_reals(spec.substr(8), "--aux product");
    if (reals.size() % 2 != 0) {
      throw gdj::PreconditionError("--aux product needs pairs a0,b0,a1,b1,...");
    }
    gdj::ProductAux aux;
    for (std::size_t j = 0; j < reals.size(); j += 2) {
      aux.pairs.push_back({gdj::complex{reals[j], 0.0}, gdj::complex{reals[j + 1], 0.0}});
    }
    return aux;
  }
  if (spec.rfind("vector-file:", 0) == 0) {
    return gdj::vector_aux_from_file(spec.substr(12));
  }
  throw gdj::PreconditionError(
      "--aux must be fourier-xi, product:a0,b0,..., or vector-file:PATH");
}

gdj::ProductAux default_product(std::uint32_t m) {
  gdj::ProductAux aux;
  for (std::uint32_t j = 0; j < m; ++j) {
    aux.pairs.push_back({gdj::complex{kInvSqrt2, 0.0}, gdj::complex{-kInvSqrt2, 0.0}});
  }
  return aux;
}

// F|-xi> is separable; its product form feeds the bitwise run.
gdj::ProductAux fourier_as_product(std::uint64_t xi, std::uint32_t m) {
  const std::uint64_t m_dim = std::uint64_t{1} << m;
  const auto roots = gdj::roots_of_unity(m_dim);
  gdj::ProductAux aux;
  for (std::uint32_t j = 0; j < m; ++j) {
    const std::uint64_t e = (m_dim - (xi << j) % m_dim) % m_dim;
    aux.pairs.push_back({gdj::complex{kInvSqrt2, 0.0}, roots[e] * kInvSqrt2});
  }
  return aux;
}

gdj::RunReport execute_run(const gdj::FunctionTable& table, const RunConfig& config) {
  const gdj::Transform transform = parse_transform(config.transform);

  if (config.algorithm == "gdj1") {
    if (!config.aux.empty() && config.aux != "fourier-xi") {
      throw gdj::PreconditionError(
          "gdj1 fixes the auxiliary preparation to fourier-xi");
    }
    return gdj::run_gdj1(table, config.xi, transform, config.shots, config.seed);
  }

  if (config.algorithm == "dj-uninit") {
    const gdj::AuxSpec aux = config.aux.empty()
                                 ? gdj::AuxSpec{default_product(1)}
                                 : parse_aux(config.aux, config.xi);
    const auto psi = gdj::prepare_aux(aux, 1);
    return gdj::run_dj_uninit(table, psi[0], psi[1], config.shots, config.seed);
  }

  if (config.algorithm == "gdj2") {
    gdj::ProductAux aux;
    if (config.aux.empty()) {
      aux = default_product(table.m());
    } else {
      const gdj::AuxSpec spec = parse_aux(config.aux, config.xi);
      if (const auto* product = std::get_if<gdj::ProductAux>(&spec)) {
        aux = *product;
      } else if (const auto* fourier = std::get_if<gdj::FourierXiAux>(&spec)) {
        aux = fourier_as_product(fourier->xi, table.m());
      } else {
        throw gdj::PreconditionError(
            "gdj2 requires a separable auxiliary register: pass a product state, "
            "not an arbitrary vector");
      }
    }
    return gdj::run_gdj2(table, aux, transform, config.shots, config.seed);
  }

  throw gdj::PreconditionError("unknown algorithm '" + config.algorithm + "'");
}

//----------------------------------------------------------------------------
// gen
//----------------------------------------------------------------------------

struct GenOptions {
  std::uint32_t n = 1;
  std::uint32_t m = 1;
  std::optional<std::uint64_t> constant;
  bool evenly = false;
  std::uint64_t k = 2;
  std::uint64_t t = 0;
  bool random = false;
  std::uint64_t seed = 0;
  std::string output = "function.json";
};

std::string describe(const gdj::Classification& cls) {
  switch (cls.cls) {
    case gdj::PromiseClass::Constant:
      return std::string("constant (c=") + std::to_string(cls.t) + ")";
    case gdj::PromiseClass::EvenlyDistributed:
      return "evenly-distributed (K=" + std::to_string(cls.k) +
             ", mu=" + std::to_string(cls.mu) + ", t=" + std::to_string(cls.t) +
             ", nu=" + std::to_string(cls.nu) + ")";
    case gdj::PromiseClass::Neither:
      return "neither";
  }
  return "unknown";
}

int cmd_gen(const GenOptions& opt) {
  const int selected = (opt.constant.has_value() ? 1 : 0) + (opt.evenly ? 1 : 0) +
                       (opt.random ? 1 : 0);
  if (selected != 1) {
    throw gdj::PreconditionError(
        "choose exactly one of --constant, --evenly, --random");
  }

  std::optional<gdj::FunctionTable> table;
  if (opt.constant) {
    table = gdj::make_constant(opt.n, opt.m, *opt.constant);
  } else if (opt.evenly) {
    gdj::EvenSpec spec;
    spec.n = opt.n;
    spec.m = opt.m;
    spec.k = opt.k;
    spec.t = opt.t;
    table = gdj::make_evenly_distributed(spec, opt.seed);
  } else {
    const std::uint64_t m_dim = std::uint64_t{1} << opt.m;
    std::mt19937_64 rng(opt.seed);
    std::vector<std::uint64_t> values(std::uint64_t{1} << opt.n);
    for (auto& v : values) v = rng() % m_dim;
    table = gdj::FunctionTable(opt.n, opt.m, std::move(values));
  }

  gdj::save_function_table(*table, opt.output);
  std::printf("classification: %s\n", describe(gdj::classify_function(*table)).c_str());
  return kExitOk;
}

//----------------------------------------------------------------------------
// run / period / classical
//----------------------------------------------------------------------------

int cmd_run(const std::string& function_path, const RunConfig& config,
            const std::string& output) {
  const gdj::FunctionTable table = gdj::load_function_table(function_path);
  const gdj::RunReport report = execute_run(table, config);
  gdj::write_text_file(output, gdj::to_json_string(report));
  std::printf("decision: %s, P0=%.12f\n", report.decision.c_str(), report.p_zero);
  return kExitOk;
}

int cmd_period(const std::string& function_path, std::uint32_t samples,
               std::uint64_t seed, const std::string& output) {
  const gdj::FunctionTable table = gdj::load_function_table(function_path);
  const gdj::PeriodReport report = gdj::find_mu(table, samples, seed);
  gdj::write_text_file(output, gdj::to_json_string(report));
  std::printf("recovered: mu=%llu, K=%llu%s\n",
              static_cast<unsigned long long>(report.recovered_mu),
              static_cast<unsigned long long>(report.recovered_k),
              report.inconclusive ? " (inconclusive: all samples zero)" : "");
  return kExitOk;
}

struct ClassicalOptions {
  std::string function_path;
  std::optional<std::uint64_t> known_k;
  std::string order;
  bool certify = false;
  std::uint32_t n = 1;
  std::uint32_t m = 1;
  std::string output = "query_log.json";
};

int cmd_classical(const ClassicalOptions& opt) {
  if (opt.certify) {
    const std::uint64_t worst = gdj::certify_worst_case(opt.n, opt.m, opt.known_k);
    std::printf("worst-case queries: %llu\n", static_cast<unsigned long long>(worst));
    return kExitOk;
  }
  if (opt.function_path.empty()) {
    throw gdj::PreconditionError("--function is required unless --certify is given");
  }
  const gdj::FunctionTable table = gdj::load_function_table(opt.function_path);

  std::vector<std::uint64_t> order;
  if (!opt.order.empty()) {
    for (double v : parse_reals(opt.order, "--order")) {
      order.push_back(static_cast<std::uint64_t>(v));
    }
  }

  const gdj::ClassicalResult result =
      opt.known_k ? gdj::classical_decide_known_k(table, *opt.known_k, order)
                  : gdj::classical_decide_unknown_k(table, order);
  gdj::write_text_file(opt.output, gdj::to_json_string(result));
  std::printf("outcome: %s, queries: %zu\n", gdj::to_string(result.outcome),
              result.log.count());
  return result.outcome == gdj::ClassicalOutcome::PromiseViolation
             ? kExitPromiseViolation
             : kExitOk;
}

//----------------------------------------------------------------------------
// sweep
//----------------------------------------------------------------------------

gdj::FunctionTable table_from_config(const json& node) {
  if (node.is_string()) {
    return gdj::load_function_table(node.get<std::string>());
  }
  if (!node.is_object() || !node.contains("n") || !node.contains("m")) {
    throw gdj::IoError("sweep function spec needs n and m (or a file path)");
  }
  const auto n = node["n"].get<std::uint32_t>();
  const auto m = node["m"].get<std::uint32_t>();
  if (node.contains("values")) {
    return gdj::FunctionTable(n, m, node["values"].get<std::vector<std::uint64_t>>());
  }
  if (node.contains("constant")) {
    return gdj::make_constant(n, m, node["constant"].get<std::uint64_t>());
  }
  if (node.contains("evenly")) {
    const json& e = node["evenly"];
    gdj::EvenSpec spec;
    spec.n = n;
    spec.m = m;
    spec.k = e.value("k", std::uint64_t{2});
    spec.t = e.value("t", std::uint64_t{0});
    return gdj::make_evenly_distributed(spec, node.value("seed", std::uint64_t{0}));
  }
  throw gdj::IoError("sweep function spec needs values, constant, or evenly");
}

std::string execute_sweep_entry(const json& entry) {
  const std::string command = entry.value("command", "run");
  const gdj::FunctionTable table = table_from_config(entry.at("function"));

  if (command == "run") {
    RunConfig config;
    config.algorithm = entry.value("algorithm", "gdj1");
    config.xi = entry.value("xi", std::uint64_t{1});
    config.transform = entry.value("transform", "walsh");
    config.aux = entry.value("aux", "");
    config.shots = entry.value("shots", std::uint64_t{0});
    config.seed = entry.value("seed", std::uint64_t{0});
    return gdj::to_json_string(execute_run(table, config));
  }
  if (command == "period") {
    return gdj::to_json_string(gdj::find_mu(table, entry.value("samples", 8u),
                                            entry.value("seed", std::uint64_t{0})));
  }
  if (command == "classical") {
    if (entry.contains("known_k")) {
      return gdj::to_json_string(
          gdj::classical_decide_known_k(table, entry["known_k"].get<std::uint64_t>()));
    }
    return gdj::to_json_string(gdj::classical_decide_unknown_k(table));
  }
  throw gdj::IoError("sweep command must be run, period, or classical");
}

int cmd_sweep(const std::string& config_path, const std::string& output,
              unsigned jobs) {
  std::string text;
  {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) throw gdj::IoError("cannot open sweep config '" + config_path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  const json config = json::parse(text, nullptr, false);
  if (config.is_discarded() || !config.is_object() || !config.contains("runs") ||
      !config["runs"].is_array()) {
    throw gdj::IoError("sweep config must be an object with a \"runs\" array");
  }
  const json& runs = config["runs"];

  // Fan out in waves of `jobs`; results land in index order regardless of
  // completion order.
  std::vector<std::string> reports(runs.size());
  if (jobs < 1) jobs = 1;
  for (std::size_t base = 0; base < runs.size(); base += jobs) {
    const std::size_t end = std::min(base + jobs, runs.size());
    std::vector<std::future<std::string>> wave;
    for (std::size_t i = base; i < end; ++i) {
      wave.push_back(std::async(std::launch::async,
                                [&runs, i] { return execute_sweep_entry(runs[i]); }));
    }
    for (std::size_t i = base; i < end; ++i) {
      reports[i] = wave[i - base].get();
    }
  }

  json out = json::array();
  for (const auto& r : reports) {
    out.push_back(json::parse(r));
  }
  gdj::write_text_file(output, out.dump(2) + "\n");
  std::printf("wrote %zu reports to %s\n", reports.size(), output.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"State-vector experiments for generalized Deutsch-Jozsa oracles"};
  app.require_subcommand(1);

  // gen
  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a function table");
  gen_cmd->add_option("--n", gen.n, "Control qubits")->required();
  gen_cmd->add_option("--m", gen.m, "Auxiliary qubits")->required();
  std::uint64_t constant_value = 0;
  CLI::Option* constant_opt =
      gen_cmd->add_option("--constant", constant_value, "Constant value c");
  gen_cmd->add_flag("--evenly", gen.evenly, "Evenly distributed table");
  gen_cmd->add_option("--k", gen.k, "Number of distinct values K");
  gen_cmd->add_option("--t", gen.t, "Initial shift t in [0, mu)");
  gen_cmd->add_flag("--random", gen.random, "Uniform random table (off-promise fixture)");
  gen_cmd->add_option("--seed", gen.seed, "Assignment seed");
  gen_cmd->add_option("--output,-o", gen.output, "Output path");

  // run
  std::string run_function;
  std::string run_output = "run_report.json";
  RunConfig run_config;
  CLI::App* run_cmd = app.add_subcommand("run", "Run a quantum decision algorithm");
  run_cmd->add_option("--algorithm,-a", run_config.algorithm, "gdj1 | dj-uninit | gdj2")
      ->check(CLI::IsMember({"gdj1", "dj-uninit", "gdj2"}));
  run_cmd->add_option("--function,-f", run_function, "Function table JSON")->required();
  run_cmd->add_option("--xi", run_config.xi, "Phase index xi (nonzero mod M)");
  run_cmd->add_option("--transform", run_config.transform, "walsh | fourier")
      ->check(CLI::IsMember({"walsh", "fourier"}));
  run_cmd->add_option("--aux", run_config.aux,
                      "fourier-xi | product:a0,b0,... | vector-file:PATH");
  run_cmd->add_option("--shots", run_config.shots, "Sampled measurement count");
  run_cmd->add_option("--seed", run_config.seed, "Sampling seed");
  run_cmd->add_option("--output,-o", run_output, "Report path");

  // period
  std::string period_function;
  std::string period_output = "period_report.json";
  std::uint32_t period_samples = 8;
  std::uint64_t period_seed = 0;
  CLI::App* period_cmd = app.add_subcommand("period", "Recover the range spacing mu");
  period_cmd->add_option("--function,-f", period_function, "Function table JSON")
      ->required();
  period_cmd->add_option("--samples,--r", period_samples, "Auxiliary read-outs r");
  period_cmd->add_option("--seed", period_seed, "Sampling seed");
  period_cmd->add_option("--output,-o", period_output, "Report path");

  // classical
  ClassicalOptions classical;
  std::uint64_t classical_known_k = 0;
  CLI::App* classical_cmd =
      app.add_subcommand("classical", "Classical deciders and worst-case certifier");
  classical_cmd->add_option("--function,-f", classical.function_path,
                            "Function table JSON");
  CLI::Option* known_k_opt =
      classical_cmd->add_option("--known-k", classical_known_k, "Promise K, when known");
  classical_cmd->add_option("--order", classical.order,
                            "Comma-separated query order (permutation of Z_N)");
  classical_cmd->add_flag("--certify", classical.certify,
                          "Exhaustive worst-case query count for (n, m, K)");
  classical_cmd->add_option("--n", classical.n, "Control qubits (certify mode)");
  classical_cmd->add_option("--m", classical.m, "Auxiliary qubits (certify mode)");
  classical_cmd->add_option("--output,-o", classical.output, "Query log path");

  // sweep
  std::string sweep_config;
  std::string sweep_output = "sweep_report.json";
  unsigned sweep_jobs = std::max(1u, std::thread::hardware_concurrency());
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Run a batch of configured runs");
  sweep_cmd->add_option("--config,-c", sweep_config, "Sweep config JSON")->required();
  sweep_cmd->add_option("--output,-o", sweep_output, "Combined report path");
  sweep_cmd->add_option("--jobs,-j", sweep_jobs, "Parallel runs per wave");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitPrecondition;
  }

  try {
    if (*gen_cmd) {
      if (constant_opt->count() > 0) gen.constant = constant_value;
      return cmd_gen(gen);
    }
    if (*run_cmd) {
      return cmd_run(run_function, run_config, run_output);
    }
    if (*period_cmd) {
      return cmd_period(period_function, period_samples, period_seed, period_output);
    }
    if (*classical_cmd) {
      if (known_k_opt->count() > 0) classical.known_k = classical_known_k;
      return cmd_classical(classical);
    }
    if (*sweep_cmd) {
      return cmd_sweep(sweep_config, sweep_output, sweep_jobs);
    }
  } catch (const gdj::PreconditionError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitPrecondition;
  } catch (const gdj::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "unexpected error: %s\n", e.what());
    return 1;
  }
  return kExitOk;
}
