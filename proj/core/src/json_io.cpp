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

#include "gdj/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gdj {

namespace {

using nlohmann::json;

// Round-trips through "%.15g" so serialized reals carry 15 significant
// digits.
double snap15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return std::strtod(buf, nullptr);
}

json real(double v) { return json(snap15(v)); }

json amp_pair(const complex& c) { return json::array({real(c.real()), real(c.imag())}); }

json amp_array(std::span<const complex> amps) {
  json arr = json::array();
  for (const auto& a : amps) arr.push_back(amp_pair(a));
  return arr;
}

json real_array(std::span<const double> values) {
  json arr = json::array();
  for (double v : values) arr.push_back(real(v));
  return arr;
}

json aux_to_json(const AuxSpec& aux) {
  json out;
  if (const auto* fourier = std::get_if<FourierXiAux>(&aux)) {
    out["kind"] = "fourier-xi";
    out["xi"] = fourier->xi;
  } else if (const auto* product = std::get_if<ProductAux>(&aux)) {
    out["kind"] = "product";
    json pairs = json::array();
    for (const auto& p : product->pairs) {
      pairs.push_back(json::array({amp_pair(p[0]), amp_pair(p[1])}));
    }
    out["pairs"] = pairs;
  } else {
    out["kind"] = "vector";
    out["amps"] = amp_array(std::get<VectorAux>(aux).amps);
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path + "' for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json parse(const std::string& text, const std::string& what) {
  json parsed = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded()) {
    throw IoError("malformed JSON in " + what);
  }
  return parsed;
}

complex parse_amp(const json& node, const std::string& what) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number() ||
      !node[1].is_number()) {
    throw IoError(what + ": amplitudes must be [re, im] pairs");
  }
  return {node[0].get<double>(), node[1].get<double>()};
}

}  // namespace

std::string to_json_string(const FunctionTable& f) {
  json out;
  out["n"] = f.n();
  out["m"] = f.m();
  out["values"] = json(std::vector<std::uint64_t>(f.values().begin(), f.values().end()));
  return out.dump(2) + "\n";
}

FunctionTable function_table_from_json(const std::string& text) {
  const json parsed = parse(text, "function table");
  if (!parsed.is_object() || !parsed.contains("n") || !parsed.contains("m") ||
      !parsed.contains("values") || !parsed["n"].is_number_unsigned() ||
      !parsed["m"].is_number_unsigned() || !parsed["values"].is_array()) {
    throw IoError("function table must be {\"n\": int, \"m\": int, \"values\": [...]}");
  }
  std::vector<std::uint64_t> values;
  values.reserve(parsed["values"].size());
  for (const auto& v : parsed["values"]) {
    if (!v.is_number_unsigned()) {
      throw IoError("function table values must be non-negative integers");
    }
    values.push_back(v.get<std::uint64_t>());
  }
  try {
    return FunctionTable(parsed["n"].get<std::uint32_t>(),
                         parsed["m"].get<std::uint32_t>(), std::move(values));
  } catch (const PreconditionError& e) {
    throw IoError(std::string("invalid function table: ") + e.what());
  }
}

FunctionTable load_function_table(const std::string& path) {
  return function_table_from_json(read_text_file(path));
}

void save_function_table(const FunctionTable& f, const std::string& path) {
  write_text_file(path, to_json_string(f));
}

std::string to_json_string(const RunReport& report) {
  json out;
  out["algorithm"] = report.algorithm;
  out["n"] = report.shape.n();
  out["m"] = report.shape.m();
  out["transform"] = report.transform;
  out["aux"] = aux_to_json(report.aux);
  if (report.xi) {
    out["xi"] = *report.xi;
  }
  out["control_amplitudes"] = amp_array(report.control_amplitudes);
  out["analytic_amplitudes"] = amp_array(report.analytic_amplitudes);
  out["control_distribution"] = real_array(report.control_distribution);
  out["p_zero"] = real(report.p_zero);
  out["decision"] = report.decision;
  out["promise_class"] = report.promise_class;
  if (!report.heuristic_decision.empty()) {
    out["heuristic_decision"] = report.heuristic_decision;
  }
  out["aux_fidelity"] = real(report.aux_fidelity);
  out["oracle_calls"] = report.oracle_calls;
  out["shots"] = report.shots;
  out["seed"] = report.seed;
  if (!report.histogram.empty()) {
    out["histogram"] = report.histogram;
  }
  return out.dump(2) + "\n";
}

std::string to_json_string(const PeriodReport& report) {
  json out;
  out["algorithm"] = "find-mu";
  out["n"] = report.shape.n();
  out["m"] = report.shape.m();
  out["samples"] = report.samples;
  out["recovered_k"] = report.recovered_k;
  out["recovered_mu"] = report.recovered_mu;
  out["success"] = report.success;
  out["inconclusive"] = report.inconclusive;
  out["postselect_probability"] = real(report.postselect_probability);
  out["distribution"] = real_array(report.distribution);
  out["oracle_calls"] = report.oracle_calls;
  out["seed"] = report.seed;
  return out.dump(2) + "\n";
}

std::string to_json_string(const ClassicalResult& result) {
  json out;
  out["decider"] = result.decider;
  if (result.known_k != 0) {
    out["known_k"] = result.known_k;
  }
  out["outcome"] = to_string(result.outcome);
  if (!result.detail.empty()) {
    out["detail"] = result.detail;
  }
  out["queries"] = {{"inputs", result.log.inputs},
                    {"values", result.log.values},
                    {"count", result.log.count()}};
  return out.dump(2) + "\n";
}

VectorAux vector_aux_from_file(const std::string& path) {
  const json parsed = parse(read_text_file(path), "auxiliary vector file '" + path + "'");
  const json* amps = &parsed;
  if (parsed.is_object()) {
    if (!parsed.contains("amps")) {
      throw IoError("auxiliary vector object must contain an \"amps\" array");
    }
    amps = &parsed["amps"];
  }
  if (!amps->is_array()) {
    throw IoError("auxiliary vector file must hold an array of [re, im] pairs");
  }
  VectorAux aux;
  for (const auto& a : *amps) {
    aux.amps.push_back(parse_amp(a, "auxiliary vector"));
  }
  return aux;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out << text;
  if (!out) {
    throw IoError("failed writing '" + path + "'");
  }
}

}  // namespace gdj
