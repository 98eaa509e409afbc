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
/**
 * @file
 * JSON serialization of function tables and run reports.
 *
 * Function tables use the schema {"n": int, "m": int, "values": [int, ...]}.
 * Floating-point fields are rounded to 15 significant digits before encoding
 * so reports are stable, diffable fixtures; amplitudes serialize as [re, im]
 * pairs. All emitters are deterministic (sorted keys, no timestamps), so a
 * fixed input and seed yields byte-identical output.
 */
#pragma once

#include <string>

#include "gdj/algorithms.hpp"
#include "gdj/classical.hpp"
#include "gdj/function_table.hpp"

namespace gdj {

std::string to_json_string(const FunctionTable& f);
FunctionTable function_table_from_json(const std::string& text);

/// File variants; throw IoError on missing files or malformed content.
FunctionTable load_function_table(const std::string& path);
void save_function_table(const FunctionTable& f, const std::string& path);

std::string to_json_string(const RunReport& report);
std::string to_json_string(const PeriodReport& report);
std::string to_json_string(const ClassicalResult& result);

/// Parses an auxiliary-vector file: either a bare JSON array of [re, im]
/// pairs or an object {"amps": [...]}.
VectorAux vector_aux_from_file(const std::string& path);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace gdj
