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
 * Deterministic classical deciders with exact query accounting, plus the
 * exhaustive worst-case certifier for their query bounds.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gdj/function_table.hpp"

namespace gdj {

/// Ordered record of the evaluations a decider performed; no input is ever
/// queried twice.
struct QueryLog {
  std::vector<std::uint64_t> inputs;
  std::vector<std::uint64_t> values;

  std::size_t count() const { return inputs.size(); }
};

enum class ClassicalOutcome { Constant, EvenlyDistributed, PromiseViolation };

const char* to_string(ClassicalOutcome outcome);

struct ClassicalResult {
  ClassicalOutcome outcome = ClassicalOutcome::Constant;
  QueryLog log;
  std::string detail;       // human-readable reason, set on violations
  std::string decider;      // "known-k" or "unknown-k"
  std::uint64_t known_k = 0;  // 0 when K was not known
};

/**
 * @brief Decider for a known K: queries in the injected order (ascending by
 * default) until two distinct values appear (evenly distributed side) or
 * nu+1 = N/K + 1 equal values appear (constant side, since an evenly
 * distributed f repeats no value more than nu times).
 *
 * Worst case exactly nu+1 queries. Two values whose difference is not a
 * multiple of mu = M/K are impossible under both hypotheses and reported as
 * a promise violation.
 */
ClassicalResult classical_decide_known_k(const FunctionTable& f, std::uint64_t k,
                                         std::span<const std::uint64_t> order = {});

/**
 * @brief Decider when K is unknown: stops at two distinct values (evenly
 * side) or N/2 + 1 equal values (constant side; every evenly distributed f
 * has K >= 2 and hence multiplicity at most N/2). Worst case exactly N/2+1.
 */
ClassicalResult classical_decide_unknown_k(const FunctionTable& f,
                                           std::span<const std::uint64_t> order = {});

/**
 * @brief Exhaustively maximizes the decider's query count over all
 * promise-satisfying functions and adversarial query orders.
 *
 * A decider run is determined by the sequence of observed values, so the
 * maximization runs over every value sequence drawable from each promise
 * value multiset; each such sequence is realized by some (f, order) pair and
 * vice versa. Returns nu+1 when K is known and N/2+1 otherwise.
 */
std::uint64_t certify_worst_case(std::uint32_t n, std::uint32_t m,
                                 std::optional<std::uint64_t> known_k);

}  // namespace gdj
