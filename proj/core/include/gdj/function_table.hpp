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
 * Lookup-table oracle functions f: Z_N -> Z_M, generators for the promise
 * classes (constant / evenly distributed) and their brute-force classifier.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gdj/types.hpp"

namespace gdj {

/**
 * @brief Explicit table for f: Z_N -> Z_M with N = 2^n, M = 2^m.
 *
 * Immutable after construction; every entry is validated to lie in [0, M).
 */
class FunctionTable {
 public:
  FunctionTable(std::uint32_t n, std::uint32_t m, std::vector<std::uint64_t> values);

  std::uint32_t n() const { return shape_.n(); }
  std::uint32_t m() const { return shape_.m(); }
  std::uint64_t domain_size() const { return shape_.control_dim(); }
  std::uint64_t range_size() const { return shape_.aux_dim(); }
  const RegisterShape& shape() const { return shape_; }

  std::uint64_t value(std::uint64_t x) const;
  std::span<const std::uint64_t> values() const { return values_; }

 private:
  RegisterShape shape_;
  std::vector<std::uint64_t> values_;
};

/// All-c table; 0 <= c < M.
FunctionTable make_constant(std::uint32_t n, std::uint32_t m, std::uint64_t c);

/**
 * @brief Parameters of an evenly distributed function: K values spaced mu =
 * M/K apart starting at shift t, each value taken by exactly nu = N/K inputs.
 *
 * The input partition may be pinned explicitly via `blocks` (K disjoint
 * blocks of size nu covering Z_N); otherwise it is drawn from a seeded
 * permutation.
 */
struct EvenSpec {
  std::uint32_t n = 1;
  std::uint32_t m = 1;
  std::uint64_t k = 2;
  std::uint64_t t = 0;
  std::optional<std::vector<std::vector<std::uint64_t>>> blocks;

  std::uint64_t mu() const { return (std::uint64_t{1} << m) / k; }
  std::uint64_t nu() const { return (std::uint64_t{1} << n) / k; }

  /// Throws PreconditionError on K-divisibility violations, t >= mu, or a
  /// malformed explicit partition.
  void validate() const;
};

FunctionTable make_evenly_distributed(const EvenSpec& spec, std::uint64_t seed = 0);

enum class PromiseClass { Constant, EvenlyDistributed, Neither };

const char* to_string(PromiseClass cls);

/**
 * @brief Result of the brute-force promise check.
 *
 * For Constant the recovered parameters are the degenerate K=1 ones
 * (mu = M, t = f(0), nu = N); for Neither they are all zero.
 */
struct Classification {
  PromiseClass cls = PromiseClass::Neither;
  std::uint64_t k = 0;
  std::uint64_t mu = 0;
  std::uint64_t t = 0;
  std::uint64_t nu = 0;
};

/// O(N + M) ground-truth classifier: Constant iff all values equal;
/// EvenlyDistributed iff the value multiset is {j*mu + t} each with
/// multiplicity nu; Neither otherwise. A constant table reports Constant even
/// though it is trivially "evenly distributed" with K = 1.
Classification classify_function(const FunctionTable& f);

/// popcount(v) mod 2.
int parity_of(std::uint64_t v);

/**
 * @brief Checks the bit-shift parity identity behind the parity-oracle
 * cancellation: j*mu is the k-bit number j shifted left by m-k zero bits,
 * so p(j*mu) = p(j), and the signed sum over j in Z_K vanishes for K >= 2.
 */
struct ShiftParityReport {
  long long shifted_sum = 0;  // sum over j of (-1)^{p(j*mu)}
  long long direct_sum = 0;   // sum over j of (-1)^{p(j)}
  bool pointwise_equal = false;
};

ShiftParityReport shift_parity_check(std::uint64_t k, std::uint64_t mu, std::uint64_t big_m);

}  // namespace gdj
