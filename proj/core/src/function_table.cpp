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

#include "gdj/function_table.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

namespace gdj {

FunctionTable::FunctionTable(std::uint32_t n, std::uint32_t m,
                             std::vector<std::uint64_t> values)
    : shape_(n, m), values_(std::move(values)) {
  const std::uint64_t N = shape_.control_dim();
  const std::uint64_t M = shape_.aux_dim();
  if (values_.size() != N) {
    throw PreconditionError("function table needs " + std::to_string(N) +
                            " entries for n=" + std::to_string(n) + ", got " +
                            std::to_string(values_.size()));
  }
  for (std::uint64_t x = 0; x < N; ++x) {
    if (values_[x] >= M) {
      throw PreconditionError("function value f(" + std::to_string(x) + ")=" +
                              std::to_string(values_[x]) + " is outside Z_" +
                              std::to_string(M));
    }
  }
}

std::uint64_t FunctionTable::value(std::uint64_t x) const {
  if (x >= values_.size()) {
    throw PreconditionError("input " + std::to_string(x) + " is outside Z_" +
                            std::to_string(values_.size()));
  }
  return values_[x];
}

FunctionTable make_constant(std::uint32_t n, std::uint32_t m, std::uint64_t c) {
  const std::uint64_t M = std::uint64_t{1} << m;
  if (c >= M) {
    throw PreconditionError("constant value " + std::to_string(c) +
                            " is outside Z_" + std::to_string(M));
  }
  return FunctionTable(n, m, std::vector<std::uint64_t>(std::uint64_t{1} << n, c));
}

void EvenSpec::validate() const {
  const RegisterShape shape(n, m);  // checks n, m bounds
  const std::uint64_t N = shape.control_dim();
  const std::uint64_t M = shape.aux_dim();
  if (k < 1 || N % k != 0 || M % k != 0) {
    throw PreconditionError("K=" + std::to_string(k) + " must divide both N=" +
                            std::to_string(N) + " and M=" + std::to_string(M));
  }
  const std::uint64_t spacing = M / k;
  if (t >= spacing) {
    // Shifts t >= mu describe the same value set as t mod mu; generation pins
    // the canonical representative so the parity-oracle bit argument
    // (disjoint bits of t and j*mu) holds verbatim.
    throw PreconditionError("shift t=" + std::to_string(t) +
                            " must lie in [0, mu) with mu=" + std::to_string(spacing));
  }
  if (blocks) {
    const std::uint64_t block_size = N / k;
    if (blocks->size() != k) {
      throw PreconditionError("explicit partition must have exactly K blocks");
    }
    std::vector<bool> seen(N, false);
    for (const auto& block : *blocks) {
      if (block.size() != block_size) {
        throw PreconditionError("every block must have exactly nu=" +
                                std::to_string(block_size) + " inputs");
      }
      for (std::uint64_t x : block) {
        if (x >= N || seen[x]) {
          throw PreconditionError("blocks must partition Z_" + std::to_string(N));
        }
        seen[x] = true;
      }
    }
  }
}

namespace {

// Fisher-Yates with explicit draws; deterministic across standard libraries.
std::vector<std::uint64_t> seeded_permutation(std::uint64_t size, std::uint64_t seed) {
  std::vector<std::uint64_t> perm(size);
  std::iota(perm.begin(), perm.end(), std::uint64_t{0});
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = size; i > 1; --i) {
    const std::uint64_t j = rng() % i;
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

}  // namespace

FunctionTable make_evenly_distributed(const EvenSpec& spec, std::uint64_t seed) {
  spec.validate();
  const std::uint64_t N = std::uint64_t{1} << spec.n;
  const std::uint64_t spacing = spec.mu();
  const std::uint64_t block_size = spec.nu();

  std::vector<std::uint64_t> values(N, 0);
  if (spec.blocks) {
    for (std::uint64_t j = 0; j < spec.k; ++j) {
      for (std::uint64_t x : (*spec.blocks)[j]) {
        values[x] = j * spacing + spec.t;
      }
    }
  } else {
    const auto perm = seeded_permutation(N, seed);
    for (std::uint64_t i = 0; i < N; ++i) {
      const std::uint64_t j = i / block_size;
      values[perm[i]] = j * spacing + spec.t;
    }
  }
  return FunctionTable(spec.n, spec.m, std::move(values));
}

const char* to_string(PromiseClass cls) {
  switch (cls) {
    case PromiseClass::Constant:
      return "constant";
    case PromiseClass::EvenlyDistributed:
      return "evenly-distributed";
    case PromiseClass::Neither:
      return "neither";
  }
  return "unknown";
}

Classification classify_function(const FunctionTable& f) {
  const std::uint64_t N = f.domain_size();
  const std::uint64_t M = f.range_size();

  std::vector<std::uint64_t> histogram(M, 0);
  for (std::uint64_t v : f.values()) {
    ++histogram[v];
  }

  std::vector<std::uint64_t> distinct;
  for (std::uint64_t v = 0; v < M; ++v) {
    if (histogram[v] > 0) {
      distinct.push_back(v);  // ascending by construction
    }
  }

  if (distinct.size() == 1) {
    return {PromiseClass::Constant, 1, M, distinct[0], N};
  }

  const std::uint64_t k = distinct.size();
  if (N % k != 0 || M % k != 0) {
    return {};
  }
  const std::uint64_t spacing = M / k;
  const std::uint64_t shift = distinct[0];
  if (shift >= spacing) {
    return {};
  }
  const std::uint64_t multiplicity = N / k;
  for (std::uint64_t j = 0; j < k; ++j) {
    if (distinct[j] != j * spacing + shift || histogram[distinct[j]] != multiplicity) {
      return {};
    }
  }
  return {PromiseClass::EvenlyDistributed, k, spacing, shift, multiplicity};
}

int parity_of(std::uint64_t v) { return std::popcount(v) & 1; }

ShiftParityReport shift_parity_check(std::uint64_t k, std::uint64_t mu, std::uint64_t big_m) {
  if (k == 0 || mu == 0 || !std::has_single_bit(k) || !std::has_single_bit(mu)) {
    throw PreconditionError("K and mu must be powers of two");
  }
  if (k * mu != big_m) {
    throw PreconditionError("K*mu must equal M, got " + std::to_string(k) + "*" +
                            std::to_string(mu) + " != " + std::to_string(big_m));
  }
  ShiftParityReport report;
  report.pointwise_equal = true;
  for (std::uint64_t j = 0; j < k; ++j) {
    const int shifted = parity_of(j * mu);
    const int direct = parity_of(j);
    if (shifted != direct) {
      report.pointwise_equal = false;
    }
    report.shifted_sum += shifted ? -1 : 1;
    report.direct_sum += direct ? -1 : 1;
  }
  return report;
}

}  // namespace gdj
