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

#include "gdj/classical.hpp"

#include <algorithm>
#include <numeric>

namespace gdj {

namespace {

std::vector<std::uint64_t> resolve_order(std::span<const std::uint64_t> order,
                                         std::uint64_t n_dim) {
  if (order.empty()) {
    std::vector<std::uint64_t> ascending(n_dim);
    std::iota(ascending.begin(), ascending.end(), std::uint64_t{0});
    return ascending;
  }
  if (order.size() != n_dim) {
    throw PreconditionError("query order must enumerate all N=" +
                            std::to_string(n_dim) + " inputs");
  }
  std::vector<bool> seen(n_dim, false);
  for (std::uint64_t x : order) {
    if (x >= n_dim || seen[x]) {
      throw PreconditionError("query order must be a permutation of Z_" +
                              std::to_string(n_dim));
    }
    seen[x] = true;
  }
  return {order.begin(), order.end()};
}

void validate_k(std::uint64_t k, std::uint64_t n_dim, std::uint64_t m_dim) {
  if (k < 2 || n_dim % k != 0 || m_dim % k != 0) {
    throw PreconditionError("K=" + std::to_string(k) +
                            " must be at least 2 and divide both N=" +
                            std::to_string(n_dim) + " and M=" + std::to_string(m_dim));
  }
}

std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

/// Is the difference of two observed values compatible with any evenly
/// distributed hypothesis (some valid K' >= 2)?
bool difference_feasible(std::uint64_t diff, std::uint64_t n_dim, std::uint64_t m_dim) {
  for (std::uint64_t k = 2; k <= std::min(n_dim, m_dim); k <<= 1) {
    if (n_dim % k == 0 && m_dim % k == 0 && diff % (m_dim / k) == 0) {
      return true;
    }
  }
  return false;
}

ClassicalResult run_decider(const FunctionTable& f, std::uint64_t equal_cutoff,
                            std::span<const std::uint64_t> order,
                            std::optional<std::uint64_t> known_k) {
  const std::uint64_t n_dim = f.domain_size();
  const std::uint64_t m_dim = f.range_size();
  const auto queries = resolve_order(order, n_dim);

  ClassicalResult result;
  result.decider = known_k ? "known-k" : "unknown-k";
  result.known_k = known_k.value_or(0);

  std::uint64_t first_value = 0;
  std::uint64_t equal_count = 0;
  for (std::uint64_t x : queries) {
    const std::uint64_t v = f.value(x);
    result.log.inputs.push_back(x);
    result.log.values.push_back(v);

    if (result.log.count() == 1) {
      first_value = v;
      equal_count = 1;
      if (equal_cutoff == 1) {
        result.outcome = ClassicalOutcome::Constant;
        return result;
      }
      continue;
    }

    if (v == first_value) {
      if (++equal_count == equal_cutoff) {
        // An evenly distributed f repeats no value this often.
        result.outcome = ClassicalOutcome::Constant;
        return result;
      }
      continue;
    }

    // Second distinct value: nonconstant, so the evenly distributed side of
    // the promise unless the pair of values rules that out as well.
    const std::uint64_t diff = abs_diff(v, first_value);
    const bool feasible = known_k ? diff % (m_dim / *known_k) == 0
                                  : difference_feasible(diff, n_dim, m_dim);
    if (!feasible) {
      result.outcome = ClassicalOutcome::PromiseViolation;
      result.detail = "values " + std::to_string(first_value) + " and " +
                      std::to_string(v) +
                      " cannot belong to one equally spaced value set";
      return result;
    }
    result.outcome = ClassicalOutcome::EvenlyDistributed;
    return result;
  }

  // Unreachable for a full permutation: either two distinct values occur or
  // the equal-count cutoff (<= N) is reached.
  result.outcome = ClassicalOutcome::Constant;
  return result;
}

/// Adversary game state: the decider has seen `seen_equal` copies of the
/// first value, `supply_first` more copies of it remain, and `other_values`
/// distinct alternative values are still available. Returns the maximum
/// query count over every continuation.
std::uint64_t game_max(std::uint64_t seen_equal, std::uint64_t supply_first,
                       std::uint64_t other_values, std::uint64_t equal_cutoff) {
  std::uint64_t best = 0;
  if (supply_first > 0) {
    const std::uint64_t next = seen_equal + 1;
    if (next == equal_cutoff) {
      best = std::max(best, next);  // decider stops on the constant side
    } else {
      best = std::max(best, game_max(next, supply_first - 1, other_values, equal_cutoff));
    }
  }
  if (other_values > 0) {
    best = std::max(best, seen_equal + 1);  // second distinct value: stops there
  }
  return best;
}

/// Longest trace the adversary can force from K' candidate values, each with
/// multiplicity nu'.
std::uint64_t adversary_max(std::uint64_t distinct_values, std::uint64_t multiplicity,
                            std::uint64_t equal_cutoff) {
  return game_max(1, multiplicity - 1, distinct_values - 1, equal_cutoff);
}

}  // namespace

const char* to_string(ClassicalOutcome outcome) {
  switch (outcome) {
    case ClassicalOutcome::Constant:
      return "constant";
    case ClassicalOutcome::EvenlyDistributed:
      return "evenly-distributed";
    case ClassicalOutcome::PromiseViolation:
      return "promise-violation";
  }
  return "unknown";
}

ClassicalResult classical_decide_known_k(const FunctionTable& f, std::uint64_t k,
                                         std::span<const std::uint64_t> order) {
  validate_k(k, f.domain_size(), f.range_size());
  const std::uint64_t nu = f.domain_size() / k;
  return run_decider(f, nu + 1, order, k);
}

ClassicalResult classical_decide_unknown_k(const FunctionTable& f,
                                           std::span<const std::uint64_t> order) {
  return run_decider(f, f.domain_size() / 2 + 1, order, std::nullopt);
}

std::uint64_t certify_worst_case(std::uint32_t n, std::uint32_t m,
                                 std::optional<std::uint64_t> known_k) {
  const RegisterShape shape(n, m);
  const std::uint64_t n_dim = shape.control_dim();
  const std::uint64_t m_dim = shape.aux_dim();
  if (known_k) {
    validate_k(*known_k, n_dim, m_dim);
  }
  const std::uint64_t equal_cutoff =
      known_k ? n_dim / *known_k + 1 : n_dim / 2 + 1;

  // Constant functions: the decider sees equal values until its cutoff. The
  // query trace does not depend on which constant, so one representative run
  // covers them all.
  std::uint64_t worst = 0;
  {
    const FunctionTable constant = make_constant(n, m, 0);
    const ClassicalResult r = known_k ? classical_decide_known_k(constant, *known_k)
                                      : classical_decide_unknown_k(constant);
    worst = std::max(worst, static_cast<std::uint64_t>(r.log.count()));
  }

  // Evenly distributed functions: a decider trace is a function of the
  // observed value sequence alone, and the sequences realizable over all
  // (f, order) pairs for a given K are exactly the sequences drawable from K
  // values of multiplicity nu. The shift t relabels values without changing
  // any trace length.
  for (std::uint64_t k = 2; k <= std::min(n_dim, m_dim); k <<= 1) {
    if (n_dim % k != 0 || m_dim % k != 0) continue;
    if (known_k && k != *known_k) continue;
    worst = std::max(worst, adversary_max(k, n_dim / k, equal_cutoff));
  }
  return worst;
}

}  // namespace gdj
