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
 * End-to-end quantum procedures: the phase-oracle decision algorithm (gdj1),
 * the uninitialized-auxiliary variants (dj-uninit, gdj2), their analytic
 * amplitude oracles, phase-kickback condition checks, and the spacing
 * recovery routine find_mu.
 */
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gdj/function_table.hpp"
#include "gdj/state_vector.hpp"
#include "gdj/types.hpp"

namespace gdj {

//============================================================================
// Auxiliary-register preparations
//============================================================================

/// F|-xi mod M>, the Fourier image of a nonzero shift; the canonical
/// phase-kickback preparation.
struct FourierXiAux {
  std::uint64_t xi = 1;
};

/// Separable m-qubit state: tensor product of pairs[j] = (a_j, b_j) on qubit
/// j (little-endian).
struct ProductAux {
  std::vector<std::array<complex, 2>> pairs;
};

/// Arbitrary length-M unit vector.
struct VectorAux {
  std::vector<complex> amps;
};

using AuxSpec = std::variant<FourierXiAux, ProductAux, VectorAux>;

/// Expands an AuxSpec into the length-M initial auxiliary vector, validating
/// normalization (1e-12) and the nonzero-xi requirement.
std::vector<complex> prepare_aux(const AuxSpec& spec, std::uint32_t m);

//============================================================================
// Reports
//============================================================================

/// Interference transform applied to the control register. Fourier uses the
/// inverse transform on the way out (both variants agree at y = 0, where the
/// decision is read); FourierForward applies the forward kernel twice.
enum class Transform { Walsh, Fourier, FourierForward };

const char* to_string(Transform t);

inline constexpr const char* kDecisionNotEvenly = "not-evenly-distributed";
inline constexpr const char* kDecisionNonconstant = "nonconstant";
inline constexpr const char* kDecisionPromiseViolated =
    "promise-violated: outcome heuristic";

struct RunReport {
  std::string algorithm;
  RegisterShape shape;
  std::string transform;
  AuxSpec aux = FourierXiAux{1};
  std::optional<std::uint64_t> xi;

  /// Final control-register amplitudes from the dense simulation (auxiliary
  /// factor projected out).
  std::vector<complex> control_amplitudes;
  /// Same amplitudes from the direct analytic sum; the independent oracle.
  std::vector<complex> analytic_amplitudes;
  /// Exact marginal distribution of the control register.
  std::vector<double> control_distribution;
  /// Sampled counts (empty when shots == 0).
  std::vector<std::uint64_t> histogram;

  double p_zero = 0.0;
  std::string decision;
  std::string promise_class;
  /// Threshold outcome when the promise is violated; empty otherwise.
  std::string heuristic_decision;
  double aux_fidelity = 0.0;
  int oracle_calls = 0;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
};

//============================================================================
// Decision algorithms
//============================================================================

/**
 * @brief One-oracle-call decision run: control |0^n>, auxiliary F|-xi>,
 * interfere / U_f (mod-M addition) / interfere back, measure control.
 *
 * Decision: not-evenly-distributed when P(0^n) > 1/2, nonconstant otherwise.
 * xi must be nonzero mod M; values with gcd(xi, K) > 1 weaken the
 * cancellation, so callers default to xi = 1 which is valid for every K >= 2.
 */
RunReport run_gdj1(const FunctionTable& f, std::uint64_t xi = 1,
                   Transform transform = Transform::Walsh, std::uint64_t shots = 0,
                   std::uint64_t seed = 0);

/**
 * @brief Boolean-range (m = 1) run with an arbitrary, never-initialized
 * auxiliary qubit a|0> + b|1>: W, U_f, sigma_z, U_f, sigma_z, W.
 *
 * Two oracle calls; the auxiliary returns to its initial state exactly and
 * the control distribution is independent of (a, b).
 */
RunReport run_dj_uninit(const FunctionTable& f, complex a, complex b,
                        std::uint64_t shots = 0, std::uint64_t seed = 0);

/**
 * @brief Bitwise-oracle run for a separable (product) auxiliary register:
 * W, U_f^xor, sigma_z^m, U_f^xor, sigma_z^m, W.
 *
 * Two oracle calls; restores the auxiliary product state and decides on the
 * parity-composed function.
 */
RunReport run_gdj2(const FunctionTable& f, const ProductAux& aux,
                   Transform transform = Transform::Walsh, std::uint64_t shots = 0,
                   std::uint64_t seed = 0);

//============================================================================
// Analytic amplitude oracles (direct sums; independent of the simulator)
//============================================================================

/// S_y = (1/N) sum_x (-1)^{x.y} omega_M^{xi f(x)}.
complex analytic_sy(const FunctionTable& f, std::uint64_t xi, std::uint64_t y);

/// S'_y = (1/N) sum_x (-1)^{x.y} (-1)^{p(f(x))}.
double analytic_sy_prime(const FunctionTable& f, std::uint64_t y);

//============================================================================
// Phase-kickback condition checks
//============================================================================

struct KickbackReport {
  bool matches = false;
  double residual = 0.0;
  /// True when the comparison is degenerate (constant function / constant
  /// bit positions) and the a = -b locus is not forced.
  bool degenerate = false;
  /// Bit positions j where f(x)_j is the same for every x.
  std::uint64_t constant_bit_mask = 0;
};

/// Tests whether U_f (W (x) I) (|0^n> (x) (a|0>+b|1>)) already equals
/// (1/sqrt(N)) sum_x (-1)^{f(x)} |x> (x) (a|0>+b|1>); true exactly on the
/// a = -b locus for nonconstant f.
KickbackReport check_kickback_condition(complex a, complex b, const FunctionTable& f);

/// Bitwise analogue: the single U_f^xor application realizes the
/// (-1)^{p(f(x))} phase iff a_j = -b_j for every non-degenerate qubit j.
KickbackReport check_kickback_condition_bitwise(const ProductAux& aux,
                                                const FunctionTable& f);

//============================================================================
// Spacing recovery
//============================================================================

struct PeriodReport {
  RegisterShape shape;
  std::vector<std::uint64_t> samples;
  std::uint64_t recovered_k = 0;
  std::uint64_t recovered_mu = 0;
  bool success = false;
  /// All samples were zero (g = M); the range carries no spacing signal.
  bool inconclusive = false;
  /// Probability of the control register interfering back to |0^n>, the
  /// event the auxiliary read-out is conditioned on.
  double postselect_probability = 0.0;
  /// Exact conditional outcome distribution of the auxiliary register.
  std::vector<double> distribution;
  int oracle_calls = 0;
  std::uint64_t seed = 0;
};

/**
 * @brief Recovers the range spacing mu of an evenly distributed function.
 *
 * Each of the r samples runs one preparation: uniform control (x) |0>, one
 * U_f evaluation, then the auxiliary register is read in the Fourier basis
 * conditioned on the control register interfering back to the uniform state
 * (the unconditioned auxiliary marginal is flat and carries no information).
 * For an evenly distributed f the conditional outcome is uniform over the
 * multiples of K and independent of the shift t; gcd of the samples with M
 * recovers K, and mu = M/K.
 */
PeriodReport find_mu(const FunctionTable& f, std::uint32_t samples = 8,
                     std::uint64_t seed = 0);

}  // namespace gdj
