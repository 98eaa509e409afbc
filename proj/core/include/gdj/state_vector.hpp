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
 * Dense complex state vector over the joint control (x) auxiliary basis and
 * the unitary operations the algorithms are composed of.
 */
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gdj/function_table.hpp"
#include "gdj/types.hpp"

namespace gdj {

/// Exact-mode phase transform multiplies |x> by omega_M^{xi*f(x)}; parity
/// mode by (-1)^{p(f(x))}.
enum class PhaseMode { Exact, Parity };

/// Direct is the O(D^2) kernel sum (the ground-truth path); Butterfly is the
/// O(D log D) radix-2 evaluation cross-checked against it.
enum class QftPath { Direct, Butterfly };

/// The D complex roots of unity omega_D^k = e^{2*pi*i*k/D}, with the quarter
/// points snapped to exact values. Powers are taken by index arithmetic mod D
/// so that omega_D^{a+D} == omega_D^a holds bit-exactly.
std::vector<complex> roots_of_unity(std::uint64_t d);

/**
 * @brief Dense state vector of N*M complex amplitudes.
 *
 * Index convention: flat index = x*M + z with x the control index and z the
 * auxiliary index, bits little-endian within each register. All apply_*
 * methods act in place and preserve the L2 norm.
 */
class StateVector {
 public:
  /// |0^n> (x) |0^m>.
  explicit StateVector(RegisterShape shape);

  /// Basis state |x> (x) |z>; indices are bounds-checked.
  static StateVector basis(RegisterShape shape, std::uint64_t x, std::uint64_t z);

  /// Product state from a length-N control factor and a length-M auxiliary
  /// factor.
  static StateVector from_product(RegisterShape shape, std::span<const complex> control,
                                  std::span<const complex> aux);

  /// Wraps an explicit amplitude array (length N*M).
  static StateVector from_amplitudes(RegisterShape shape, std::vector<complex> amps);

  const RegisterShape& shape() const { return shape_; }
  std::uint64_t dim() const { return amps_.size(); }

  complex amp(std::uint64_t x, std::uint64_t z) const;
  const complex& operator[](std::uint64_t flat) const { return amps_[flat]; }
  complex& operator[](std::uint64_t flat) { return amps_[flat]; }
  std::span<const complex> amplitudes() const { return amps_; }

  double norm() const;

  //--------------------------------------------------------------------------
  // Unitaries
  //--------------------------------------------------------------------------

  /// W_n (x) I: amp'(y,z) = (1/sqrt(N)) sum_x (-1)^{x.y} amp(x,z), where x.y
  /// is the bitwise dot product mod 2.
  void apply_walsh_control();

  /// Fourier transform on one register: amp'(y) = (1/sqrt(D)) sum_x
  /// omega_D^{xy} amp(x); conjugated kernel when inverse is set.
  void apply_qft(Register target, bool inverse = false, QftPath path = QftPath::Direct);

  /// U_f: |x>|z> -> |x>|z + f(x) mod M>.
  void apply_oracle_add(const FunctionTable& f);

  /// Bitwise U_f: |x>|z> -> |x>|z XOR f(x)>; self-inverse.
  void apply_oracle_xor(const FunctionTable& f);

  /// I (x) sigma_z^{tensor m}: amp'(x,z) = (-1)^{popcount(z)} amp(x,z).
  void apply_pauli_z_aux();

  /// f-dependent phase on the control register; auxiliary untouched. This is
  /// the structured fast path that realizes the phase-oracle sandwich without
  /// simulating the auxiliary register.
  void apply_phase_transform(const FunctionTable& f, std::uint64_t xi, PhaseMode mode);

 private:
  void check_table(const FunctionTable& f) const;

  RegisterShape shape_;
  std::vector<complex> amps_;
};

//============================================================================
// Measurement and contractions
//============================================================================

struct MeasureResult {
  /// Exact marginal probabilities of the target register (the other register
  /// is traced out).
  std::vector<double> probabilities;
  /// Sampled counts per outcome; empty when shots == 0.
  std::vector<std::uint64_t> histogram;
};

/// Exact marginal of `target` plus, for shots > 0, a seed-reproducible
/// sampled histogram.
MeasureResult measure_register(const StateVector& state, Register target,
                               std::uint64_t shots, std::uint64_t seed);

/// Draws `shots` outcomes from an explicit distribution; the companion
/// primitive behind measure_register, exposed for conditional measurements.
std::vector<std::uint64_t> sample_outcomes(std::span<const double> probabilities,
                                           std::uint64_t shots, std::uint64_t seed);

/// Contracts the auxiliary register against <bra|: returns the length-N
/// vector c_x = sum_z conj(bra_z) amp(x,z).
std::vector<complex> contract_aux(const StateVector& state, std::span<const complex> bra);

/// Contracts the control register against <bra|: returns the length-M vector
/// v_z = sum_x conj(bra_x) amp(x,z).
std::vector<complex> contract_control(const StateVector& state,
                                      std::span<const complex> bra);

/// <psi| rho_aux |psi> for the reduced auxiliary state; equals
/// |<psi|Psi_final>|^2 whenever the joint state factorizes.
double aux_fidelity(const StateVector& state, std::span<const complex> psi);

/// Haar-ish random normalized state (Gaussian amplitudes); test utility.
StateVector random_state(RegisterShape shape, std::uint64_t seed);

//============================================================================
// Factored representation
//============================================================================

/**
 * @brief Product-form state: a length-N control factor and a length-M
 * auxiliary factor. Valid only while a fast path can claim factorization;
 * expand() gives the dense equivalent.
 */
struct FactoredState {
  RegisterShape shape;
  std::vector<complex> control;
  std::vector<complex> aux;

  FactoredState(RegisterShape s, std::vector<complex> c, std::vector<complex> a);

  StateVector expand() const;

  /// Same contract as StateVector::apply_phase_transform, on the control
  /// factor alone.
  void apply_phase_transform(const FunctionTable& f, std::uint64_t xi, PhaseMode mode);
};

}  // namespace gdj
