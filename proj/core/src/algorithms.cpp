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

#include "gdj/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gdj {

namespace {

std::vector<complex> basis_control(std::uint64_t n_dim) {
  std::vector<complex> v(n_dim, complex{0.0, 0.0});
  v[0] = {1.0, 0.0};
  return v;
}

int walsh_sign(std::uint64_t x, std::uint64_t y) {
  return parity_of(x & y) ? -1 : 1;
}

/// Direct-sum control amplitude for the chosen interference kernel; the
/// Fourier kernels act in the control register's own dimension N.
complex analytic_amplitude(const FunctionTable& f, std::uint64_t y, Transform transform,
                           std::optional<std::uint64_t> xi) {
  const std::uint64_t n_dim = f.domain_size();
  const std::uint64_t m_dim = f.range_size();
  const auto roots_m = roots_of_unity(m_dim);
  const auto roots_n = roots_of_unity(n_dim);

  complex acc{0.0, 0.0};
  for (std::uint64_t x = 0; x < n_dim; ++x) {
    complex phase;
    if (xi) {
      phase = roots_m[(*xi % m_dim) * f.value(x) % m_dim];
    } else {
      phase = parity_of(f.value(x)) ? complex{-1.0, 0.0} : complex{1.0, 0.0};
    }
    complex kernel;
    switch (transform) {
      case Transform::Walsh:
        kernel = {static_cast<double>(walsh_sign(x, y)), 0.0};
        break;
      case Transform::Fourier:
        kernel = std::conj(roots_n[(x * y) % n_dim]);
        break;
      case Transform::FourierForward:
        kernel = roots_n[(x * y) % n_dim];
        break;
    }
    acc += kernel * phase;
  }
  return acc / static_cast<double>(n_dim);
}

void apply_interference(StateVector& state, Transform transform, bool outgoing) {
  switch (transform) {
    case Transform::Walsh:
      state.apply_walsh_control();
      break;
    case Transform::Fourier:
      state.apply_qft(Register::Control, /*inverse=*/outgoing);
      break;
    case Transform::FourierForward:
      state.apply_qft(Register::Control, /*inverse=*/false);
      break;
  }
}

/// Fills the measurement- and decision-related fields shared by all runs.
void finalize_report(RunReport& report, const StateVector& state,
                     std::span<const complex> aux_initial, const FunctionTable& f,
                     std::uint64_t shots, std::uint64_t seed) {
  report.control_amplitudes = contract_aux(state, aux_initial);
  report.aux_fidelity = 0.0;
  for (const complex& c : report.control_amplitudes) {
    report.aux_fidelity += std::norm(c);
  }

  const MeasureResult measured = measure_register(state, Register::Control, shots, seed);
  report.control_distribution = measured.probabilities;
  report.histogram = measured.histogram;
  report.p_zero = measured.probabilities[0];
  report.shots = shots;
  report.seed = seed;

  const Classification cls = classify_function(f);
  report.promise_class = to_string(cls.cls);
  const char* threshold_outcome =
      report.p_zero > 0.5 ? kDecisionNotEvenly : kDecisionNonconstant;
  if (cls.cls == PromiseClass::Neither) {
    report.decision = kDecisionPromiseViolated;
    report.heuristic_decision = threshold_outcome;
  } else {
    report.decision = threshold_outcome;
  }
}

void check_unit_pair(const complex& a, const complex& b) {
  const double norm2 = std::norm(a) + std::norm(b);
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw PreconditionError("auxiliary pair must satisfy |a|^2 + |b|^2 = 1, got " +
                            std::to_string(norm2));
  }
}

}  // namespace

std::vector<complex> prepare_aux(const AuxSpec& spec, std::uint32_t m) {
  const std::uint64_t m_dim = std::uint64_t{1} << m;

  if (const auto* fourier = std::get_if<FourierXiAux>(&spec)) {
    if (fourier->xi % m_dim == 0) {
      throw PreconditionError(
          "xi must be nonzero mod M: xi=0 leaves every oracle phase trivial");
    }
    const auto roots = roots_of_unity(m_dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m_dim));
    std::vector<complex> psi(m_dim);
    for (std::uint64_t z = 0; z < m_dim; ++z) {
      psi[z] = std::conj(roots[(fourier->xi % m_dim) * z % m_dim]) * scale;
    }
    return psi;
  }

  if (const auto* product = std::get_if<ProductAux>(&spec)) {
    if (product->pairs.size() != m) {
      throw PreconditionError("product auxiliary state needs exactly m=" +
                              std::to_string(m) + " qubit pairs, got " +
                              std::to_string(product->pairs.size()));
    }
    for (const auto& pair : product->pairs) {
      check_unit_pair(pair[0], pair[1]);
    }
    std::vector<complex> psi(m_dim);
    for (std::uint64_t z = 0; z < m_dim; ++z) {
      complex amp{1.0, 0.0};
      for (std::uint32_t j = 0; j < m; ++j) {
        amp *= product->pairs[j][(z >> j) & 1];
      }
      psi[z] = amp;
    }
    return psi;
  }

  const auto& vec = std::get<VectorAux>(spec);
  if (vec.amps.size() != m_dim) {
    throw PreconditionError("auxiliary vector must have length M=" +
                            std::to_string(m_dim));
  }
  double norm2 = 0.0;
  for (const auto& a : vec.amps) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw PreconditionError("auxiliary vector must be normalized, |psi|^2=" +
                            std::to_string(norm2));
  }
  return vec.amps;
}

const char* to_string(Transform t) {
  switch (t) {
    case Transform::Walsh:
      return "walsh";
    case Transform::Fourier:
      return "fourier";
    case Transform::FourierForward:
      return "fourier-forward";
  }
  return "unknown";
}

RunReport run_gdj1(const FunctionTable& f, std::uint64_t xi, Transform transform,
                   std::uint64_t shots, std::uint64_t seed) {
  const RegisterShape shape = f.shape();
  const std::uint64_t xi_mod = xi % shape.aux_dim();
  const AuxSpec aux = FourierXiAux{xi_mod};
  const std::vector<complex> psi = prepare_aux(aux, shape.m());  // rejects xi = 0

  StateVector state =
      StateVector::from_product(shape, basis_control(shape.control_dim()), psi);
  int oracle_calls = 0;

  apply_interference(state, transform, /*outgoing=*/false);
  state.apply_oracle_add(f);
  ++oracle_calls;
  apply_interference(state, transform, /*outgoing=*/true);

  RunReport report;
  report.algorithm = "gdj1";
  report.shape = shape;
  report.transform = to_string(transform);
  report.aux = aux;
  report.xi = xi_mod;
  report.oracle_calls = oracle_calls;
  finalize_report(report, state, psi, f, shots, seed);

  report.analytic_amplitudes.resize(shape.control_dim());
  for (std::uint64_t y = 0; y < shape.control_dim(); ++y) {
    report.analytic_amplitudes[y] = analytic_amplitude(f, y, transform, xi_mod);
  }
  return report;
}

RunReport run_dj_uninit(const FunctionTable& f, complex a, complex b,
                        std::uint64_t shots, std::uint64_t seed) {
  if (f.m() != 1) {
    throw PreconditionError("the uninitialized-auxiliary run requires a Boolean "
                            "function table (m=1), got m=" +
                            std::to_string(f.m()));
  }
  check_unit_pair(a, b);
  const RegisterShape shape = f.shape();
  const std::vector<complex> psi{a, b};

  StateVector state =
      StateVector::from_product(shape, basis_control(shape.control_dim()), psi);
  int oracle_calls = 0;

  state.apply_walsh_control();
  state.apply_oracle_add(f);
  ++oracle_calls;
  state.apply_pauli_z_aux();
  state.apply_oracle_add(f);
  ++oracle_calls;
  state.apply_pauli_z_aux();
  state.apply_walsh_control();

  RunReport report;
  report.algorithm = "dj-uninit";
  report.shape = shape;
  report.transform = to_string(Transform::Walsh);
  report.aux = ProductAux{{{a, b}}};
  report.oracle_calls = oracle_calls;
  finalize_report(report, state, psi, f, shots, seed);

  report.analytic_amplitudes.resize(shape.control_dim());
  for (std::uint64_t y = 0; y < shape.control_dim(); ++y) {
    report.analytic_amplitudes[y] = {analytic_sy_prime(f, y), 0.0};
  }
  return report;
}

RunReport run_gdj2(const FunctionTable& f, const ProductAux& aux, Transform transform,
                   std::uint64_t shots, std::uint64_t seed) {
  const RegisterShape shape = f.shape();
  const std::vector<complex> psi = prepare_aux(aux, shape.m());

  StateVector state =
      StateVector::from_product(shape, basis_control(shape.control_dim()), psi);
  int oracle_calls = 0;

  apply_interference(state, transform, /*outgoing=*/false);
  state.apply_oracle_xor(f);
  ++oracle_calls;
  state.apply_pauli_z_aux();
  state.apply_oracle_xor(f);
  ++oracle_calls;
  state.apply_pauli_z_aux();
  apply_interference(state, transform, /*outgoing=*/true);

  RunReport report;
  report.algorithm = "gdj2";
  report.shape = shape;
  report.transform = to_string(transform);
  report.aux = aux;
  report.oracle_calls = oracle_calls;
  finalize_report(report, state, psi, f, shots, seed);

  report.analytic_amplitudes.resize(shape.control_dim());
  for (std::uint64_t y = 0; y < shape.control_dim(); ++y) {
    report.analytic_amplitudes[y] = analytic_amplitude(f, y, transform, std::nullopt);
  }
  return report;
}

complex analytic_sy(const FunctionTable& f, std::uint64_t xi, std::uint64_t y) {
  return analytic_amplitude(f, y, Transform::Walsh, xi);
}

double analytic_sy_prime(const FunctionTable& f, std::uint64_t y) {
  const std::uint64_t n_dim = f.domain_size();
  double acc = 0.0;
  for (std::uint64_t x = 0; x < n_dim; ++x) {
    const int sign = walsh_sign(x, y) * (parity_of(f.value(x)) ? -1 : 1);
    acc += static_cast<double>(sign);
  }
  return acc / static_cast<double>(n_dim);
}

namespace {

double l2_residual(const StateVector& lhs, const StateVector& rhs) {
  double sum = 0.0;
  for (std::uint64_t i = 0; i < lhs.dim(); ++i) {
    sum += std::norm(lhs[i] - rhs[i]);
  }
  return std::sqrt(sum);
}

std::uint64_t constant_bits(const FunctionTable& f) {
  std::uint64_t varying = 0;
  const std::uint64_t first = f.value(0);
  for (std::uint64_t x = 1; x < f.domain_size(); ++x) {
    varying |= f.value(x) ^ first;
  }
  return ~varying & (f.range_size() - 1);
}

}  // namespace

KickbackReport check_kickback_condition(complex a, complex b, const FunctionTable& f) {
  if (f.m() != 1) {
    throw PreconditionError("kickback condition check requires m=1");
  }
  check_unit_pair(a, b);
  const RegisterShape shape = f.shape();
  const std::uint64_t n_dim = shape.control_dim();
  const std::vector<complex> psi{a, b};

  StateVector lhs = StateVector::from_product(shape, basis_control(n_dim), psi);
  lhs.apply_walsh_control();
  lhs.apply_oracle_add(f);

  const double scale = 1.0 / std::sqrt(static_cast<double>(n_dim));
  std::vector<complex> target(n_dim * 2);
  for (std::uint64_t x = 0; x < n_dim; ++x) {
    const double sign = f.value(x) ? -1.0 : 1.0;
    target[x * 2] = sign * scale * a;
    target[x * 2 + 1] = sign * scale * b;
  }
  const StateVector rhs = StateVector::from_amplitudes(shape, std::move(target));

  KickbackReport report;
  report.residual = l2_residual(lhs, rhs);
  report.matches = report.residual <= kAmplitudeTolerance;
  report.constant_bit_mask = constant_bits(f);
  report.degenerate = report.constant_bit_mask != 0;
  return report;
}

KickbackReport check_kickback_condition_bitwise(const ProductAux& aux,
                                                const FunctionTable& f) {
  const RegisterShape shape = f.shape();
  const std::uint64_t n_dim = shape.control_dim();
  const std::uint64_t m_dim = shape.aux_dim();
  const std::vector<complex> psi = prepare_aux(aux, shape.m());

  StateVector lhs = StateVector::from_product(shape, basis_control(n_dim), psi);
  lhs.apply_walsh_control();
  lhs.apply_oracle_xor(f);

  const double scale = 1.0 / std::sqrt(static_cast<double>(n_dim));
  std::vector<complex> target(n_dim * m_dim);
  for (std::uint64_t x = 0; x < n_dim; ++x) {
    const double sign = parity_of(f.value(x)) ? -1.0 : 1.0;
    for (std::uint64_t z = 0; z < m_dim; ++z) {
      target[x * m_dim + z] = sign * scale * psi[z];
    }
  }
  const StateVector rhs = StateVector::from_amplitudes(shape, std::move(target));

  KickbackReport report;
  report.residual = l2_residual(lhs, rhs);
  report.matches = report.residual <= kAmplitudeTolerance;
  report.constant_bit_mask = constant_bits(f);
  report.degenerate = report.constant_bit_mask != 0;
  return report;
}

PeriodReport find_mu(const FunctionTable& f, std::uint32_t samples, std::uint64_t seed) {
  if (samples < 1) {
    throw PreconditionError("find_mu needs at least one sample");
  }
  const RegisterShape shape = f.shape();
  const std::uint64_t n_dim = shape.control_dim();
  const std::uint64_t m_dim = shape.aux_dim();

  // One preparation: uniform control (x) |0>, one oracle evaluation. All
  // preparations are identical, so the dense state is computed once; the
  // call count records one evaluation per sample.
  StateVector state = StateVector::basis(shape, 0, 0);
  state.apply_walsh_control();
  state.apply_oracle_add(f);

  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n_dim));
  const std::vector<complex> uniform(n_dim, complex{inv_sqrt_n, 0.0});
  std::vector<complex> aux_vec = contract_control(state, uniform);

  double post_prob = 0.0;
  for (const auto& a : aux_vec) post_prob += std::norm(a);
  const double renorm = 1.0 / std::sqrt(post_prob);
  for (auto& a : aux_vec) a *= renorm;

  // Fourier read-out of the conditioned auxiliary register.
  const auto roots = roots_of_unity(m_dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(m_dim));
  std::vector<double> distribution(m_dim, 0.0);
  for (std::uint64_t z = 0; z < m_dim; ++z) {
    complex acc{0.0, 0.0};
    for (std::uint64_t v = 0; v < m_dim; ++v) {
      acc += roots[(v * z) % m_dim] * aux_vec[v];
    }
    distribution[z] = std::norm(acc * scale);
  }

  PeriodReport report;
  report.shape = shape;
  report.seed = seed;
  report.postselect_probability = post_prob;
  report.distribution = distribution;
  report.samples = sample_outcomes(distribution, samples, seed);
  report.oracle_calls = static_cast<int>(samples);

  std::uint64_t g = m_dim;
  for (std::uint64_t s : report.samples) g = std::gcd(g, s);
  report.recovered_k = g;
  report.recovered_mu = m_dim / g;
  report.inconclusive =
      std::all_of(report.samples.begin(), report.samples.end(),
                  [](std::uint64_t s) { return s == 0; });

  const Classification cls = classify_function(f);
  report.success =
      cls.cls != PromiseClass::Neither && report.recovered_mu == cls.mu;
  return report;
}

}  // namespace gdj
