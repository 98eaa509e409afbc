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

#include "gdj/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>

namespace gdj {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double uniform_unit(std::mt19937_64& rng) {
  // 53-bit mantissa draw; identical across platforms for a fixed seed.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// In-place DFT of a contiguous span: out[y] = (1/sqrt(D)) sum_x w^{xy} in[x],
// kernel conjugated when inverse is set.
void dft_span(std::span<complex> data, const std::vector<complex>& roots, bool inverse,
              QftPath path) {
  const std::uint64_t d = data.size();
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));

  if (path == QftPath::Direct) {
    std::vector<complex> in(data.begin(), data.end());
    for (std::uint64_t y = 0; y < d; ++y) {
      complex acc{0.0, 0.0};
      for (std::uint64_t x = 0; x < d; ++x) {
        complex w = roots[(x * y) % d];
        if (inverse) w = std::conj(w);
        acc += w * in[x];
      }
      data[y] = acc * scale;
    }
    return;
  }

  // Radix-2 decimation-in-time butterfly; same positive-exponent kernel.
  std::uint64_t j = 0;
  for (std::uint64_t i = 1; i < d; ++i) {
    std::uint64_t bit = d >> 1;
    while (j & bit) {
      j ^= bit;
      bit >>= 1;
    }
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::uint64_t len = 2; len <= d; len <<= 1) {
    const std::uint64_t step = d / len;
    for (std::uint64_t base = 0; base < d; base += len) {
      for (std::uint64_t k = 0; k < len / 2; ++k) {
        complex w = roots[(k * step) % d];
        if (inverse) w = std::conj(w);
        const complex u = data[base + k];
        const complex v = data[base + k + len / 2] * w;
        data[base + k] = u + v;
        data[base + k + len / 2] = u - v;
      }
    }
  }
  for (auto& a : data) a *= scale;
}

}  // namespace

std::vector<complex> roots_of_unity(std::uint64_t d) {
  if (d == 0) {
    throw PreconditionError("roots_of_unity requires d >= 1");
  }
  std::vector<complex> roots(d);
  for (std::uint64_t k = 0; k < d; ++k) {
    if ((k * 4) % d == 0) {
      switch ((k * 4) / d) {
        case 0: roots[k] = {1.0, 0.0}; continue;
        case 1: roots[k] = {0.0, 1.0}; continue;
        case 2: roots[k] = {-1.0, 0.0}; continue;
        case 3: roots[k] = {0.0, -1.0}; continue;
      }
    }
    roots[k] = std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(d));
  }
  return roots;
}

StateVector::StateVector(RegisterShape shape)
    : shape_(shape), amps_(shape.joint_dim(), complex{0.0, 0.0}) {
  amps_[0] = {1.0, 0.0};
}

StateVector StateVector::basis(RegisterShape shape, std::uint64_t x, std::uint64_t z) {
  if (x >= shape.control_dim()) {
    throw PreconditionError("control index " + std::to_string(x) +
                            " out of range, N=" + std::to_string(shape.control_dim()));
  }
  if (z >= shape.aux_dim()) {
    throw PreconditionError("auxiliary index " + std::to_string(z) +
                            " out of range, M=" + std::to_string(shape.aux_dim()));
  }
  StateVector state(shape);
  state.amps_[0] = {0.0, 0.0};
  state.amps_[x * shape.aux_dim() + z] = {1.0, 0.0};
  return state;
}

StateVector StateVector::from_product(RegisterShape shape, std::span<const complex> control,
                                      std::span<const complex> aux) {
  const std::uint64_t N = shape.control_dim();
  const std::uint64_t M = shape.aux_dim();
  if (control.size() != N || aux.size() != M) {
    throw PreconditionError("product factors must have lengths N=" + std::to_string(N) +
                            " and M=" + std::to_string(M));
  }
  std::vector<complex> amps(N * M);
  for (std::uint64_t x = 0; x < N; ++x) {
    for (std::uint64_t z = 0; z < M; ++z) {
      amps[x * M + z] = control[x] * aux[z];
    }
  }
  StateVector state(shape);
  state.amps_ = std::move(amps);
  return state;
}

StateVector StateVector::from_amplitudes(RegisterShape shape, std::vector<complex> amps) {
  if (amps.size() != shape.joint_dim()) {
    throw PreconditionError("amplitude array must have length N*M=" +
                            std::to_string(shape.joint_dim()));
  }
  StateVector state(shape);
  state.amps_ = std::move(amps);
  return state;
}

complex StateVector::amp(std::uint64_t x, std::uint64_t z) const {
  const std::uint64_t M = shape_.aux_dim();
  if (x >= shape_.control_dim() || z >= M) {
    throw PreconditionError("amplitude index (" + std::to_string(x) + "," +
                            std::to_string(z) + ") out of range");
  }
  return amps_[x * M + z];
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

void StateVector::check_table(const FunctionTable& f) const {
  if (!(f.shape() == shape_)) {
    throw PreconditionError("function table shape (n=" + std::to_string(f.n()) + ",m=" +
                            std::to_string(f.m()) + ") does not match state shape (n=" +
                            std::to_string(shape_.n()) + ",m=" +
                            std::to_string(shape_.m()) + ")");
  }
}

void StateVector::apply_walsh_control() {
  const std::uint64_t N = shape_.control_dim();
  const std::uint64_t M = shape_.aux_dim();
  for (std::uint32_t b = 0; b < shape_.n(); ++b) {
    const std::uint64_t mask = std::uint64_t{1} << b;
    for (std::uint64_t x = 0; x < N; ++x) {
      if (x & mask) continue;
      complex* lo = amps_.data() + x * M;
      complex* hi = amps_.data() + (x | mask) * M;
      for (std::uint64_t z = 0; z < M; ++z) {
        const complex u = lo[z];
        const complex v = hi[z];
        lo[z] = u + v;
        hi[z] = u - v;
      }
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(N));
  for (auto& a : amps_) a *= scale;
}

void StateVector::apply_qft(Register target, bool inverse, QftPath path) {
  const std::uint64_t N = shape_.control_dim();
  const std::uint64_t M = shape_.aux_dim();
  const std::uint64_t d = shape_.dim(target);
  const auto roots = roots_of_unity(d);

  if (target == Register::Auxiliary) {
    for (std::uint64_t x = 0; x < N; ++x) {
      dft_span(std::span<complex>(amps_.data() + x * M, M), roots, inverse, path);
    }
  } else {
    std::vector<complex> column(N);
    for (std::uint64_t z = 0; z < M; ++z) {
      for (std::uint64_t x = 0; x < N; ++x) column[x] = amps_[x * M + z];
      dft_span(column, roots, inverse, path);
      for (std::uint64_t x = 0; x < N; ++x) amps_[x * M + z] = column[x];
    }
  }
}

void StateVector::apply_oracle_add(const FunctionTable& f) {
  check_table(f);
  const std::uint64_t N = shape_.control_dim();
  const std::uint64_t M = shape_.aux_dim();
  std::vector<complex> slice(M);
  for (std::uint64_t x = 0; x < N; ++x) {
    const std::uint64_t s = f.value(x);
    if (s == 0) continue;
    complex* row = amps_.data() + x * M;
    for (std::uint64_t z = 0; z < M; ++z) {
      slice[(z + s) % M] = row[z];
    }
    std::copy(slice.begin(), slice.end(), row);
  }
}

void StateVector::apply_oracle_xor(const FunctionTable& f) {
  check_table(f);
  const std::uint64_t N = shape_.control_dim();
  const std::uint64_t M = shape_.aux_dim();
  for (std::uint64_t x = 0; x < N; ++x) {
    const std::uint64_t s = f.value(x);
    if (s == 0) continue;
    complex* row = amps_.data() + x * M;
    for (std::uint64_t z = 0; z < M; ++z) {
      const std::uint64_t w = z ^ s;
      if (z < w) std::swap(row[z], row[w]);
    }
  }
}

void StateVector::apply_pauli_z_aux() {
  const std::uint64_t N = shape_.control_dim();
  const std::uint64_t M = shape_.aux_dim();
  for (std::uint64_t x = 0; x < N; ++x) {
    complex* row = amps_.data() + x * M;
    for (std::uint64_t z = 0; z < M; ++z) {
      if (std::popcount(z) & 1) row[z] = -row[z];
    }
  }
}

void StateVector::apply_phase_transform(const FunctionTable& f, std::uint64_t xi,
                                        PhaseMode mode) {
  check_table(f);
  const std::uint64_t N = shape_.control_dim();
  const std::uint64_t M = shape_.aux_dim();
  const auto roots = roots_of_unity(M);
  for (std::uint64_t x = 0; x < N; ++x) {
    complex phase;
    if (mode == PhaseMode::Exact) {
      phase = roots[(xi % M) * f.value(x) % M];
    } else {
      phase = parity_of(f.value(x)) ? complex{-1.0, 0.0} : complex{1.0, 0.0};
    }
    complex* row = amps_.data() + x * M;
    for (std::uint64_t z = 0; z < M; ++z) row[z] *= phase;
  }
}

MeasureResult measure_register(const StateVector& state, Register target,
                               std::uint64_t shots, std::uint64_t seed) {
  const std::uint64_t N = state.shape().control_dim();
  const std::uint64_t M = state.shape().aux_dim();
  const std::uint64_t d = state.shape().dim(target);

  MeasureResult result;
  result.probabilities.assign(d, 0.0);
  for (std::uint64_t x = 0; x < N; ++x) {
    for (std::uint64_t z = 0; z < M; ++z) {
      const double p = std::norm(state[x * M + z]);
      result.probabilities[target == Register::Control ? x : z] += p;
    }
  }

  if (shots > 0) {
    result.histogram.assign(d, 0);
    for (std::uint64_t outcome : sample_outcomes(result.probabilities, shots, seed)) {
      ++result.histogram[outcome];
    }
  }
  return result;
}

std::vector<std::uint64_t> sample_outcomes(std::span<const double> probabilities,
                                           std::uint64_t shots, std::uint64_t seed) {
  std::vector<double> cumulative(probabilities.size());
  double total = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    total += probabilities[i];
    cumulative[i] = total;
  }
  if (total <= 0.0) {
    throw PreconditionError("cannot sample from an all-zero distribution");
  }

  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> outcomes;
  outcomes.reserve(shots);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = uniform_unit(rng) * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    std::uint64_t idx = static_cast<std::uint64_t>(it - cumulative.begin());
    if (idx >= cumulative.size()) idx = cumulative.size() - 1;
    outcomes.push_back(idx);
  }
  return outcomes;
}

std::vector<complex> contract_aux(const StateVector& state, std::span<const complex> bra) {
  const std::uint64_t N = state.shape().control_dim();
  const std::uint64_t M = state.shape().aux_dim();
  if (bra.size() != M) {
    throw PreconditionError("auxiliary bra must have length M=" + std::to_string(M));
  }
  std::vector<complex> out(N, complex{0.0, 0.0});
  for (std::uint64_t x = 0; x < N; ++x) {
    complex acc{0.0, 0.0};
    for (std::uint64_t z = 0; z < M; ++z) {
      acc += std::conj(bra[z]) * state[x * M + z];
    }
    out[x] = acc;
  }
  return out;
}

std::vector<complex> contract_control(const StateVector& state,
                                      std::span<const complex> bra) {
  const std::uint64_t N = state.shape().control_dim();
  const std::uint64_t M = state.shape().aux_dim();
  if (bra.size() != N) {
    throw PreconditionError("control bra must have length N=" + std::to_string(N));
  }
  std::vector<complex> out(M, complex{0.0, 0.0});
  for (std::uint64_t x = 0; x < N; ++x) {
    const complex c = std::conj(bra[x]);
    for (std::uint64_t z = 0; z < M; ++z) {
      out[z] += c * state[x * M + z];
    }
  }
  return out;
}

double aux_fidelity(const StateVector& state, std::span<const complex> psi) {
  double fidelity = 0.0;
  for (const complex& c : contract_aux(state, psi)) {
    fidelity += std::norm(c);
  }
  return fidelity;
}

StateVector random_state(RegisterShape shape, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<complex> amps(shape.joint_dim());
  double sum = 0.0;
  for (auto& a : amps) {
    a = {gauss(rng), gauss(rng)};
    sum += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(sum);
  for (auto& a : amps) a *= scale;
  return StateVector::from_amplitudes(shape, std::move(amps));
}

FactoredState::FactoredState(RegisterShape s, std::vector<complex> c, std::vector<complex> a)
    : shape(s), control(std::move(c)), aux(std::move(a)) {
  if (control.size() != shape.control_dim() || aux.size() != shape.aux_dim()) {
    throw PreconditionError("factored state requires factors of lengths N and M");
  }
}

StateVector FactoredState::expand() const {
  return StateVector::from_product(shape, control, aux);
}

void FactoredState::apply_phase_transform(const FunctionTable& f, std::uint64_t xi,
                                          PhaseMode mode) {
  if (!(f.shape() == shape)) {
    throw PreconditionError("function table shape does not match factored state shape");
  }
  const std::uint64_t M = shape.aux_dim();
  const auto roots = roots_of_unity(M);
  for (std::uint64_t x = 0; x < control.size(); ++x) {
    if (mode == PhaseMode::Exact) {
      control[x] *= roots[(xi % M) * f.value(x) % M];
    } else if (parity_of(f.value(x))) {
      control[x] = -control[x];
    }
  }
}

}  // namespace gdj
