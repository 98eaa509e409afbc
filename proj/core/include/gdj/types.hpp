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
 * Shared domain types, tolerances and error hierarchy.
 */
#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gdj {

using complex = std::complex<double>;

/// Tolerance for normalization / unitarity checks.
inline constexpr double kNormTolerance = 1e-12;
/// Tolerance for per-amplitude comparisons between independent evaluation paths.
inline constexpr double kAmplitudeTolerance = 1e-10;
/// Hard cap on n+m; a dense vector of 2^26 complex doubles is 1 GiB.
inline constexpr std::uint32_t kMaxTotalQubits = 26;

//============================================================================
// Errors
//============================================================================

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition (bad index, shape mismatch,
/// invalid parameter). CLI maps this to exit code 2.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// File or format problem. CLI maps this to exit code 4.
class IoError : public Error {
 public:
  using Error::Error;
};

//============================================================================
// Registers
//============================================================================

enum class Register { Control, Auxiliary };

/**
 * @brief Sizes of the two-register system: n control qubits (N = 2^n) and
 * m auxiliary qubits (M = 2^m).
 */
class RegisterShape {
 public:
  RegisterShape() : RegisterShape(1, 1) {}

  RegisterShape(std::uint32_t n, std::uint32_t m) : n_(n), m_(m) {
    if (n < 1 || m < 1) {
      throw PreconditionError("register shape requires n >= 1 and m >= 1, got n=" +
                              std::to_string(n) + " m=" + std::to_string(m));
    }
    if (n + m > kMaxTotalQubits) {
      throw PreconditionError("register shape n+m=" + std::to_string(n + m) +
                              " exceeds the supported maximum of " +
                              std::to_string(kMaxTotalQubits) + " qubits");
    }
  }

  std::uint32_t n() const { return n_; }
  std::uint32_t m() const { return m_; }

  /// N = 2^n.
  std::uint64_t control_dim() const { return std::uint64_t{1} << n_; }
  /// M = 2^m.
  std::uint64_t aux_dim() const { return std::uint64_t{1} << m_; }
  /// N * M.
  std::uint64_t joint_dim() const { return control_dim() * aux_dim(); }

  std::uint64_t dim(Register r) const {
    return r == Register::Control ? control_dim() : aux_dim();
  }

  friend bool operator==(const RegisterShape& a, const RegisterShape& b) {
    return a.n_ == b.n_ && a.m_ == b.m_;
  }

 private:
  std::uint32_t n_;
  std::uint32_t m_;
};

}  // namespace gdj
