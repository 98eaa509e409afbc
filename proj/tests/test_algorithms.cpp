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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "gdj/algorithms.hpp"

using gdj::complex;
using gdj::FunctionTable;
using gdj::ProductAux;
using gdj::RegisterShape;
using gdj::RunReport;
using gdj::StateVector;
using gdj::Transform;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

FunctionTable random_table(std::uint32_t n, std::uint32_t m, std::mt19937_64& rng) {
  std::vector<std::uint64_t> values(std::uint64_t{1} << n);
  for (auto& v : values) v = rng() % (std::uint64_t{1} << m);
  return FunctionTable(n, m, std::move(values));
}

std::array<complex, 2> random_pair(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  complex a{gauss(rng), gauss(rng)};
  complex b{gauss(rng), gauss(rng)};
  const double scale = 1.0 / std::sqrt(std::norm(a) + std::norm(b));
  return {a * scale, b * scale};
}

ProductAux random_product(std::uint32_t m, std::mt19937_64& rng) {
  ProductAux aux;
  for (std::uint32_t j = 0; j < m; ++j) aux.pairs.push_back(random_pair(rng));
  return aux;
}

double total_variation(const std::vector<double>& p, const std::vector<double>& q) {
  double tv = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) tv += std::abs(p[i] - q[i]);
  return tv / 2.0;
}

double distribution_sum(const RunReport& report) {
  double total = 0.0;
  for (double p : report.control_distribution) total += p;
  return total;
}

}  // namespace

TEST_CASE("gdj1 on constant functions concentrates on zero") {
  for (const Transform transform :
       {Transform::Walsh, Transform::Fourier, Transform::FourierForward}) {
    for (std::uint32_t n = 1; n <= 3; ++n) {
      for (std::uint32_t m = 1; m <= 3; ++m) {
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << m); ++c) {
          const RunReport report =
              gdj::run_gdj1(gdj::make_constant(n, m, c), 1, transform);
          CHECK(report.p_zero == doctest::Approx(1.0).epsilon(1e-12));
          CHECK(report.aux_fidelity == doctest::Approx(1.0).epsilon(1e-12));
          CHECK(report.decision == gdj::kDecisionNotEvenly);
          CHECK(report.oracle_calls == 1);
          CHECK(std::abs(std::abs(report.control_amplitudes[0]) - 1.0) <= 1e-12);
          CHECK(std::abs(distribution_sum(report) - 1.0) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("gdj1 on f=[0,2,0,2] moves all mass to y=1") {
  const FunctionTable f(2, 2, {0, 2, 0, 2});
  const RunReport report = gdj::run_gdj1(f, 1);
  CHECK(report.p_zero <= 1e-12);
  CHECK(report.control_distribution[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report.decision == gdj::kDecisionNonconstant);
  CHECK(report.promise_class == "evenly-distributed");

  // Frozen amplitudes S = [0, 1, 0, 0], from the direct sums.
  CHECK(std::abs(gdj::analytic_sy(f, 1, 0)) <= 1e-12);
  CHECK(std::abs(gdj::analytic_sy(f, 1, 1) - complex{1.0, 0.0}) <= 1e-12);
  CHECK(std::abs(gdj::analytic_sy(f, 1, 2)) <= 1e-12);
  CHECK(std::abs(gdj::analytic_sy(f, 1, 3)) <= 1e-12);
}

TEST_CASE("gdj1 cancels at zero for evenly distributed functions") {
  std::uint64_t runs = 0;
  for (std::uint32_t n = 1; n <= 3; ++n) {
    for (std::uint32_t m = 1; m <= 3; ++m) {
      const std::uint64_t n_dim = std::uint64_t{1} << n;
      const std::uint64_t m_dim = std::uint64_t{1} << m;
      for (std::uint64_t k = 2; k <= std::min(n_dim, m_dim); k <<= 1) {
        for (std::uint64_t t = 0; t < m_dim / k; ++t) {
          gdj::EvenSpec spec;
          spec.n = n;
          spec.m = m;
          spec.k = k;
          spec.t = t;
          const FunctionTable f = gdj::make_evenly_distributed(spec, runs);
          for (const Transform transform : {Transform::Walsh, Transform::Fourier}) {
            const RunReport report = gdj::run_gdj1(f, 1, transform);
            CHECK(report.p_zero <= 1e-12);
            CHECK(report.decision == gdj::kDecisionNonconstant);
          }
          ++runs;
        }
      }
    }
  }
  CHECK(runs > 10);
}

TEST_CASE("gdj1 rejects xi = 0") {
  const FunctionTable f = gdj::make_constant(2, 2, 1);
  CHECK_THROWS_AS(gdj::run_gdj1(f, 0), gdj::PreconditionError);
  CHECK_THROWS_AS(gdj::run_gdj1(f, 4), gdj::PreconditionError);  // 4 mod M == 0
}

TEST_CASE("analytic S_y") {
  SUBCASE("constant functions") {
    for (std::uint64_t c = 0; c < 4; ++c) {
      const FunctionTable f = gdj::make_constant(2, 2, c);
      for (std::uint64_t xi = 1; xi < 4; ++xi) {
        const complex s0 = gdj::analytic_sy(f, xi, 0);
        CHECK(std::abs(std::abs(s0) - 1.0) <= 1e-12);
        const complex expected =
            std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(xi * c) / 4.0);
        CHECK(std::abs(s0 - expected) <= 1e-12);
        for (std::uint64_t y = 1; y < 4; ++y) {
          CHECK(std::abs(gdj::analytic_sy(f, xi, y)) <= 1e-12);
        }
      }
    }
  }

  SUBCASE("evenly distributed functions vanish at zero unless K divides xi") {
    // K = 2, M = 8: values {t, 4+t}.
    for (std::uint64_t t = 0; t < 4; ++t) {
      gdj::EvenSpec spec;
      spec.n = 2;
      spec.m = 3;
      spec.k = 2;
      spec.t = t;
      const FunctionTable f = gdj::make_evenly_distributed(spec, t);
      CHECK(std::abs(gdj::analytic_sy(f, 1, 0)) <= 1e-12);
      CHECK(std::abs(gdj::analytic_sy(f, 3, 0)) <= 1e-12);
      // xi divisible by K: the inner geometric sum no longer cancels.
      CHECK(std::abs(gdj::analytic_sy(f, 2, 0)) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("uninitialized-auxiliary run") {
  SUBCASE("initialized (1,0) on the balanced [0,1]") {
    const FunctionTable f(1, 1, {0, 1});
    const RunReport report = gdj::run_dj_uninit(f, {1.0, 0.0}, {0.0, 0.0});
    CHECK(report.p_zero <= 1e-12);
    CHECK(report.control_distribution[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.aux_fidelity == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.oracle_calls == 2);
    CHECK(report.decision == gdj::kDecisionNonconstant);
  }

  SUBCASE("with a = -b the sandwich after the first oracle acts as identity") {
    std::mt19937_64 rng(7);
    const FunctionTable f = random_table(3, 1, rng);
    const RegisterShape shape(3, 1);
    const std::vector<complex> psi{{kInvSqrt2, 0.0}, {-kInvSqrt2, 0.0}};
    std::vector<complex> e0(shape.control_dim(), complex{0.0, 0.0});
    e0[0] = {1.0, 0.0};

    StateVector state = StateVector::from_product(shape, e0, psi);
    state.apply_walsh_control();
    state.apply_oracle_add(f);
    const StateVector after_first_call = state;

    state.apply_pauli_z_aux();
    state.apply_oracle_add(f);
    state.apply_pauli_z_aux();
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
      CHECK(std::abs(state[i] - after_first_call[i]) <= 1e-12);
    }
  }

  SUBCASE("control distribution is independent of the auxiliary state") {
    std::mt19937_64 rng(8);
    const FunctionTable f = random_table(4, 1, rng);
    const RunReport reference = gdj::run_dj_uninit(f, {1.0, 0.0}, {0.0, 0.0});
    for (int trial = 0; trial < 20; ++trial) {
      const auto [a, b] = random_pair(rng);
      const RunReport report = gdj::run_dj_uninit(f, a, b);
      CHECK(report.aux_fidelity >= 1.0 - 1e-12);
      CHECK(total_variation(report.control_distribution,
                            reference.control_distribution) <= 1e-10);
    }
  }

  SUBCASE("preconditions") {
    CHECK_THROWS_AS(gdj::run_dj_uninit(FunctionTable(1, 2, {0, 3}), {1, 0}, {0, 0}),
                    gdj::PreconditionError);
    CHECK_THROWS_AS(gdj::run_dj_uninit(FunctionTable(1, 1, {0, 1}), {1, 0}, {1, 0}),
                    gdj::PreconditionError);
  }
}

TEST_CASE("kickback condition (single qubit)") {
  const FunctionTable balanced(1, 1, {0, 1});

  const auto at_locus =
      gdj::check_kickback_condition({kInvSqrt2, 0.0}, {-kInvSqrt2, 0.0}, balanced);
  CHECK(at_locus.matches);
  CHECK(at_locus.residual <= 1e-12);
  CHECK_FALSE(at_locus.degenerate);

  const auto off_locus = gdj::check_kickback_condition({1.0, 0.0}, {0.0, 0.0}, balanced);
  CHECK_FALSE(off_locus.matches);
  CHECK(off_locus.residual > 0.5);

  // Constant zero: both sides agree for every auxiliary state; flagged.
  const FunctionTable constant(1, 1, {0, 0});
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    const auto [a, b] = random_pair(rng);
    const auto report = gdj::check_kickback_condition(a, b, constant);
    CHECK(report.matches);
    CHECK(report.degenerate);
  }
}

TEST_CASE("gdj2 bitwise run") {
  SUBCASE("constant functions concentrate on zero") {
    std::mt19937_64 rng(10);
    for (std::uint32_t m = 1; m <= 3; ++m) {
      for (std::uint64_t c = 0; c < (std::uint64_t{1} << m); ++c) {
        const RunReport report =
            gdj::run_gdj2(gdj::make_constant(2, m, c), random_product(m, rng));
        CHECK(report.p_zero == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(report.aux_fidelity >= 1.0 - 1e-12);
        CHECK(report.oracle_calls == 2);
        // S'_0 carries the parity sign of the constant.
        const double expected = gdj::parity_of(c) ? -1.0 : 1.0;
        CHECK(std::abs(report.control_amplitudes[0] - complex{expected, 0.0}) <= 1e-10);
      }
    }
  }

  SUBCASE("evenly distributed functions cancel at zero") {
    std::mt19937_64 rng(11);
    std::uint64_t runs = 0;
    for (std::uint32_t n = 1; n <= 3; ++n) {
      for (std::uint32_t m = 1; m <= 3; ++m) {
        const std::uint64_t n_dim = std::uint64_t{1} << n;
        const std::uint64_t m_dim = std::uint64_t{1} << m;
        for (std::uint64_t k = 2; k <= std::min(n_dim, m_dim); k <<= 1) {
          for (std::uint64_t t = 0; t < m_dim / k; ++t) {
            gdj::EvenSpec spec;
            spec.n = n;
            spec.m = m;
            spec.k = k;
            spec.t = t;
            const FunctionTable f = gdj::make_evenly_distributed(spec, runs);
            for (const Transform transform : {Transform::Walsh, Transform::Fourier}) {
              const RunReport report = gdj::run_gdj2(f, random_product(m, rng), transform);
              CHECK(report.p_zero <= 1e-12);
              CHECK(report.aux_fidelity >= 1.0 - 1e-12);
            }
            ++runs;
          }
        }
      }
    }
  }

  SUBCASE("f=[0,2,0,2] sends all mass to y=1 for any product auxiliary") {
    std::mt19937_64 rng(12);
    const FunctionTable f(2, 2, {0, 2, 0, 2});
    for (int trial = 0; trial < 10; ++trial) {
      const RunReport report = gdj::run_gdj2(f, random_product(2, rng));
      CHECK(report.control_distribution[1] == doctest::Approx(1.0).epsilon(1e-12));
    }
  }

  SUBCASE("pair validation") {
    const FunctionTable f(1, 2, {0, 3});
    ProductAux wrong_count;
    wrong_count.pairs.push_back({complex{1.0, 0.0}, complex{0.0, 0.0}});
    CHECK_THROWS_AS(gdj::run_gdj2(f, wrong_count), gdj::PreconditionError);

    ProductAux unnormalized;
    unnormalized.pairs.push_back({complex{1.0, 0.0}, complex{1.0, 0.0}});
    unnormalized.pairs.push_back({complex{1.0, 0.0}, complex{0.0, 0.0}});
    CHECK_THROWS_AS(gdj::run_gdj2(f, unnormalized), gdj::PreconditionError);
  }
}

TEST_CASE("analytic S'_y") {
  const FunctionTable zero = gdj::make_constant(2, 2, 0);
  for (std::uint64_t y = 0; y < 4; ++y) {
    CHECK(gdj::analytic_sy_prime(zero, y) == doctest::Approx(y == 0 ? 1.0 : 0.0));
  }

  const FunctionTable f(2, 2, {0, 2, 0, 2});
  CHECK(gdj::analytic_sy_prime(f, 0) == doctest::Approx(0.0));
  CHECK(gdj::analytic_sy_prime(f, 1) == doctest::Approx(1.0));
  CHECK(gdj::analytic_sy_prime(f, 2) == doctest::Approx(0.0));
  CHECK(gdj::analytic_sy_prime(f, 3) == doctest::Approx(0.0));

  // Parseval: the S'_y are a Walsh transform of a +-1 vector.
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const FunctionTable g = random_table(3, 2, rng);
    double sum = 0.0;
    for (std::uint64_t y = 0; y < 8; ++y) {
      const double s = gdj::analytic_sy_prime(g, y);
      sum += s * s;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("bitwise kickback condition") {
  // f(x) = x on Z_8: every output bit varies.
  const FunctionTable identity(3, 3, {0, 1, 2, 3, 4, 5, 6, 7});

  ProductAux all_odd;
  for (int j = 0; j < 3; ++j) {
    all_odd.pairs.push_back({complex{kInvSqrt2, 0.0}, complex{-kInvSqrt2, 0.0}});
  }
  const auto at_locus = gdj::check_kickback_condition_bitwise(all_odd, identity);
  CHECK(at_locus.matches);
  CHECK(at_locus.residual <= 1e-12);
  CHECK_FALSE(at_locus.degenerate);
  CHECK(at_locus.constant_bit_mask == 0);

  ProductAux one_off = all_odd;
  one_off.pairs[1] = {complex{1.0, 0.0}, complex{0.0, 0.0}};
  const auto off_locus = gdj::check_kickback_condition_bitwise(one_off, identity);
  CHECK_FALSE(off_locus.matches);
  CHECK(off_locus.residual > 1e-3);

  // m = 1 reduces to the single-qubit check.
  std::mt19937_64 rng(14);
  const FunctionTable boolean(2, 1, {0, 1, 1, 0});
  for (int trial = 0; trial < 10; ++trial) {
    const auto [a, b] = random_pair(rng);
    ProductAux aux;
    aux.pairs.push_back({a, b});
    const auto bitwise = gdj::check_kickback_condition_bitwise(aux, boolean);
    const auto scalar = gdj::check_kickback_condition(a, b, boolean);
    CHECK(bitwise.matches == scalar.matches);
    CHECK(bitwise.residual == doctest::Approx(scalar.residual).epsilon(1e-12));
  }

  // A bit that is constant across the domain is flagged.
  const FunctionTable half(2, 2, {0, 1, 0, 1});  // high bit never set
  const auto flagged = gdj::check_kickback_condition_bitwise(
      ProductAux{{{complex{kInvSqrt2, 0.0}, complex{-kInvSqrt2, 0.0}},
                  {complex{kInvSqrt2, 0.0}, complex{-kInvSqrt2, 0.0}}}},
      half);
  CHECK(flagged.degenerate);
  CHECK(flagged.constant_bit_mask == 2);
}

TEST_CASE("dense amplitudes match the analytic oracles across shapes") {
  std::mt19937_64 rng(15);
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (std::uint32_t m = 1; m <= 4; ++m) {
      const std::uint64_t m_dim = std::uint64_t{1} << m;
      for (int trial = 0; trial < 3; ++trial) {
        const FunctionTable f = random_table(n, m, rng);
        const std::uint64_t xi = 1 + rng() % (m_dim - 1 ? m_dim - 1 : 1);

        const RunReport one = gdj::run_gdj1(f, xi);
        for (std::uint64_t y = 0; y < f.domain_size(); ++y) {
          CHECK(std::abs(one.control_amplitudes[y] - gdj::analytic_sy(f, xi, y)) <= 1e-10);
          CHECK(std::abs(one.control_amplitudes[y] - one.analytic_amplitudes[y]) <= 1e-10);
        }

        const RunReport two = gdj::run_gdj2(f, random_product(m, rng));
        for (std::uint64_t y = 0; y < f.domain_size(); ++y) {
          CHECK(std::abs(two.control_amplitudes[y] -
                         complex{gdj::analytic_sy_prime(f, y), 0.0}) <= 1e-10);
        }
      }
    }
  }
}

TEST_CASE("auxiliary restoration for random auxiliary states") {
  std::mt19937_64 rng(16);
  const FunctionTable boolean = random_table(3, 1, rng);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [a, b] = random_pair(rng);
    CHECK(gdj::run_dj_uninit(boolean, a, b).aux_fidelity >= 1.0 - 1e-12);
  }

  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t m = 1 + trial % 4;
    const FunctionTable f = random_table(3, m, rng);
    CHECK(gdj::run_gdj2(f, random_product(m, rng)).aux_fidelity >= 1.0 - 1e-12);
  }
}

TEST_CASE("off-promise functions run with a labeled heuristic decision") {
  const FunctionTable f(2, 1, {0, 0, 0, 1});
  const RunReport report = gdj::run_gdj1(f, 1);
  CHECK(report.promise_class == "neither");
  CHECK(report.decision == gdj::kDecisionPromiseViolated);
  CHECK((report.heuristic_decision == gdj::kDecisionNotEvenly ||
         report.heuristic_decision == gdj::kDecisionNonconstant));
}

TEST_CASE("find_mu") {
  SUBCASE("f=[0,2,0,2]: uniform support on {0, 2}") {
    const FunctionTable f(2, 2, {0, 2, 0, 2});
    const gdj::PeriodReport report = gdj::find_mu(f, 8, 3);
    CHECK(report.distribution[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(report.distribution[2] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(report.distribution[1] <= 1e-20);
    CHECK(report.distribution[3] <= 1e-20);
    CHECK(report.postselect_probability == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(report.oracle_calls == 8);
    for (std::uint64_t s : report.samples) CHECK(s % 2 == 0);
    CHECK(report.recovered_mu == 2);
    CHECK(report.success);
  }

  SUBCASE("shift invariance: t=0 and t=1 give identical distributions") {
    gdj::EvenSpec base;
    base.n = 2;
    base.m = 2;
    base.k = 2;
    base.t = 0;
    gdj::EvenSpec shifted = base;
    shifted.t = 1;
    // Same seed, hence the same input partition.
    const auto d0 = gdj::find_mu(gdj::make_evenly_distributed(base, 5), 4, 0).distribution;
    const auto d1 =
        gdj::find_mu(gdj::make_evenly_distributed(shifted, 5), 4, 0).distribution;
    for (std::size_t z = 0; z < d0.size(); ++z) {
      CHECK(std::abs(d0[z] - d1[z]) <= 1e-12);
    }
  }

  SUBCASE("K = M: all samples zero, mu = 1 recovered, flagged inconclusive") {
    gdj::EvenSpec spec;
    spec.n = 2;
    spec.m = 2;
    spec.k = 4;
    const gdj::PeriodReport report =
        gdj::find_mu(gdj::make_evenly_distributed(spec, 1), 8, 4);
    CHECK(report.inconclusive);
    CHECK(report.recovered_mu == 1);
    CHECK(report.success);
  }

  SUBCASE("constant function: flat read-out recovers mu = M") {
    const gdj::PeriodReport report = gdj::find_mu(gdj::make_constant(2, 2, 3), 8, 42);
    CHECK(report.postselect_probability == doctest::Approx(1.0).epsilon(1e-12));
    for (double p : report.distribution) {
      CHECK(p == doctest::Approx(0.25).epsilon(1e-12));
    }
    CHECK(report.recovered_mu == 4);  // gcd of the seeded samples with M is 1
    CHECK(report.success);
  }

  SUBCASE("r must be at least one") {
    CHECK_THROWS_AS(gdj::find_mu(gdj::make_constant(2, 2, 0), 0, 0),
                    gdj::PreconditionError);
  }
}
