// Copyright 2026 The qdel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Parameters shared by every deletion machine: the blank state the deleted
// copy should land in, the input qubit that arrives in two copies, and the
// report type the machines produce.

#pragma once

#include <optional>
#include <string_view>

#include "linalg.hpp"

namespace qdel {

/// |S> = m1|0> + m2|1> with m1 real, m2 complex, m1^2 + |m2|^2 = 1.
class BlankState {
 public:
  BlankState(double m1, Complex m2, const Tolerances& tol = kDefaultTolerances);

  double m1() const noexcept { return m1_; }
  Complex m2() const noexcept { return m2_; }

  bool has_real_m2(double tol = kDefaultTolerances.algebraic) const noexcept;

 private:
  double m1_;
  Complex m2_;
};

/// |psi> = alpha|0> + beta|1>, alpha >= 0 fixes the global phase.
class InputQubit {
 public:
  InputQubit(double alpha, Complex beta,
             const Tolerances& tol = kDefaultTolerances);

  /// Real non-negative beta = sqrt(1 - alpha^2).
  static InputQubit from_alpha(double alpha);

  double alpha() const noexcept { return alpha_; }
  Complex beta() const noexcept { return beta_; }

  PureState ket() const;

 private:
  double alpha_;
  Complex beta_;
};

enum class Machine {
  OneTransformerLimit,
  TwoTransformerLimit,
  PBWithTransformer,
  PBAlone,
};

/// Sign of m1 * m2 for a real blank.
enum class Branch {
  PositiveProduct,
  NegativeProduct,
};

std::string_view machine_name(Machine m) noexcept;

/// Parses the CLI spellings returned by machine_name.
std::optional<Machine> parse_machine(std::string_view name) noexcept;

/// True for the two machines whose fidelity does not depend on the input.
constexpr bool is_input_independent(Machine m) noexcept {
  return m == Machine::OneTransformerLimit || m == Machine::TwoTransformerLimit;
}

struct FidelityReport {
  Machine machine;
  BlankState blank;
  /// Absent exactly for the input-independent machines.
  std::optional<InputQubit> input;
  double fidelity;
  std::optional<Branch> branch;
};

/// Branch of a real blank, absent when m1 * m2 is zero or m2 is complex.
std::optional<Branch> branch_of(const BlankState& blank);

/// |S>
PureState sigma(const BlankState& blank);

/// |S_perp> = -conj(m2)|0> + m1|1>
PureState sigma_perp(const BlankState& blank);

/// (|S> + |S_perp>) / sqrt(2), the reference state of the two-transformer
/// limit.
PureState sigma_prime(const BlankState& blank);

}  // namespace qdel
