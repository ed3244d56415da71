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

// Limiting (machine parameter -> 1/2) fidelities of the deletion machine
// followed by one or two transformers. Only the limits are available in
// closed form; the interior of the machine is not modelled.

#pragma once

#include <vector>

#include "linalg.hpp"
#include "states.hpp"

namespace qdel {

/// Fidelity for a fixed pair of magnitudes (m1^2, m2^2) under both relative
/// signs of m1 and m2.
struct BranchedFidelity {
  double positive_branch;  // m1 * m2 > 0
  double negative_branch;  // m1 * m2 < 0
  bool degenerate;         // m1 * m2 == 0, both values equal

  double value(Branch b) const noexcept {
    return b == Branch::PositiveProduct ? positive_branch : negative_branch;
  }
};

struct TableRow {
  double m1_sq;
  double m2_sq;
  double diff;  // m1_sq - m2_sq
  BranchedFidelity fidelity;
};

// One transformer.

/// F1 = (1 + m1 m2 - (m1^2 - m2^2)/sqrt(2)) / 2 for the blank as given.
/// Throws OutOfScope for complex m2.
double f1(const BlankState& blank);

/// F1 at both signs of m1 m2 for the magnitudes of `blank`. Real m2 only.
BranchedFidelity f1_limiting(const BlankState& blank);

/// F1 at both signs for m1^2 = m1_sq, m2^2 = 1 - m1_sq.
BranchedFidelity f1_branched(double m1_sq);

// Two transformers.

/// The input-independent mode-2 limit:
/// diag (5/8, 3/8), off-diagonals (1/sqrt(2) - 1)/4.
DensityOperator rho2_two_transformer_limit();

/// Closed-form polynomial for <S'|rho2'|S'>, valid for complex m2.
double f_two_transformer(const BlankState& blank);

/// The same quantity evaluated as a matrix element of
/// rho2_two_transformer_limit() against sigma_prime(blank).
double f_two_transformer_matrix_element(const BlankState& blank);

/// Fidelity of the two-transformer limit against plain |S> instead of |S'>.
/// Exposed for inspection only; no table uses it.
double f_two_transformer_against_sigma(const BlankState& blank);

/// f_two_transformer at both signs for m1^2 = m1_sq with real amplitudes.
BranchedFidelity f_two_transformer_branched(double m1_sq);

// Tables: m1^2 = 0.0, 0.1, ..., 1.0.

std::vector<TableRow> table1();
std::vector<TableRow> table2();

/// Fidelity reported by one of the two input-independent machines.
FidelityReport limiting_fidelity(Machine machine, const BlankState& blank);

}  // namespace qdel
