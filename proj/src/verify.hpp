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

// Self-verification: every structural invariant, oracle cross-check, table
// value and headline number, each reduced to a measured deviation compared
// against a tolerance.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace qdel {

struct VerifyOptions {
  Tolerances tol{};
  /// Printed table and headline values carry two decimals, truncated.
  double table_tolerance = 0.01;
  /// Quadrature error budget for the deleter-alone average.
  double average_tolerance = 1e-6;
  std::size_t quadrature_samples = 10001;
  /// Added to T's (00, 00) entry. Zero runs the real gate.
  double transformer_perturbation = 0.0;
  std::uint64_t seed = 0x5eed'de1e'7e00'0001ULL;
};

struct VerificationOutcome {
  std::string check;
  bool passed;
  /// +inf when the check could not be evaluated (an invariant threw).
  double deviation;
  double tolerance;
  std::string anchor;
};

/// A value as printed in one of the reference tables. Rows with a single
/// printed value have no `negative`; that value is the positive branch.
struct PrintedRow {
  double m1_sq;
  double positive;
  std::optional<double> negative;
};

std::span<const PrintedRow> printed_table1();
std::span<const PrintedRow> printed_table2();

std::vector<VerificationOutcome> run_verification(const VerifyOptions& options);

bool all_passed(std::span<const VerificationOutcome> outcomes) noexcept;

}  // namespace qdel
