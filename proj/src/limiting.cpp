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

#include "limiting.hpp"

#include <cmath>
#include <numbers>

#include "error.hpp"

namespace qdel {
namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;
constexpr double kOffDiagonal = (kInvSqrt2 - 1.0) / 4.0;
constexpr int kTableRows = 11;

void require_real(const BlankState& blank) {
  if (!blank.has_real_m2()) {
    throw Error(ErrorCode::OutOfScope,
                "one-transformer limiting fidelity is defined for real m2 only");
  }
}

void require_unit_interval(double m1_sq) {
  if (!(m1_sq >= 0.0 && m1_sq <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "m1^2 must lie in [0, 1]");
  }
}

/// Real blanks (+sqrt(m1_sq), +-sqrt(1 - m1_sq)).
std::pair<BlankState, BlankState> signed_blanks(double m1_sq) {
  require_unit_interval(m1_sq);
  const double m1 = std::sqrt(m1_sq);
  const double m2 = std::sqrt(1.0 - m1_sq);
  return {BlankState(m1, m2), BlankState(m1, -m2)};
}

template <typename F>
BranchedFidelity branched(double m1_sq, F&& f) {
  const auto [pos, neg] = signed_blanks(m1_sq);
  const bool degenerate = pos.m1() * pos.m2().real() == 0.0;
  const double p = f(pos);
  return BranchedFidelity{p, degenerate ? p : f(neg), degenerate};
}

template <typename F>
std::vector<TableRow> build_table(F&& branched_at) {
  std::vector<TableRow> rows;
  rows.reserve(kTableRows);
  for (int i = 0; i < kTableRows; ++i) {
    const double m1_sq = i / 10.0;
    const double m2_sq = (kTableRows - 1 - i) / 10.0;
    rows.push_back(TableRow{m1_sq, m2_sq, m1_sq - m2_sq, branched_at(m1_sq)});
  }
  return rows;
}

}  // namespace

double f1(const BlankState& blank) {
  require_real(blank);
  const double m1 = blank.m1();
  const double m2 = blank.m2().real();
  return 0.5 * (1.0 + m1 * m2 - (m1 * m1 - m2 * m2) * kInvSqrt2);
}

BranchedFidelity f1_limiting(const BlankState& blank) {
  require_real(blank);
  return f1_branched(blank.m1() * blank.m1());
}

BranchedFidelity f1_branched(double m1_sq) {
  return branched(m1_sq, [](const BlankState& b) { return f1(b); });
}

DensityOperator rho2_two_transformer_limit() {
  Matrix rho(2, 2);
  rho << 5.0 / 8.0, kOffDiagonal, kOffDiagonal, 3.0 / 8.0;
  return DensityOperator(Dims{2}, std::move(rho));
}

double f_two_transformer(const BlankState& blank) {
  const Complex m1 = blank.m1();
  const Complex m2 = blank.m2();
  const Complex m2c = std::conj(m2);
  const Complex f =
      0.5 * (5.0 / 8.0 * (1.0 - m1 * m2c - m1 * m2) +
             kOffDiagonal * (2.0 * m1 * m1 - m2c * m2c - m2 * m2) +
             3.0 / 8.0 * (1.0 + m1 * m2c + m1 * m2));
  return f.real();
}

double f_two_transformer_matrix_element(const BlankState& blank) {
  return fidelity_against(rho2_two_transformer_limit(), sigma_prime(blank));
}

double f_two_transformer_against_sigma(const BlankState& blank) {
  return fidelity_against(rho2_two_transformer_limit(), sigma(blank));
}

BranchedFidelity f_two_transformer_branched(double m1_sq) {
  return branched(m1_sq,
                  [](const BlankState& b) { return f_two_transformer(b); });
}

std::vector<TableRow> table1() { return build_table(f1_branched); }

std::vector<TableRow> table2() {
  return build_table(f_two_transformer_branched);
}

FidelityReport limiting_fidelity(Machine machine, const BlankState& blank) {
  double f = 0.0;
  switch (machine) {
    case Machine::OneTransformerLimit:
      f = f1(blank);
      break;
    case Machine::TwoTransformerLimit:
      f = f_two_transformer(blank);
      break;
    default:
      throw Error(ErrorCode::UnknownMachine,
                  "limiting_fidelity: machine depends on the input state");
  }
  return FidelityReport{machine, blank, std::nullopt, f, branch_of(blank)};
}

}  // namespace qdel
