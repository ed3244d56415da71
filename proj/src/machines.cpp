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

#include "machines.hpp"

#include <cmath>
#include <numbers>

#include "error.hpp"

namespace qdel {
namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

Matrix standard_gate() {
  // Columns are T|00>, T|01>, T|10>, T|11> in basis order 00, 01, 10, 11.
  Matrix t = Matrix::Zero(4, 4);
  t(1, 0) = kInvSqrt2;
  t(2, 0) = kInvSqrt2;
  t(3, 1) = 1.0;
  t(1, 2) = kInvSqrt2;
  t(2, 2) = -kInvSqrt2;
  t(0, 3) = 1.0;
  return t;
}

Vector ket3(const PureState& a, const PureState& b, std::size_t machine) {
  return tensor_product(tensor_product(a, b),
                        PureState::basis(kMachineDim, machine))
      .amps();
}

DensityOperator mode2(const PureState& out) {
  const std::size_t keep[] = {1};
  return partial_trace(outer(out), keep);
}

}  // namespace

Transformer::Transformer()
    : gate_(Dims{2, 2}, standard_gate()) {}

Transformer::Transformer(UnitaryOperator gate) : gate_(std::move(gate)) {
  if (gate_.dims() != Dims{2, 2}) {
    throw Error(ErrorCode::DimensionMismatch,
                "transformer gate must act on dims (2, 2)");
  }
}

Transformer transformer() { return Transformer(); }

Transformer perturbed_transformer(double epsilon) {
  Matrix m = standard_gate();
  m(0, 0) += epsilon;
  return Transformer(UnitaryOperator::unchecked(Dims{2, 2}, std::move(m)));
}

PureState pb_delete(const InputQubit& input, const BlankState& blank) {
  const Complex a = input.alpha();
  const Complex b = input.beta();
  const PureState zero = PureState::basis(2, 0);
  const PureState one = PureState::basis(2, 1);
  const PureState target = sigma(blank);

  Vector amps = a * a * ket3(zero, target, kMachineZero) +
                a * b * ket3(zero, one, kMachineReady) +
                a * b * ket3(one, zero, kMachineReady) +
                b * b * ket3(one, target, kMachineOne);
  return PureState(kDeleterDims, std::move(amps));
}

DensityOperator pb_with_transformer_rho2(const InputQubit& input,
                                         const BlankState& blank,
                                         const Transformer& t) {
  const UnitaryOperator full = tensor_product(
      t.gate(), UnitaryOperator::identity(Dims{kMachineDim}));
  return mode2(full.apply(pb_delete(input, blank)));
}

DensityOperator pb_alone_rho2(const InputQubit& input,
                              const BlankState& blank) {
  return mode2(pb_delete(input, blank));
}

Matrix pb_with_transformer_rho2_closed_form(const InputQubit& input,
                                            const BlankState& blank) {
  const double a2 = input.alpha() * input.alpha();
  const double a4 = a2 * a2;
  const double b2 = std::norm(input.beta());
  const double b4 = b2 * b2;
  const double m1 = blank.m1();
  const double m1sq = m1 * m1;
  const Complex m2 = blank.m2();
  const double m2sq = std::norm(m2);

  Matrix rho(2, 2);
  rho(0, 0) = a4 * m1sq / 2.0 + a2 * b2 / 2.0 + b4 * m1sq / 2.0 + b4 * m2sq;
  rho(0, 1) = (a4 * m1 * std::conj(m2) - a2 * b2 + b4 * m1 * m2) * kInvSqrt2;
  rho(1, 0) = (a4 * m1 * m2 - a2 * b2 + b4 * m1 * std::conj(m2)) * kInvSqrt2;
  rho(1, 1) =
      a4 * m1sq / 2.0 + 3.0 * a2 * b2 / 2.0 + b4 * m1sq / 2.0 + a4 * m2sq;
  return rho;
}

double pb_with_transformer_f2_closed_form(const InputQubit& input,
                                          const BlankState& blank) {
  if (!blank.has_real_m2()) {
    throw Error(ErrorCode::OutOfScope,
                "closed-form F2 polynomial is defined for real m2 only");
  }
  const double a2 = input.alpha() * input.alpha();
  const double a4 = a2 * a2;
  const double b2 = std::norm(input.beta());
  const double b4 = b2 * b2;
  const double mix = a2 * b2;
  const double m1 = blank.m1();
  const double m2 = blank.m2().real();
  const double m1sq = m1 * m1;
  const double m2sq = m2 * m2;
  const double p = m1 * m2;

  const double off = p * kInvSqrt2 - mix * (2.0 * p + 1.0) * kInvSqrt2;
  return m1sq * (m1sq / 2.0 + mix * (1.0 - 2.0 * m1sq) / 2.0 + b4 * m2sq) +
         2.0 * p * off +
         m2sq * (m1sq / 2.0 + mix * (3.0 - 2.0 * m1sq) / 2.0 + a4 * m2sq);
}

FidelityReport pb_with_transformer_fidelity(const InputQubit& input,
                                            const BlankState& blank,
                                            const Transformer& t) {
  const double f =
      fidelity_against(pb_with_transformer_rho2(input, blank, t), sigma(blank));
  return FidelityReport{Machine::PBWithTransformer, blank, input, f,
                        branch_of(blank)};
}

FidelityReport pb_alone_fidelity(const InputQubit& input,
                                 const BlankState& blank) {
  const double f = fidelity_against(pb_alone_rho2(input, blank), sigma(blank));
  return FidelityReport{Machine::PBAlone, blank, input, f, branch_of(blank)};
}

}  // namespace qdel
