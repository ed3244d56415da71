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

#include "states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "error.hpp"

namespace qdel {
namespace {

bool finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

PureState qubit(Complex a0, Complex a1) {
  Vector amps(2);
  amps << a0, a1;
  return PureState(Dims{2}, std::move(amps));
}

}  // namespace

BlankState::BlankState(double m1, Complex m2, const Tolerances& tol)
    : m1_(m1), m2_(m2) {
  if (!std::isfinite(m1) || !finite(m2)) {
    throw Error(ErrorCode::InvalidArgument, "blank state: non-finite amplitude");
  }
  const double dev = std::abs(m1 * m1 + std::norm(m2) - 1.0);
  if (dev > tol.algebraic) {
    throw Error(ErrorCode::NotNormalized,
                "blank state: m1^2 + |m2|^2 deviates from 1 by " +
                    std::to_string(dev));
  }
}

bool BlankState::has_real_m2(double tol) const noexcept {
  return std::abs(m2_.imag()) <= tol;
}

InputQubit::InputQubit(double alpha, Complex beta, const Tolerances& tol)
    : alpha_(alpha), beta_(beta) {
  if (!std::isfinite(alpha) || !finite(beta)) {
    throw Error(ErrorCode::InvalidArgument, "input qubit: non-finite amplitude");
  }
  if (alpha < 0.0) {
    throw Error(ErrorCode::InvalidArgument,
                "input qubit: alpha must be non-negative");
  }
  const double dev = std::abs(alpha * alpha + std::norm(beta) - 1.0);
  if (dev > tol.algebraic) {
    throw Error(ErrorCode::NotNormalized,
                "input qubit: alpha^2 + |beta|^2 deviates from 1 by " +
                    std::to_string(dev));
  }
}

InputQubit InputQubit::from_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "input qubit: alpha outside [0, 1]");
  }
  return InputQubit(alpha, Complex(std::sqrt(std::max(0.0, 1.0 - alpha * alpha)),
                                   0.0));
}

PureState InputQubit::ket() const { return qubit(alpha_, beta_); }

std::string_view machine_name(Machine m) noexcept {
  switch (m) {
    case Machine::OneTransformerLimit:
      return "one-transformer";
    case Machine::TwoTransformerLimit:
      return "two-transformer";
    case Machine::PBWithTransformer:
      return "pb-with-transformer";
    case Machine::PBAlone:
      return "pb-alone";
  }
  return "unknown";
}

std::optional<Machine> parse_machine(std::string_view name) noexcept {
  for (Machine m : {Machine::OneTransformerLimit, Machine::TwoTransformerLimit,
                    Machine::PBWithTransformer, Machine::PBAlone}) {
    if (machine_name(m) == name) return m;
  }
  return std::nullopt;
}

std::optional<Branch> branch_of(const BlankState& blank) {
  if (!blank.has_real_m2()) return std::nullopt;
  const double product = blank.m1() * blank.m2().real();
  if (product > 0.0) return Branch::PositiveProduct;
  if (product < 0.0) return Branch::NegativeProduct;
  return std::nullopt;
}

PureState sigma(const BlankState& blank) {
  return qubit(blank.m1(), blank.m2());
}

PureState sigma_perp(const BlankState& blank) {
  return qubit(-std::conj(blank.m2()), blank.m1());
}

PureState sigma_prime(const BlankState& blank) {
  const double s = std::numbers::sqrt2 / 2.0;
  return qubit(s * (blank.m1() - std::conj(blank.m2())),
               s * (blank.m2() + blank.m1()));
}

}  // namespace qdel
