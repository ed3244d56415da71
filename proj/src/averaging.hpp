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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "machines.hpp"
#include "states.hpp"

namespace qdel {

/// Fidelity of any machine. `input` is ignored by the input-independent
/// machines and required by the other two.
FidelityReport evaluate(Machine machine, const BlankState& blank,
                        const std::optional<InputQubit>& input,
                        const Transformer& t = transformer());

/// Mean fidelity over inputs with alpha^2 uniform on [0, 1], by the
/// trapezoid rule on `samples` equally spaced alpha^2 points. For integrands
/// that depend on alpha^2 only this is the Bloch-sphere average.
/// samples == 1 evaluates the single point alpha = 1.
double average_fidelity(Machine machine, const BlankState& blank,
                        std::size_t samples,
                        const Transformer& t = transformer());

/// Monte Carlo estimate of the same average; beta also gets a uniformly
/// random phase.
double monte_carlo_average_fidelity(Machine machine, const BlankState& blank,
                                    std::size_t samples, std::uint64_t seed);

}  // namespace qdel
