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

#include "averaging.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "error.hpp"
#include "limiting.hpp"

namespace qdel {

FidelityReport evaluate(Machine machine, const BlankState& blank,
                        const std::optional<InputQubit>& input,
                        const Transformer& t) {
  switch (machine) {
    case Machine::OneTransformerLimit:
    case Machine::TwoTransformerLimit:
      return limiting_fidelity(machine, blank);
    case Machine::PBWithTransformer:
    case Machine::PBAlone:
      if (!input) {
        throw Error(ErrorCode::InvalidArgument,
                    "this machine needs an input state");
      }
      return machine == Machine::PBAlone
                 ? pb_alone_fidelity(*input, blank)
                 : pb_with_transformer_fidelity(*input, blank, t);
  }
  throw Error(ErrorCode::UnknownMachine, "unknown machine id");
}

double average_fidelity(Machine machine, const BlankState& blank,
                        std::size_t samples, const Transformer& t) {
  if (samples == 0) {
    throw Error(ErrorCode::InvalidArgument, "samples must be at least 1");
  }
  if (is_input_independent(machine)) {
    return evaluate(machine, blank, std::nullopt, t).fidelity;
  }
  auto at = [&](double alpha_sq) {
    const InputQubit input = InputQubit::from_alpha(std::sqrt(alpha_sq));
    return evaluate(machine, blank, input, t).fidelity;
  };
  if (samples == 1) return at(1.0);

  const double h = 1.0 / static_cast<double>(samples - 1);
  double sum = 0.5 * (at(0.0) + at(1.0));
  for (std::size_t i = 1; i + 1 < samples; ++i) {
    sum += at(static_cast<double>(i) * h);
  }
  return sum * h;
}

double monte_carlo_average_fidelity(Machine machine, const BlankState& blank,
                                    std::size_t samples, std::uint64_t seed) {
  if (samples == 0) {
    throw Error(ErrorCode::InvalidArgument, "samples must be at least 1");
  }
  if (is_input_independent(machine)) {
    return evaluate(machine, blank, std::nullopt).fidelity;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  const Transformer t;
  double sum = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double alpha_sq = unit(rng);
    const double alpha = std::sqrt(alpha_sq);
    const Complex beta = std::polar(std::sqrt(1.0 - alpha_sq), phase(rng));
    sum += evaluate(machine, blank, InputQubit(alpha, beta), t).fidelity;
  }
  return sum / static_cast<double>(samples);
}

}  // namespace qdel
