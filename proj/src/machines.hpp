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

// The Pati-Braunstein conditional deleter, the two-qubit transformer gate,
// and the deleter + transformer pipeline.
//
// Register layout for every simulated output: subsystem 0 is the retained
// copy (mode 1), subsystem 1 the deleted copy (mode 2), subsystem 2 the
// three-level machine register with ordered basis (|A>, |A0>, |A1>).

#pragma once

#include "linalg.hpp"
#include "states.hpp"

namespace qdel {

inline constexpr std::size_t kMachineDim = 3;
inline constexpr std::size_t kMachineReady = 0;  // |A>
inline constexpr std::size_t kMachineZero = 1;   // |A0>
inline constexpr std::size_t kMachineOne = 2;    // |A1>

inline const Dims kDeleterDims{2, 2, kMachineDim};

/// T = |psi+><00| + |11><01| + |psi-><10| + |00><11|,
/// |psi+-> = (|01> +- |10>) / sqrt(2).
class Transformer {
 public:
  /// The standard gate.
  Transformer();

  /// Wraps an arbitrary two-qubit gate. The gate's own construction decides
  /// whether it was checked for unitarity.
  explicit Transformer(UnitaryOperator gate);

  const UnitaryOperator& gate() const noexcept { return gate_; }

 private:
  UnitaryOperator gate_;
};

/// The standard transformer.
Transformer transformer();

/// The standard gate with `epsilon` added to its (00, 00) entry. Used to
/// check that verification notices a broken transformer.
Transformer perturbed_transformer(double epsilon);

/// Applies the four deleting rules to |psi>|psi>|A>:
///   a^2 |0>|S>|A0> + a b |01>|A> + a b |10>|A> + b^2 |1>|S>|A1>.
/// The rules are only defined on this symmetric input, so no unitary
/// completion is built.
PureState pb_delete(const InputQubit& input, const BlankState& blank);

/// Mode-2 reduced operator after (T x I) acts on the deleter output.
DensityOperator pb_with_transformer_rho2(const InputQubit& input,
                                         const BlankState& blank,
                                         const Transformer& t = transformer());

/// Mode-2 reduced operator of the deleter alone.
DensityOperator pb_alone_rho2(const InputQubit& input, const BlankState& blank);

/// Closed form of pb_with_transformer_rho2, valid for complex m2 and beta.
Matrix pb_with_transformer_rho2_closed_form(const InputQubit& input,
                                            const BlankState& blank);

/// Closed-form <S|rho2|S> polynomial for real m2. Throws OutOfScope for a
/// complex m2.
double pb_with_transformer_f2_closed_form(const InputQubit& input,
                                          const BlankState& blank);

/// F2 = <S|rho2|S> from the simulated pipeline.
FidelityReport pb_with_transformer_fidelity(const InputQubit& input,
                                            const BlankState& blank,
                                            const Transformer& t = transformer());

/// F = <S|rho2|S> for the deleter without a transformer.
FidelityReport pb_alone_fidelity(const InputQubit& input,
                                 const BlankState& blank);

}  // namespace qdel
