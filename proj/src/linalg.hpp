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

// Small dense complex linear algebra over labeled tensor-product spaces.
//
// Basis ordering is row-major over subsystems: subsystem 0 is the leftmost
// ket label and index = sum_i label_i * prod_{j>i} dims_j, so |ab> with
// dims (2,2) sits at 2a + b.
//
// All three value types validate their invariants on construction and are
// immutable afterwards. A value that fails validation is an error; nothing is
// silently renormalized.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qdel {

using Complex = std::complex<double>;
using Dims = std::vector<std::size_t>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

struct Tolerances {
  /// Algebraic identities: normalization, Hermiticity, trace, unitarity.
  double algebraic = 1e-12;
  /// Eigen-solver outputs; the PSD check admits eigenvalues down to -eigen.
  double eigen = 1e-10;
};

inline constexpr Tolerances kDefaultTolerances{};

/// Product of subsystem dimensions. Throws if any dimension is below 2.
std::size_t total_dimension(std::span<const std::size_t> dims);

/// Row-major flat index of a label tuple.
std::size_t flat_index(std::span<const std::size_t> dims,
                       std::span<const std::size_t> labels);

/// max |m - m^dagger|
double hermiticity_deviation(const Matrix& m);

/// max |m^dagger m - I|
double unitarity_deviation(const Matrix& m);

class PureState {
 public:
  PureState(Dims dims, Vector amps, const Tolerances& tol = kDefaultTolerances);

  /// Computational basis ket |labels...>.
  static PureState basis(Dims dims, std::span<const std::size_t> labels);
  static PureState basis(std::size_t dim, std::size_t label);

  const Dims& dims() const noexcept { return dims_; }
  const Vector& amps() const noexcept { return amps_; }
  std::size_t dimension() const noexcept {
    return static_cast<std::size_t>(amps_.size());
  }

  /// <this|other>
  Complex inner(const PureState& other) const;

 private:
  Dims dims_;
  Vector amps_;
};

class DensityOperator {
 public:
  DensityOperator(Dims dims, Matrix mat,
                  const Tolerances& tol = kDefaultTolerances);

  const Dims& dims() const noexcept { return dims_; }
  const Matrix& matrix() const noexcept { return mat_; }
  std::size_t dimension() const noexcept {
    return static_cast<std::size_t>(mat_.rows());
  }

 private:
  Dims dims_;
  Matrix mat_;
};

class UnitaryOperator {
 public:
  UnitaryOperator(Dims dims, Matrix mat,
                  const Tolerances& tol = kDefaultTolerances);

  /// Skips the unitarity check. Only for fault-injection fixtures that need
  /// to push a broken gate through the pipelines and watch the checks fail.
  static UnitaryOperator unchecked(Dims dims, Matrix mat);

  static UnitaryOperator identity(Dims dims);

  const Dims& dims() const noexcept { return dims_; }
  const Matrix& matrix() const noexcept { return mat_; }
  std::size_t dimension() const noexcept {
    return static_cast<std::size_t>(mat_.rows());
  }

  /// U|phi>. The result is validated as a PureState, so a non-unitary gate
  /// surfaces here as a NotNormalized error.
  PureState apply(const PureState& phi) const;

 private:
  struct NoCheck {};
  UnitaryOperator(Dims dims, Matrix mat, NoCheck);

  Dims dims_;
  Matrix mat_;
};

PureState tensor_product(const PureState& a, const PureState& b);
DensityOperator tensor_product(const DensityOperator& a,
                               const DensityOperator& b);
UnitaryOperator tensor_product(const UnitaryOperator& a,
                               const UnitaryOperator& b);

/// Reduced operator on the subsystems listed in `keep`, which come out in
/// their original order regardless of the order given.
DensityOperator partial_trace(const DensityOperator& rho,
                              std::span<const std::size_t> keep);

/// <phi|rho|phi>. The imaginary part of the quadratic form must stay within
/// `tol`; anything larger means rho was not Hermitian.
double fidelity_against(const DensityOperator& rho, const PureState& phi,
                        double tol = kDefaultTolerances.algebraic);

/// |phi><phi|
DensityOperator outer(const PureState& phi);

/// Smallest eigenvalue of a Hermitian matrix.
double eigen_min(const Matrix& m, double hermiticity_tol =
                                      kDefaultTolerances.algebraic);
double eigen_min(const DensityOperator& rho);

}  // namespace qdel
