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

#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>

#include "error.hpp"

namespace qdel {
namespace {

std::string describe(double value) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << value;
  return os.str();
}

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m, const char* what) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      const Complex z = m(r, c);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw Error(ErrorCode::InvalidArgument,
                    std::string(what) + ": non-finite entry");
      }
    }
  }
}

void require_square(const Dims& dims, const Matrix& mat, const char* what) {
  const auto n = static_cast<Eigen::Index>(total_dimension(dims));
  if (mat.rows() != n || mat.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": matrix side does not match dims");
  }
}

Dims concat(const Dims& a, const Dims& b) {
  Dims out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace

std::size_t total_dimension(std::span<const std::size_t> dims) {
  if (dims.empty()) {
    throw Error(ErrorCode::InvalidArgument, "dims must not be empty");
  }
  std::size_t n = 1;
  for (std::size_t d : dims) {
    if (d < 2) {
      throw Error(ErrorCode::InvalidArgument,
                  "every subsystem dimension must be at least 2");
    }
    n *= d;
  }
  return n;
}

std::size_t flat_index(std::span<const std::size_t> dims,
                       std::span<const std::size_t> labels) {
  if (dims.size() != labels.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "label count does not match subsystem count");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (labels[i] >= dims[i]) {
      throw Error(ErrorCode::IndexOutOfRange, "basis label out of range");
    }
    index = index * dims[i] + labels[i];
  }
  return index;
}

double hermiticity_deviation(const Matrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_deviation(const Matrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  const Matrix id = Matrix::Identity(m.rows(), m.cols());
  return (m.adjoint() * m - id).cwiseAbs().maxCoeff();
}

// -- PureState ---------------------------------------------------------------

PureState::PureState(Dims dims, Vector amps, const Tolerances& tol)
    : dims_(std::move(dims)), amps_(std::move(amps)) {
  if (static_cast<std::size_t>(amps_.size()) != total_dimension(dims_)) {
    throw Error(ErrorCode::DimensionMismatch,
                "amplitude count does not match product of dims");
  }
  require_finite(amps_, "PureState");
  const double dev = std::abs(amps_.norm() - 1.0);
  if (dev > tol.algebraic) {
    throw Error(ErrorCode::NotNormalized,
                "PureState norm deviates from 1 by " + describe(dev));
  }
}

PureState PureState::basis(Dims dims, std::span<const std::size_t> labels) {
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(total_dimension(dims)));
  amps(static_cast<Eigen::Index>(flat_index(dims, labels))) = 1.0;
  return PureState(std::move(dims), std::move(amps));
}

PureState PureState::basis(std::size_t dim, std::size_t label) {
  const std::size_t labels[] = {label};
  return basis(Dims{dim}, labels);
}

Complex PureState::inner(const PureState& other) const {
  if (dims_ != other.dims_) {
    throw Error(ErrorCode::DimensionMismatch, "inner product: dims differ");
  }
  return amps_.dot(other.amps_);
}

// -- DensityOperator ---------------------------------------------------------

DensityOperator::DensityOperator(Dims dims, Matrix mat, const Tolerances& tol)
    : dims_(std::move(dims)), mat_(std::move(mat)) {
  require_square(dims_, mat_, "DensityOperator");
  require_finite(mat_, "DensityOperator");
  const double herm = hermiticity_deviation(mat_);
  if (herm > tol.algebraic) {
    throw Error(ErrorCode::NotHermitian,
                "DensityOperator not Hermitian, deviation " + describe(herm));
  }
  const double trace_dev = std::abs(mat_.trace() - Complex(1.0, 0.0));
  if (trace_dev > tol.algebraic) {
    throw Error(ErrorCode::NotNormalized,
                "DensityOperator trace deviates from 1 by " +
                    describe(trace_dev));
  }
  const double lowest = eigen_min(mat_, tol.algebraic);
  if (lowest < -tol.eigen) {
    throw Error(ErrorCode::InvalidArgument,
                "DensityOperator not positive semidefinite, min eigenvalue " +
                    describe(lowest));
  }
}

// -- UnitaryOperator ---------------------------------------------------------

UnitaryOperator::UnitaryOperator(Dims dims, Matrix mat, NoCheck)
    : dims_(std::move(dims)), mat_(std::move(mat)) {
  require_square(dims_, mat_, "UnitaryOperator");
  require_finite(mat_, "UnitaryOperator");
}

UnitaryOperator::UnitaryOperator(Dims dims, Matrix mat, const Tolerances& tol)
    : UnitaryOperator(std::move(dims), std::move(mat), NoCheck{}) {
  const double dev = unitarity_deviation(mat_);
  if (dev > tol.algebraic) {
    throw Error(ErrorCode::NotUnitary,
                "operator not unitary, max |U^dag U - I| = " + describe(dev));
  }
}

UnitaryOperator UnitaryOperator::unchecked(Dims dims, Matrix mat) {
  return UnitaryOperator(std::move(dims), std::move(mat), NoCheck{});
}

UnitaryOperator UnitaryOperator::identity(Dims dims) {
  const auto n = static_cast<Eigen::Index>(total_dimension(dims));
  return UnitaryOperator(std::move(dims), Matrix::Identity(n, n), NoCheck{});
}

PureState UnitaryOperator::apply(const PureState& phi) const {
  if (dims_ != phi.dims()) {
    throw Error(ErrorCode::DimensionMismatch, "apply: dims differ");
  }
  return PureState(dims_, mat_ * phi.amps());
}

// -- Operations --------------------------------------------------------------

PureState tensor_product(const PureState& a, const PureState& b) {
  Vector amps(a.amps().size() * b.amps().size());
  for (Eigen::Index i = 0; i < a.amps().size(); ++i) {
    amps.segment(i * b.amps().size(), b.amps().size()) = a.amps()(i) * b.amps();
  }
  return PureState(concat(a.dims(), b.dims()), std::move(amps));
}

DensityOperator tensor_product(const DensityOperator& a,
                               const DensityOperator& b) {
  return DensityOperator(concat(a.dims(), b.dims()),
                         kron(a.matrix(), b.matrix()));
}

UnitaryOperator tensor_product(const UnitaryOperator& a,
                               const UnitaryOperator& b) {
  // Factors were validated (or deliberately not) on their own construction;
  // the product inherits that status.
  return UnitaryOperator::unchecked(concat(a.dims(), b.dims()),
                                    kron(a.matrix(), b.matrix()));
}

DensityOperator partial_trace(const DensityOperator& rho,
                              std::span<const std::size_t> keep) {
  const Dims& dims = rho.dims();
  if (keep.empty()) {
    throw Error(ErrorCode::InvalidArgument, "partial_trace: empty keep set");
  }
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t k : keep) {
    if (k >= dims.size()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "partial_trace: subsystem index out of range");
    }
    kept[k] = true;
  }

  Dims kept_dims;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (kept[i]) kept_dims.push_back(dims[i]);
  }

  // Split every full index into a (kept, traced) pair of compact indices.
  const std::size_t n = rho.dimension();
  std::vector<std::size_t> kept_of(n), traced_of(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t rest = idx, k = 0, t = 0, k_stride = 1, t_stride = 1;
    for (std::size_t s = dims.size(); s-- > 0;) {
      const std::size_t label = rest % dims[s];
      rest /= dims[s];
      if (kept[s]) {
        k += label * k_stride;
        k_stride *= dims[s];
      } else {
        t += label * t_stride;
        t_stride *= dims[s];
      }
    }
    kept_of[idx] = k;
    traced_of[idx] = t;
  }

  std::size_t m = 1;
  for (std::size_t d : kept_dims) m *= d;
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(m),
                            static_cast<Eigen::Index>(m));
  const Matrix& mat = rho.matrix();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (traced_of[i] != traced_of[j]) continue;
      out(static_cast<Eigen::Index>(kept_of[i]),
          static_cast<Eigen::Index>(kept_of[j])) +=
          mat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return DensityOperator(std::move(kept_dims), std::move(out));
}

double fidelity_against(const DensityOperator& rho, const PureState& phi,
                        double tol) {
  if (rho.dims() != phi.dims()) {
    throw Error(ErrorCode::DimensionMismatch, "fidelity: dims differ");
  }
  const Complex f = phi.amps().dot(rho.matrix() * phi.amps());
  if (std::abs(f.imag()) > tol) {
    throw Error(ErrorCode::ImaginaryResidue,
                "fidelity: imaginary residue " + describe(f.imag()));
  }
  return std::clamp(f.real(), 0.0, 1.0);
}

DensityOperator outer(const PureState& phi) {
  return DensityOperator(phi.dims(), phi.amps() * phi.amps().adjoint());
}

double eigen_min(const Matrix& m, double hermiticity_tol) {
  const double herm = hermiticity_deviation(m);
  if (herm > hermiticity_tol) {
    throw Error(ErrorCode::NotHermitian,
                "eigen_min: input not Hermitian, deviation " + describe(herm));
  }
  // Symmetrize so round-off in the strictly-lower triangle is not dropped.
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double eigen_min(const DensityOperator& rho) {
  return eigen_min(rho.matrix());
}

}  // namespace qdel
