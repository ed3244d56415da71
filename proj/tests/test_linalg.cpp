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

#include <cmath>
#include <limits>
#include <random>

#include "error.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace qdel;

namespace {

constexpr double kTol = 1e-12;

PureState from_oracle(const std::vector<oracle::C>& v, Dims dims) {
  Vector amps(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) amps(static_cast<Eigen::Index>(i)) = v[i];
  return PureState(std::move(dims), std::move(amps));
}

PureState qubit(Complex a, Complex b) {
  Vector v(2);
  v << a, b;
  return PureState(Dims{2}, v);
}

/// Convex mixture of `terms` random projectors on `dims`.
DensityOperator random_mixed(std::mt19937_64& rng, const Dims& dims, int terms) {
  std::size_t n = 1;
  for (auto d : dims) n *= d;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> w(terms);
  double total = 0.0;
  for (auto& x : w) total += (x = u(rng));
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (int k = 0; k < terms; ++k) {
    const auto v = from_oracle(oracle::random_state(rng, n), dims).amps();
    m += (w[k] / total) * v * v.adjoint();
  }
  // Restore exact Hermiticity lost to summation order.
  m = 0.5 * (m + m.adjoint()).eval();
  return DensityOperator(dims, m);
}

oracle::Dense to_dense(const Matrix& m) {
  oracle::Dense d = oracle::zeros(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      d(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = m(r, c);
  return d;
}

}  // namespace

// -- construction ---------------------------------------------------------------

TEST(PureState, RejectsUnnormalizedAmplitudes) {
  Vector v(2);
  v << 1.0, 1.0;
  try {
    PureState(Dims{2}, v);
    FAIL() << "expected NotNormalized";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNormalized);
  }
}

TEST(PureState, RejectsLengthMismatchAndSmallDims) {
  Vector v = Vector::Zero(3);
  v(0) = 1.0;
  EXPECT_THROW(PureState(Dims{2}, v), Error);
  EXPECT_THROW(PureState(Dims{1, 3}, v), Error);
  EXPECT_THROW(PureState(Dims{}, v), Error);
}

TEST(PureState, RejectsNonFinite) {
  Vector v(2);
  v << std::numeric_limits<double>::quiet_NaN(), 0.0;
  EXPECT_THROW(PureState(Dims{2}, v), Error);
}

TEST(PureState, BasisUsesRowMajorLabels) {
  const std::size_t labels[] = {1, 0, 2};
  const PureState s = PureState::basis(Dims{2, 2, 3}, labels);
  EXPECT_EQ(s.amps()(1 * 6 + 0 * 3 + 2), Complex(1.0));
  EXPECT_EQ(flat_index(std::vector<std::size_t>{2, 2, 3}, labels), 8u);
}

TEST(UnitaryOperator, RejectsNonUnitary) {
  Matrix m = Matrix::Identity(2, 2);
  m(0, 0) = 1.1;
  try {
    UnitaryOperator(Dims{2}, m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotUnitary);
  }
  EXPECT_NO_THROW(UnitaryOperator::unchecked(Dims{2}, m));
}

TEST(DensityOperator, RejectsEachBrokenInvariant) {
  Matrix not_herm(2, 2);
  not_herm << 0.5, 0.1, 0.2, 0.5;
  Matrix bad_trace(2, 2);
  bad_trace << 0.6, 0.0, 0.0, 0.6;
  Matrix not_psd(2, 2);
  not_psd << 1.5, 0.0, 0.0, -0.5;

  auto code_of = [](const Matrix& m) {
    try {
      DensityOperator(Dims{2}, m);
    } catch (const Error& e) {
      return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code_of(not_herm), ErrorCode::NotHermitian);
  EXPECT_EQ(code_of(bad_trace), ErrorCode::NotNormalized);
  EXPECT_EQ(code_of(not_psd), ErrorCode::InvalidArgument);
}

// -- tensor_product -------------------------------------------------------------

TEST(TensorProduct, BasisKets) {
  const PureState s = tensor_product(PureState::basis(2, 0), PureState::basis(2, 0));
  EXPECT_EQ(s.dims(), (Dims{2, 2}));
  EXPECT_EQ(s.amps()(0), Complex(1.0));
  EXPECT_DOUBLE_EQ(s.amps().norm(), 1.0);
}

TEST(TensorProduct, IdentityTimesIdentity) {
  const auto i4 = tensor_product(UnitaryOperator::identity(Dims{2}),
                                 UnitaryOperator::identity(Dims{2}));
  EXPECT_EQ(i4.dims(), (Dims{2, 2}));
  EXPECT_TRUE(i4.matrix().isApprox(Matrix::Identity(4, 4)));
}

TEST(TensorProduct, ProductAmplitudes) {
  const PureState psi = qubit(0.6, 0.8);
  const PureState pp = tensor_product(psi, psi);
  const double expected[] = {0.36, 0.48, 0.48, 0.64};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(pp.amps()(i).real(), expected[i], kTol);
}

TEST(TensorProduct, MatchesOracleAndIsAssociative) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = oracle::random_state(rng, 2);
    const auto b = oracle::random_state(rng, 2);
    const auto c = oracle::random_state(rng, 3);
    const PureState sa = from_oracle(a, {2}), sb = from_oracle(b, {2}),
                    sc = from_oracle(c, {3});
    const PureState left = tensor_product(tensor_product(sa, sb), sc);
    const PureState right = tensor_product(sa, tensor_product(sb, sc));
    const auto expected = oracle::kron(oracle::kron(a, b), c);
    EXPECT_EQ(left.dims(), (Dims{2, 2, 3}));
    EXPECT_EQ(left.dims(), right.dims());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      EXPECT_LE(std::abs(left.amps()(i) - expected[i]), kTol);
      EXPECT_LE(std::abs(left.amps()(i) - right.amps()(i)), kTol);
    }
  }
}

TEST(TensorProduct, DensityOperatorsKeepUnitTrace) {
  std::mt19937_64 rng(11);
  const auto a = random_mixed(rng, {2}, 3);
  const auto b = random_mixed(rng, {3}, 2);
  const auto ab = tensor_product(a, b);
  EXPECT_EQ(ab.dims(), (Dims{2, 3}));
  EXPECT_NEAR(ab.matrix().trace().real(), 1.0, kTol);
}

// -- partial_trace --------------------------------------------------------------

TEST(PartialTrace, ProductStateFactorizes) {
  std::mt19937_64 rng(3);
  const auto rho_a = random_mixed(rng, {2}, 2);
  const auto rho = tensor_product(rho_a, outer(PureState::basis(2, 0)));
  const std::size_t keep[] = {0};
  const auto reduced = partial_trace(rho, keep);
  EXPECT_LE((reduced.matrix() - rho_a.matrix()).cwiseAbs().maxCoeff(), kTol);
}

TEST(PartialTrace, BellStateMarginalIsMaximallyMixed) {
  Vector v = Vector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  const auto rho = outer(PureState(Dims{2, 2}, v));
  const std::size_t keep[] = {1};
  const auto reduced = partial_trace(rho, keep);
  EXPECT_LE((reduced.matrix() - 0.5 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff(),
            kTol);
}

TEST(PartialTrace, Errors) {
  const auto rho = outer(PureState::basis(Dims{2, 2}, std::vector<std::size_t>{0, 1}));
  try {
    partial_trace(rho, std::span<const std::size_t>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
  const std::size_t bad[] = {2};
  try {
    partial_trace(rho, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
  }
}

TEST(PartialTrace, KeptSubsystemsComeOutInOriginalOrder) {
  const std::size_t labels[] = {1, 0, 2};
  const auto rho = outer(PureState::basis(Dims{2, 2, 3}, labels));
  const std::size_t keep[] = {2, 0};
  const auto reduced = partial_trace(rho, keep);
  EXPECT_EQ(reduced.dims(), (Dims{2, 3}));
  // Kept labels (1, 2) -> index 1*3 + 2.
  EXPECT_NEAR(reduced.matrix()(5, 5).real(), 1.0, kTol);
}

TEST(PartialTrace, MatchesDefinitionLevelOracleOnEveryKeepSet) {
  std::mt19937_64 rng(19);
  const Dims dims{2, 2, 3};
  const std::vector<std::vector<std::size_t>> keeps{
      {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
  for (int trial = 0; trial < 10; ++trial) {
    const auto rho = random_mixed(rng, dims, 4);
    for (const auto& keep : keeps) {
      const auto reduced = partial_trace(rho, keep);
      const auto expected = oracle::partial_trace(to_dense(rho.matrix()), dims, keep);
      EXPECT_LE(oracle::max_abs_diff(to_dense(reduced.matrix()), expected), kTol);
      EXPECT_NEAR(reduced.matrix().trace().real(), 1.0, kTol);
      EXPECT_LE(hermiticity_deviation(reduced.matrix()), kTol);
    }
  }
}

TEST(PartialTrace, ProductPropertyOnRandomStates) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const PureState a = from_oracle(oracle::random_state(rng, 2), {2});
    const PureState b = from_oracle(oracle::random_state(rng, 6), {2, 3});
    const std::size_t keep[] = {0};
    const auto reduced = partial_trace(outer(tensor_product(a, b)), keep);
    EXPECT_LE((reduced.matrix() - outer(a).matrix()).cwiseAbs().maxCoeff(), kTol);
  }
}

// -- outer / fidelity -----------------------------------------------------------

TEST(Outer, Examples) {
  EXPECT_TRUE(outer(PureState::basis(2, 0)).matrix().isApprox(
      (Matrix(2, 2) << 1, 0, 0, 0).finished()));

  const double s = 1.0 / std::sqrt(2.0);
  const auto plus = outer(qubit(s, s)).matrix();
  EXPECT_LE((plus - Matrix::Constant(2, 2, 0.5)).cwiseAbs().maxCoeff(), kTol);

  Vector psi_plus = Vector::Zero(4);
  psi_plus(1) = psi_plus(2) = s;
  const Matrix p = outer(PureState(Dims{2, 2}, psi_plus)).matrix();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const bool middle = (r == 1 || r == 2) && (c == 1 || c == 2);
      EXPECT_NEAR(p(r, c).real(), middle ? 0.5 : 0.0, kTol);
    }
  }
}

TEST(Fidelity, BasisExamples) {
  const auto rho = outer(PureState::basis(2, 0));
  EXPECT_NEAR(fidelity_against(rho, PureState::basis(2, 0)), 1.0, kTol);
  EXPECT_NEAR(fidelity_against(rho, PureState::basis(2, 1)), 0.0, kTol);
}

TEST(Fidelity, SelfOverlapIsOne) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const PureState phi = from_oracle(oracle::random_state(rng, 12), {2, 2, 3});
    EXPECT_NEAR(fidelity_against(outer(phi), phi), 1.0, kTol);
  }
}

TEST(Fidelity, DimensionMismatch) {
  const auto rho = outer(PureState::basis(2, 0));
  try {
    fidelity_against(rho, PureState::basis(3, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(Fidelity, ImaginaryResidueSignalsNonHermitianInput) {
  // Admitted only because construction tolerances are loosened.
  Matrix m(2, 2);
  m << Complex(0.5, 0.0), Complex(0.0, 1e-6), Complex(0.0, 1e-6),
      Complex(0.5, 0.0);
  const DensityOperator rho(Dims{2}, m, Tolerances{1e-5, 1e-10});
  const double s = 1.0 / std::sqrt(2.0);
  try {
    fidelity_against(rho, qubit(s, s));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ImaginaryResidue);
  }
}

// -- eigen_min ------------------------------------------------------------------

TEST(EigenMin, Examples) {
  EXPECT_NEAR(eigen_min(Matrix(0.5 * Matrix::Identity(2, 2))), 0.5, 1e-10);
  EXPECT_NEAR(eigen_min((Matrix(2, 2) << 1, 0, 0, 0).finished()), 0.0, 1e-10);
}

TEST(EigenMin, MatchesTraceDeterminantOracleOn2x2) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rho = random_mixed(rng, {2}, 2);
    const Matrix& m = rho.matrix();
    const auto [lo, hi] = oracle::eig2(m(0, 0).real(), m(1, 1).real(), m(0, 1));
    (void)hi;
    EXPECT_NEAR(eigen_min(rho), lo, 1e-10);
  }
}

TEST(EigenMin, RandomMixturesArePositiveSemidefinite) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    EXPECT_GE(eigen_min(random_mixed(rng, {2, 2, 3}, 1 + trial % 5)), -1e-10);
  }
}

TEST(EigenMin, RejectsNonHermitian) {
  Matrix m(2, 2);
  m << 0.5, 0.3, 0.0, 0.5;
  try {
    eigen_min(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotHermitian);
  }
}
