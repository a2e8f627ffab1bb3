/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <gtest/gtest.h>

#include "ffneg/linalg.hpp"
#include "support.hpp"

using namespace ffneg;

namespace {

  ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      for (Eigen::Index j = 0; j < a.cols(); ++j) {
        out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
      }
    }
    return out;
  }

}  // namespace

TEST(Norms, Identity) {
  const MatrixNorms n = norms(RealMatrix(RealMatrix::Identity(4, 4)));
  EXPECT_DOUBLE_EQ(n.operator_norm, 1.0);
  EXPECT_DOUBLE_EQ(n.frobenius_norm, 2.0);
  EXPECT_NEAR(n.trace_norm, 4.0, 1e-14);
}

TEST(Norms, Diagonal) {
  RealMatrix d = RealMatrix::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = -4.0;
  const MatrixNorms n = norms(d);
  EXPECT_NEAR(n.operator_norm, 4.0, 1e-14);
  EXPECT_NEAR(n.frobenius_norm, 5.0, 1e-14);
  EXPECT_NEAR(n.trace_norm, 7.0, 1e-14);
}

TEST(Norms, CommutingInvolutions) {
  ComplexMatrix sx(2, 2), sy(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, Complex(0, -1), Complex(0, 1), 0;
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix m = -0.5 * (kron(sx, sy) + kron(id, sy));
  EXPECT_NEAR(trace_norm(m), 2.0, 1e-13);
}

TEST(Linalg, SymplecticUnit) {
  const RealMatrix j = symplectic_unit();
  EXPECT_EQ(j(0, 1), 1.0);
  EXPECT_EQ(j(1, 0), -1.0);
  EXPECT_EQ(j(0, 0), 0.0);
}

TEST(Linalg, CanonicalFormReconstructs) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 6; ++n) {
    const RealMatrix m = fixtures::random_antisymmetric(2 * n, rng);
    const CanonicalForm cf = canonical_form(m);
    RealMatrix c = RealMatrix::Zero(2 * n, 2 * n);
    for (int j = 0; j < n; ++j) {
      c(2 * j, 2 * j + 1) = cf.nu(j);
      c(2 * j + 1, 2 * j) = -cf.nu(j);
    }
    EXPECT_LT((cf.rotation * c * cf.rotation.transpose() - m).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((cf.rotation.transpose() * cf.rotation - RealMatrix::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff(),
              1e-12);
    EXPECT_NEAR(cf.rotation.determinant(), 1.0, 1e-10);
  }
}

TEST(Linalg, HaarIsSpecialOrthogonal) {
  std::mt19937_64 rng(5);
  for (int n : {2, 3, 6, 9}) {
    const RealMatrix o = haar_special_orthogonal(n, rng);
    EXPECT_LT((o.transpose() * o - RealMatrix::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(o.determinant(), 1.0, 1e-12);
  }
}

TEST(Linalg, GeneralizedSchurDeterminant) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  const int n = 6;
  ComplexMatrix a0(n, n), a1(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a0(i, j) = Complex(g(rng), g(rng));
      a1(i, j) = Complex(g(rng), g(rng));
    }
  }
  const GeneralizedSchur qz = generalized_schur(a0, a1);
  for (Complex x : {Complex(0.3, 0.1), Complex(-1.2, 0.7), Complex(2.0, 0.0)}) {
    Complex prod = 1.0;
    for (int j = 0; j < n; ++j) {
      prod *= qz.s(j) + x * qz.t(j);
    }
    const Complex direct = (a0 + x * a1).determinant();
    EXPECT_NEAR(std::abs(prod), std::abs(direct), 1e-10 * std::abs(direct));
  }
}

TEST(Linalg, TraceLog1p) {
  RealMatrix m = RealMatrix::Zero(3, 3);
  m(0, 0) = 1.0;
  m(1, 1) = 3.0;
  EXPECT_NEAR(trace_log1p_psd(m, 0.5), std::log(1.5) + std::log(2.5), 1e-14);
}

TEST(Linalg, ExpmMatchesRotation) {
  RealMatrix a = RealMatrix::Zero(2, 2);
  a(0, 1) = 0.7;
  a(1, 0) = -0.7;
  const RealMatrix e = expm(a);
  EXPECT_NEAR(e(0, 0), std::cos(0.7), 1e-14);
  EXPECT_NEAR(e(0, 1), std::sin(0.7), 1e-14);
}

TEST(Linalg, MinSingularValue) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 2.0;
  m(1, 1) = Complex(0.0, -0.25);
  EXPECT_NEAR(min_singular_value(m), 0.25, 1e-15);
  EXPECT_NEAR(operator_norm(m), 2.0, 1e-15);
}
