/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>

namespace ffneg {

  using Complex = std::complex<double>;
  using RealMatrix = Eigen::MatrixXd;
  using RealVector = Eigen::VectorXd;
  using ComplexMatrix = Eigen::MatrixXcd;
  using ComplexVector = Eigen::VectorXcd;

  inline constexpr Complex kI{0.0, 1.0};

  struct MatrixNorms {
    double operator_norm = 0.0;
    double frobenius_norm = 0.0;
    double trace_norm = 0.0;
  };

  /// Operator (largest singular value), Frobenius and trace (sum of singular
  /// values) norms.
  MatrixNorms norms(const ComplexMatrix &matrix);
  MatrixNorms norms(const RealMatrix &matrix);

  double operator_norm(const RealMatrix &matrix);
  double operator_norm(const ComplexMatrix &matrix);
  double trace_norm(const RealMatrix &matrix);
  double trace_norm(const ComplexMatrix &matrix);
  double min_singular_value(const ComplexMatrix &matrix);

  /// max |m + m^T| entrywise.
  double antisymmetry_defect(const RealMatrix &m);

  /// 2x2 symplectic unit [[0, 1], [-1, 0]].
  RealMatrix symplectic_unit();

  /// Diagonals of the simultaneous unitary triangularization (complex QZ)
  /// a0 = Q S Z^H, a1 = Q T Z^H, so det(a0 + x a1) = det(Q Z^H) prod(s_j + x t_j).
  struct GeneralizedSchur {
    ComplexVector s;
    ComplexVector t;
  };

  GeneralizedSchur generalized_schur(const ComplexMatrix &a0, const ComplexMatrix &a1);

  /// Real canonical form of an antisymmetric matrix: m = O (+)_j nu_j J O^T
  /// with O in SO(2N). nu_j >= 0 except possibly the last entry, which
  /// absorbs the sign needed to make det(O) = +1.
  struct CanonicalForm {
    RealMatrix rotation;
    RealVector nu;
  };

  CanonicalForm canonical_form(const RealMatrix &m);

  /// Haar-distributed element of SO(n).
  RealMatrix haar_special_orthogonal(Eigen::Index n, std::mt19937_64 &rng);

  /// tr ln(I + scale * M) for a Hermitian positive semidefinite M.
  double trace_log1p_psd(const ComplexMatrix &psd, double scale);
  double trace_log1p_psd(const RealMatrix &psd, double scale);

  RealMatrix expm(const RealMatrix &m);
  ComplexMatrix expm(const ComplexMatrix &m);

}  // namespace ffneg
