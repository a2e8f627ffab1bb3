/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <string>
#include <utility>

#include "ffneg/dynamics.hpp"
#include "ffneg/gaussian.hpp"

namespace ffneg {

  /// Evaluation time used for rates of pure or degenerate initial states.
  inline constexpr double kRegularizationTime = 1e-8;

  enum class PabMethod { kQuadrature, kBlock };

  const char *pab_method_name(PabMethod method);

  /// P_AB(Gamma) in block (A-first) order.
  struct PabMatrix {
    ComplexMatrix p;
    PabMethod method = PabMethod::kBlock;
    /// Some twisted-covariance eigenvalue lies within 1e-6 of the unit circle
    /// (block), or some quadrature node was ill conditioned.
    bool singularity_flag = false;
    /// min_j ||mu_j| - 1| over twisted-covariance eigenvalues (block only).
    double unit_circle_distance = 0.0;
  };

  /// Periodic trapezoid rule for int dk/2pi (Z_AB(k) + Gamma)^{-1},
  /// Z_AB(k) = e^{ik} I_A (+) (-e^{-ik}) I_B, nodes k_m = -pi + 2pi (m + shift)/nodes.
  PabMatrix pab_quadrature(const CovarianceMatrix &gamma, const Bipartition &part, int nodes = 1024,
                           double shift = 0.0);

  struct PabBlockOptions {
    /// Eigenvalues with ||mu| - 1| <= guard raise kUnitCircleEigenvalue. With
    /// guard 0 they are classified as inside the unit disk.
    double unit_circle_guard = 1e-9;
    /// sigma_min of Gamma_A and Gamma_B must exceed this (else kSingularBlock).
    double singular_block_threshold = 1e-8;
    /// Condition number limit for the eigenvector matrix of the twisted covariance.
    double eigvec_condition_guard = 1e10;
  };

  /// Spectral-projector representation built from the twisted covariance:
  /// AA = -(P^< Gt)_AA, BB = (P^> Gt^{-1})_BB, AB = i (P^>)_AB, BA = AB^dagger.
  PabMatrix pab_block(const CovarianceMatrix &gamma, const Bipartition &part, const PabBlockOptions &options = {});

  /// Block representation with unit-circle ties classified as inside;
  /// quadrature when a block is singular or the eigenbasis is ill conditioned.
  PabMatrix pab_default(const CovarianceMatrix &gamma, const Bipartition &part);

  struct RateResult {
    double value = 0.0;
    double imaginary_residue = 0.0;
    PabMethod method = PabMethod::kBlock;
    bool singularity_flag = false;
  };

  /// dE/dt = 1/2 Tr[P_AB(Gamma) dGamma/dt] with dGamma = i dm.
  RateResult rate(const CovarianceMatrix &gamma, const RealMatrix &dm, const Bipartition &part);
  RateResult rate(const PabMatrix &pab, const RealMatrix &dm, const Bipartition &part);

  /// (block-diagonal part, off-diagonal part) of a generator under the cut.
  std::pair<GeneratorMatrices, GeneratorMatrices> split_generator(const GeneratorMatrices &gen,
                                                                  const Bipartition &part);

  struct RateDecomposition {
    double total = 0.0;
    double local = 0.0;
    double inter = 0.0;
    /// ||dGamma/dt||_1.
    double dgamma_trace_norm = 0.0;
    PabMethod method = PabMethod::kBlock;
    bool singularity_flag = false;
  };

  RateDecomposition rate_decomposition(const CovarianceMatrix &gamma, const GeneratorMatrices &gen,
                                       const Bipartition &part);

  struct RateBounds {
    /// 2 (4 ||H||_1 + ||X||_1 + ||Y||_1)
    double magnitude = 0.0;
    /// Same with only the inter-subsystem parts.
    double increase = 0.0;
  };

  RateBounds rate_bounds(const GeneratorMatrices &gen, const Bipartition &part);

}  // namespace ffneg
