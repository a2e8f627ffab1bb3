/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <optional>
#include <string>

#include "ffneg/gaussian.hpp"

namespace ffneg {

  /// Gaussian operation Gamma -> K (Gamma^{-1} + D)^{-1} K^dagger + C with
  /// C = i c, D = i d (c, d real antisymmetric) and K = i kappa (kappa real).
  struct GaussianChannel {
    RealMatrix c;
    RealMatrix d;
    RealMatrix kappa;

    static GaussianChannel identity(int n_modes);
  };

  struct ChannelReport {
    bool valid = false;
    bool completely_positive = false;
    bool local = false;
    double min_eigenvalue = 0.0;
    double max_eigenvalue = 0.0;
    double off_block_norm = 0.0;
    std::string message;
  };

  /// Complete positivity: eigenvalues of [[C, K], [K^dagger, D]] in [-1, 1]
  /// within 1e-10. With a bipartition, C, D and K must also be block diagonal
  /// (off-diagonal blocks below 1e-12).
  ChannelReport validate_channel(const GaussianChannel &ch, const Bipartition *locality = nullptr);

  /// Uses K Gamma (I + D Gamma)^{-1} K^dagger + C, so singular Gamma is fine.
  /// Throws ErrorCode::kInvalidArgument when I + D Gamma is singular.
  CovarianceMatrix apply_channel(const CovarianceMatrix &gamma, const GaussianChannel &ch);

  /// Random local channel on the bipartition with D = 0 (no postselection):
  /// kappa = O diag(s) with O Haar on each side and s_j in [0, 1], plus local
  /// noise C with ||C|| <= 1 - max s_j.
  GaussianChannel random_local_channel(const Bipartition &part, std::mt19937_64 &rng);

  struct BoundReport {
    double upper = 0.0;
    bool upper_applicable = false;
    /// ||Gamma_AB|| equals k_minus up to the slack.
    bool upper_at_boundary = false;
    double lower = 0.0;
    /// Lower bound with k_plus replaced by 1 + min(||Gamma_A||, ||Gamma_B||).
    double improved_lower = 0.0;
    /// Hoelder-type versions in terms of the Frobenius norm of Gamma_AB.
    double simple_upper = 0.0;
    bool simple_upper_applicable = false;
    double simple_lower = 0.0;
    double k_plus = 0.0;
    double k_minus = 0.0;
    double gamma_a_opnorm = 0.0;
    double gamma_b_opnorm = 0.0;
    double gamma_ab_opnorm = 0.0;
    double gamma_ab_frobenius = 0.0;
  };

  /// k_pm = 1 pm max(||Gamma_A||, ||Gamma_B||). k_override replaces k_minus in
  /// the upper bound (it must lie in (0, k_minus]).
  BoundReport bound_report(const BlockView &blocks, std::optional<double> k_override = std::nullopt);
  BoundReport bound_report(const CovarianceMatrix &gamma, const Bipartition &part,
                           std::optional<double> k_override = std::nullopt);

}  // namespace ffneg
