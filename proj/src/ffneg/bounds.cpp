/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "ffneg/bounds.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ffneg/error.hpp"

namespace ffneg {

  namespace {
    constexpr double kChannelTolerance = 1e-10;
    constexpr double kLocalityTolerance = 1e-12;
    constexpr double kApplicabilitySlack = 1e-12;

    double off_block_norm(const RealMatrix &m, const Bipartition &part) {
      const RealMatrix ordered = part.to_block_order(m);
      const Eigen::Index na = 2 * part.n_a();
      const Eigen::Index nb = 2 * part.n_b();
      return std::max(ordered.topRightCorner(na, nb).cwiseAbs().maxCoeff(),
                      ordered.bottomLeftCorner(nb, na).cwiseAbs().maxCoeff());
    }

    // ln(1 + x) / x, continuous at 0.
    double log1p_over(double x) {
      return x > 1e-300 ? std::log1p(x) / x : 1.0;
    }
  }  // namespace

  GaussianChannel GaussianChannel::identity(int n_modes) {
    const Eigen::Index n = 2 * n_modes;
    // K = i kappa = i I would map Gamma to K Gamma K^dagger = Gamma.
    return GaussianChannel{RealMatrix::Zero(n, n), RealMatrix::Zero(n, n), RealMatrix::Identity(n, n)};
  }

  ChannelReport validate_channel(const GaussianChannel &ch, const Bipartition *locality) {
    ChannelReport report;
    const Eigen::Index n = ch.c.rows();
    if (ch.c.cols() != n || ch.d.rows() != n || ch.d.cols() != n || ch.kappa.rows() != n || ch.kappa.cols() != n ||
        n % 2 != 0 || n == 0) {
      report.message = "channel matrices must all be 2N x 2N";
      return report;
    }
    if (antisymmetry_defect(ch.c) > kLocalityTolerance || antisymmetry_defect(ch.d) > kLocalityTolerance) {
      report.message = "C and D must be antisymmetric";
      return report;
    }
    ComplexMatrix big(2 * n, 2 * n);
    const ComplexMatrix k = kI * ch.kappa.cast<Complex>();
    big.topLeftCorner(n, n) = kI * ch.c.cast<Complex>();
    big.topRightCorner(n, n) = k;
    big.bottomLeftCorner(n, n) = k.adjoint();
    big.bottomRightCorner(n, n) = kI * ch.d.cast<Complex>();
    const Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(big, Eigen::EigenvaluesOnly);
    report.min_eigenvalue = es.eigenvalues().minCoeff();
    report.max_eigenvalue = es.eigenvalues().maxCoeff();
    report.completely_positive =
        report.min_eigenvalue >= -1.0 - kChannelTolerance && report.max_eigenvalue <= 1.0 + kChannelTolerance;

    report.local = true;
    if (locality != nullptr) {
      require(locality->n_modes() * 2 == n, ErrorCode::kInvalidArgument, "bipartition does not match channel size");
      report.off_block_norm =
          std::max({off_block_norm(ch.c, *locality), off_block_norm(ch.d, *locality), off_block_norm(ch.kappa, *locality)});
      report.local = report.off_block_norm <= kLocalityTolerance;
    }
    report.valid = report.completely_positive && report.local;
    std::ostringstream msg;
    if (!report.completely_positive) {
      msg << "eigenvalues of [[C, K], [K^dagger, D]] span [" << report.min_eigenvalue << ", " << report.max_eigenvalue
          << "]; ";
    }
    if (!report.local) {
      msg << "off-diagonal blocks reach " << report.off_block_norm << "; ";
    }
    report.message = report.valid ? "ok" : msg.str();
    return report;
  }

  CovarianceMatrix apply_channel(const CovarianceMatrix &gamma, const GaussianChannel &ch) {
    const Eigen::Index n = gamma.m().rows();
    require(ch.c.rows() == n && ch.d.rows() == n && ch.kappa.rows() == n, ErrorCode::kInvalidArgument,
            "channel size does not match the state");
    // In real parts: Gamma (I + D Gamma)^{-1} = i m (I - d m)^{-1}, and
    // K (i x) K^dagger = i kappa (i x) (-i kappa^T) = i kappa x kappa^T.
    const RealMatrix lhs = RealMatrix::Identity(n, n) - ch.d * gamma.m();
    const Eigen::FullPivLU<RealMatrix> lu(lhs);
    if (!lu.isInvertible() || lu.rcond() < 1e-14) {
      throw Error(ErrorCode::kInvalidArgument, "channel is not applicable: I + D Gamma is singular");
    }
    const RealMatrix x = gamma.m() * lu.inverse();
    RealMatrix out = ch.kappa * x * ch.kappa.transpose() + ch.c;
    return CovarianceMatrix::from_matrix(0.5 * (out - out.transpose()));
  }

  GaussianChannel random_local_channel(const Bipartition &part, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> shrink(0.0, 1.0);
    const int n = part.n_modes();
    RealMatrix block = RealMatrix::Zero(2 * n, 2 * n);
    const Eigen::Index na = 2 * part.n_a();
    const Eigen::Index nb = 2 * part.n_b();
    block.topLeftCorner(na, na) = haar_special_orthogonal(na, rng);
    block.bottomRightCorner(nb, nb) = haar_special_orthogonal(nb, rng);
    RealMatrix damp = RealMatrix::Zero(2 * n, 2 * n);
    for (Eigen::Index j = 0; j < 2 * n; ++j) {
      damp(j, j) = shrink(rng);
    }
    const RealMatrix kappa = part.from_block_order(RealMatrix(block * damp));
    // ||[[C, K], [K^dagger, 0]]|| <= ||C|| + max s_j <= 1.
    const double s_max = damp.diagonal().maxCoeff();
    RealMatrix c = RealMatrix::Zero(2 * n, 2 * n);
    std::normal_distribution<double> normal(0.0, 1.0);
    RealMatrix raw = RealMatrix::Zero(2 * n, 2 * n);
    for (Eigen::Index j = 0; j < 2 * n; ++j) {
      for (Eigen::Index k = 0; k < 2 * n; ++k) {
        raw(j, k) = normal(rng);
      }
    }
    raw = part.to_block_order(RealMatrix(raw - raw.transpose()));
    raw.topRightCorner(na, nb).setZero();
    raw.bottomLeftCorner(nb, na).setZero();
    const double raw_norm = operator_norm(raw);
    if (raw_norm > 0.0) {
      c = part.from_block_order(RealMatrix(raw * (shrink(rng) * (1.0 - s_max) / raw_norm)));
    }
    return GaussianChannel{c, RealMatrix::Zero(2 * n, 2 * n), kappa};
  }

  BoundReport bound_report(const BlockView &blocks, std::optional<double> k_override) {
    BoundReport r;
    r.gamma_a_opnorm = operator_norm(blocks.m_a);
    r.gamma_b_opnorm = operator_norm(blocks.m_b);
    const MatrixNorms ab = norms(blocks.m_ab);
    r.gamma_ab_opnorm = ab.operator_norm;
    r.gamma_ab_frobenius = ab.frobenius_norm;
    const double big = std::max(r.gamma_a_opnorm, r.gamma_b_opnorm);
    const double small = std::min(r.gamma_a_opnorm, r.gamma_b_opnorm);
    r.k_plus = 1.0 + big;
    r.k_minus = 1.0 - big;
    double k_upper = r.k_minus;
    if (k_override) {
      require(*k_override > 0.0 && *k_override <= r.k_minus + kApplicabilitySlack, ErrorCode::kInvalidArgument,
              "k override must lie in (0, k_minus]");
      k_upper = *k_override;
    }

    // Gamma_BA Gamma_AB = m_ab^T m_ab (PSD).
    const RealMatrix cross = blocks.m_ab.transpose() * blocks.m_ab;
    r.lower = 0.5 * trace_log1p_psd(cross, 1.0 / (r.k_plus * r.k_plus));
    const double k_improved = 1.0 + small;
    r.improved_lower = 0.5 * trace_log1p_psd(cross, 1.0 / (k_improved * k_improved));

    r.upper_applicable = k_upper > 0.0 && r.gamma_ab_opnorm < k_upper + kApplicabilitySlack;
    r.upper_at_boundary = std::abs(r.gamma_ab_opnorm - k_upper) <= kApplicabilitySlack;
    r.upper = k_upper > 0.0 ? 0.5 * trace_log1p_psd(cross, 1.0 / (k_upper * k_upper))
                            : std::numeric_limits<double>::infinity();

    // ln(1 + x) / x is decreasing, so every eigenvalue mu of cross obeys
    // ln(1 + mu / k^2) >= mu ln(1 + s^2 / k^2) / s^2 with s = ||Gamma_AB||, and
    // ln(1 + mu / k^2) <= mu / k^2.
    const double s2 = r.gamma_ab_opnorm * r.gamma_ab_opnorm;
    const double f2 = r.gamma_ab_frobenius * r.gamma_ab_frobenius;
    const double kp2 = r.k_plus * r.k_plus;
    r.simple_lower = 0.5 * log1p_over(s2 / kp2) / kp2 * f2;
    r.simple_upper_applicable = r.upper_applicable;
    r.simple_upper = k_upper > 0.0 ? 0.5 * f2 / (k_upper * k_upper) : std::numeric_limits<double>::infinity();
    return r;
  }

  BoundReport bound_report(const CovarianceMatrix &gamma, const Bipartition &part, std::optional<double> k_override) {
    return bound_report(partition(gamma, part), k_override);
  }

}  // namespace ffneg
