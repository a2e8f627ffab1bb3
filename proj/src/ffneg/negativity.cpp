/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "ffneg/negativity.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "ffneg/diagnostics.hpp"
#include "ffneg/error.hpp"

namespace ffneg {

  namespace {
    // Relative size under which a Schur diagonal entry is treated as zero.
    constexpr double kInfiniteRootTolerance = 1e-13;
  }  // namespace

  TwistedPencil build_pencil(const BlockView &blocks) {
    const Eigen::Index na = blocks.m_a.rows();
    const Eigen::Index nb = blocks.m_b.rows();
    const Eigen::Index n = na + nb;
    TwistedPencil p;
    p.n_a_majoranas = static_cast<int>(na);
    p.a0 = ComplexMatrix::Zero(n, n);
    p.a1 = ComplexMatrix::Zero(n, n);
    p.a0.topLeftCorner(na, na).setIdentity();
    p.a0.bottomLeftCorner(nb, na) = blocks.gamma_ba();
    p.a0.bottomRightCorner(nb, nb) = blocks.gamma_b();
    p.a1.topLeftCorner(na, na) = blocks.gamma_a();
    p.a1.topRightCorner(na, nb) = blocks.gamma_ab();
    p.a1.bottomRightCorner(nb, nb) = -ComplexMatrix::Identity(nb, nb);
    return p;
  }

  Complex twisted_polynomial(const BlockView &blocks, Complex lambda) {
    require(lambda != Complex(0.0), ErrorCode::kInvalidArgument, "twisted_polynomial needs lambda != 0");
    const Eigen::Index na = blocks.m_a.rows();
    ComplexMatrix g = kI * blocks.block_ordered().cast<Complex>();
    for (Eigen::Index j = 0; j < g.rows(); ++j) {
      g(j, j) -= j < na ? -1.0 / lambda : lambda;
    }
    return std::pow(lambda, static_cast<double>(na)) * g.determinant();
  }

  PencilSpectrum pencil_spectrum(const TwistedPencil &pencil) {
    const double scale = std::max(pencil.a0.cwiseAbs().maxCoeff(), pencil.a1.cwiseAbs().maxCoeff());
    require(scale > 0.0 && std::isfinite(scale), ErrorCode::kNumerical, "pencil has no finite nonzero entries");
    PencilSpectrum out;
    out.balance = 1.0 / scale;
    const GeneralizedSchur qz = generalized_schur(pencil.a0 * out.balance, pencil.a1 * out.balance);
    out.s_diag = qz.s;
    out.t_diag = qz.t;

    for (Eigen::Index j = 0; j < qz.s.size(); ++j) {
      const double as = std::abs(qz.s(j));
      const double at = std::abs(qz.t(j));
      if (std::max(as, at) <= kInfiniteRootTolerance) {
        std::ostringstream msg;
        msg << "singular pencil: |s| = " << as << ", |t| = " << at << " at diagonal entry " << j;
        throw Error(ErrorCode::kNumerical, msg.str());
      }
      if (at <= kInfiniteRootTolerance * as) {
        ++out.infinite_count;
      } else {
        out.roots.push_back(-qz.s(j) / qz.t(j));
      }
    }
    std::stable_sort(out.roots.begin(), out.roots.end(),
                     [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
    return out;
  }

  NegativityResult negativity(const BlockView &blocks) {
    NegativityResult result;
    result.spectrum = pencil_spectrum(build_pencil(blocks));
    const PencilSpectrum &sp = result.spectrum;

    // |P_>(0)| = prod max(|s_j|, |t_j|): roots inside the unit disk contribute
    // their |t_j|, roots outside (and at infinity) their |s_j|.
    double acc = 0.0;
    for (Eigen::Index j = 0; j < sp.s_diag.size(); ++j) {
      const double as = std::abs(sp.s_diag(j));
      const double at = std::abs(sp.t_diag(j));
      double pick = std::max(as, at);
      if (at > kInfiniteRootTolerance * as && std::abs(as / at - 1.0) <= kUnitCircleTolerance) {
        ++result.unit_circle_ties;
        pick = at;
      }
      acc += std::log(pick);
    }
    if (result.unit_circle_ties > 0) {
      debug("negativity: " + std::to_string(result.unit_circle_ties) +
            " pencil root(s) on the unit circle, classified as inside");
    }
    const double n_modes = 0.5 * static_cast<double>(sp.s_diag.size());
    double value = 0.5 * acc - n_modes * std::log(sp.balance);
    if (value < 0.0) {
      if (value < -1e-10) {
        warn("negativity: pencil evaluation returned " + std::to_string(value) + ", clipped to 0");
      }
      value = 0.0;
    }
    result.value = value;
    return result;
  }

  NegativityResult negativity(const CovarianceMatrix &gamma, const Bipartition &part) {
    return negativity(partition(gamma, part));
  }

  TwistedCovariance twisted_covariance(const BlockView &blocks) {
    const ComplexMatrix ga = blocks.gamma_a();
    const double smin = min_singular_value(ga);
    if (!(smin > kGammaAInvertibility)) {
      std::ostringstream msg;
      msg << "Gamma_A is singular (smallest singular value " << smin << ")";
      throw Error(ErrorCode::kSingularGammaA, msg.str());
    }
    const Eigen::Index na = ga.rows();
    const Eigen::Index nb = blocks.m_b.rows();
    const ComplexMatrix inv_a = ga.partialPivLu().inverse();
    const ComplexMatrix gab = blocks.gamma_ab();
    const ComplexMatrix gba = blocks.gamma_ba();
    TwistedCovariance out;
    out.gt.resize(na + nb, na + nb);
    out.gt.topLeftCorner(na, na) = -inv_a;
    out.gt.topRightCorner(na, nb) = kI * inv_a * gab;
    out.gt.bottomLeftCorner(nb, na) = -kI * gba * inv_a;
    out.gt.bottomRightCorner(nb, nb) = blocks.gamma_b() - gba * inv_a * gab;
    return out;
  }

  double negativity_via_twisted(const BlockView &blocks) {
    const TwistedCovariance tc = twisted_covariance(blocks);
    const Eigen::BDCSVD<ComplexMatrix> svd(blocks.gamma_a());
    double value = 0.5 * svd.singularValues().array().log().sum();
    const Eigen::ComplexEigenSolver<ComplexMatrix> es(tc.gt, false);
    require(es.info() == Eigen::Success, ErrorCode::kNumerical, "eigen decomposition of twisted covariance failed");
    for (Eigen::Index j = 0; j < es.eigenvalues().size(); ++j) {
      const double mod = std::abs(es.eigenvalues()(j));
      if (mod > 1.0) {
        value += 0.5 * std::log(mod);
      }
    }
    return std::max(0.0, value);
  }

  double negativity_via_twisted(const CovarianceMatrix &gamma, const Bipartition &part) {
    return negativity_via_twisted(partition(gamma, part));
  }

  double decoupled_negativity(const BlockView &blocks) {
    return 0.5 * trace_log1p_psd(RealMatrix(blocks.m_ab.transpose() * blocks.m_ab), 1.0);
  }

}  // namespace ffneg
