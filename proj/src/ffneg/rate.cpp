/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "ffneg/rate.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "ffneg/diagnostics.hpp"
#include "ffneg/error.hpp"
#include "ffneg/negativity.hpp"

namespace ffneg {

  namespace {
    constexpr double kQuadratureRcond = 1e-12;
    constexpr double kNearUnitCircle = 1e-6;

    void check_part(const CovarianceMatrix &gamma, const Bipartition &part) {
      require(part.n_modes() == gamma.n_modes(), ErrorCode::kInvalidArgument,
              "bipartition does not match the state size");
    }

    // Zeroes the off-diagonal (inter) or diagonal (local) blocks, in original order.
    RealMatrix block_part(const RealMatrix &m, const Bipartition &part, bool keep_local) {
      RealMatrix ordered = part.to_block_order(m);
      const Eigen::Index na = 2 * part.n_a();
      const Eigen::Index nb = 2 * part.n_b();
      if (keep_local) {
        ordered.topRightCorner(na, nb).setZero();
        ordered.bottomLeftCorner(nb, na).setZero();
      } else {
        ordered.topLeftCorner(na, na).setZero();
        ordered.bottomRightCorner(nb, nb).setZero();
      }
      return part.from_block_order(ordered);
    }
  }  // namespace

  const char *pab_method_name(PabMethod method) {
    return method == PabMethod::kBlock ? "block" : "quadrature";
  }

  PabMatrix pab_quadrature(const CovarianceMatrix &gamma, const Bipartition &part, int nodes, double shift) {
    check_part(gamma, part);
    require(nodes >= 1, ErrorCode::kInvalidArgument, "quadrature needs at least one node");
    const ComplexMatrix g = kI * part.to_block_order(gamma.m()).cast<Complex>();
    const Eigen::Index n = g.rows();
    const Eigen::Index na = 2 * part.n_a();
    PabMatrix out;
    out.method = PabMethod::kQuadrature;
    out.unit_circle_distance = std::numeric_limits<double>::quiet_NaN();
    out.p = ComplexMatrix::Zero(n, n);
    for (int m = 0; m < nodes; ++m) {
      const double k = -std::numbers::pi + 2.0 * std::numbers::pi * (m + shift) / nodes;
      const Complex z = std::polar(1.0, k);
      ComplexMatrix a = g;
      for (Eigen::Index j = 0; j < n; ++j) {
        a(j, j) += j < na ? z : -std::conj(z);
      }
      const Eigen::FullPivLU<ComplexMatrix> lu(a);
      if (lu.rcond() < kQuadratureRcond) {
        out.singularity_flag = true;
      }
      out.p += lu.inverse();
    }
    out.p /= static_cast<double>(nodes);
    if (out.singularity_flag) {
      warn("P_AB quadrature hit an ill-conditioned node; consider a shifted grid");
    }
    return out;
  }

  PabMatrix pab_block(const CovarianceMatrix &gamma, const Bipartition &part, const PabBlockOptions &options) {
    check_part(gamma, part);
    const BlockView blocks = partition(gamma, part);
    const double smin_a = min_singular_value(blocks.gamma_a());
    const double smin_b = min_singular_value(blocks.gamma_b());
    if (!(smin_a > options.singular_block_threshold) || !(smin_b > options.singular_block_threshold)) {
      std::ostringstream msg;
      msg << "block representation needs invertible Gamma_A and Gamma_B (sigma_min " << smin_a << ", " << smin_b
          << ")";
      throw Error(ErrorCode::kSingularBlock, msg.str());
    }
    const ComplexMatrix gt = twisted_covariance(blocks).gt;
    const Eigen::ComplexEigenSolver<ComplexMatrix> es(gt);
    require(es.info() == Eigen::Success, ErrorCode::kNumerical, "eigen decomposition of twisted covariance failed");
    const ComplexVector &mu = es.eigenvalues();
    const ComplexMatrix &v = es.eigenvectors();
    const Eigen::PartialPivLU<ComplexMatrix> lu(v);
    const double rcond = lu.rcond();
    if (!(rcond * options.eigvec_condition_guard > 1.0)) {
      std::ostringstream msg;
      msg << "twisted covariance eigenvectors are ill conditioned (rcond " << rcond << ")";
      throw Error(ErrorCode::kNumerical, msg.str());
    }
    const ComplexMatrix v_inv = lu.inverse();

    PabMatrix out;
    out.method = PabMethod::kBlock;
    out.unit_circle_distance = std::numeric_limits<double>::infinity();
    const Eigen::Index n = mu.size();
    ComplexVector inside_mu = ComplexVector::Zero(n);
    ComplexVector outside = ComplexVector::Zero(n);
    ComplexVector outside_inv = ComplexVector::Zero(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      const double mod = std::abs(mu(j));
      const double dist = std::abs(mod - 1.0);
      out.unit_circle_distance = std::min(out.unit_circle_distance, dist);
      if (options.unit_circle_guard > 0.0 && dist <= options.unit_circle_guard) {
        std::ostringstream msg;
        msg << "twisted covariance eigenvalue " << mu(j).real() << (mu(j).imag() < 0 ? " - " : " + ")
            << std::abs(mu(j).imag()) << "i lies on the unit circle";
        throw Error(ErrorCode::kUnitCircleEigenvalue, msg.str());
      }
      if (mod <= 1.0) {
        inside_mu(j) = mu(j);
      } else {
        outside(j) = 1.0;
        outside_inv(j) = 1.0 / mu(j);
      }
    }
    out.singularity_flag = out.unit_circle_distance < kNearUnitCircle;

    const Eigen::Index na = blocks.m_a.rows();
    const Eigen::Index nb = blocks.m_b.rows();
    const ComplexMatrix lt_g = v * inside_mu.asDiagonal() * v_inv;
    const ComplexMatrix gt_proj = v * outside.asDiagonal() * v_inv;
    const ComplexMatrix gt_ginv = v * outside_inv.asDiagonal() * v_inv;
    out.p.resize(n, n);
    out.p.topLeftCorner(na, na) = -lt_g.topLeftCorner(na, na);
    out.p.bottomRightCorner(nb, nb) = gt_ginv.bottomRightCorner(nb, nb);
    out.p.topRightCorner(na, nb) = kI * gt_proj.topRightCorner(na, nb);
    out.p.bottomLeftCorner(nb, na) = out.p.topRightCorner(na, nb).adjoint();
    return out;
  }

  PabMatrix pab_default(const CovarianceMatrix &gamma, const Bipartition &part) {
    PabBlockOptions options;
    options.unit_circle_guard = 0.0;
    try {
      return pab_block(gamma, part, options);
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kSingularBlock && e.code() != ErrorCode::kSingularGammaA &&
          e.code() != ErrorCode::kNumerical) {
        throw;
      }
      debug(std::string("P_AB block representation unavailable (") + e.what() + "); using quadrature");
    }
    return pab_quadrature(gamma, part);
  }

  RateResult rate(const PabMatrix &pab, const RealMatrix &dm, const Bipartition &part) {
    require(dm.rows() == pab.p.rows() && dm.cols() == pab.p.cols(), ErrorCode::kInvalidArgument,
            "dGamma size does not match P_AB");
    const ComplexMatrix dg = kI * part.to_block_order(dm).cast<Complex>();
    const ComplexMatrix terms = pab.p.cwiseProduct(dg.transpose());
    const Complex tr = 0.5 * terms.sum();
    const double scale = 0.5 * terms.cwiseAbs().sum();
    RateResult r;
    r.value = tr.real();
    r.imaginary_residue = tr.imag();
    r.method = pab.method;
    r.singularity_flag = pab.singularity_flag;
    // Summands are O(scale); cancellation leaves roundoff relative to it.
    if (std::abs(r.imaginary_residue) > 1e-9 * std::max(1.0, scale)) {
      std::ostringstream msg;
      msg << "rate has imaginary residue " << r.imaginary_residue;
      warn(msg.str());
    }
    return r;
  }

  RateResult rate(const CovarianceMatrix &gamma, const RealMatrix &dm, const Bipartition &part) {
    check_part(gamma, part);
    return rate(pab_default(gamma, part), dm, part);
  }

  std::pair<GeneratorMatrices, GeneratorMatrices> split_generator(const GeneratorMatrices &gen,
                                                                  const Bipartition &part) {
    require(gen.k.rows() == 2 * part.n_modes(), ErrorCode::kInvalidArgument,
            "bipartition does not match the generator size");
    GeneratorMatrices local{block_part(gen.k, part, true), block_part(gen.x, part, true),
                            block_part(gen.y, part, true)};
    GeneratorMatrices inter{block_part(gen.k, part, false), block_part(gen.x, part, false),
                            block_part(gen.y, part, false)};
    return {std::move(local), std::move(inter)};
  }

  RateDecomposition rate_decomposition(const CovarianceMatrix &gamma, const GeneratorMatrices &gen,
                                       const Bipartition &part) {
    check_part(gamma, part);
    const auto [local, inter] = split_generator(gen, part);
    const PabMatrix pab = pab_default(gamma, part);
    const RealMatrix dm_local = dgamma_dt(gamma.m(), local);
    const RealMatrix dm_inter = dgamma_dt(gamma.m(), inter);
    RateDecomposition out;
    out.local = rate(pab, dm_local, part).value;
    out.inter = rate(pab, dm_inter, part).value;
    out.total = out.local + out.inter;
    out.dgamma_trace_norm = trace_norm(RealMatrix(dm_local + dm_inter));
    out.method = pab.method;
    out.singularity_flag = pab.singularity_flag;
    return out;
  }

  RateBounds rate_bounds(const GeneratorMatrices &gen, const Bipartition &part) {
    const auto inter = split_generator(gen, part).second;
    auto weight = [](const GeneratorMatrices &g) {
      return 2.0 * (4.0 * trace_norm(g.k) + trace_norm(g.x) + trace_norm(g.y));
    };
    return RateBounds{weight(gen), weight(inter)};
  }

}  // namespace ffneg
