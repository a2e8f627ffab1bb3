/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "ffneg/gaussian.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "ffneg/diagnostics.hpp"
#include "ffneg/error.hpp"

namespace ffneg {

  Bipartition::Bipartition(int n_modes, std::vector<int> modes_a)
      : n_modes_(n_modes), modes_a_(std::move(modes_a)) {
    require(n_modes_ >= 2, ErrorCode::kInvalidArgument, "bipartition needs at least two modes");
    side_.assign(static_cast<std::size_t>(n_modes_), 1);
    for (int mode : modes_a_) {
      require(mode >= 0 && mode < n_modes_, ErrorCode::kInvalidArgument,
              "bipartition: mode index " + std::to_string(mode) + " out of range [0, " + std::to_string(n_modes_) +
                  ")");
      require(side_[static_cast<std::size_t>(mode)] == 1, ErrorCode::kInvalidArgument,
              "bipartition: duplicate mode " + std::to_string(mode));
      side_[static_cast<std::size_t>(mode)] = 0;
    }
    for (int mode = 0; mode < n_modes_; ++mode) {
      if (side_[static_cast<std::size_t>(mode)] == 1) {
        modes_b_.push_back(mode);
      }
    }
    require(!modes_a_.empty() && !modes_b_.empty(), ErrorCode::kInvalidArgument,
            "bipartition: both subsystems must be nonempty");

    order_.reserve(2 * static_cast<std::size_t>(n_modes_));
    for (const auto *side : {&modes_a_, &modes_b_}) {
      for (int mode : *side) {
        order_.push_back(2 * mode);
        order_.push_back(2 * mode + 1);
      }
    }
  }

  Bipartition Bipartition::leading(int n_modes, int n_a) {
    std::vector<int> modes(static_cast<std::size_t>(std::max(0, n_a)));
    for (int j = 0; j < n_a; ++j) {
      modes[static_cast<std::size_t>(j)] = j;
    }
    return Bipartition(n_modes, std::move(modes));
  }

  Bipartition Bipartition::half(int n_modes) {
    return leading(n_modes, n_modes / 2);
  }

  namespace {
    RealMatrix clip_spectrum(const RealMatrix &m) {
      CanonicalForm cf = canonical_form(m);
      RealMatrix canonical = RealMatrix::Zero(m.rows(), m.cols());
      for (Eigen::Index j = 0; j < cf.nu.size(); ++j) {
        const double nu = std::clamp(cf.nu(j), -1.0, 1.0);
        canonical(2 * j, 2 * j + 1) = nu;
        canonical(2 * j + 1, 2 * j) = -nu;
      }
      RealMatrix out = cf.rotation * canonical * cf.rotation.transpose();
      return 0.5 * (out - out.transpose());
    }
  }  // namespace

  ValidationReport validate(const RealMatrix &m) {
    ValidationReport report;
    std::ostringstream msg;
    if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0) {
      report.message = "covariance must be a nonempty 2N x 2N matrix";
      return report;
    }
    if (!m.allFinite()) {
      report.message = "covariance has non-finite entries";
      return report;
    }
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    report.antisymmetry_defect = antisymmetry_defect(m);
    report.antisymmetric = report.antisymmetry_defect <= kAntisymmetryTolerance * scale;

    Eigen::BDCSVD<RealMatrix> svd(0.5 * (m - m.transpose()));
    const RealVector &sv = svd.singularValues();
    report.max_singular_value = sv(0);
    report.spectrum_in_range = report.max_singular_value <= 1.0 + kSpectralTolerance;
    // Singular values of a real antisymmetric matrix come in equal pairs.
    report.nu.resize(m.rows() / 2);
    for (Eigen::Index j = 0; j < report.nu.size(); ++j) {
      report.nu(j) = 0.5 * (sv(2 * j) + sv(2 * j + 1));
    }

    report.valid = report.antisymmetric && report.spectrum_in_range;
    if (!report.antisymmetric) {
      msg << "antisymmetry defect " << report.antisymmetry_defect << " exceeds tolerance; ";
    }
    if (!report.spectrum_in_range) {
      msg << "max singular value " << report.max_singular_value << " exceeds 1; ";
    }
    report.message = report.valid ? "ok" : msg.str();
    return report;
  }

  ValidationReport validate(const CovarianceMatrix &gamma) {
    return validate(gamma.m());
  }

  CovarianceMatrix CovarianceMatrix::from_matrix(const RealMatrix &m, double clip_tolerance) {
    ValidationReport report = validate(m);
    if (!report.antisymmetric || report.max_singular_value > 1.0 + std::max(clip_tolerance, kSpectralTolerance) ||
        report.nu.size() == 0) {
      throw Error(ErrorCode::kInvalidState, "invalid covariance matrix: " + report.message);
    }
    RealMatrix antisym = 0.5 * (m - m.transpose());
    if (!report.spectrum_in_range) {
      std::ostringstream msg;
      msg << "covariance spectrum exceeds 1 by " << report.max_singular_value - 1.0
          << "; clipping onto the unit interval";
      warn(msg.str());
      antisym = clip_spectrum(antisym);
    }
    return CovarianceMatrix(std::move(antisym));
  }

  CovarianceMatrix CovarianceMatrix::zero(int n_modes) {
    require(n_modes >= 1, ErrorCode::kInvalidArgument, "n_modes must be positive");
    return CovarianceMatrix(RealMatrix::Zero(2 * n_modes, 2 * n_modes));
  }

  QuadraticHamiltonian::QuadraticHamiltonian(const RealMatrix &k) {
    require(k.rows() == k.cols() && k.rows() % 2 == 0 && k.rows() > 0, ErrorCode::kInvalidArgument,
            "Hamiltonian matrix must be a nonempty 2N x 2N matrix");
    require(k.allFinite(), ErrorCode::kInvalidArgument, "Hamiltonian matrix has non-finite entries");
    const double scale = std::max(1.0, k.cwiseAbs().maxCoeff());
    require(antisymmetry_defect(k) <= kAntisymmetryTolerance * scale, ErrorCode::kInvalidArgument,
            "Hamiltonian matrix must be antisymmetric");
    k_ = 0.5 * (k - k.transpose());
  }

  QuadraticHamiltonian QuadraticHamiltonian::zero(int n_modes) {
    return QuadraticHamiltonian(RealMatrix::Zero(2 * n_modes, 2 * n_modes));
  }

  RealMatrix BlockView::block_ordered() const {
    const Eigen::Index na = m_a.rows();
    const Eigen::Index nb = m_b.rows();
    RealMatrix out(na + nb, na + nb);
    out.topLeftCorner(na, na) = m_a;
    out.topRightCorner(na, nb) = m_ab;
    out.bottomLeftCorner(nb, na) = m_ba();
    out.bottomRightCorner(nb, nb) = m_b;
    return out;
  }

  BlockView partition(const CovarianceMatrix &gamma, const Bipartition &part) {
    require(part.n_modes() == gamma.n_modes(), ErrorCode::kInvalidArgument,
            "bipartition has " + std::to_string(part.n_modes()) + " modes but covariance has " +
                std::to_string(gamma.n_modes()));
    const RealMatrix ordered = part.to_block_order(gamma.m());
    const Eigen::Index na = 2 * part.n_a();
    const Eigen::Index nb = 2 * part.n_b();
    return BlockView{part, ordered.topLeftCorner(na, na), ordered.bottomRightCorner(nb, nb),
                     ordered.topRightCorner(na, nb)};
  }

  CovarianceMatrix reassemble(const BlockView &blocks) {
    return CovarianceMatrix::from_matrix(blocks.part.from_block_order(blocks.block_ordered()));
  }

  CovarianceMatrix gibbs_covariance(const QuadraticHamiltonian &h, double beta) {
    require(std::isfinite(beta) && beta >= 0.0, ErrorCode::kInvalidArgument,
            "inverse temperature must be finite and nonnegative");
    // k = O (+) eps_j J O^T  =>  tanh(2 beta i k) = i O (+) tanh(2 beta eps_j) J O^T.
    const CanonicalForm cf = canonical_form(h.k());
    const Eigen::Index n = h.k().rows();
    RealMatrix canonical = RealMatrix::Zero(n, n);
    for (Eigen::Index j = 0; j < cf.nu.size(); ++j) {
      const double v = std::tanh(2.0 * beta * cf.nu(j));
      canonical(2 * j, 2 * j + 1) = v;
      canonical(2 * j + 1, 2 * j) = -v;
    }
    return CovarianceMatrix::from_matrix(cf.rotation * canonical * cf.rotation.transpose());
  }

  double purity(const CovarianceMatrix &gamma) {
    const ValidationReport report = validate(gamma);
    double p = 1.0;
    for (Eigen::Index j = 0; j < report.nu.size(); ++j) {
      const double nu = std::min(1.0, report.nu(j));
      p *= 0.5 * (1.0 + nu * nu);
    }
    return p;
  }

  CovarianceMatrix random_mixed_covariance(int n_modes, std::mt19937_64 &rng, double nu_max) {
    require(n_modes >= 1, ErrorCode::kInvalidArgument, "n_modes must be positive");
    require(nu_max >= 0.0 && nu_max < 1.0, ErrorCode::kInvalidArgument, "nu_max must lie in [0, 1)");
    const Eigen::Index n = 2 * n_modes;
    const RealMatrix o = haar_special_orthogonal(n, rng);
    std::uniform_real_distribution<double> uniform(0.0, nu_max);
    RealMatrix canonical = RealMatrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n_modes; ++j) {
      const double nu = nu_max > 0.0 ? uniform(rng) : 0.0;
      canonical(2 * j, 2 * j + 1) = nu;
      canonical(2 * j + 1, 2 * j) = -nu;
    }
    return CovarianceMatrix::from_matrix(o * canonical * o.transpose());
  }

  CovarianceMatrix random_mixed_covariance(int n_modes, std::uint64_t seed, double nu_max) {
    std::mt19937_64 rng(seed);
    return random_mixed_covariance(n_modes, rng, nu_max);
  }

}  // namespace ffneg
