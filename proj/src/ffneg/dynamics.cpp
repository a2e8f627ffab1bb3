/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "ffneg/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "ffneg/diagnostics.hpp"
#include "ffneg/error.hpp"
#include "ffneg/negativity.hpp"

namespace ffneg {

  namespace {
    constexpr double kPositivityTolerance = 1e-10;
    constexpr double kLyapunovSingular = 1e-10;
    constexpr double kRk4ValidityTolerance = 1e-6;

    void check_square(const RealMatrix &m, Eigen::Index n, const char *name) {
      require(m.rows() == n && m.cols() == n, ErrorCode::kInvalidArgument,
              std::string(name) + " must be " + std::to_string(n) + " x " + std::to_string(n));
      require(m.allFinite(), ErrorCode::kInvalidArgument, std::string(name) + " has non-finite entries");
    }

    void check_positivity(const RealMatrix &x, const RealMatrix &y) {
      const double scale = std::max(1.0, std::max(x.cwiseAbs().maxCoeff(), y.cwiseAbs().maxCoeff()));
      require((x - x.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * scale, ErrorCode::kInvalidArgument,
              "X must be symmetric");
      require(antisymmetry_defect(y) <= 1e-12 * scale, ErrorCode::kInvalidArgument, "y must be antisymmetric");
      const ComplexMatrix plus = x.cast<Complex>() + kI * y.cast<Complex>();
      for (const ComplexMatrix &b : {plus, ComplexMatrix(plus.conjugate())}) {
        const Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(b, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -kPositivityTolerance * scale) {
          std::ostringstream msg;
          msg << "dissipator is not positive: X +- iy has eigenvalue " << es.eigenvalues().minCoeff();
          throw Error(ErrorCode::kInvalidArgument, msg.str());
        }
      }
    }

    // Solves T X + X T^T = C for upper-triangular T. Returns false when some
    // T_ii + T_jj is (near) zero.
    bool triangular_sylvester(const ComplexMatrix &t, const ComplexMatrix &c, ComplexMatrix &x) {
      const Eigen::Index n = t.rows();
      x = ComplexMatrix::Zero(n, n);
      for (Eigen::Index i = n - 1; i >= 0; --i) {
        for (Eigen::Index j = n - 1; j >= 0; --j) {
          const Complex denom = t(i, i) + t(j, j);
          if (std::abs(denom) < kLyapunovSingular) {
            return false;
          }
          Complex rhs = c(i, j);
          for (Eigen::Index k = i + 1; k < n; ++k) {
            rhs -= t(i, k) * x(k, j);
          }
          for (Eigen::Index k = j + 1; k < n; ++k) {
            rhs -= x(i, k) * t(j, k);
          }
          x(i, j) = rhs / denom;
        }
      }
      return true;
    }

    RealMatrix antisym(const RealMatrix &m) {
      return 0.5 * (m - m.transpose());
    }
  }  // namespace

  LindbladGenerator::LindbladGenerator(const QuadraticHamiltonian &h, const ComplexMatrix &l_coeffs) {
    const Eigen::Index n = h.k().rows();
    require(l_coeffs.rows() == 0 || l_coeffs.cols() == n, ErrorCode::kInvalidArgument,
            "Lindblad coefficient matrix must have 2N columns");
    require(l_coeffs.allFinite(), ErrorCode::kInvalidArgument, "Lindblad coefficients have non-finite entries");
    mats_.k = h.k();
    if (l_coeffs.rows() == 0) {
      mats_.x = RealMatrix::Zero(n, n);
      mats_.y = RealMatrix::Zero(n, n);
      return;
    }
    const ComplexMatrix b = l_coeffs.adjoint() * l_coeffs;
    mats_.x = 2.0 * b.real();
    mats_.y = 2.0 * b.imag();
    mats_.x = 0.5 * (mats_.x + mats_.x.transpose()).eval();
    mats_.y = antisym(mats_.y);
  }

  LindbladGenerator::LindbladGenerator(const QuadraticHamiltonian &h, const RealMatrix &x, const RealMatrix &y) {
    const Eigen::Index n = h.k().rows();
    check_square(x, n, "X");
    check_square(y, n, "y");
    check_positivity(x, y);
    mats_.k = h.k();
    mats_.x = 0.5 * (x + x.transpose());
    mats_.y = antisym(y);
  }

  RealMatrix dgamma_dt(const RealMatrix &m, const GeneratorMatrices &gen) {
    const RealMatrix w = gen.drift();
    return w * m + m * w.transpose() + 2.0 * gen.y;
  }

  RealMatrix dgamma_dt(const CovarianceMatrix &gamma, const LindbladGenerator &gen) {
    require(gamma.n_modes() == gen.n_modes(), ErrorCode::kInvalidArgument, "state and generator sizes differ");
    return dgamma_dt(gamma.m(), gen.matrices());
  }

  ExactPropagator::ExactPropagator(const LindbladGenerator &gen) : w_(gen.matrices().drift()), y_(gen.y()) {
    const Eigen::ComplexSchur<ComplexMatrix> schur(w_.cast<Complex>());
    require(schur.info() == Eigen::Success, ErrorCode::kNumerical, "Schur decomposition of the drift failed");
    const ComplexMatrix &q = schur.matrixU();
    const ComplexMatrix rhs = q.adjoint() * (-2.0 * y_).cast<Complex>() * q.conjugate();
    ComplexMatrix x;
    if (triangular_sylvester(schur.matrixT(), rhs, x)) {
      steady_ = antisym((q * x * q.transpose()).real());
    } else {
      debug("drift has eigenvalue pairs summing to zero; using the block-exponential integral");
    }
  }

  const RealMatrix &ExactPropagator::steady_state() const {
    if (!steady_) {
      throw Error(ErrorCode::kNumerical, "generator has no unique steady state");
    }
    return *steady_;
  }

  CovarianceMatrix ExactPropagator::evolve(const CovarianceMatrix &gamma0, double t) const {
    require(std::isfinite(t) && t >= 0.0, ErrorCode::kInvalidArgument, "time must be finite and nonnegative");
    require(gamma0.m().rows() == w_.rows(), ErrorCode::kInvalidArgument, "state and generator sizes differ");
    if (t == 0.0) {
      return gamma0;
    }
    const Eigen::Index n = w_.rows();
    RealMatrix out;
    if (steady_) {
      const RealMatrix e = expm(RealMatrix(w_ * t));
      out = *steady_ + e * (gamma0.m() - *steady_) * e.transpose();
    } else {
      // expm([[W, 2y], [0, -W^T]] t) = [[e^{Wt}, F], [0, e^{-W^T t}]] and
      // int_0^t e^{Ws} 2y e^{W^T s} ds = F e^{W^T t}.
      RealMatrix big = RealMatrix::Zero(2 * n, 2 * n);
      big.topLeftCorner(n, n) = w_;
      big.topRightCorner(n, n) = 2.0 * y_;
      big.bottomRightCorner(n, n) = -w_.transpose();
      const RealMatrix f = expm(RealMatrix(big * t));
      const RealMatrix e = f.topLeftCorner(n, n);
      out = e * gamma0.m() * e.transpose() + f.topRightCorner(n, n) * e.transpose();
    }
    return CovarianceMatrix::from_matrix(antisym(out));
  }

  CovarianceMatrix evolve_exact(const CovarianceMatrix &gamma0, const LindbladGenerator &gen, double t) {
    return ExactPropagator(gen).evolve(gamma0, t);
  }

  double default_rk4_step(const LindbladGenerator &gen) {
    const double scale = 4.0 * operator_norm(gen.k()) + operator_norm(gen.x()) + operator_norm(gen.y());
    return scale > 0.0 ? std::min(1e-2, 0.1 / scale) : 1e-2;
  }

  CovarianceMatrix evolve_rk4(const CovarianceMatrix &gamma0, const LindbladGenerator &gen, double t,
                              std::optional<double> dt) {
    require(std::isfinite(t) && t >= 0.0, ErrorCode::kInvalidArgument, "time must be finite and nonnegative");
    require(gamma0.n_modes() == gen.n_modes(), ErrorCode::kInvalidArgument, "state and generator sizes differ");
    const double step = dt.value_or(default_rk4_step(gen));
    require(std::isfinite(step) && step > 0.0, ErrorCode::kInvalidArgument, "dt must be positive");
    const GeneratorMatrices &g = gen.matrices();
    RealMatrix m = gamma0.m();
    double now = 0.0;
    while (now < t) {
      const double h = std::min(step, t - now);
      const RealMatrix k1 = dgamma_dt(m, g);
      const RealMatrix k2 = dgamma_dt(RealMatrix(m + 0.5 * h * k1), g);
      const RealMatrix k3 = dgamma_dt(RealMatrix(m + 0.5 * h * k2), g);
      const RealMatrix k4 = dgamma_dt(RealMatrix(m + h * k3), g);
      m = antisym(m + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
      // Land exactly on t despite rounding in the accumulated time.
      now = (t - now - h <= 1e-15 * std::max(1.0, t)) ? t : now + h;
      const double smax = operator_norm(m);
      if (!m.allFinite() || smax > 1.0 + kRk4ValidityTolerance) {
        std::ostringstream msg;
        msg << "RK4 left the physical set at t = " << now << " (max singular value " << smax << ")";
        throw Error(ErrorCode::kNumerical, msg.str());
      }
    }
    return CovarianceMatrix::from_matrix(m, kRk4ValidityTolerance);
  }

  std::vector<TrajectoryPoint> negativity_trajectory(const CovarianceMatrix &gamma0, const LindbladGenerator &gen,
                                                     const std::vector<double> &times, const Bipartition &part) {
    for (std::size_t i = 0; i < times.size(); ++i) {
      require(std::isfinite(times[i]) && times[i] >= 0.0, ErrorCode::kInvalidArgument,
              "times must be finite and nonnegative");
      require(i == 0 || times[i] >= times[i - 1], ErrorCode::kInvalidArgument, "times must be ascending");
    }
    const ExactPropagator prop(gen);
    std::vector<TrajectoryPoint> out;
    out.reserve(times.size());
    for (double t : times) {
      const CovarianceMatrix g = prop.evolve(gamma0, t);
      const BlockView blocks = partition(g, part);
      out.push_back(TrajectoryPoint{t, negativity(blocks).value, purity(g), blocks.m_ab.norm()});
    }
    return out;
  }

}  // namespace ffneg
