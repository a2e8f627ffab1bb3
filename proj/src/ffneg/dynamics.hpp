/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <optional>
#include <vector>

#include "ffneg/gaussian.hpp"

namespace ffneg {

  /// Real parts of the generator: H = i k, X (real symmetric), Y = i y.
  /// No positivity is implied; block pieces of a generator live here too.
  struct GeneratorMatrices {
    RealMatrix k;
    RealMatrix x;
    RealMatrix y;

    /// W = 4k - X, so that dm/dt = W m + m W^T + 2y.
    RealMatrix drift() const {
      return 4.0 * k - x;
    }
  };

  /// Quadratic Hamiltonian plus Lindblad operators linear in the Majoranas,
  /// L_mu = sum_j L_{mu j} c_j. B = L^dagger L, X = 2 Re B, y = 2 Im B.
  class LindbladGenerator {
   public:
    LindbladGenerator(const QuadraticHamiltonian &h, const ComplexMatrix &l_coeffs);
    /// Checks X +- i y >= -1e-10 (X symmetric, y antisymmetric).
    LindbladGenerator(const QuadraticHamiltonian &h, const RealMatrix &x, const RealMatrix &y);

    int n_modes() const {
      return static_cast<int>(mats_.k.rows() / 2);
    }
    const GeneratorMatrices &matrices() const {
      return mats_;
    }
    const RealMatrix &k() const {
      return mats_.k;
    }
    const RealMatrix &x() const {
      return mats_.x;
    }
    const RealMatrix &y() const {
      return mats_.y;
    }

   private:
    GeneratorMatrices mats_;
  };

  /// Real part of dGamma/dt = -i[4H, Gamma] - {X, Gamma} + 2Y.
  RealMatrix dgamma_dt(const RealMatrix &m, const GeneratorMatrices &gen);
  RealMatrix dgamma_dt(const CovarianceMatrix &gamma, const LindbladGenerator &gen);

  /// m(t) = m_ss + e^{Wt} (m0 - m_ss) e^{W^T t}, with W m_ss + m_ss W^T = -2y
  /// solved once by a complex Schur (Bartels-Stewart) solve. When W has
  /// eigenvalue pairs summing to zero (e.g. unitary dynamics) the inhomogeneous
  /// part is integrated exactly through a block exponential instead.
  class ExactPropagator {
   public:
    explicit ExactPropagator(const LindbladGenerator &gen);

    CovarianceMatrix evolve(const CovarianceMatrix &gamma0, double t) const;

    bool has_steady_state() const {
      return steady_.has_value();
    }
    /// Throws ErrorCode::kNumerical when has_steady_state() is false.
    const RealMatrix &steady_state() const;

   private:
    RealMatrix w_;
    RealMatrix y_;
    std::optional<RealMatrix> steady_;
  };

  CovarianceMatrix evolve_exact(const CovarianceMatrix &gamma0, const LindbladGenerator &gen, double t);

  /// min(1e-2, 0.1 / (4||k|| + ||X|| + ||y||)).
  double default_rk4_step(const LindbladGenerator &gen);

  /// Classical RK4 with a final partial step landing on t; aborts with
  /// ErrorCode::kNumerical once the state leaves the physical set by 1e-6.
  CovarianceMatrix evolve_rk4(const CovarianceMatrix &gamma0, const LindbladGenerator &gen, double t,
                              std::optional<double> dt = std::nullopt);

  struct TrajectoryPoint {
    double t = 0.0;
    double negativity = 0.0;
    double purity = 0.0;
    double gamma_ab_frobenius = 0.0;
  };

  /// times must be nonnegative and ascending.
  std::vector<TrajectoryPoint> negativity_trajectory(const CovarianceMatrix &gamma0, const LindbladGenerator &gen,
                                                     const std::vector<double> &times, const Bipartition &part);

}  // namespace ffneg
