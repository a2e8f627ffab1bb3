/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

// Test-side reference formulas and generators. Nothing here calls into the
// library beyond its value types.

#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "ffneg/gaussian.hpp"

namespace ffneg::fixtures {

  // tau * (sigma_x (x) sigma_y) in the real storage convention Gamma = i m.
  inline RealMatrix two_mode_entangled(double tau) {
    RealMatrix m = RealMatrix::Zero(4, 4);
    m(0, 3) = -tau;
    m(3, 0) = tau;
    m(1, 2) = tau;
    m(2, 1) = -tau;
    return m;
  }

  // -sigma_y on every mode, i.e. the empty state.
  inline RealMatrix vacuum_m(int n) {
    RealMatrix m = RealMatrix::Zero(2 * n, 2 * n);
    for (int q = 0; q < n; ++q) {
      m(2 * q, 2 * q + 1) = 1.0;
      m(2 * q + 1, 2 * q) = -1.0;
    }
    return m;
  }

  inline double two_mode_gibbs_negativity(double beta_j) {
    return std::log(2.0 * std::cosh(beta_j) / (1.0 + std::cosh(beta_j)));
  }

  inline double two_mode_loss_negativity(double gamma, double t) {
    const double e1 = std::exp(-gamma * t);
    const double e2 = e1 * e1;
    const double d = (1.0 - e1) * (1.0 - e1);
    return 0.5 * std::log(2.0 * e2 + d + 2.0 * e1 * std::sqrt(e2 + d));
  }

  inline RealMatrix random_antisymmetric(int dim, std::mt19937_64 &rng, double scale = 1.0) {
    std::normal_distribution<double> g(0.0, scale);
    RealMatrix a(dim, dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        a(i, j) = g(rng);
      }
    }
    return 0.5 * (a - a.transpose());
  }

  inline std::vector<int> random_modes_a(int n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> mask(1, (1 << n) - 2);
    const int bits = mask(rng);
    std::vector<int> a;
    for (int q = 0; q < n; ++q) {
      if (bits & (1 << q)) {
        a.push_back(q);
      }
    }
    return a;
  }

  // Direct evaluation of 1/2 tr ln(1 + M) for M = m_ab^T m_ab / k^2.
  inline double half_trace_log(const RealMatrix &m_ab, double k) {
    const RealMatrix g = m_ab.transpose() * m_ab / (k * k);
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(g);
    double s = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      s += std::log1p(std::max(0.0, es.eigenvalues()(i)));
    }
    return 0.5 * s;
  }

  // Periodic trapezoid for P_AB, written independently of the library.
  inline ComplexMatrix reference_pab(const RealMatrix &m_block_ordered, int n_a_majoranas, int nodes) {
    const Eigen::Index dim = m_block_ordered.rows();
    const ComplexMatrix g = Complex(0.0, 1.0) * m_block_ordered.cast<Complex>();
    ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
    for (int j = 0; j < nodes; ++j) {
      const double k = -M_PI + 2.0 * M_PI * j / nodes;
      ComplexMatrix z = g;
      for (Eigen::Index i = 0; i < dim; ++i) {
        z(i, i) += i < n_a_majoranas ? std::exp(Complex(0.0, k)) : -std::exp(Complex(0.0, -k));
      }
      sum += z.inverse();
    }
    return sum / static_cast<double>(nodes);
  }

}  // namespace ffneg::fixtures
