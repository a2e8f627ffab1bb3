/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "ffneg/models.hpp"

#include <cmath>
#include <sstream>

#include "ffneg/error.hpp"

namespace ffneg {

  namespace {
    void check_chain(int n) {
      require(n >= 2, ErrorCode::kInvalidArgument, "chain needs at least two sites");
    }

    // k_ab += v and k_ba -= v, i.e. H-hat gains 2 i v c_a c_b.
    void add_pair(RealMatrix &k, Eigen::Index a, Eigen::Index b, double v) {
      k(a, b) += v;
      k(b, a) -= v;
    }

    // -a (f_i^dagger f_j + h.c.) = (i a / 2)(c_{2i+1} c_{2j} - c_{2i} c_{2j+1}) for i < j.
    void add_hopping(RealMatrix &k, int i, int j, double a) {
      add_pair(k, 2 * i + 1, 2 * j, a / 4.0);
      add_pair(k, 2 * i, 2 * j + 1, -a / 4.0);
    }

    DecayFit decay_fit(const RealMatrix &m, double alpha, double c_ref, int internal_dof) {
      require(alpha > 0.0, ErrorCode::kInvalidArgument, "alpha must be positive");
      require(internal_dof >= 1 && m.rows() % (2 * internal_dof) == 0, ErrorCode::kInvalidArgument,
              "matrix size is not a multiple of the site dimension");
      require(c_ref > 0.0, ErrorCode::kInvalidArgument, "reference constant must be positive");
      const Eigen::Index block = 2 * internal_dof;
      const Eigen::Index sites = m.rows() / block;
      DecayFit fit;
      for (Eigen::Index r = 0; r < sites; ++r) {
        for (Eigen::Index s = r + 1; s < sites; ++s) {
          const double norm = operator_norm(RealMatrix(m.block(r * block, s * block, block, block)));
          fit.c_fit = std::max(fit.c_fit, norm / decay_profile(alpha, static_cast<double>(s - r)));
        }
      }
      fit.max_violation_ratio = fit.c_fit / c_ref;
      return fit;
    }

    void check_convergent(double alpha, int dimension) {
      require(dimension >= 1, ErrorCode::kInvalidArgument, "lattice dimension must be at least 1");
      if (!(alpha > 0.5 * (dimension + 1))) {
        std::ostringstream msg;
        msg << "area-law integral diverges: need alpha > (D + 1)/2 = " << 0.5 * (dimension + 1) << ", got " << alpha;
        throw Error(ErrorCode::kDivergent, msg.str());
      }
    }

    double binomial(int n, int k) {
      double out = 1.0;
      for (int i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
      }
      return out;
    }
  }  // namespace

  QuadraticHamiltonian tight_binding(int n, double t) {
    check_chain(n);
    RealMatrix k = RealMatrix::Zero(2 * n, 2 * n);
    for (int i = 0; i + 1 < n; ++i) {
      add_hopping(k, i, i + 1, t);
    }
    return QuadraticHamiltonian(k);
  }

  QuadraticHamiltonian kitaev_chain(int n, double t) {
    check_chain(n);
    RealMatrix k = RealMatrix::Zero(2 * n, 2 * n);
    for (int q = 0; q < n; ++q) {
      add_pair(k, 2 * q, 2 * q + 1, -0.5);
    }
    for (int q = 0; q + 1 < n; ++q) {
      add_pair(k, 2 * q + 1, 2 * q + 2, 0.5 * t);
    }
    return QuadraticHamiltonian(k);
  }

  QuadraticHamiltonian long_range_hopping(int n, double t, double alpha) {
    check_chain(n);
    require(alpha > 0.0, ErrorCode::kInvalidArgument, "alpha must be positive");
    RealMatrix k = RealMatrix::Zero(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        add_hopping(k, i, j, t * std::pow(static_cast<double>(j - i), -alpha));
      }
    }
    return QuadraticHamiltonian(k);
  }

  LindbladGenerator uniform_loss(const QuadraticHamiltonian &h, double gamma_rate) {
    require(std::isfinite(gamma_rate) && gamma_rate >= 0.0, ErrorCode::kInvalidArgument,
            "loss rate must be finite and nonnegative");
    const int n = h.n_modes();
    // f_j = (c_{2j} + i c_{2j+1}) / 2
    ComplexMatrix l = ComplexMatrix::Zero(n, 2 * n);
    const double amp = 0.5 * std::sqrt(gamma_rate);
    for (int j = 0; j < n; ++j) {
      l(j, 2 * j) = amp;
      l(j, 2 * j + 1) = kI * amp;
    }
    return LindbladGenerator(h, l);
  }

  CovarianceMatrix vacuum_covariance(int n) {
    require(n >= 1, ErrorCode::kInvalidArgument, "n must be positive");
    RealMatrix m = RealMatrix::Zero(2 * n, 2 * n);
    for (int q = 0; q < n; ++q) {
      m(2 * q, 2 * q + 1) = 1.0;
      m(2 * q + 1, 2 * q) = -1.0;
    }
    return CovarianceMatrix::from_matrix(m);
  }

  CovarianceMatrix cdw_covariance(int n) {
    require(n >= 2 && n % 2 == 0, ErrorCode::kInvalidArgument, "CDW state needs an even number of sites");
    RealMatrix m = RealMatrix::Zero(2 * n, 2 * n);
    for (int q = 0; q < n; ++q) {
      const double v = q % 2 == 0 ? 1.0 : -1.0;
      m(2 * q, 2 * q + 1) = v;
      m(2 * q + 1, 2 * q) = -v;
    }
    return CovarianceMatrix::from_matrix(m);
  }

  double decay_profile(double alpha, double r) {
    return std::pow(r + 1.0, -alpha);
  }

  DecayFit clustering_constant(const CovarianceMatrix &gamma, double alpha, double c_ref, int internal_dof) {
    return decay_fit(gamma.m(), alpha, c_ref, internal_dof);
  }

  DecayFit locality_constant(const QuadraticHamiltonian &h, double alpha, double c_ref, int internal_dof) {
    return decay_fit(h.k(), alpha, c_ref, internal_dof);
  }

  double area_law_g(double alpha, int dimension, double r) {
    check_convergent(alpha, dimension);
    require(r >= 0.0, ErrorCode::kInvalidArgument, "distance must be nonnegative");
    // R^{D-1} = sum_k binom(D-1, k) (R+1)^k (-1)^{D-1-k}
    double out = 0.0;
    for (int k = 0; k < dimension; ++k) {
      const double coeff = binomial(dimension - 1, k) * ((dimension - 1 - k) % 2 == 0 ? 1.0 : -1.0);
      const double p = 2.0 * alpha - k - 1.0;
      out += coeff * std::pow(r + 1.0, -p) / p;
    }
    return out;
  }

  double area_law_G(double alpha, int dimension, double r) {
    check_convergent(alpha, dimension);
    require(r >= 0.0, ErrorCode::kInvalidArgument, "distance must be nonnegative");
    double out = 0.0;
    for (int k = 0; k < dimension; ++k) {
      const double coeff = binomial(dimension - 1, k) * ((dimension - 1 - k) % 2 == 0 ? 1.0 : -1.0);
      const double p = 2.0 * alpha - k - 1.0;
      out += coeff * std::pow(r + 1.0, 1.0 - p) / (p * (p - 1.0));
    }
    return out;
  }

  double area_law_bound(double c, double alpha, const LatticeSpec &lattice, double boundary_size, double dist) {
    require(lattice.internal_dof >= 1, ErrorCode::kInvalidArgument, "internal_dof must be positive");
    require(boundary_size >= 0.0, ErrorCode::kInvalidArgument, "boundary size must be nonnegative");
    return c * c * lattice.internal_dof * boundary_size * area_law_G(alpha, lattice.dimension, dist);
  }

  double lattice_pair_sum(const Bipartition &part, double alpha) {
    double sum = 0.0;
    for (int r : part.modes_a()) {
      for (int s : part.modes_b()) {
        const double f = decay_profile(alpha, std::abs(r - s));
        sum += f * f;
      }
    }
    return sum;
  }

  double finite_area_law_bound(double c, double alpha, const Bipartition &part, double k_minus) {
    require(k_minus > 0.0, ErrorCode::kInvalidArgument, "k_minus must be positive");
    return c * c / (k_minus * k_minus) * lattice_pair_sum(part, alpha);
  }

}  // namespace ffneg
