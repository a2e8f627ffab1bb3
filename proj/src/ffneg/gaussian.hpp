/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffneg/linalg.hpp"

namespace ffneg {

  /// Relative entrywise tolerance on m + m^T.
  inline constexpr double kAntisymmetryTolerance = 1e-12;
  /// Singular values of m may exceed 1 by this much and still count as valid.
  inline constexpr double kSpectralTolerance = 1e-10;
  /// Beyond kSpectralTolerance and up to this value the spectrum is clipped
  /// back onto [0, 1] with a warning; larger violations are rejected.
  inline constexpr double kSpectralClipTolerance = 1e-8;

  /// Ordered mode sets A and B. Mode j owns Majorana indices 2j and 2j+1
  /// (0-based); a bipartition never splits a mode.
  class Bipartition {
   public:
    Bipartition(int n_modes, std::vector<int> modes_a);

    /// A = {0, ..., n_a - 1}.
    static Bipartition leading(int n_modes, int n_a);
    /// A = first half of the chain (rounded down).
    static Bipartition half(int n_modes);

    int n_modes() const {
      return n_modes_;
    }
    int n_a() const {
      return static_cast<int>(modes_a_.size());
    }
    int n_b() const {
      return static_cast<int>(modes_b_.size());
    }
    const std::vector<int> &modes_a() const {
      return modes_a_;
    }
    const std::vector<int> &modes_b() const {
      return modes_b_;
    }
    bool in_a(int mode) const {
      return side_[static_cast<std::size_t>(mode)] == 0;
    }

    /// majorana_order()[p] is the original Majorana index placed at position p
    /// once A is moved in front of B.
    const std::vector<Eigen::Index> &majorana_order() const {
      return order_;
    }

    /// P^T m P: rows/columns reordered so that A precedes B.
    template <typename Derived>
    Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> to_block_order(
        const Eigen::MatrixBase<Derived> &m) const {
      const auto n = static_cast<Eigen::Index>(order_.size());
      Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(n, n);
      for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index r = 0; r < n; ++r) {
          out(r, c) = m(order_[r], order_[c]);
        }
      }
      return out;
    }

    template <typename Derived>
    Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> from_block_order(
        const Eigen::MatrixBase<Derived> &m) const {
      const auto n = static_cast<Eigen::Index>(order_.size());
      Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(n, n);
      for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index r = 0; r < n; ++r) {
          out(order_[r], order_[c]) = m(r, c);
        }
      }
      return out;
    }

   private:
    int n_modes_;
    std::vector<int> modes_a_;
    std::vector<int> modes_b_;
    std::vector<int> side_;
    std::vector<Eigen::Index> order_;
  };

  /// Covariance matrix Gamma = i m of an N-mode fermionic Gaussian state,
  /// stored through its real antisymmetric part m. Instances always satisfy
  /// the state constraints: m^T = -m and all singular values in [0, 1].
  class CovarianceMatrix {
   public:
    /// Checks antisymmetry and the spectral bound. Spectra overshooting 1 by
    /// at most clip_tolerance are clipped (with a warning); anything worse
    /// throws ErrorCode::kInvalidState.
    static CovarianceMatrix from_matrix(const RealMatrix &m, double clip_tolerance = kSpectralClipTolerance);
    static CovarianceMatrix zero(int n_modes);

    int n_modes() const {
      return static_cast<int>(m_.rows() / 2);
    }
    const RealMatrix &m() const {
      return m_;
    }
    ComplexMatrix gamma() const {
      return kI * m_.cast<Complex>();
    }

   private:
    explicit CovarianceMatrix(RealMatrix m) : m_(std::move(m)) {}

    RealMatrix m_;
  };

  /// Quadratic Hamiltonian H-hat = sum_{jk} H_jk c_j c_k with H = i k.
  class QuadraticHamiltonian {
   public:
    explicit QuadraticHamiltonian(const RealMatrix &k);
    static QuadraticHamiltonian zero(int n_modes);

    int n_modes() const {
      return static_cast<int>(k_.rows() / 2);
    }
    const RealMatrix &k() const {
      return k_;
    }

   private:
    RealMatrix k_;
  };

  struct ValidationReport {
    bool valid = false;
    bool antisymmetric = false;
    bool spectrum_in_range = false;
    double antisymmetry_defect = 0.0;
    double max_singular_value = 0.0;
    /// Williamson-type values nu_j, one per mode, descending.
    RealVector nu;
    std::string message;
  };

  ValidationReport validate(const RealMatrix &m);
  ValidationReport validate(const CovarianceMatrix &gamma);

  /// Covariance blocks under a bipartition, kept as real parts (Gamma_X = i m_X).
  struct BlockView {
    Bipartition part;
    RealMatrix m_a;
    RealMatrix m_b;
    RealMatrix m_ab;

    RealMatrix m_ba() const {
      return -m_ab.transpose();
    }
    ComplexMatrix gamma_a() const {
      return kI * m_a.cast<Complex>();
    }
    ComplexMatrix gamma_b() const {
      return kI * m_b.cast<Complex>();
    }
    ComplexMatrix gamma_ab() const {
      return kI * m_ab.cast<Complex>();
    }
    ComplexMatrix gamma_ba() const {
      return kI * m_ba().cast<Complex>();
    }
    /// [[m_a, m_ab], [m_ba, m_b]].
    RealMatrix block_ordered() const;
  };

  BlockView partition(const CovarianceMatrix &gamma, const Bipartition &part);
  /// Inverse of partition(); exact.
  CovarianceMatrix reassemble(const BlockView &blocks);

  /// Gamma = tanh(2 beta H) for rho proportional to exp(-beta H-hat).
  CovarianceMatrix gibbs_covariance(const QuadraticHamiltonian &h, double beta);

  /// Tr[rho^2] = prod_j (1 + nu_j^2) / 2.
  double purity(const CovarianceMatrix &gamma);

  /// O ((+)_j nu_j J) O^T with O Haar on SO(2N) and nu_j ~ U[0, nu_max].
  CovarianceMatrix random_mixed_covariance(int n_modes, std::uint64_t seed, double nu_max);
  CovarianceMatrix random_mixed_covariance(int n_modes, std::mt19937_64 &rng, double nu_max);

}  // namespace ffneg
