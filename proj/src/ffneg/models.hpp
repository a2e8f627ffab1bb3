/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "ffneg/dynamics.hpp"
#include "ffneg/gaussian.hpp"

namespace ffneg {

  /// -t sum_i (f_i^dagger f_{i+1} + h.c.), open boundary.
  QuadraticHamiltonian tight_binding(int n, double t);

  /// -sum_i i c_{2i} c_{2i+1} + t sum_i i c_{2i+1} c_{2i+2} (0-based Majoranas).
  QuadraticHamiltonian kitaev_chain(int n, double t);

  /// -sum_{i<j} t |i - j|^{-alpha} (f_i^dagger f_j + h.c.).
  QuadraticHamiltonian long_range_hopping(int n, double t, double alpha);

  /// L_j = sqrt(gamma) f_j on every site, on top of the Hamiltonian h.
  LindbladGenerator uniform_loss(const QuadraticHamiltonian &h, double gamma_rate);

  /// Fock vacuum, m = (+)_j J.
  CovarianceMatrix vacuum_covariance(int n);

  /// Odd (0-based) sites occupied: m_{2q,2q+1} = +1 for even q, -1 for odd q.
  CovarianceMatrix cdw_covariance(int n);

  /// F_alpha(r) = (r + 1)^{-alpha}.
  double decay_profile(double alpha, double r);

  struct DecayFit {
    double c_fit = 0.0;
    /// c_fit / c_ref.
    double max_violation_ratio = 0.0;
  };

  /// max over site pairs r != r' of ||Pi_r m Pi_r'|| / F_alpha(|r - r'|) on a 1D
  /// chain, each site carrying 2 * internal_dof Majoranas.
  DecayFit clustering_constant(const CovarianceMatrix &gamma, double alpha, double c_ref = 1.0, int internal_dof = 1);

  /// Same fit applied to a Hamiltonian matrix (locality constant h).
  DecayFit locality_constant(const QuadraticHamiltonian &h, double alpha, double c_ref = 1.0, int internal_dof = 1);

  /// g(r) = int_r^inf F_alpha(R)^2 R^{D-1} dR and G(r) = int_r^inf g(R) dR
  /// for integer D >= 1. Throw ErrorCode::kDivergent unless alpha > (D + 1)/2.
  double area_law_g(double alpha, int dimension, double r);
  double area_law_G(double alpha, int dimension, double r);

  struct LatticeSpec {
    int dimension = 1;
    int internal_dof = 1;
  };

  /// C^2 |I| |dA| G(dist); the geometric O(1) prefactor is left out.
  double area_law_bound(double c, double alpha, const LatticeSpec &lattice, double boundary_size, double dist);

  /// sum_{r in A, r' in B} F_alpha(|r - r'|)^2 over chain sites.
  double lattice_pair_sum(const Bipartition &part, double alpha);

  /// C^2 / k_minus^2 * lattice_pair_sum (one mode per site): bounds the
  /// simple upper bound, hence E, whenever the clustering constant is C.
  double finite_area_law_bound(double c, double alpha, const Bipartition &part, double k_minus = 1.0);

}  // namespace ffneg
