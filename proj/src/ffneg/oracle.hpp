/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <vector>

#include "ffneg/gaussian.hpp"

namespace ffneg {

  /// Dense states are limited to 2^6 dimensions, partial transposes (4^N
  /// monomials) to N = 5.
  inline constexpr int kOracleDensityMaxModes = 6;
  inline constexpr int kOracleTransposeMaxModes = 5;

  /// Jordan-Wigner Majoranas on the Fock space, mode 0 being the most
  /// significant bit: c_{2q} = Z...Z sigma_x, c_{2q+1} = Z...Z sigma_y.
  struct MajoranaBasis {
    int n_modes = 0;
    std::vector<ComplexMatrix> ops;
  };

  MajoranaBasis jordan_wigner_basis(int n_modes);

  struct DenseState {
    int n_modes = 0;
    ComplexMatrix rho;
  };

  /// rho = prod_j (I - i nu_j c~_{2j} c~_{2j+1}) / 2 with c~_a = sum_i O_{ia} c_i,
  /// where m = O (+) nu_j J O^T.
  DenseState density_from_covariance(const CovarianceMatrix &gamma);

  /// m with Gamma_jk = 1/2 Tr([c_j, c_k] rho) = i m_jk.
  RealMatrix covariance_from_density(const DenseState &state);

  /// Hermiticity, unit trace and positivity, all at 1e-10.
  bool is_physical(const DenseState &state, double tolerance = 1e-10);

  /// H-hat = sum_jk H_jk c_j c_k on the Fock space.
  ComplexMatrix hamiltonian_operator(const QuadraticHamiltonian &h);

  /// One term of rho = sum_p coeff_p c_{p_1} ... c_{p_k} (indices ascending).
  /// Bit j of mask selects Majorana j.
  struct MonomialTerm {
    std::uint32_t mask = 0;
    Complex coeff;
  };

  /// All 4^N coefficients Tr[rho c_{p_k} ... c_{p_1}] / 2^N.
  std::vector<MonomialTerm> majorana_expansion(const DenseState &state);

  /// sum_p coeff_p c_p; the inverse of majorana_expansion.
  ComplexMatrix reassemble_expansion(const std::vector<MonomialTerm> &terms, int n_modes);

  /// Fermionic partial transpose: even monomials multiplied by i^{k_A}, odd
  /// ones dropped. With twisted = true the result is right-multiplied by
  /// P_A = prod_{q in A} (i c_{2q} c_{2q+1}) and is Hermitian.
  ComplexMatrix partial_transpose(const DenseState &state, const Bipartition &part, bool twisted);

  /// ln of the trace norm of the twisted partial transpose.
  double oracle_negativity(const CovarianceMatrix &gamma, const Bipartition &part);

  /// ln of the trace norm of the untwisted partial transpose (singular values).
  double oracle_negativity_untwisted(const CovarianceMatrix &gamma, const Bipartition &part);

}  // namespace ffneg
