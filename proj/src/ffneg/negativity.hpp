/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <vector>

#include "ffneg/gaussian.hpp"

namespace ffneg {

  /// Roots this close to the unit circle count as |lambda| <= 1.
  inline constexpr double kUnitCircleTolerance = 1e-9;
  /// Smallest singular value of Gamma_A accepted by the twisted-covariance path.
  inline constexpr double kGammaAInvertibility = 1e-8;

  /// a0 = [[I_A, 0], [Gamma_BA, Gamma_B]], a1 = [[Gamma_A, Gamma_AB], [0, -I_B]]
  /// in block (A-first) order. det(a0 + lambda a1) is the twisted
  /// characteristic polynomial.
  struct TwistedPencil {
    ComplexMatrix a0;
    ComplexMatrix a1;
    int n_a_majoranas = 0;
  };

  TwistedPencil build_pencil(const BlockView &blocks);

  /// lambda^{2 N_A} det(Gamma - ((-1/lambda) I_A (+) lambda I_B)), evaluated by
  /// a dense LU determinant. Test helper; lambda must be nonzero.
  Complex twisted_polynomial(const BlockView &blocks, Complex lambda);

  struct PencilSpectrum {
    ComplexVector s_diag;
    ComplexVector t_diag;
    /// Finite roots -s/t, ascending in modulus.
    std::vector<Complex> roots;
    int infinite_count = 0;
    /// Factor the pencil was multiplied by before the decomposition; s_diag
    /// and t_diag refer to the balanced pencil.
    double balance = 1.0;
  };

  PencilSpectrum pencil_spectrum(const TwistedPencil &pencil);

  struct NegativityResult {
    double value = 0.0;
    PencilSpectrum spectrum;
    int unit_circle_ties = 0;
  };

  NegativityResult negativity(const BlockView &blocks);
  NegativityResult negativity(const CovarianceMatrix &gamma, const Bipartition &part);

  /// Covariance of the twisted partial transpose (+ branch), block order.
  struct TwistedCovariance {
    ComplexMatrix gt;
  };

  /// Throws ErrorCode::kSingularGammaA when sigma_min(Gamma_A) <= 1e-8.
  TwistedCovariance twisted_covariance(const BlockView &blocks);

  /// 1/2 ln|det Gamma_A| + 1/2 sum_{|mu| > 1} ln|mu| over eigenvalues mu of the
  /// twisted covariance.
  double negativity_via_twisted(const BlockView &blocks);
  double negativity_via_twisted(const CovarianceMatrix &gamma, const Bipartition &part);

  /// 1/2 tr ln(I + Gamma_BA Gamma_AB). Exact whenever Gamma_A = 0 or Gamma_B = 0,
  /// and the common value of the bounds in that case.
  double decoupled_negativity(const BlockView &blocks);

}  // namespace ffneg
