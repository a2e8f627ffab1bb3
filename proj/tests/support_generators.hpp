/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "ffneg/dynamics.hpp"
#include "support.hpp"

namespace ffneg::fixtures {

  // Random Hamiltonian plus a handful of random linear Lindblad operators.
  inline LindbladGenerator random_generator(int n, std::mt19937_64 &rng, int n_ops = 3, double h_scale = 0.5,
                                            double l_scale = 0.4) {
    std::normal_distribution<double> g(0.0, l_scale);
    ComplexMatrix l(n_ops, 2 * n);
    for (int i = 0; i < n_ops; ++i) {
      for (int j = 0; j < 2 * n; ++j) {
        l(i, j) = Complex(g(rng), g(rng));
      }
    }
    return LindbladGenerator(QuadraticHamiltonian(random_antisymmetric(2 * n, rng, h_scale)), l);
  }

}  // namespace ffneg::fixtures
