/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <gtest/gtest.h>

#include <algorithm>
#include <Eigen/Eigenvalues>

#include "ffneg/dynamics.hpp"
#include "ffneg/error.hpp"
#include "ffneg/models.hpp"
#include "ffneg/negativity.hpp"
#include "support.hpp"

using namespace ffneg;

namespace {

  // Valid state with the A block cleared: zero it and shrink if needed.
  CovarianceMatrix with_zero_a_block(const CovarianceMatrix &c, const Bipartition &p, double margin = 1.0) {
    BlockView b = partition(c, p);
    b.m_a.setZero();
    const double s = Eigen::JacobiSVD<RealMatrix>(b.block_ordered()).singularValues()(0);
    const double shrink = margin / std::max(1.0, s);
    b.m_ab *= shrink;
    b.m_b *= shrink;
    return reassemble(b);
  }

  std::vector<Complex> sorted_by_modulus(std::vector<Complex> v) {
    std::sort(v.begin(), v.end(), [](Complex a, Complex b) {
      if (std::abs(std::abs(a) - std::abs(b)) > 1e-9) {
        return std::abs(a) < std::abs(b);
      }
      return a.real() < b.real();
    });
    return v;
  }

}  // namespace

TEST(Pencil, ZeroCovariance) {
  for (int n_a : {1, 2}) {
    const Bipartition p = Bipartition::leading(3, n_a);
    const BlockView b = partition(CovarianceMatrix::zero(3), p);
    const TwistedPencil pen = build_pencil(b);
    const Complex det = (pen.a0 + 2.0 * pen.a1).determinant();
    EXPECT_NEAR(std::abs(det - std::pow(-2.0, 2 * p.n_b())), 0.0, 1e-12);
  }
}

TEST(Pencil, TwoModeGibbsPolynomial) {
  const double tau = std::tanh(0.5);
  const BlockView b = partition(CovarianceMatrix::from_matrix(fixtures::two_mode_entangled(tau)), Bipartition(2, {0}));
  const TwistedPencil pen = build_pencil(b);
  for (Complex lam : {Complex(0.5, 0.0), Complex(1.3, -0.4), Complex(0.0, 2.0)}) {
    const Complex expect = std::pow(1.0 + tau * tau, 2) * lam * lam;
    EXPECT_LT(std::abs((pen.a0 + lam * pen.a1).determinant() - expect), 1e-12 * std::abs(expect));
    EXPECT_LT(std::abs(twisted_polynomial(b, lam) - expect), 1e-12 * std::abs(expect));
  }
}

TEST(Pencil, DeterminantMatchesPolynomial) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 5;
    const CovarianceMatrix c = random_mixed_covariance(n, rng, 0.95);
    const BlockView b = partition(c, Bipartition(n, fixtures::random_modes_a(n, rng)));
    const TwistedPencil pen = build_pencil(b);
    const Complex lam(0.7, 0.2);
    const Complex direct = (pen.a0 + lam * pen.a1).determinant();
    EXPECT_LT(std::abs(direct - twisted_polynomial(b, lam)), 1e-9 * std::abs(direct));

    // Schur diagonals reproduce |P| on the unit circle.
    const PencilSpectrum sp = pencil_spectrum(pen);
    for (double phi : {0.3, 1.9, -2.4}) {
      const Complex z = std::polar(1.0, phi);
      Complex prod = 1.0;
      for (Eigen::Index j = 0; j < sp.s_diag.size(); ++j) {
        prod *= sp.s_diag(j) + z * sp.t_diag(j);
      }
      const double lhs = std::abs(prod) * std::pow(sp.balance, -2.0 * n);
      const double rhs = std::abs((pen.a0 + z * pen.a1).determinant());
      EXPECT_NEAR(lhs, rhs, 1e-8 * rhs);
    }
  }
}

TEST(Spectrum, ZeroCovariance) {
  const PencilSpectrum sp = pencil_spectrum(build_pencil(partition(CovarianceMatrix::zero(2), Bipartition(2, {0}))));
  EXPECT_EQ(sp.infinite_count, 2);
  ASSERT_EQ(sp.roots.size(), 2u);
  for (Complex r : sp.roots) {
    EXPECT_EQ(std::abs(r), 0.0);
  }
}

TEST(Spectrum, TwoModeGibbsDoubleRootAtZero) {
  const CovarianceMatrix c = CovarianceMatrix::from_matrix(fixtures::two_mode_entangled(std::tanh(0.8)));
  const PencilSpectrum sp = pencil_spectrum(build_pencil(partition(c, Bipartition(2, {0}))));
  ASSERT_EQ(sp.roots.size(), 2u);
  EXPECT_LT(std::abs(sp.roots[0]), 1e-12);
  EXPECT_LT(std::abs(sp.roots[1]), 1e-12);
}

TEST(Spectrum, TwoModeLossRootsStraddleUnitCircle) {
  const LindbladGenerator gen = uniform_loss(QuadraticHamiltonian::zero(2), 1.0);
  const CovarianceMatrix c0 = CovarianceMatrix::from_matrix(fixtures::two_mode_entangled(1.0));
  for (double t : {0.2, 1.0, 3.0}) {
    const CovarianceMatrix c = evolve_exact(c0, gen, t);
    const PencilSpectrum sp = pencil_spectrum(build_pencil(partition(c, Bipartition(2, {0}))));
    ASSERT_EQ(sp.roots.size(), 4u);
    const std::vector<Complex> r = sorted_by_modulus(sp.roots);
    const double lm = std::abs(r[0]);
    const double lp = std::abs(r[3]);
    EXPECT_LT(lm, 1.0);
    EXPECT_GT(lp, 1.0);
    EXPECT_NEAR(std::abs(r[1]), lm, 1e-8);
    EXPECT_NEAR(std::abs(r[2]), lp, 1e-8);
    EXPECT_NEAR(std::abs(r[0] + r[1]), 0.0, 1e-8);
    EXPECT_NEAR(std::abs(r[2] + r[3]), 0.0, 1e-8);
    EXPECT_NEAR(lm * lp, 1.0, 1e-8);
  }
}

TEST(Negativity, ZeroCovariance) {
  EXPECT_EQ(negativity(CovarianceMatrix::zero(4), Bipartition(4, {1, 3})).value, 0.0);
}

TEST(Negativity, TwoModeGibbs) {
  for (double bj : {0.0, 0.1, 0.5, 1.0, 2.0, 5.0}) {
    const CovarianceMatrix c = CovarianceMatrix::from_matrix(fixtures::two_mode_entangled(std::tanh(0.5 * bj)));
    EXPECT_NEAR(negativity(c, Bipartition(2, {0})).value, fixtures::two_mode_gibbs_negativity(bj), 1e-12) << bj;
  }
  const CovarianceMatrix c = CovarianceMatrix::from_matrix(fixtures::two_mode_entangled(std::tanh(0.5)));
  EXPECT_NEAR(negativity(c, Bipartition(2, {0})).value, 0.1935518, 1e-7);
}

TEST(Negativity, MaximallyEntangledPair) {
  const CovarianceMatrix c = CovarianceMatrix::from_matrix(fixtures::two_mode_entangled(1.0));
  EXPECT_NEAR(negativity(c, Bipartition(2, {0})).value, std::log(2.0), 1e-14);
  EXPECT_NEAR(negativity(c, Bipartition(2, {1})).value, std::log(2.0), 1e-14);
}

TEST(Negativity, DecoupledBlockFormula) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 5;
    const Bipartition p(n, fixtures::random_modes_a(n, rng));
    CovarianceMatrix c = with_zero_a_block(random_mixed_covariance(n, rng, 0.97), p);
    const BlockView b = partition(c, p);
    const double expect = fixtures::half_trace_log(b.m_ab, 1.0);
    EXPECT_NEAR(negativity(b).value, expect, 1e-10);
    EXPECT_NEAR(decoupled_negativity(b), expect, 1e-12);

    // Mirror: clear the B block instead.
    const Bipartition mirror(n, p.modes_b());
    c = with_zero_a_block(random_mixed_covariance(n, rng, 0.97), mirror);
    const BlockView bm = partition(c, p);
    EXPECT_NEAR(negativity(bm).value, fixtures::half_trace_log(bm.m_ab, 1.0), 1e-10);
  }
}

TEST(Negativity, ProductStatesVanish) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 6;
    const Bipartition p(n, fixtures::random_modes_a(n, rng));
    BlockView b = partition(random_mixed_covariance(n, rng, 0.999), p);
    b.m_ab.setZero();
    EXPECT_NEAR(negativity(b).value, 0.0, 1e-10);
  }
}

TEST(Negativity, ContinuityAtSingularBlock) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + trial % 3;
    const Bipartition p(n, fixtures::random_modes_a(n, rng));
    const CovarianceMatrix base = with_zero_a_block(random_mixed_covariance(n, rng, 0.95), p, 0.9);
    const BlockView b0 = partition(base, p);
    const double e0 = negativity(b0).value;
    const RealMatrix r = fixtures::random_antisymmetric(2 * p.n_a(), rng, 0.05);
    for (double eps : {1e-2, 1e-4, 1e-6}) {
      BlockView b = b0;
      b.m_a = eps * r;
      EXPECT_LT(std::abs(negativity(b).value - e0), 10.0 * eps) << eps;
    }
  }
}

TEST(Negativity, RootsComeInPairs) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 6;
    const CovarianceMatrix c = random_mixed_covariance(n, rng, 0.98);
    const NegativityResult r = negativity(c, Bipartition(n, fixtures::random_modes_a(n, rng)));
    ASSERT_EQ(r.spectrum.roots.size() % 2, 0u);
    const std::vector<Complex> roots = sorted_by_modulus(r.spectrum.roots);
    for (std::size_t j = 0; j < roots.size(); j += 2) {
      EXPECT_NEAR(std::abs(roots[j] + roots[j + 1]), 0.0, 1e-8 * (1.0 + std::abs(roots[j])));
      EXPECT_LE(std::abs(roots[j].imag()), 1e-8 * (1.0 + std::abs(roots[j])));
    }
    EXPECT_GE(r.value, 0.0);
  }
}

TEST(Twisted, DecoupledBlocks) {
  std::mt19937_64 rng(2);
  const Bipartition p(4, {0, 2});
  BlockView b = partition(random_mixed_covariance(4, rng, 0.9), p);
  b.m_ab.setZero();
  b.m_a = RealMatrix::Zero(4, 4);
  b.m_a(0, 1) = 0.6;
  b.m_a(1, 0) = -0.6;
  b.m_a(2, 3) = -0.3;
  b.m_a(3, 2) = 0.3;
  const TwistedCovariance tc = twisted_covariance(b);
  const ComplexMatrix ga = b.gamma_a();
  EXPECT_LT((tc.gt.topLeftCorner(4, 4) + ga.inverse()).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_LT((tc.gt.bottomRightCorner(4, 4) - b.gamma_b()).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_LT(tc.gt.topRightCorner(4, 4).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Twisted, TwoModeGibbsInsideUnitDisk) {
  // Gamma_A vanishes here, so nudge it to an invertible neighbour.
  BlockView b = partition(CovarianceMatrix::from_matrix(fixtures::two_mode_entangled(std::tanh(0.5))), Bipartition(2, {0}));
  b.m_a(0, 1) = 1e-3;
  b.m_a(1, 0) = -1e-3;
  const Eigen::ComplexEigenSolver<ComplexMatrix> es(twisted_covariance(b).gt);
  int small = 0;
  for (Eigen::Index j = 0; j < es.eigenvalues().size(); ++j) {
    small += std::abs(es.eigenvalues()(j)) < 1.0 ? 1 : 0;
  }
  EXPECT_EQ(small, 2);
}

TEST(Twisted, EigenvaluesMatchPencilRoots) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 5;
    const CovarianceMatrix c = random_mixed_covariance(n, rng, 0.95);
    const BlockView b = partition(c, Bipartition(n, fixtures::random_modes_a(n, rng)));
    if (min_singular_value(b.gamma_a()) < 1e-3) {
      continue;
    }
    const Eigen::ComplexEigenSolver<ComplexMatrix> es(twisted_covariance(b).gt);
    std::vector<Complex> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    const std::vector<Complex> roots = sorted_by_modulus(negativity(b).spectrum.roots);
    ev = sorted_by_modulus(ev);
    ASSERT_EQ(ev.size(), roots.size());
    for (std::size_t j = 0; j < ev.size(); ++j) {
      EXPECT_NEAR(std::abs(ev[j]), std::abs(roots[j]), 1e-8 * (1.0 + std::abs(roots[j])));
    }
  }
}

TEST(Twisted, PathEquivalence) {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 200; ++trial) {
    const int n = 2 + trial % 7;
    const CovarianceMatrix c = random_mixed_covariance(n, rng, 0.98);
    const Bipartition p(n, fixtures::random_modes_a(n, rng));
    const BlockView b = partition(c, p);
    if (min_singular_value(b.gamma_a()) < 1e-2) {
      continue;
    }
    EXPECT_NEAR(negativity(b).value, negativity_via_twisted(b), 1e-8);
    ++checked;
  }
  EXPECT_EQ(checked, 200);
}

TEST(Twisted, SixModeAgreement) {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 10; ++trial) {
    const CovarianceMatrix c = random_mixed_covariance(6, rng, 0.95);
    const Bipartition p(6, {0, 2, 5});
    EXPECT_NEAR(negativity(c, p).value, negativity_via_twisted(c, p), 1e-8);
  }
}

TEST(Twisted, SingularBlockIsRejected) {
  const CovarianceMatrix c = CovarianceMatrix::from_matrix(fixtures::two_mode_entangled(0.7));
  try {
    negativity_via_twisted(c, Bipartition(2, {0}));
    FAIL() << "expected SingularGammaA";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularGammaA);
  }
}
