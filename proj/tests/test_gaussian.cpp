/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "ffneg/diagnostics.hpp"
#include "ffneg/error.hpp"
#include "ffneg/gaussian.hpp"
#include "ffneg/models.hpp"
#include "ffneg/oracle.hpp"
#include "support.hpp"

using namespace ffneg;

namespace {

  // Gibbs covariance straight from the dense density matrix e^{-beta H}/Z.
  RealMatrix dense_gibbs(const QuadraticHamiltonian &h, double beta) {
    const int n = h.n_modes();
    const MajoranaBasis basis = jordan_wigner_basis(n);
    const ComplexMatrix hop = hamiltonian_operator(h);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hop);
    const RealVector e = es.eigenvalues();
    const double e0 = e.minCoeff();
    const RealVector w = (-beta * (e.array() - e0)).exp().matrix();
    ComplexMatrix rho = es.eigenvectors() * w.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
    rho /= rho.trace();
    RealMatrix m(2 * n, 2 * n);
    for (int j = 0; j < 2 * n; ++j) {
      for (int k = 0; k < 2 * n; ++k) {
        const ComplexMatrix comm = basis.ops[j] * basis.ops[k] - basis.ops[k] * basis.ops[j];
        m(j, k) = (-kI * 0.5 * (comm * rho).trace()).real();
      }
    }
    return m;
  }

  class WarningCapture {
   public:
    WarningCapture() {
      set_diagnostic_sink([this](Severity s, const std::string &msg) {
        if (s == Severity::kWarning) {
          messages.push_back(msg);
        }
      });
    }
    ~WarningCapture() {
      set_diagnostic_sink(default_diagnostic_sink());
    }
    std::vector<std::string> messages;
  };

}  // namespace

TEST(Validate, ZeroIsMaximallyMixed) {
  const ValidationReport r = validate(RealMatrix::Zero(4, 4));
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.nu.size(), 2);
  EXPECT_EQ(r.nu.norm(), 0.0);
}

TEST(Validate, ChargeDensityWaveIsPure) {
  RealMatrix m = RealMatrix::Zero(4, 4);
  m(0, 1) = 1;
  m(1, 0) = -1;
  m(2, 3) = -1;
  m(3, 2) = 1;
  const ValidationReport r = validate(m);
  EXPECT_TRUE(r.valid);
  EXPECT_NEAR(r.nu(0), 1.0, 1e-15);
  EXPECT_NEAR(r.nu(1), 1.0, 1e-15);
}

TEST(Validate, OutOfRangeEntry) {
  RealMatrix m = RealMatrix::Zero(4, 4);
  m(0, 1) = 1.5;
  m(1, 0) = -1.5;
  const ValidationReport r = validate(m);
  EXPECT_FALSE(r.valid);
  EXPECT_NEAR(r.max_singular_value, 1.5, 1e-14);
}

TEST(Validate, NotAntisymmetric) {
  RealMatrix m = RealMatrix::Zero(4, 4);
  m(0, 1) = 0.3;
  EXPECT_FALSE(validate(m).antisymmetric);
  EXPECT_THROW(CovarianceMatrix::from_matrix(m), Error);
}

TEST(CovarianceMatrix, ClipsTinyExcessWithWarning) {
  WarningCapture capture;
  RealMatrix m = fixtures::vacuum_m(2) * (1.0 + 1e-9);
  const CovarianceMatrix c = CovarianceMatrix::from_matrix(m);
  EXPECT_LE(validate(c).max_singular_value, 1.0 + 1e-14);
  EXPECT_EQ(capture.messages.size(), 1u);
}

TEST(CovarianceMatrix, RejectsLargeExcess) {
  try {
    CovarianceMatrix::from_matrix(fixtures::vacuum_m(2) * 1.01);
    FAIL() << "expected an error";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidState);
  }
}

TEST(Bipartition, Validation) {
  EXPECT_THROW(Bipartition(3, {0, 0}), Error);
  EXPECT_THROW(Bipartition(3, {3}), Error);
  EXPECT_THROW(Bipartition(3, {}), Error);
  EXPECT_THROW(Bipartition(3, {0, 1, 2}), Error);
  const Bipartition p(4, {2, 0});
  EXPECT_EQ(p.n_a(), 2);
  EXPECT_EQ(p.modes_b(), (std::vector<int>{1, 3}));
  EXPECT_TRUE(p.in_a(2));
  EXPECT_FALSE(p.in_a(1));
}

TEST(Gibbs, InfiniteTemperatureIsZero) {
  const CovarianceMatrix c = gibbs_covariance(tight_binding(6, 1.0), 0.0);
  EXPECT_EQ(c.m().cwiseAbs().maxCoeff(), 0.0);
}

TEST(Gibbs, TwoModeClosedForm) {
  const double j = 1.3;
  const QuadraticHamiltonian h(0.25 * j * fixtures::two_mode_entangled(1.0));
  for (double beta : {0.1, 0.7, 2.0}) {
    const CovarianceMatrix c = gibbs_covariance(h, beta);
    const RealMatrix expect = fixtures::two_mode_entangled(std::tanh(0.5 * beta * j));
    EXPECT_LT((c.m() - expect).cwiseAbs().maxCoeff(), 1e-14) << beta;
  }
}

TEST(Gibbs, MatchesDenseThermalState) {
  std::mt19937_64 rng(21);
  for (int n : {2, 3, 4}) {
    const QuadraticHamiltonian h(fixtures::random_antisymmetric(2 * n, rng));
    const double beta = 0.8;
    const RealMatrix dense = dense_gibbs(h, beta);
    EXPECT_LT((gibbs_covariance(h, beta).m() - dense).cwiseAbs().maxCoeff(), 1e-10) << n;
  }
}

TEST(Gibbs, HighTemperatureIsLinear) {
  const QuadraticHamiltonian h = tight_binding(20, 1.0);
  const double beta = 0.01;
  const CovarianceMatrix c = gibbs_covariance(h, beta);
  EXPECT_LT((c.m() - 2.0 * beta * h.k()).cwiseAbs().maxCoeff(), 1e-5);
}

TEST(Gibbs, LowTemperatureIsGroundState) {
  const QuadraticHamiltonian h = tight_binding(20, 1.0);
  const CovarianceMatrix c = gibbs_covariance(h, 1e3);
  const ValidationReport r = validate(c);
  for (Eigen::Index j = 0; j < r.nu.size(); ++j) {
    EXPECT_NEAR(r.nu(j), 1.0, 1e-6);
  }
  // Gamma -> sign(H) for the Hermitian H = i k.
  const ComplexMatrix hm = kI * h.k().cast<Complex>();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hm);
  const RealVector sgn = es.eigenvalues().array().sign().matrix();
  const ComplexMatrix gs = es.eigenvectors() * sgn.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
  EXPECT_LT((c.gamma() - gs).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(Partition, ZeroGivesZeroBlocks) {
  const BlockView b = partition(CovarianceMatrix::zero(3), Bipartition(3, {1}));
  EXPECT_EQ(b.m_a.rows(), 2);
  EXPECT_EQ(b.m_b.rows(), 4);
  EXPECT_EQ(b.m_ab.cwiseAbs().sum(), 0.0);
}

TEST(Partition, TwoModeStructure) {
  const double tau = std::tanh(0.5);
  const BlockView b = partition(CovarianceMatrix::from_matrix(fixtures::two_mode_entangled(tau)), Bipartition(2, {0}));
  EXPECT_EQ(b.m_a.cwiseAbs().sum(), 0.0);
  EXPECT_EQ(b.m_b.cwiseAbs().sum(), 0.0);
  // i * m_ab is tau times -sigma_y rotated onto the off-block.
  EXPECT_EQ(b.m_ab(0, 1), -tau);
  EXPECT_EQ(b.m_ab(1, 0), tau);
  EXPECT_EQ(b.m_ab(0, 0), 0.0);
}

TEST(Partition, RoundTripIsExact) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 6;
    const CovarianceMatrix c = random_mixed_covariance(n, rng, 0.9);
    const Bipartition p(n, fixtures::random_modes_a(n, rng));
    const CovarianceMatrix back = reassemble(partition(c, p));
    EXPECT_TRUE((back.m().array() == c.m().array()).all());
  }
}

TEST(Purity, Examples) {
  EXPECT_DOUBLE_EQ(purity(CovarianceMatrix::zero(3)), 0.125);
  EXPECT_NEAR(purity(cdw_covariance(4)), 1.0, 1e-15);
}

TEST(Purity, MatchesDenseTrace) {
  std::mt19937_64 rng(4);
  for (int n = 1; n <= 4; ++n) {
    const CovarianceMatrix c = random_mixed_covariance(n, rng, 0.95);
    const DenseState s = density_from_covariance(c);
    EXPECT_NEAR(purity(c), (s.rho * s.rho).trace().real(), 1e-9);
    const double p = purity(c);
    EXPECT_GT(p, 0.0);
    EXPECT_LE(p, 1.0);
  }
}

TEST(RandomCovariance, Properties) {
  EXPECT_EQ(random_mixed_covariance(3, 1, 0.0).m().cwiseAbs().maxCoeff(), 0.0);
  EXPECT_TRUE((random_mixed_covariance(4, 99, 0.9).m().array() == random_mixed_covariance(4, 99, 0.9).m().array()).all());
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const ValidationReport r = validate(random_mixed_covariance(4, rng, 0.99));
    ASSERT_TRUE(r.valid);
    EXPECT_LE(r.nu.maxCoeff(), 0.99 + 1e-12);
  }
  EXPECT_THROW(random_mixed_covariance(2, 1, 1.0), Error);
}
