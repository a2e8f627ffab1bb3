/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "ffneg/linalg.hpp"

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>
#include <vector>

#include "ffneg/error.hpp"

namespace ffneg {

  namespace {
    template <typename M>
    MatrixNorms norms_impl(const M &matrix) {
      MatrixNorms out;
      if (matrix.size() == 0) {
        return out;
      }
      Eigen::BDCSVD<M> svd(matrix);
      const auto &sv = svd.singularValues();
      out.operator_norm = sv.size() > 0 ? sv(0) : 0.0;
      out.frobenius_norm = matrix.norm();
      out.trace_norm = sv.sum();
      return out;
    }
  }  // namespace

  MatrixNorms norms(const ComplexMatrix &matrix) {
    return norms_impl(matrix);
  }

  MatrixNorms norms(const RealMatrix &matrix) {
    return norms_impl(matrix);
  }

  double operator_norm(const RealMatrix &matrix) {
    if (matrix.size() == 0) {
      return 0.0;
    }
    Eigen::BDCSVD<RealMatrix> svd(matrix);
    return svd.singularValues()(0);
  }

  double operator_norm(const ComplexMatrix &matrix) {
    if (matrix.size() == 0) {
      return 0.0;
    }
    Eigen::BDCSVD<ComplexMatrix> svd(matrix);
    return svd.singularValues()(0);
  }

  double trace_norm(const RealMatrix &matrix) {
    return norms_impl(matrix).trace_norm;
  }

  double trace_norm(const ComplexMatrix &matrix) {
    return norms_impl(matrix).trace_norm;
  }

  double min_singular_value(const ComplexMatrix &matrix) {
    if (matrix.size() == 0) {
      return 0.0;
    }
    Eigen::BDCSVD<ComplexMatrix> svd(matrix);
    return svd.singularValues()(svd.singularValues().size() - 1);
  }

  double antisymmetry_defect(const RealMatrix &m) {
    if (m.size() == 0) {
      return 0.0;
    }
    return (m + m.transpose()).cwiseAbs().maxCoeff();
  }

  RealMatrix symplectic_unit() {
    RealMatrix j(2, 2);
    j << 0.0, 1.0, -1.0, 0.0;
    return j;
  }

  GeneralizedSchur generalized_schur(const ComplexMatrix &a0, const ComplexMatrix &a1) {
    require(a0.rows() == a0.cols() && a1.rows() == a1.cols() && a0.rows() == a1.rows(),
            ErrorCode::kInvalidArgument, "generalized_schur: pencil matrices must be square and equal-sized");
    const lapack_int n = static_cast<lapack_int>(a0.rows());
    GeneralizedSchur out;
    out.s.resize(n);
    out.t.resize(n);
    if (n == 0) {
      return out;
    }
    // zgges overwrites its inputs with S and T (column-major, as Eigen stores them).
    ComplexMatrix a = a0;
    ComplexMatrix b = a1;
    lapack_int sdim = 0;
    lapack_complex_double dummy{};
    const lapack_int info = LAPACKE_zgges(LAPACK_COL_MAJOR, 'N', 'N', 'N', nullptr, n, a.data(), n, b.data(), n,
                                          &sdim, out.s.data(), out.t.data(), &dummy, 1, &dummy, 1);
    if (info != 0) {
      throw Error(ErrorCode::kNumerical,
                  "generalized Schur decomposition failed (zgges info=" + std::to_string(info) +
                      ", |a0|=" + std::to_string(a0.norm()) + ", |a1|=" + std::to_string(a1.norm()) + ")");
    }
    return out;
  }

  CanonicalForm canonical_form(const RealMatrix &m) {
    const Eigen::Index n = m.rows();
    require(m.cols() == n && n % 2 == 0, ErrorCode::kInvalidArgument,
            "canonical_form: expected an even-dimensional square matrix");
    CanonicalForm out;
    out.rotation = RealMatrix::Identity(n, n);
    out.nu = RealVector::Zero(n / 2);
    if (n == 0) {
      return out;
    }

    const RealMatrix sym = 0.5 * (m - m.transpose());
    Eigen::RealSchur<RealMatrix> schur(sym);
    if (schur.info() != Eigen::Success) {
      throw Error(ErrorCode::kNumerical, "canonical_form: real Schur decomposition did not converge");
    }
    const RealMatrix &t = schur.matrixT();
    const RealMatrix &u = schur.matrixU();

    std::vector<Eigen::Index> singles;
    Eigen::Index block = 0;
    Eigen::Index i = 0;
    while (i < n) {
      if (i + 1 < n && t(i + 1, i) != 0.0) {
        double nu = 0.5 * (t(i, i + 1) - t(i + 1, i));
        if (nu >= 0.0) {
          out.rotation.col(2 * block) = u.col(i);
          out.rotation.col(2 * block + 1) = u.col(i + 1);
        } else {
          out.rotation.col(2 * block) = u.col(i + 1);
          out.rotation.col(2 * block + 1) = u.col(i);
          nu = -nu;
        }
        out.nu(block++) = nu;
        i += 2;
      } else {
        singles.push_back(i++);
      }
    }
    // 1x1 blocks carry (numerically) zero eigenvalues; they come in an even number.
    require(singles.size() % 2 == 0, ErrorCode::kNumerical, "canonical_form: odd number of real eigenvalues");
    for (std::size_t k = 0; k < singles.size(); k += 2) {
      const Eigen::Index a = singles[k];
      const Eigen::Index b = singles[k + 1];
      out.rotation.col(2 * block) = u.col(a);
      out.rotation.col(2 * block + 1) = u.col(b);
      out.nu(block++) = 0.5 * (t(a, b) - t(b, a));
    }

    if (out.rotation.determinant() < 0.0) {
      out.rotation.col(n - 1) *= -1.0;
      out.nu(n / 2 - 1) *= -1.0;
    }

    RealMatrix canonical = RealMatrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n / 2; ++j) {
      canonical(2 * j, 2 * j + 1) = out.nu(j);
      canonical(2 * j + 1, 2 * j) = -out.nu(j);
    }
    const double residual = (out.rotation * canonical * out.rotation.transpose() - sym).cwiseAbs().maxCoeff();
    if (residual > 1e-8 * std::max(1.0, sym.cwiseAbs().maxCoeff())) {
      throw Error(ErrorCode::kNumerical,
                  "canonical_form: reconstruction residual " + std::to_string(residual) + " (defective input?)");
    }
    return out;
  }

  RealMatrix haar_special_orthogonal(Eigen::Index n, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    RealMatrix g(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
      for (Eigen::Index r = 0; r < n; ++r) {
        g(r, c) = normal(rng);
      }
    }
    Eigen::HouseholderQR<RealMatrix> qr(g);
    RealMatrix q = qr.householderQ() * RealMatrix::Identity(n, n);
    const RealMatrix &r = qr.matrixQR();
    for (Eigen::Index k = 0; k < n; ++k) {
      if (r(k, k) < 0.0) {
        q.col(k) *= -1.0;
      }
    }
    if (n > 0 && q.determinant() < 0.0) {
      q.col(0) *= -1.0;
    }
    return q;
  }

  double trace_log1p_psd(const ComplexMatrix &psd, double scale) {
    if (psd.size() == 0) {
      return 0.0;
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(psd, Eigen::EigenvaluesOnly);
    double acc = 0.0;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
      acc += std::log1p(scale * std::max(0.0, es.eigenvalues()(k)));
    }
    return acc;
  }

  double trace_log1p_psd(const RealMatrix &psd, double scale) {
    if (psd.size() == 0) {
      return 0.0;
    }
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(psd, Eigen::EigenvaluesOnly);
    double acc = 0.0;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
      acc += std::log1p(scale * std::max(0.0, es.eigenvalues()(k)));
    }
    return acc;
  }

  RealMatrix expm(const RealMatrix &m) {
    return m.exp();
  }

  ComplexMatrix expm(const ComplexMatrix &m) {
    return m.exp();
  }

}  // namespace ffneg
