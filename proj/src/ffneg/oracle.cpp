/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "ffneg/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <bit>
#include <cmath>
#include <sstream>

#include "ffneg/error.hpp"

namespace ffneg {

  namespace {

    void check_cap(int n_modes, int cap, const char *what) {
      require(n_modes >= 1, ErrorCode::kInvalidArgument, "n_modes must be positive");
      if (n_modes > cap) {
        std::ostringstream msg;
        msg << what << " is limited to " << cap << " modes (got " << n_modes << ")";
        throw Error(ErrorCode::kSizeCap, msg.str());
      }
    }

    // A Majorana monomial acts as a signed permutation of Fock states:
    // M|x> = phase[x] |x ^ flip>.
    struct Monomial {
      std::uint32_t flip = 0;
      std::vector<Complex> phase;
    };

    std::uint32_t mode_bit(int n_modes, int q) {
      return 1u << (n_modes - 1 - q);
    }

    // Applies c_j to the left of an existing monomial.
    void left_multiply(Monomial &mono, int n_modes, int j) {
      const int q = j / 2;
      const std::uint32_t bit = mode_bit(n_modes, q);
      const std::uint32_t higher = ~((bit << 1) - 1u) & ((1u << n_modes) - 1u);
      for (std::uint32_t x = 0; x < mono.phase.size(); ++x) {
        const std::uint32_t y = x ^ mono.flip;  // state after the existing factors
        Complex f = (std::popcount(y & higher) % 2 == 0) ? 1.0 : -1.0;
        if (j % 2 == 1) {
          f *= (y & bit) ? -kI : kI;
        }
        mono.phase[x] *= f;
      }
      mono.flip ^= bit;
    }

    Monomial build_monomial(std::uint32_t mask, int n_modes) {
      Monomial mono;
      mono.phase.assign(std::size_t{1} << n_modes, Complex(1.0));
      // c_{p_1} ... c_{p_k}: apply the largest index first.
      for (int j = 2 * n_modes - 1; j >= 0; --j) {
        if (mask & (1u << j)) {
          left_multiply(mono, n_modes, j);
        }
      }
      return mono;
    }

    int a_degree(std::uint32_t mask, const Bipartition &part) {
      int k = 0;
      for (int mode : part.modes_a()) {
        k += std::popcount(mask & (3u << (2 * mode)));
      }
      return k;
    }

    Complex i_power(int k) {
      switch (k % 4) {
        case 0:
          return 1.0;
        case 1:
          return kI;
        case 2:
          return -1.0;
        default:
          return -kI;
      }
    }

  }  // namespace

  MajoranaBasis jordan_wigner_basis(int n_modes) {
    check_cap(n_modes, kOracleDensityMaxModes, "Jordan-Wigner basis");
    const Eigen::Index dim = Eigen::Index{1} << n_modes;
    MajoranaBasis basis;
    basis.n_modes = n_modes;
    for (int j = 0; j < 2 * n_modes; ++j) {
      const Monomial mono = build_monomial(1u << j, n_modes);
      ComplexMatrix op = ComplexMatrix::Zero(dim, dim);
      for (Eigen::Index x = 0; x < dim; ++x) {
        op(x ^ mono.flip, x) = mono.phase[static_cast<std::size_t>(x)];
      }
      basis.ops.push_back(std::move(op));
    }
    return basis;
  }

  DenseState density_from_covariance(const CovarianceMatrix &gamma) {
    const int n = gamma.n_modes();
    check_cap(n, kOracleDensityMaxModes, "dense density matrix");
    const MajoranaBasis basis = jordan_wigner_basis(n);
    const CanonicalForm cf = canonical_form(gamma.m());
    const Eigen::Index dim = Eigen::Index{1} << n;
    const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);

    auto rotated = [&](Eigen::Index a) {
      ComplexMatrix op = ComplexMatrix::Zero(dim, dim);
      for (int i = 0; i < 2 * n; ++i) {
        op += cf.rotation(i, a) * basis.ops[static_cast<std::size_t>(i)];
      }
      return op;
    };

    DenseState state;
    state.n_modes = n;
    state.rho = id;
    for (int j = 0; j < n; ++j) {
      const ComplexMatrix pair = rotated(2 * j) * rotated(2 * j + 1);
      state.rho = state.rho * (0.5 * (id - kI * cf.nu(j) * pair));
    }
    state.rho = 0.5 * (state.rho + state.rho.adjoint()).eval();
    return state;
  }

  RealMatrix covariance_from_density(const DenseState &state) {
    const MajoranaBasis basis = jordan_wigner_basis(state.n_modes);
    const int n2 = 2 * state.n_modes;
    RealMatrix m = RealMatrix::Zero(n2, n2);
    for (int j = 0; j < n2; ++j) {
      for (int k = j + 1; k < n2; ++k) {
        const auto &cj = basis.ops[static_cast<std::size_t>(j)];
        const auto &ck = basis.ops[static_cast<std::size_t>(k)];
        const Complex g = 0.5 * ((cj * ck - ck * cj) * state.rho).trace();
        m(j, k) = (g / kI).real();
        m(k, j) = -m(j, k);
      }
    }
    return m;
  }

  bool is_physical(const DenseState &state, double tolerance) {
    const ComplexMatrix &rho = state.rho;
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tolerance) {
      return false;
    }
    if (std::abs(rho.trace() - Complex(1.0)) > tolerance) {
      return false;
    }
    const Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tolerance;
  }

  ComplexMatrix hamiltonian_operator(const QuadraticHamiltonian &h) {
    const MajoranaBasis basis = jordan_wigner_basis(h.n_modes());
    const Eigen::Index dim = Eigen::Index{1} << h.n_modes();
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    const Eigen::Index n2 = h.k().rows();
    for (Eigen::Index j = 0; j < n2; ++j) {
      for (Eigen::Index k = 0; k < n2; ++k) {
        if (h.k()(j, k) != 0.0) {
          out += kI * h.k()(j, k) * basis.ops[static_cast<std::size_t>(j)] * basis.ops[static_cast<std::size_t>(k)];
        }
      }
    }
    return out;
  }

  std::vector<MonomialTerm> majorana_expansion(const DenseState &state) {
    const int n = state.n_modes;
    check_cap(n, kOracleTransposeMaxModes, "Majorana expansion");
    const std::uint32_t count = 1u << (2 * n);
    const double norm = std::ldexp(1.0, -n);
    std::vector<MonomialTerm> terms(count);
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      const Monomial mono = build_monomial(mask, n);
      // Tr[M^dagger rho] = sum_x conj(M_{x^f, x}) rho_{x^f, x}
      Complex acc = 0.0;
      for (std::uint32_t x = 0; x < mono.phase.size(); ++x) {
        acc += std::conj(mono.phase[x]) * state.rho(x ^ mono.flip, x);
      }
      terms[mask] = MonomialTerm{mask, acc * norm};
    }
    return terms;
  }

  ComplexMatrix reassemble_expansion(const std::vector<MonomialTerm> &terms, int n_modes) {
    check_cap(n_modes, kOracleTransposeMaxModes, "Majorana expansion");
    const Eigen::Index dim = Eigen::Index{1} << n_modes;
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (const MonomialTerm &term : terms) {
      const Monomial mono = build_monomial(term.mask, n_modes);
      for (std::uint32_t x = 0; x < mono.phase.size(); ++x) {
        out(x ^ mono.flip, x) += term.coeff * mono.phase[x];
      }
    }
    return out;
  }

  ComplexMatrix partial_transpose(const DenseState &state, const Bipartition &part, bool twisted) {
    const int n = state.n_modes;
    check_cap(n, kOracleTransposeMaxModes, "partial transpose");
    require(part.n_modes() == n, ErrorCode::kInvalidArgument, "bipartition does not match the state size");
    std::vector<MonomialTerm> terms = majorana_expansion(state);
    std::vector<MonomialTerm> kept;
    kept.reserve(terms.size() / 2);
    for (const MonomialTerm &term : terms) {
      if (std::popcount(term.mask) % 2 == 0) {
        kept.push_back(MonomialTerm{term.mask, term.coeff * i_power(a_degree(term.mask, part))});
      }
    }
    ComplexMatrix out = reassemble_expansion(kept, n);
    if (twisted) {
      // i c_{2q} c_{2q+1} = -sigma_z on mode q, i.e. diag(2 n_q - 1).
      const Eigen::Index dim = out.rows();
      for (Eigen::Index x = 0; x < dim; ++x) {
        double sign = 1.0;
        for (int q : part.modes_a()) {
          sign *= (static_cast<std::uint32_t>(x) & mode_bit(n, q)) ? 1.0 : -1.0;
        }
        out.col(x) *= sign;
      }
    }
    return out;
  }

  double oracle_negativity(const CovarianceMatrix &gamma, const Bipartition &part) {
    check_cap(gamma.n_modes(), kOracleTransposeMaxModes, "oracle negativity");
    const ComplexMatrix t = partial_transpose(density_from_covariance(gamma), part, true);
    const double defect = (t - t.adjoint()).cwiseAbs().maxCoeff();
    if (defect > 1e-9) {
      std::ostringstream msg;
      msg << "twisted partial transpose is not Hermitian (defect " << defect << ")";
      throw Error(ErrorCode::kNumerical, msg.str());
    }
    const Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (t + t.adjoint()), Eigen::EigenvaluesOnly);
    return std::log(es.eigenvalues().cwiseAbs().sum());
  }

  double oracle_negativity_untwisted(const CovarianceMatrix &gamma, const Bipartition &part) {
    check_cap(gamma.n_modes(), kOracleTransposeMaxModes, "oracle negativity");
    const ComplexMatrix t = partial_transpose(density_from_covariance(gamma), part, false);
    return std::log(trace_norm(t));
  }

}  // namespace ffneg
