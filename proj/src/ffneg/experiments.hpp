/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <exception>
#include <string>
#include <variant>
#include <vector>

#include "ffneg/dynamics.hpp"
#include "ffneg/gaussian.hpp"

namespace ffneg {

  using Cell = std::variant<double, long long, std::string>;

  /// Column-labelled result rows.
  struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
  };

  /// Runs fn(i) for i in [0, count) on up to `workers` threads. Each item
  /// writes only its own slot, so results do not depend on scheduling. The
  /// exception of the smallest failing index is rethrown.
  template <typename Fn>
  void parallel_for(std::size_t count, int workers, Fn &&fn);

  enum class ModelKind { kTightBinding, kKitaev, kLongRange };

  struct ModelSpec {
    ModelKind kind = ModelKind::kTightBinding;
    int n = 2;
    double t = 1.0;
    /// Long-range model only.
    double alpha = 2.0;
  };

  QuadraticHamiltonian build_model(const ModelSpec &spec);

  struct TemperatureSweepConfig {
    ModelSpec model;
    std::vector<double> betas;
    /// Empty: first half of the chain.
    std::vector<int> modes_a;
  };

  /// Gibbs states over a beta grid: exact negativity and all bounds.
  /// Columns: beta, negativity, lower, improved_lower, upper, upper_applicable,
  /// simple_lower, simple_upper, k_minus, gamma_ab_opnorm, gamma_ab_frobenius.
  Table temperature_sweep(const TemperatureSweepConfig &config, int workers = 1);

  struct AreaLawSweepConfig {
    std::vector<int> sizes;
    double t = 1.0;
    double alpha = 1.5;
    double beta = 0.05;
  };

  /// Long-range Gibbs states, half cut. Throws ErrorCode::kDivergent when
  /// alpha <= 1. Columns: n, n_a, negativity, upper, upper_applicable,
  /// clustering_c, pair_sum, finite_bound, asymptotic_bound.
  Table static_area_law_sweep(const AreaLawSweepConfig &config, int workers = 1);

  enum class InitialState { kCdw, kRandom };

  struct DynamicSweepConfig {
    std::vector<int> sizes;
    double t = 1.0;
    double alpha = 2.1;
    double gamma_rate = 0.5;
    InitialState init = InitialState::kCdw;
    int samples = 1;
    std::uint64_t seed = 0;
    double t_eval = 1e-8;
    double nu_max = 0.99;
  };

  /// Long-range hopping with uniform loss, half cut; every initial state is
  /// propagated to t_eval before the rate is taken. Columns: n, n_a, init,
  /// samples, rate_mean, rate_min, rate_q05, rate_q50, rate_q95, rate_max,
  /// local_mean, inter_mean, increase_bound, magnitude_bound, bound_violations.
  Table dynamic_sweep(const DynamicSweepConfig &config, int workers = 1);

  /// Per-sample rates of dynamic_sweep, ordered by (size, sample).
  /// Columns: n, sample, rate_total, rate_local, rate_inter, increase_bound.
  Table dynamic_samples(const DynamicSweepConfig &config, int workers = 1);

  struct OracleCheckConfig {
    int n = 3;
    int samples = 50;
    std::uint64_t seed = 0;
    double nu_max = 0.95;
  };

  /// Random states and random bipartitions; pencil against dense oracle.
  /// Columns: sample, n, modes_a, e_pencil, e_oracle, abs_diff.
  Table oracle_check(const OracleCheckConfig &config, int workers = 1);

  /// Rate decomposition for the leading cuts n_a. Columns: n_a, rate_total,
  /// rate_local, rate_inter, increase_bound, magnitude_bound, method, singular.
  Table rate_vs_cut(const CovarianceMatrix &gamma, const LindbladGenerator &gen, const std::vector<int> &cuts,
                    int workers = 1);

  /// Columns: t, negativity, purity, gamma_ab_frobenius.
  Table trajectory_table(const CovarianceMatrix &gamma0, const LindbladGenerator &gen,
                         const std::vector<double> &times, const Bipartition &part);

  /// Independent stream for item (a, b) of a run with the given seed.
  std::mt19937_64 item_rng(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

}  // namespace ffneg

#include "ffneg/parallel.ipp"
