/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "ffneg/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ffneg/bounds.hpp"
#include "ffneg/error.hpp"
#include "ffneg/models.hpp"
#include "ffneg/negativity.hpp"
#include "ffneg/oracle.hpp"
#include "ffneg/rate.hpp"

namespace ffneg {

  namespace {
    constexpr double kBoundSlack = 1e-9;

    long long as_int(int v) {
      return static_cast<long long>(v);
    }

    double flag(bool b) {
      return b ? 1.0 : 0.0;
    }

    // Linear interpolation between order statistics.
    double quantile(const std::vector<double> &sorted, double q) {
      if (sorted.empty()) {
        return std::numeric_limits<double>::quiet_NaN();
      }
      const double pos = q * static_cast<double>(sorted.size() - 1);
      const auto lo = static_cast<std::size_t>(std::floor(pos));
      const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
      return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
    }

    void check_sizes(const std::vector<int> &sizes, bool even) {
      require(!sizes.empty(), ErrorCode::kInvalidArgument, "size grid is empty");
      for (int n : sizes) {
        require(n >= 2, ErrorCode::kInvalidArgument, "system sizes must be at least 2");
        require(!even || n % 2 == 0, ErrorCode::kInvalidArgument, "system sizes must be even for this run");
      }
    }

    struct SampleRate {
      double total = 0.0;
      double local = 0.0;
      double inter = 0.0;
    };

    std::vector<SampleRate> run_dynamic(const DynamicSweepConfig &config, int workers, int &samples_per_size) {
      check_sizes(config.sizes, config.init == InitialState::kCdw);
      require(config.samples >= 1, ErrorCode::kInvalidArgument, "samples must be positive");
      require(config.t_eval >= 0.0, ErrorCode::kInvalidArgument, "t_eval must be nonnegative");
      samples_per_size = config.init == InitialState::kCdw ? 1 : config.samples;
      const std::size_t per = static_cast<std::size_t>(samples_per_size);
      std::vector<SampleRate> out(config.sizes.size() * per);
      parallel_for(out.size(), workers, [&](std::size_t item) {
        const int n = config.sizes[item / per];
        const std::size_t sample = item % per;
        const LindbladGenerator gen = uniform_loss(long_range_hopping(n, config.t, config.alpha), config.gamma_rate);
        CovarianceMatrix g0 = CovarianceMatrix::zero(n);
        if (config.init == InitialState::kCdw) {
          g0 = cdw_covariance(n);
        } else {
          std::mt19937_64 rng = item_rng(config.seed, static_cast<std::uint64_t>(n), sample);
          g0 = random_mixed_covariance(n, rng, config.nu_max);
        }
        const CovarianceMatrix g = evolve_exact(g0, gen, config.t_eval);
        const RateDecomposition dec = rate_decomposition(g, gen.matrices(), Bipartition::half(n));
        out[item] = SampleRate{dec.total, dec.local, dec.inter};
      });
      return out;
    }
  }  // namespace

  std::mt19937_64 item_rng(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
    return std::mt19937_64(seq);
  }

  QuadraticHamiltonian build_model(const ModelSpec &spec) {
    switch (spec.kind) {
      case ModelKind::kTightBinding:
        return tight_binding(spec.n, spec.t);
      case ModelKind::kKitaev:
        return kitaev_chain(spec.n, spec.t);
      case ModelKind::kLongRange:
        return long_range_hopping(spec.n, spec.t, spec.alpha);
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown model");
  }

  Table temperature_sweep(const TemperatureSweepConfig &config, int workers) {
    require(!config.betas.empty(), ErrorCode::kInvalidArgument, "beta grid is empty");
    for (double b : config.betas) {
      require(std::isfinite(b) && b >= 0.0, ErrorCode::kInvalidArgument, "beta values must be nonnegative");
    }
    const QuadraticHamiltonian h = build_model(config.model);
    const Bipartition part = config.modes_a.empty() ? Bipartition::half(config.model.n)
                                                    : Bipartition(config.model.n, config.modes_a);
    Table table;
    table.columns = {"beta",        "negativity",     "lower",   "improved_lower",  "upper",
                     "upper_applicable", "simple_lower", "simple_upper", "k_minus", "gamma_ab_opnorm",
                     "gamma_ab_frobenius"};
    table.rows.resize(config.betas.size());
    parallel_for(config.betas.size(), workers, [&](std::size_t i) {
      const double beta = config.betas[i];
      const BlockView blocks = partition(gibbs_covariance(h, beta), part);
      const double e = negativity(blocks).value;
      const BoundReport r = bound_report(blocks);
      table.rows[i] = {beta,          e,           r.lower,         r.improved_lower,  r.upper,
                       flag(r.upper_applicable), r.simple_lower, r.simple_upper, r.k_minus, r.gamma_ab_opnorm,
                       r.gamma_ab_frobenius};
    });
    return table;
  }

  Table static_area_law_sweep(const AreaLawSweepConfig &config, int workers) {
    check_sizes(config.sizes, false);
    require(config.beta >= 0.0, ErrorCode::kInvalidArgument, "beta must be nonnegative");
    // Refuse up front when the area-law integral diverges.
    const double g_one = area_law_G(config.alpha, 1, 1.0);
    Table table;
    table.columns = {"n",           "n_a",      "negativity",   "upper",           "upper_applicable",
                     "clustering_c", "pair_sum", "finite_bound", "asymptotic_bound"};
    table.rows.resize(config.sizes.size());
    parallel_for(config.sizes.size(), workers, [&](std::size_t i) {
      const int n = config.sizes[i];
      const Bipartition part = Bipartition::half(n);
      const CovarianceMatrix g = gibbs_covariance(long_range_hopping(n, config.t, config.alpha), config.beta);
      const BlockView blocks = partition(g, part);
      const BoundReport r = bound_report(blocks);
      const double c = clustering_constant(g, config.alpha).c_fit;
      const double finite =
          r.k_minus > 0.0 ? finite_area_law_bound(c, config.alpha, part, r.k_minus) : std::numeric_limits<double>::infinity();
      table.rows[i] = {as_int(n), as_int(part.n_a()), negativity(blocks).value, r.upper, flag(r.upper_applicable), c,
                       lattice_pair_sum(part, config.alpha), finite, c * c * g_one};
    });
    return table;
  }

  Table dynamic_sweep(const DynamicSweepConfig &config, int workers) {
    int per = 1;
    const std::vector<SampleRate> samples = run_dynamic(config, workers, per);
    Table table;
    table.columns = {"n",        "n_a",      "init",     "samples",    "rate_mean",  "rate_min",       "rate_q05",
                     "rate_q50", "rate_q95", "rate_max", "local_mean", "inter_mean", "increase_bound", "magnitude_bound",
                     "bound_violations"};
    for (std::size_t s = 0; s < config.sizes.size(); ++s) {
      const int n = config.sizes[s];
      const LindbladGenerator gen = uniform_loss(long_range_hopping(n, config.t, config.alpha), config.gamma_rate);
      const RateBounds bounds = rate_bounds(gen.matrices(), Bipartition::half(n));
      std::vector<double> totals;
      double local = 0.0;
      double inter = 0.0;
      long long violations = 0;
      for (int k = 0; k < per; ++k) {
        const SampleRate &r = samples[s * static_cast<std::size_t>(per) + static_cast<std::size_t>(k)];
        totals.push_back(r.total);
        local += r.local;
        inter += r.inter;
        if (r.total > bounds.increase + kBoundSlack) {
          ++violations;
        }
      }
      const double mean = std::accumulate(totals.begin(), totals.end(), 0.0) / per;
      std::sort(totals.begin(), totals.end());
      table.rows.push_back({as_int(n), as_int(n / 2),
                            std::string(config.init == InitialState::kCdw ? "cdw" : "random"), as_int(per), mean,
                            totals.front(), quantile(totals, 0.05), quantile(totals, 0.5), quantile(totals, 0.95),
                            totals.back(), local / per, inter / per, bounds.increase, bounds.magnitude, violations});
    }
    return table;
  }

  Table dynamic_samples(const DynamicSweepConfig &config, int workers) {
    int per = 1;
    const std::vector<SampleRate> samples = run_dynamic(config, workers, per);
    Table table;
    table.columns = {"n", "sample", "rate_total", "rate_local", "rate_inter", "increase_bound"};
    for (std::size_t s = 0; s < config.sizes.size(); ++s) {
      const int n = config.sizes[s];
      const LindbladGenerator gen = uniform_loss(long_range_hopping(n, config.t, config.alpha), config.gamma_rate);
      const double bound = rate_bounds(gen.matrices(), Bipartition::half(n)).increase;
      for (int k = 0; k < per; ++k) {
        const SampleRate &r = samples[s * static_cast<std::size_t>(per) + static_cast<std::size_t>(k)];
        table.rows.push_back({as_int(n), as_int(k), r.total, r.local, r.inter, bound});
      }
    }
    return table;
  }

  Table oracle_check(const OracleCheckConfig &config, int workers) {
    require(config.n >= 2, ErrorCode::kInvalidArgument, "oracle check needs at least two modes");
    if (config.n > kOracleTransposeMaxModes) {
      throw Error(ErrorCode::kSizeCap, "oracle check is limited to " + std::to_string(kOracleTransposeMaxModes) +
                                           " modes (got " + std::to_string(config.n) + ")");
    }
    require(config.samples >= 1, ErrorCode::kInvalidArgument, "samples must be positive");
    Table table;
    table.columns = {"sample", "n", "modes_a", "e_pencil", "e_oracle", "abs_diff"};
    table.rows.resize(static_cast<std::size_t>(config.samples));
    parallel_for(table.rows.size(), workers, [&](std::size_t s) {
      std::mt19937_64 rng = item_rng(config.seed, static_cast<std::uint64_t>(config.n), s);
      const CovarianceMatrix g = random_mixed_covariance(config.n, rng, config.nu_max);
      std::uniform_int_distribution<std::uint32_t> pick(1u, (1u << config.n) - 2u);
      const std::uint32_t mask = pick(rng);
      std::vector<int> modes;
      std::string label;
      for (int q = 0; q < config.n; ++q) {
        if (mask & (1u << q)) {
          modes.push_back(q);
          label += (label.empty() ? "" : ";") + std::to_string(q);
        }
      }
      const Bipartition part(config.n, modes);
      const double ep = negativity(g, part).value;
      const double eo = oracle_negativity(g, part);
      table.rows[s] = {as_int(static_cast<int>(s)), as_int(config.n), label, ep, eo, std::abs(ep - eo)};
    });
    return table;
  }

  Table rate_vs_cut(const CovarianceMatrix &gamma, const LindbladGenerator &gen, const std::vector<int> &cuts,
                    int workers) {
    require(!cuts.empty(), ErrorCode::kInvalidArgument, "cut list is empty");
    const int n = gamma.n_modes();
    require(gen.n_modes() == n, ErrorCode::kInvalidArgument, "state and generator sizes differ");
    for (int c : cuts) {
      require(c >= 1 && c < n, ErrorCode::kInvalidArgument, "cuts must lie in [1, n - 1]");
    }
    Table table;
    table.columns = {"n_a", "rate_total", "rate_local", "rate_inter", "increase_bound", "magnitude_bound", "method",
                     "singular"};
    table.rows.resize(cuts.size());
    parallel_for(cuts.size(), workers, [&](std::size_t i) {
      const Bipartition part = Bipartition::leading(n, cuts[i]);
      const RateDecomposition dec = rate_decomposition(gamma, gen.matrices(), part);
      const RateBounds b = rate_bounds(gen.matrices(), part);
      table.rows[i] = {as_int(cuts[i]), dec.total, dec.local, dec.inter, b.increase, b.magnitude,
                       std::string(pab_method_name(dec.method)), flag(dec.singularity_flag)};
    });
    return table;
  }

  Table trajectory_table(const CovarianceMatrix &gamma0, const LindbladGenerator &gen,
                         const std::vector<double> &times, const Bipartition &part) {
    require(!times.empty(), ErrorCode::kInvalidArgument, "time grid is empty");
    Table table;
    table.columns = {"t", "negativity", "purity", "gamma_ab_frobenius"};
    for (const TrajectoryPoint &p : negativity_trajectory(gamma0, gen, times, part)) {
      table.rows.push_back({p.t, p.negativity, p.purity, p.gamma_ab_frobenius});
    }
    return table;
  }

}  // namespace ffneg
